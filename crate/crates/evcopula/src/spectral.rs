//! Discrete Pickands spectral measures and stable tail dependence functions.
//!
//! A `d`-variate extreme-value copula is determined by its stable tail
//! dependence function `l(x) = d * E[max_k x_k Q_k]`, where `Q` is a random
//! simplex point with `E[Q_k] = 1/d` (the law of `Q` is the normalized
//! Pickands spectral measure). This module represents finitely supported
//! laws of `Q` exactly and implements the algebra on top of them:
//! evaluation, exchangeabilization, lower-dimensional margins, extremal
//! elements indexed by simplex equivalence classes, and the support-counting
//! obstruction that keeps extremal elements from embedding into higher
//! dimensions.

use crate::error::{Error, Result};
use crate::simplex::{EquivClass, SimplexVector, POINT_TOL};

/// Hard bound on factorial enumeration (9! = 362,880 permutations).
pub const MAX_ENUM_DIM: usize = 9;

/// Absolute tolerance on total mass.
pub const MASS_TOL: f64 = 1e-12;

/// Absolute tolerance on the barycenter condition `E[Q_k] = 1/d`.
pub const BARYCENTER_TOL: f64 = 1e-10;

/// One support point of a discrete spectral measure.
#[derive(Debug, Clone)]
pub struct Atom {
    pub point: SimplexVector,
    pub mass: f64,
}

/// A finitely supported law of the simplex vector `Q` (the Pickands measure
/// is `d` times this law). Atoms are deduplicated, masses sum to one, and
/// every coordinate has mean `1/d`.
#[derive(Debug, Clone)]
pub struct DiscreteSpectralMeasure {
    dim: usize,
    atoms: Vec<Atom>,
    symmetric: bool,
}

impl DiscreteSpectralMeasure {
    pub fn new(dim: usize, atoms: Vec<(SimplexVector, f64)>, symmetric: bool) -> Result<Self> {
        if dim < 2 {
            return Err(Error::InvalidArgument(format!(
                "spectral measures need dimension >= 2, got {dim}"
            )));
        }
        if atoms.is_empty() {
            return Err(Error::InvalidArgument(
                "measure needs at least one atom".into(),
            ));
        }
        for (q, p) in &atoms {
            if q.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: q.dim(),
                });
            }
            if !p.is_finite() || *p <= 0.0 {
                return Err(Error::Invariant(format!(
                    "atom masses must be positive, got {p}"
                )));
            }
        }
        let atoms = merge_atoms(atoms);
        let total: f64 = atoms.iter().map(|a| a.mass).sum();
        if (total - 1.0).abs() > MASS_TOL {
            return Err(Error::Invariant(format!(
                "atom masses must sum to 1 (within {MASS_TOL:e}), got {total}"
            )));
        }
        for k in 0..dim {
            let bary: f64 = atoms.iter().map(|a| a.mass * a.point.get(k)).sum();
            if (bary - 1.0 / dim as f64).abs() > BARYCENTER_TOL {
                return Err(Error::Invariant(format!(
                    "barycenter of coordinate {k} must be 1/{dim}, got {bary}"
                )));
            }
        }
        let measure = Self {
            dim,
            atoms,
            symmetric,
        };
        if symmetric && !measure.is_permutation_invariant() {
            return Err(Error::Asymmetric(
                "measure flagged symmetric is not permutation invariant".into(),
            ));
        }
        Ok(measure)
    }

    /// Complete dependence: the single atom `(1/d, ..., 1/d)`.
    pub fn comonotone(dim: usize) -> Self {
        let q = SimplexVector::new(vec![1.0 / dim as f64; dim]).expect("valid barycenter point");
        Self::new(dim, vec![(q, 1.0)], true).expect("comonotone measure is valid")
    }

    /// Independence: the `d` unit vectors with mass `1/d` each.
    pub fn independence(dim: usize) -> Self {
        let atoms = (0..dim)
            .map(|k| {
                let mut e = vec![0.0; dim];
                e[k] = 1.0;
                (
                    SimplexVector::new(e).expect("unit vector"),
                    1.0 / dim as f64,
                )
            })
            .collect();
        Self::new(dim, atoms, true).expect("independence measure is valid")
    }

    /// Builds the exchangeable measure spreading each given atom uniformly
    /// over its coordinate permutations. Weights are normalized; the
    /// barycenter condition then holds automatically.
    pub fn exchangeable_from_atoms(dim: usize, atoms: &[(SimplexVector, f64)]) -> Result<Self> {
        if dim > MAX_ENUM_DIM {
            return Err(Error::DimensionTooLarge {
                d: dim,
                max: MAX_ENUM_DIM,
            });
        }
        let total: f64 = atoms.iter().map(|(_, w)| *w).sum();
        if !total.is_finite() || total <= 0.0 {
            return Err(Error::InvalidArgument(
                "weights must have a positive sum".into(),
            ));
        }
        let fact = factorial(dim) as f64;
        let mut spread = Vec::new();
        for (q, w) in atoms {
            if q.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: q.dim(),
                });
            }
            if !w.is_finite() || *w <= 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "weights must be positive, got {w}"
                )));
            }
            for_each_permutation(dim, |perm| {
                spread.push((q.permuted(perm), w / total / fact));
            });
        }
        Self::new(dim, spread, true)
    }

    /// The extremal exchangeable measure of an equivalence class: the point
    /// mass at `q` spread uniformly over permutations.
    pub fn extremal(class: &EquivClass) -> Result<Self> {
        Self::exchangeable_from_atoms(class.dim(), &[(class.representative().clone(), 1.0)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// Number of support points.
    pub fn support_size(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// The law of `(Q_{S(1)}, ..., Q_{S(d)})` with `S` uniform on
    /// permutations: every atom is replaced by its permuted copies with mass
    /// `p/d!`, merged and deduplicated.
    pub fn symmetrize(&self) -> Result<Self> {
        if self.dim > MAX_ENUM_DIM {
            return Err(Error::DimensionTooLarge {
                d: self.dim,
                max: MAX_ENUM_DIM,
            });
        }
        let fact = factorial(self.dim) as f64;
        let mut spread = Vec::new();
        for atom in &self.atoms {
            for_each_permutation(self.dim, |perm| {
                spread.push((atom.point.permuted(perm), atom.mass / fact));
            });
        }
        Self::new(self.dim, spread, true)
    }

    /// Stable tail dependence function `l(x) = d * sum_j p_j max_k x_k q_jk`.
    pub fn stdf(&self, x: &[f64]) -> Result<f64> {
        self.check_arg(x)?;
        let d = self.dim as f64;
        Ok(d * self
            .atoms
            .iter()
            .map(|a| {
                a.mass
                    * x.iter()
                        .zip(a.point.entries())
                        .map(|(xi, qi)| xi * qi)
                        .fold(0.0, f64::max)
            })
            .sum::<f64>())
    }

    /// Copula value `C(u) = exp(-l(-log u_1, ..., -log u_d))`; zero as soon
    /// as any coordinate is zero.
    pub fn copula(&self, u: &[f64]) -> Result<f64> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        if u.iter().any(|v| !(*v >= 0.0 && *v <= 1.0)) {
            return Err(Error::InvalidArgument(format!(
                "copula arguments must lie in [0,1], got {u:?}"
            )));
        }
        if u.contains(&0.0) {
            return Ok(0.0);
        }
        let x: Vec<f64> = u.iter().map(|v| -v.ln()).collect();
        Ok((-self.stdf(&x)?).exp())
    }

    /// The `n`-margin: atom `(q, p)` maps to `(q_1/S, ..., q_n/S)` with mass
    /// `(d/n) * S * p` where `S = q_1 + ... + q_n`; zero-sum atoms drop out.
    /// Requires exchangeability; a non-flagged input is symmetrized first.
    pub fn margin(&self, n: usize) -> Result<Self> {
        if !(2 <= n && n < self.dim) {
            return Err(Error::InvalidArgument(format!(
                "margin dimension must satisfy 2 <= n < {}, got {n}",
                self.dim
            )));
        }
        let base;
        let source = if self.symmetric {
            self
        } else {
            base = self.symmetrize()?;
            &base
        };
        let scale = source.dim as f64 / n as f64;
        let mut atoms = Vec::new();
        for atom in &source.atoms {
            let head = &atom.point.entries()[..n];
            let s: f64 = head.iter().sum();
            if s <= 0.0 {
                continue;
            }
            let q = SimplexVector::new(head.iter().map(|v| v / s).collect())?;
            atoms.push((q, scale * s * atom.mass));
        }
        Self::new(n, atoms, true)
    }

    /// Support-counting diagnostic for the embedding obstruction: reports the
    /// support size of the `n`-margin next to the `n!` bound that the margin
    /// of a measure with a distinct-positive-entry atom must exceed.
    pub fn obstruction_check(&self, n: usize) -> Result<ObstructionReport> {
        let margin = self.margin(n)?;
        let has_distinct_positive_atom = self
            .atoms
            .iter()
            .any(|a| a.point.has_distinct_positive_entries());
        let bound = factorial(n);
        Ok(ObstructionReport {
            margin_support: margin.support_size(),
            bound,
            has_distinct_positive_atom,
            exceeds_bound: margin.support_size() > bound,
        })
    }

    fn check_arg(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        if x.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidArgument(format!(
                "stable tail dependence arguments must be finite and non-negative, got {x:?}"
            )));
        }
        Ok(())
    }

    /// Exact permutation-invariance check via canonicalization: every orbit
    /// must be fully present with equal masses.
    fn is_permutation_invariant(&self) -> bool {
        let mut keyed: Vec<(Vec<f64>, f64)> = self
            .atoms
            .iter()
            .map(|a| {
                let mut key = a.point.entries().to_vec();
                key.sort_by(f64::total_cmp);
                (key, a.mass)
            })
            .collect();
        keyed.sort_by(|a, b| lex_cmp(&a.0, &b.0));
        let mut i = 0;
        while i < keyed.len() {
            let mut j = i;
            while j + 1 < keyed.len() && keys_close(&keyed[j + 1].0, &keyed[i].0) {
                j += 1;
            }
            let orbit = &keyed[i..=j];
            let expected = multiset_permutations(&orbit[0].0);
            if orbit.len() != expected {
                return false;
            }
            let m0 = orbit[0].1;
            if orbit.iter().any(|(_, m)| (m - m0).abs() > MASS_TOL) {
                return false;
            }
            i = j + 1;
        }
        true
    }
}

/// Result of [`DiscreteSpectralMeasure::obstruction_check`].
#[derive(Debug, Clone)]
pub struct ObstructionReport {
    /// Support size of the `n`-margin.
    pub margin_support: usize,
    /// `n!`, the orbit size an extremal `n`-variate measure cannot exceed.
    pub bound: usize,
    /// Whether the source measure has an atom with all-distinct strictly
    /// positive entries.
    pub has_distinct_positive_atom: bool,
    /// Whether `margin_support > bound`.
    pub exceeds_bound: bool,
}

/// Extremal stable tail dependence function of an equivalence class:
/// `1/(d-1)! * sum over permutations of max_k x_k q_{perm(k)}`. Agrees with
/// `extremal(class).stdf(x)` but is evaluated by direct enumeration.
pub fn extremal_stdf(class: &EquivClass, x: &[f64]) -> Result<f64> {
    let d = class.dim();
    if x.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: x.len(),
        });
    }
    if d > MAX_ENUM_DIM {
        return Err(Error::DimensionTooLarge {
            d,
            max: MAX_ENUM_DIM,
        });
    }
    if x.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::InvalidArgument(format!(
            "stable tail dependence arguments must be finite and non-negative, got {x:?}"
        )));
    }
    let q = class.representative();
    let mut total = 0.0;
    for_each_permutation(d, |perm| {
        let m = x
            .iter()
            .zip(perm)
            .map(|(xi, &k)| xi * q.get(k))
            .fold(0.0, f64::max);
        total += m;
    });
    Ok(total / factorial(d - 1) as f64)
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product::<usize>().max(1)
}

/// Heap's algorithm; calls `f` with every permutation of `0..n`.
pub(crate) fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&items);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(c[i], i);
            }
            f(&items);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Number of distinct permutations of a sorted value list: `d!/prod(mult!)`.
fn multiset_permutations(sorted: &[f64]) -> usize {
    let mut count = factorial(sorted.len());
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j + 1 < sorted.len() && (sorted[j + 1] - sorted[i]).abs() <= POINT_TOL {
            j += 1;
        }
        count /= factorial(j - i + 1);
        i = j + 1;
    }
    count
}

fn lex_cmp(a: &[f64], b: &[f64]) -> std::cmp::Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

fn keys_close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= POINT_TOL)
}

/// Sorts atoms lexicographically and adds up masses of entrywise-coinciding
/// points (within [`POINT_TOL`]).
fn merge_atoms(atoms: Vec<(SimplexVector, f64)>) -> Vec<Atom> {
    let mut atoms = atoms;
    atoms.sort_by(|a, b| lex_cmp(a.0.entries(), b.0.entries()));
    let mut merged: Vec<Atom> = Vec::with_capacity(atoms.len());
    for (q, p) in atoms {
        match merged.last_mut() {
            Some(last) if last.point.approx_eq(&q) => last.mass += p,
            _ => merged.push(Atom { point: q, mass: p }),
        }
    }
    merged
}
