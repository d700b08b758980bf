//! Bivariate Pickands dependence functions and their mixing representations.
//!
//! A bivariate extreme-value copula is described by its dependence function
//! `A(x) = l(x, 1-x)`, a convex function squeezed between `max{x, 1-x}` and
//! `1` with `A(0) = A(1) = 1`. Every such `A` is `2 E[max{x Q, (1-x)(1-Q)}]`
//! for a unique law of a mean-1/2 random variable `Q` on `[0,1]`; this module
//! keeps that law explicit. Discrete laws of `Q` produce piecewise linear
//! dependence functions, which is the only representation used here (smooth
//! functions enter through a dense-kink approximation).
//!
//! Symmetric dependence functions decompose uniquely over the two-atom
//! family `A_{q,1-q}`; [`NuMeasure`] carries that mixing measure. The
//! asymmetric two-atom family (`bc2*`) is provided as the extremal boundary
//! of the unrestricted class, where the analogous decomposition is *not*
//! unique.

use crate::error::{Error, Result};
use crate::simplex::SimplexVector;
use crate::spectral::DiscreteSpectralMeasure;

/// Absolute tolerance for identifying two `Q` locations.
pub const Q_TOL: f64 = 1e-12;

/// Absolute tolerance on the mean-1/2 requirement of a law of `Q`.
pub const MEAN_TOL: f64 = 1e-10;

/// Tolerance for slope-based checks (convexity, slope range).
const SLOPE_TOL: f64 = 1e-9;

/// Slope jumps at or below the identification tolerance are treated as
/// collinear noise, not atoms; short boundary segments amplify value
/// rounding into the slopes by 1/length, so anything tighter misreads that
/// noise as mass.
const MASS_DROP: f64 = 1e-12;

/// A discrete law on `[0,1]`: sorted atoms `(q, p)` with positive masses
/// summing to one.
#[derive(Debug, Clone)]
pub struct QLaw {
    atoms: Vec<(f64, f64)>,
}

impl QLaw {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidArgument(
                "law of Q needs at least one atom".into(),
            ));
        }
        for (q, p) in &atoms {
            if !q.is_finite() || *q < 0.0 || *q > 1.0 {
                return Err(Error::Invariant(format!(
                    "Q locations must lie in [0,1], got {q}"
                )));
            }
            if !p.is_finite() || *p <= 0.0 {
                return Err(Error::Invariant(format!(
                    "Q masses must be positive, got {p}"
                )));
            }
        }
        let mut atoms = atoms;
        atoms.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(atoms.len());
        for (q, p) in atoms {
            match merged.last_mut() {
                Some(last) if (q - last.0).abs() <= Q_TOL => last.1 += p,
                _ => merged.push((q, p)),
            }
        }
        let total: f64 = merged.iter().map(|(_, p)| p).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Invariant(format!(
                "Q masses must sum to 1 (within 1e-12), got {total}"
            )));
        }
        Ok(Self { atoms: merged })
    }

    /// Sorted `(location, mass)` pairs.
    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    pub fn mean(&self) -> f64 {
        self.atoms.iter().map(|(q, p)| q * p).sum()
    }

    /// Mass at the location `q0` (within [`Q_TOL`]).
    pub fn prob_at(&self, q0: f64) -> f64 {
        self.atoms
            .iter()
            .filter(|(q, _)| (q - q0).abs() <= Q_TOL)
            .map(|(_, p)| p)
            .sum::<f64>()
            + 0.0
    }

    /// Whether `Q` and `1 - Q` have the same law (within [`Q_TOL`]).
    pub fn is_symmetric(&self) -> bool {
        let n = self.atoms.len();
        (0..n).all(|i| {
            let (q, p) = self.atoms[i];
            let (qm, pm) = self.atoms[n - 1 - i];
            (q - (1.0 - qm)).abs() <= Q_TOL && (p - pm).abs() <= 1e-12
        })
    }

    /// Dependence-function value `2 sum_j p_j max{x q_j, (1-x)(1-q_j)}`.
    /// The law must have mean 1/2 (within [`MEAN_TOL`]).
    pub fn pickands_value(&self, x: f64) -> Result<f64> {
        self.require_half_mean()?;
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::InvalidArgument(format!(
                "x must lie in [0,1], got {x}"
            )));
        }
        Ok(self.value_unchecked(x))
    }

    fn value_unchecked(&self, x: f64) -> f64 {
        2.0 * self
            .atoms
            .iter()
            .map(|(q, p)| p * (x * q).max((1.0 - x) * (1.0 - q)))
            .sum::<f64>()
    }

    /// The exact piecewise linear dependence function of this law, with one
    /// kink per interior atom (at `x = 1 - q`).
    pub fn pickands_function(&self) -> Result<PiecewiseLinearPickands> {
        self.require_half_mean()?;
        let mut kinks = vec![0.0, 1.0];
        for (q, _) in &self.atoms {
            let x = 1.0 - q;
            if x > 0.0 && x < 1.0 {
                kinks.push(x);
            }
        }
        kinks.sort_by(f64::total_cmp);
        kinks.dedup();
        let values = kinks.iter().map(|&x| self.value_unchecked(x)).collect();
        PiecewiseLinearPickands::new(kinks, values)
    }

    fn require_half_mean(&self) -> Result<()> {
        let mean = self.mean();
        if (mean - 0.5).abs() > MEAN_TOL {
            return Err(Error::Invariant(format!(
                "law of Q must have mean 1/2 (within {MEAN_TOL:e}), got {mean}"
            )));
        }
        Ok(())
    }
}

/// A convex piecewise linear dependence function given by its kinks.
///
/// Invariants, enforced at construction: `A(0) = A(1) = 1`,
/// `max{x, 1-x} <= A(x) <= 1` at every kink, slopes within `[-1, 1]` and
/// non-decreasing.
#[derive(Debug, Clone)]
pub struct PiecewiseLinearPickands {
    kinks: Vec<f64>,
    values: Vec<f64>,
}

impl PiecewiseLinearPickands {
    pub fn new(kinks: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if kinks.len() != values.len() || kinks.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "need matching kink/value lists of length >= 2, got {} and {}",
                kinks.len(),
                values.len()
            )));
        }
        let mut kinks = kinks;
        if kinks[0].abs() > 1e-12 || (kinks[kinks.len() - 1] - 1.0).abs() > 1e-12 {
            return Err(Error::Invariant(format!(
                "kinks must start at 0 and end at 1, got {} .. {}",
                kinks[0],
                kinks[kinks.len() - 1]
            )));
        }
        let m = kinks.len();
        kinks[0] = 0.0;
        kinks[m - 1] = 1.0;
        if kinks.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Invariant("kinks must be strictly increasing".into()));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::Invariant("values must be finite".into()));
        }
        if (values[0] - 1.0).abs() > 1e-12 || (values[m - 1] - 1.0).abs() > 1e-12 {
            return Err(Error::Invariant(format!(
                "A(0) and A(1) must equal 1, got {} and {}",
                values[0],
                values[m - 1]
            )));
        }
        for (x, v) in kinks.iter().zip(&values) {
            let lower = x.max(1.0 - x);
            if *v < lower - 1e-12 || *v > 1.0 + 1e-12 {
                return Err(Error::Invariant(format!(
                    "A({x}) = {v} escapes the envelope [max(x,1-x), 1]"
                )));
            }
        }
        let a = Self { kinks, values };
        let slopes = a.slopes();
        if slopes.iter().any(|s| s.abs() > 1.0 + SLOPE_TOL) {
            return Err(Error::Invariant("slopes must lie in [-1, 1]".into()));
        }
        if slopes.windows(2).any(|w| w[1] < w[0] - SLOPE_TOL) {
            return Err(Error::NonConvex("slopes must be non-decreasing".into()));
        }
        Ok(a)
    }

    /// Dense-kink approximation of a smooth dependence function on a uniform
    /// grid of `segments + 1` kinks. For a `C^2` convex input the sup error
    /// of the chord interpolant is at most `max|A''| / (8 segments^2)`.
    pub fn from_function(f: impl Fn(f64) -> f64, segments: usize) -> Result<Self> {
        if segments < 1 {
            return Err(Error::InvalidArgument("need at least one segment".into()));
        }
        let kinks: Vec<f64> = (0..=segments).map(|i| i as f64 / segments as f64).collect();
        let values = kinks.iter().map(|&x| f(x)).collect();
        Self::new(kinks, values)
    }

    pub fn kinks(&self) -> &[f64] {
        &self.kinks
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Piecewise linear interpolation; `x` must lie in `[0,1]`.
    pub fn eval(&self, x: f64) -> f64 {
        assert!((0.0..=1.0).contains(&x), "x must lie in [0,1], got {x}");
        let idx = self.kinks.partition_point(|k| *k <= x);
        if idx == self.kinks.len() {
            return self.values[idx - 1];
        }
        let i = idx - 1;
        let (x0, x1) = (self.kinks[i], self.kinks[i + 1]);
        let (v0, v1) = (self.values[i], self.values[i + 1]);
        v0 + (v1 - v0) * (x - x0) / (x1 - x0)
    }

    fn slopes(&self) -> Vec<f64> {
        self.kinks
            .windows(2)
            .zip(self.values.windows(2))
            .map(|(x, v)| (v[1] - v[0]) / (x[1] - x[0]))
            .collect()
    }

    /// `A(x) = A(1-x)` at every kink (within 1e-12).
    pub fn is_symmetric(&self) -> bool {
        self.kinks
            .iter()
            .zip(&self.values)
            .all(|(&x, &v)| (v - self.eval(1.0 - x)).abs() <= 1e-12)
    }

    /// Recovers the law of `Q`: interior kinks at `x` give atoms at `1 - x`
    /// with mass half the slope jump; the boundary derivatives give the
    /// masses at 1 and 0.
    pub fn q_law(&self) -> Result<QLaw> {
        let slopes = self.slopes();
        if slopes.windows(2).any(|w| w[1] < w[0] - SLOPE_TOL) {
            return Err(Error::NonConvex("slopes must be non-decreasing".into()));
        }
        let mut atoms = Vec::new();
        let at_one = (1.0 + slopes[0]) / 2.0;
        if at_one > MASS_DROP {
            atoms.push((1.0, at_one));
        }
        let at_zero = (1.0 - slopes[slopes.len() - 1]) / 2.0;
        if at_zero > MASS_DROP {
            atoms.push((0.0, at_zero));
        }
        for i in 1..self.kinks.len() - 1 {
            let jump = slopes[i] - slopes[i - 1];
            if jump > MASS_DROP {
                atoms.push((1.0 - self.kinks[i], jump / 2.0));
            }
        }
        let law = QLaw::new(atoms)?;
        let mean = law.mean();
        if (mean - 0.5).abs() > 1e-12 {
            return Err(Error::Invariant(format!(
                "recovered law of Q has mean {mean}, expected 1/2"
            )));
        }
        Ok(law)
    }

    /// Unique mixing measure of a symmetric dependence function over the
    /// symmetric two-atom family `{A_{q,1-q} : 0 <= q <= 1/2}`.
    pub fn decompose(&self) -> Result<NuMeasure> {
        if !self.is_symmetric() {
            return Err(Error::Asymmetric(
                "only symmetric dependence functions decompose over the symmetric family".into(),
            ));
        }
        let law = self.q_law()?;
        if !law.is_symmetric() {
            return Err(Error::Asymmetric(
                "recovered law of Q is not symmetric".into(),
            ));
        }
        let atoms = law.atoms();
        let n = atoms.len();
        let mut nu = Vec::new();
        for i in 0..n {
            let j = n - 1 - i;
            match i.cmp(&j) {
                std::cmp::Ordering::Less => nu.push((atoms[i].0, atoms[i].1 + atoms[j].1)),
                std::cmp::Ordering::Equal => nu.push((0.5, atoms[i].1)),
                std::cmp::Ordering::Greater => break,
            }
        }
        NuMeasure::new(nu)
    }
}

/// The two-atom law `Q_{a,b}` with `P(Q = a) = (b - 1/2)/(b - a)` (and the
/// `0/0 = 1` convention when `a = b = 1/2`).
pub fn bc2_q_law(a: f64, b: f64) -> Result<QLaw> {
    if !(0.0..=0.5).contains(&a) || !(0.5..=1.0).contains(&b) {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= a <= 1/2 <= b <= 1, got a={a}, b={b}"
        )));
    }
    if a == b {
        return QLaw::new(vec![(0.5, 1.0)]);
    }
    let pa = (b - 0.5) / (b - a);
    let pb = (0.5 - a) / (b - a);
    let mut atoms = Vec::new();
    if pa > 0.0 {
        atoms.push((a, pa));
    }
    if pb > 0.0 {
        atoms.push((b, pb));
    }
    QLaw::new(atoms)
}

/// The two-atom dependence function `A_{a,b}`, defined through [`bc2_q_law`].
pub fn bc2(a: f64, b: f64) -> Result<PiecewiseLinearPickands> {
    bc2_q_law(a, b)?.pickands_function()
}

/// The closed form `max{ax, b(1-x)} + max{(1-a)x, (1-b)(1-x)}`. It agrees
/// with [`bc2`] on the symmetric diagonal `b = 1 - a` but differs from the
/// two-atom law elsewhere; both are exposed so callers can pick explicitly.
pub fn bc2_closed_form(a: f64, b: f64, x: f64) -> f64 {
    (a * x).max(b * (1.0 - x)) + ((1.0 - a) * x).max((1.0 - b) * (1.0 - x))
}

/// A finitely supported mixing measure over the symmetric two-atom family,
/// carried by `[0, 1/2]`. Masses sum to one, which is exactly the statement
/// that the reconstructed law of `Q` has total probability one.
#[derive(Debug, Clone)]
pub struct NuMeasure {
    atoms: Vec<(f64, f64)>,
}

impl NuMeasure {
    pub fn new(atoms: Vec<(f64, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidArgument(
                "mixing measure needs at least one atom".into(),
            ));
        }
        for (q, m) in &atoms {
            if !q.is_finite() || *q < 0.0 || *q > 0.5 + Q_TOL {
                return Err(Error::Invariant(format!(
                    "mixing atoms must lie in [0, 1/2], got {q}"
                )));
            }
            if !m.is_finite() || *m <= 0.0 {
                return Err(Error::Invariant(format!(
                    "mixing masses must be positive, got {m}"
                )));
            }
        }
        let mut atoms = atoms;
        atoms.sort_by(|x, y| x.0.total_cmp(&y.0));
        let mut merged: Vec<(f64, f64)> = Vec::with_capacity(atoms.len());
        for (q, m) in atoms {
            match merged.last_mut() {
                Some(last) if (q - last.0).abs() <= Q_TOL => last.1 += m,
                _ => merged.push((q, m)),
            }
        }
        let total: f64 = merged.iter().map(|(_, m)| m).sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::Invariant(format!(
                "reconstructed law of Q must have total probability 1, got {total}"
            )));
        }
        Ok(Self { atoms: merged })
    }

    pub fn atoms(&self) -> &[(f64, f64)] {
        &self.atoms
    }

    /// The symmetric law of `Q` this measure encodes: mass `m` at `q < 1/2`
    /// splits evenly between `q` and `1-q`; mass at `1/2` stays put.
    pub fn reconstructed_q_law(&self) -> Result<QLaw> {
        let mut atoms = Vec::new();
        for &(q, m) in &self.atoms {
            if (q - 0.5).abs() <= Q_TOL {
                atoms.push((0.5, m));
            } else {
                atoms.push((q, m / 2.0));
                atoms.push((1.0 - q, m / 2.0));
            }
        }
        QLaw::new(atoms)
    }

    /// The mixed dependence function `sum_q m_q A_{q,1-q}`.
    pub fn recompose(&self) -> Result<PiecewiseLinearPickands> {
        self.reconstructed_q_law()?.pickands_function()
    }

    /// Entrywise comparison within the identification tolerance.
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.atoms.len() == other.atoms.len()
            && self
                .atoms
                .iter()
                .zip(&other.atoms)
                .all(|(a, b)| (a.0 - b.0).abs() <= Q_TOL && (a.1 - b.1).abs() <= 1e-12)
    }
}

impl DiscreteSpectralMeasure {
    /// The law of the first coordinate of a bivariate measure.
    pub fn bivariate_q_law(&self) -> Result<QLaw> {
        if self.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                got: self.dim(),
            });
        }
        QLaw::new(
            self.atoms()
                .iter()
                .map(|a| (a.point.get(0), a.mass))
                .collect(),
        )
    }

    /// Exact dependence function `A(x) = l(x, 1-x)` of a bivariate measure,
    /// with kinks exactly where the maximizing atom/coordinate changes.
    pub fn pickands_function(&self) -> Result<PiecewiseLinearPickands> {
        self.bivariate_q_law()?.pickands_function()
    }

    /// Bivariate measure with atoms `(q, 1-q)` weighted by the given law.
    pub fn from_q_law(law: &QLaw) -> Result<Self> {
        let symmetric = law.is_symmetric();
        let atoms = law
            .atoms()
            .iter()
            .map(|&(q, p)| Ok((SimplexVector::new(vec![q, 1.0 - q])?, p)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(2, atoms, symmetric)
    }
}
