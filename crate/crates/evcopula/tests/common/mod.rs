//! Shared test oracles and random-case generators. The oracles are written
//! independently of the library internals (recursive permutation
//! enumeration, direct sums) so they can arbitrate.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use evcopula::{DiscreteSpectralMeasure, DiscreteUnitMeanDF, QLaw, SimplexVector};

/// All permutations of `0..n` by straightforward recursion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let v = rest.remove(i);
            prefix.push(v);
            go(prefix, rest, out);
            prefix.pop();
            rest.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Oracle for the extremal stable tail dependence function:
/// `1/(d-1)! * sum over permutations of max_k x_k q_{perm(k)}`.
pub fn oracle_extremal_stdf(q: &[f64], x: &[f64]) -> f64 {
    let d = q.len();
    let mut total = 0.0;
    for perm in permutations(d) {
        total += x
            .iter()
            .zip(&perm)
            .map(|(xi, &k)| xi * q[k])
            .fold(0.0, f64::max);
    }
    let fact_d_minus_1: usize = (1..d).product::<usize>().max(1);
    total / fact_d_minus_1 as f64
}

/// Oracle for the bivariate margin of the uniformly spread atom `q`:
/// enumerates permutations and returns sorted `(first coordinate, mass)`
/// pairs after merging.
pub fn oracle_margin_pairs(q: &[f64]) -> Vec<(f64, f64)> {
    let d = q.len();
    let fact: usize = (1..=d).product();
    let mut pairs: Vec<(f64, f64)> = Vec::new();
    for perm in permutations(d) {
        let s = q[perm[0]] + q[perm[1]];
        if s <= 0.0 {
            continue;
        }
        let first = q[perm[0]] / s;
        let mass = (d as f64 / 2.0) * s / fact as f64;
        pairs.push((first, mass));
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for (v, m) in pairs {
        match merged.last_mut() {
            Some(last) if (v - last.0).abs() <= 1e-12 => last.1 += m,
            _ => merged.push((v, m)),
        }
    }
    merged
}

/// Brute-force dependence-function value of a discrete law of `Q`.
pub fn oracle_a_from_q(atoms: &[(f64, f64)], x: f64) -> f64 {
    2.0 * atoms
        .iter()
        .map(|(q, p)| p * (x * q).max((1.0 - x) * (1.0 - q)))
        .sum::<f64>()
}

/// Kolmogorov-Smirnov statistic of a sample against the uniform law.
pub fn ks_uniform(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len() as f64;
    values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let upper = ((i + 1) as f64 / n - v).abs();
            let lower = (v - i as f64 / n).abs();
            upper.max(lower)
        })
        .fold(0.0, f64::max)
}

pub fn rng(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Random point of the simplex by normalized exponentials.
pub fn random_simplex_point(rng: &mut ChaCha12Rng, d: usize) -> SimplexVector {
    let weights: Vec<f64> = (0..d).map(|_| -rng.gen::<f64>().max(1e-12).ln()).collect();
    SimplexVector::from_weights(&weights).unwrap()
}

/// Random simplex point with strictly positive pairwise-distinct entries.
pub fn random_distinct_positive_point(rng: &mut ChaCha12Rng, d: usize) -> SimplexVector {
    loop {
        let p = random_simplex_point(rng, d);
        if p.has_distinct_positive_entries() {
            return p;
        }
    }
}

/// Random exchangeable measure spread from a few random atoms.
pub fn random_exchangeable_measure(rng: &mut ChaCha12Rng, d: usize) -> DiscreteSpectralMeasure {
    let n_atoms = rng.gen_range(1..=3);
    let atoms: Vec<(SimplexVector, f64)> = (0..n_atoms)
        .map(|_| (random_simplex_point(rng, d), rng.gen_range(0.1..1.0)))
        .collect();
    DiscreteSpectralMeasure::exchangeable_from_atoms(d, &atoms).unwrap()
}

/// Random symmetric mean-1/2 law of `Q` with well-separated atoms.
pub fn random_symmetric_q_law(rng: &mut ChaCha12Rng, max_pairs: usize) -> QLaw {
    loop {
        let mut atoms: Vec<(f64, f64)> = Vec::new();
        let pairs = rng.gen_range(0..=max_pairs);
        let mut locations: Vec<f64> = Vec::new();
        for _ in 0..pairs {
            let q = (rng.gen_range(0..490) as f64) / 1000.0;
            locations.push(q);
        }
        locations.sort_by(f64::total_cmp);
        locations.dedup();
        for q in locations {
            let w = rng.gen_range(0.05..1.0);
            atoms.push((q, w));
            atoms.push((1.0 - q, w));
        }
        if atoms.is_empty() || rng.gen_bool(0.5) {
            atoms.push((0.5, rng.gen_range(0.05..1.0)));
        }
        let total: f64 = atoms.iter().map(|(_, w)| w).sum();
        let atoms: Vec<(f64, f64)> = atoms.into_iter().map(|(q, w)| (q, w / total)).collect();
        if let Ok(law) = QLaw::new(atoms) {
            return law;
        }
    }
}

/// Random discrete unit-mean distribution with up to `max_atoms` support
/// points on a coarse grid (so merges are exact).
pub fn random_unit_mean_df(rng: &mut ChaCha12Rng, max_atoms: usize) -> DiscreteUnitMeanDF {
    loop {
        let n = rng.gen_range(1..=max_atoms);
        let mut locations: Vec<f64> = (0..n)
            .map(|_| rng.gen_range(0..200) as f64 / 20.0)
            .collect();
        if rng.gen_bool(0.3) {
            locations.push(0.0);
        }
        locations.sort_by(f64::total_cmp);
        locations.dedup();
        if !locations.iter().any(|x| *x > 0.0) {
            continue;
        }
        let weights: Vec<f64> = locations.iter().map(|_| rng.gen_range(0.05..1.0)).collect();
        let total: f64 = weights.iter().sum();
        let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
        let mean: f64 = locations.iter().zip(&probs).map(|(x, p)| x * p).sum();
        if mean <= 0.0 {
            continue;
        }
        let atoms: Vec<(f64, f64)> = locations
            .iter()
            .zip(&probs)
            .map(|(x, p)| (x / mean, *p))
            .collect();
        if let Ok(f) = DiscreteUnitMeanDF::new(atoms) {
            return f;
        }
    }
}
