//! Monte Carlo instruments: the inverse-mean Pickands estimator and the
//! singular-path diagnostic for max-linear scatter plots.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sampling::SampleBatch;

/// Clustering tolerance for log-ratio ties; max-linear ties are exact up to
/// floating-point noise, while genuinely distinct ratios sit far apart.
pub const RATIO_TOL: f64 = 1e-9;

/// Nonparametric estimate of a bivariate dependence function on a grid,
/// reported both raw and clipped to the valid envelope.
#[derive(Debug, Clone)]
pub struct PickandsEstimate {
    grid: Vec<f64>,
    raw: Vec<f64>,
    clipped: Vec<f64>,
    n: usize,
}

impl PickandsEstimate {
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn raw(&self) -> &[f64] {
        &self.raw
    }

    pub fn clipped(&self) -> &[f64] {
        &self.clipped
    }

    pub fn sample_size(&self) -> usize {
        self.n
    }

    /// Largest absolute deviation of the clipped estimate from a reference
    /// dependence function over the grid.
    pub fn sup_error(&self, exact: impl Fn(f64) -> f64) -> f64 {
        self.grid
            .iter()
            .zip(&self.clipped)
            .map(|(&x, &v)| (v - exact(x)).abs())
            .fold(0.0, f64::max)
    }
}

/// The interior grid `{1/(k+1), ..., k/(k+1)}`.
pub fn uniform_grid(k: usize) -> Vec<f64> {
    (1..=k).map(|i| i as f64 / (k + 1) as f64).collect()
}

/// Inverse-mean estimator of the dependence function of coordinates
/// `(i, j)`: with `xi = -log u_i` and `eta = -log u_j`,
/// `A_hat(x) = n / sum_r min(xi_r / x, eta_r / (1-x))`.
pub fn estimate_pickands(
    batch: &SampleBatch,
    i: usize,
    j: usize,
    grid: &[f64],
) -> Result<PickandsEstimate> {
    if i == j {
        return Err(Error::InvalidArgument("coordinates must differ".into()));
    }
    if i >= batch.dim() || j >= batch.dim() {
        return Err(Error::DimensionMismatch {
            expected: batch.dim(),
            got: i.max(j) + 1,
        });
    }
    if batch.is_empty() {
        return Err(Error::InvalidArgument("empty batch".into()));
    }
    if grid.iter().any(|x| !(*x > 0.0 && *x < 1.0)) {
        return Err(Error::InvalidArgument(
            "grid points must lie in (0,1)".into(),
        ));
    }
    let n = batch.len();
    let logs: Vec<(f64, f64)> = (0..n)
        .map(|r| (-batch.get(r, i).ln(), -batch.get(r, j).ln()))
        .collect();
    let mut raw = Vec::with_capacity(grid.len());
    let mut clipped = Vec::with_capacity(grid.len());
    for &x in grid {
        let denom: f64 = logs
            .iter()
            .map(|&(xi, eta)| (xi / x).min(eta / (1.0 - x)))
            .sum();
        let value = n as f64 / denom;
        if !(value > 0.0 && value < 1.5) {
            return Err(Error::Invariant(format!(
                "raw estimate {value} at x = {x} escapes (0, 1.5)"
            )));
        }
        raw.push(value);
        clipped.push(value.clamp(x.max(1.0 - x), 1.0));
    }
    Ok(PickandsEstimate {
        grid: grid.to_vec(),
        raw,
        clipped,
        n,
    })
}

/// A cluster of coinciding log-ratios `log u_j / log u_i`: a ray
/// `u_j = u_i^ratio` carrying an atom of the singular component.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioCluster {
    pub ratio: f64,
    pub count: usize,
    pub frequency: f64,
}

/// Clusters the per-row ratios `log u_j / log u_i` within [`RATIO_TOL`] and
/// reports every value hit at least twice, with its empirical frequency.
pub fn singular_paths(batch: &SampleBatch, i: usize, j: usize) -> Result<Vec<RatioCluster>> {
    if i == j {
        return Err(Error::InvalidArgument("coordinates must differ".into()));
    }
    if i >= batch.dim() || j >= batch.dim() {
        return Err(Error::DimensionMismatch {
            expected: batch.dim(),
            got: i.max(j) + 1,
        });
    }
    let n = batch.len();
    let mut ratios: Vec<f64> = (0..n)
        .map(|r| batch.get(r, j).ln() / batch.get(r, i).ln())
        .collect();
    ratios.sort_by(f64::total_cmp);
    let mut clusters = Vec::new();
    let mut start = 0;
    while start < ratios.len() {
        let anchor = ratios[start];
        let mut end = start + 1;
        while end < ratios.len() && ratios[end] - anchor <= RATIO_TOL {
            end += 1;
        }
        let count = end - start;
        if count >= 2 {
            let mean = ratios[start..end].iter().sum::<f64>() / count as f64;
            clusters.push(RatioCluster {
                ratio: mean,
                count,
                frequency: count as f64 / n as f64,
            });
        }
        start = end;
    }
    Ok(clusters)
}
