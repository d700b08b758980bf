//! Points of the unit simplex and their permutation equivalence classes.

use crate::error::{Error, Result};

/// Absolute tolerance for identifying two simplex points entrywise.
pub const POINT_TOL: f64 = 1e-12;

/// Absolute tolerance on the coordinate sum of a simplex point.
pub const SUM_TOL: f64 = 1e-12;

/// A point of the unit simplex: non-negative entries summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct SimplexVector {
    entries: Vec<f64>,
}

impl SimplexVector {
    pub fn new(entries: Vec<f64>) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::InvalidArgument(format!(
                "simplex points need dimension >= 2, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !e.is_finite() || **e < 0.0) {
            return Err(Error::Invariant(format!(
                "simplex entries must be finite and non-negative, got {bad}"
            )));
        }
        let sum: f64 = entries.iter().sum();
        if (sum - 1.0).abs() > SUM_TOL {
            return Err(Error::Invariant(format!(
                "simplex entries must sum to 1 (within {SUM_TOL:e}), got {sum}"
            )));
        }
        Ok(Self { entries })
    }

    /// Builds the point by normalizing arbitrary non-negative weights.
    pub fn from_weights(weights: &[f64]) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !total.is_finite() || total <= 0.0 {
            return Err(Error::InvalidArgument(
                "weights must have a positive sum".into(),
            ));
        }
        Self::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> f64 {
        self.entries[k]
    }

    /// Entrywise identification within [`POINT_TOL`].
    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim() == other.dim()
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(a, b)| (a - b).abs() <= POINT_TOL)
    }

    /// Permuted copy a -> a[perm[k]].
    pub(crate) fn permuted(&self, perm: &[usize]) -> Self {
        Self {
            entries: perm.iter().map(|&k| self.entries[k]).collect(),
        }
    }

    /// True when all entries are strictly positive and pairwise distinct
    /// (beyond [`POINT_TOL`]).
    pub fn has_distinct_positive_entries(&self) -> bool {
        if self.entries.iter().any(|&e| e <= 0.0) {
            return false;
        }
        let mut sorted = self.entries.clone();
        sorted.sort_by(f64::total_cmp);
        sorted.windows(2).all(|w| w[1] - w[0] > POINT_TOL)
    }
}

/// A permutation-equivalence class of simplex points, represented by the
/// coordinate-sorted member.
#[derive(Debug, Clone)]
pub struct EquivClass {
    representative: SimplexVector,
}

impl EquivClass {
    pub fn new(point: SimplexVector) -> Self {
        let mut entries = point.entries;
        entries.sort_by(f64::total_cmp);
        Self {
            representative: SimplexVector { entries },
        }
    }

    /// The sorted (non-decreasing) representative.
    pub fn representative(&self) -> &SimplexVector {
        &self.representative
    }

    pub fn dim(&self) -> usize {
        self.representative.dim()
    }

    /// Two classes are the same when their representatives agree entrywise
    /// within [`POINT_TOL`].
    pub fn same_class(&self, other: &Self) -> bool {
        self.representative.approx_eq(&other.representative)
    }
}
