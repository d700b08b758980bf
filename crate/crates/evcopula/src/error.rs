//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation received data violating a structural
    /// invariant (mass normalization, barycenter, convexity bounds, ...).
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Factorial enumeration is refused beyond this dimension rather than
    /// silently approximated.
    #[error("dimension {d} exceeds the permutation enumeration bound {max}")]
    DimensionTooLarge { d: usize, max: usize },

    /// An operation requiring an exchangeable input got an asymmetric one.
    #[error("asymmetric input: {0}")]
    Asymmetric(String),

    #[error("non-convex input: {0}")]
    NonConvex(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Malformed input document (JSON/CSV).
    #[error("parse error: {0}")]
    Parse(String),

    /// Adaptive quadrature hit its subdivision cap before reaching the
    /// requested tolerance; never a silent value.
    #[error("quadrature did not converge within {limit} subdivisions")]
    QuadratureDidNotConverge { limit: usize },

    #[error("enumeration of {size} tuples exceeds the cap of {cap}")]
    EnumerationCapExceeded { size: usize, cap: usize },

    /// The event-driven sampler exceeded its per-row event budget.
    #[error("event budget {cap} exceeded while resolving a sample row")]
    EventCapExceeded { cap: usize },
}
