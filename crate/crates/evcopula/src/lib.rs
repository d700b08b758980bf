//! Exchangeable extreme-value copulas through their stable tail dependence
//! functions.
//!
//! The crate represents the dependence structure of a `d`-variate
//! extreme-value copula by a finitely supported Pickands spectral measure
//! (the law of a simplex-valued vector `Q` with barycenter `1/d`) and works
//! with it exactly:
//!
//! * [`spectral`] — evaluation of the stable tail dependence function and
//!   copula, exchangeabilization, lower-dimensional margins, extremal
//!   elements indexed by simplex equivalence classes, and the
//!   support-counting obstruction to embedding them into higher dimensions;
//! * [`pickands`] — bivariate dependence functions as piecewise linear
//!   objects, the two-atom `bc2` family, recovery of the law of `Q` from a
//!   dependence function, and the unique decomposition of symmetric
//!   dependence functions over the symmetric two-atom family;
//! * [`extendibility`] — the conditionally-iid subfamily parametrized by
//!   unit-mean distribution functions: the maps `F -> Q_F` and `F -> A_F`
//!   (discrete and absolutely continuous), exact evaluation of mixture
//!   models `(b, lambda)`, and the necessary-condition checkers that bound
//!   interior mass of `Q` by its mass at `1/2`;
//! * [`sampling`] — exact samplers: max-linear for discrete spectral
//!   measures, event-driven first passage for conditionally-iid models;
//! * [`estimation`] — the inverse-mean Pickands estimator and the
//!   singular-path diagnostic used to validate the samplers;
//! * [`io`] — JSON/CSV/SVG wire formats shared with the `evcopula` binary.
//!
//! Runnable walkthroughs live in `examples/`; start with
//! `evaluate_measures` and `figure_scatter`.

pub mod error;
pub mod estimation;
pub mod extendibility;
pub mod io;
pub mod pickands;
pub mod quad;
pub mod sampling;
pub mod simplex;
pub mod spectral;

pub use error::{Error, Result};
pub use estimation::{
    estimate_pickands, singular_paths, uniform_grid, PickandsEstimate, RatioCluster,
};
pub use extendibility::{
    check_necessary_continuous, check_necessary_discrete, qf_from_integer_atoms, CondIIDSpec,
    ContinuousUnitMeanDF, DensityVerdict, DiscreteUnitMeanDF, SupportBound, Verdict,
};
pub use pickands::{bc2, bc2_closed_form, bc2_q_law, NuMeasure, PiecewiseLinearPickands, QLaw};
pub use sampling::{sample_condiid, sample_maxlinear, RngStream, SampleBatch, GENERATOR_TAG};
pub use simplex::{EquivClass, SimplexVector};
pub use spectral::{extremal_stdf, DiscreteSpectralMeasure, ObstructionReport};
