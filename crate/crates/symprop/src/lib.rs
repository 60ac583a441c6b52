//! Periodic-box Cauchy solver and CLI front end for constant-coefficient
//! operator symbols.
//!
//! The Cauchy problem `du/dt = G(∂)u, u(0) = u₀` is solved per frequency:
//! `û(t, ξ) = exp(t·A(ξ))·û₀(ξ)` with `A(ξ) = G(iξ)` the symbol from
//! [`symprop_core`]. The periodic box stands in for ℝⁿ — FFT propagation is
//! exact per mode, and periodization error is controlled by choosing the box
//! large against the data support plus the propagation cone.
//!
//! * [`grid`] / [`field`] — grid specification, ℂᵐ-valued states, CSV dumps;
//! * [`fft`] — discrete transforms with the `e^{−ix·ξ}` forward convention;
//! * [`propagate`] — per-frequency propagation, discrete kernels, semigroup
//!   residuals;
//! * [`cone`] — thresholded support radii and propagation-cone estimates for
//!   hyperbolic systems;
//! * [`gallery`] — built-in operators with embedded documents;
//! * [`cli`] — the `symprop` command-line front end.

pub mod cli;
pub mod cone;
pub mod fft;
pub mod field;
pub mod gallery;
pub mod grid;
pub mod propagate;
pub mod report;

use std::path::PathBuf;

pub use cone::{cone_estimate, support_radius, ConeEstimate};
pub use field::{FieldState, KernelField, Representation};
pub use fft::{forward_fft, inverse_fft};
pub use grid::GridSpec;
pub use propagate::{kernel, mode_magnitude_ratios, propagate, semigroup_residual,
    PropagateOptions};

#[derive(Debug, thiserror::Error)]
pub enum SolverError {
    #[error("state has {field_m} components over {field_n} axes, operator wants {op_m} over {op_n}")]
    ShapeMismatch { field_m: usize, field_n: usize, op_m: usize, op_n: usize },
    #[error("expected a {expected:?}-space field, got {found:?}")]
    RepresentationMismatch { expected: Representation, found: Representation },
    #[error("propagation time must be nonnegative, got {0}")]
    NegativeTime(f64),
    #[error("classifier verdict is 'violated'; refusing to propagate without the force flag")]
    PetrovskiiRefused,
    #[error("per-frequency propagator overflowed at xi = {xi:?} (symbol 1-norm {norm})")]
    OverflowAtFrequency { xi: Vec<f64>, norm: f64 },
    #[error("cone estimation requires a hyperbolic operator ({0})")]
    NotHyperbolic(String),
    #[error("no support radius above the resolution floor; times too small for the grid")]
    TimesTooSmall,
    #[error("threshold must lie strictly between 0 and 1, got {0}")]
    ThresholdRange(f64),
    #[error("box lengths must be positive and finite")]
    BadBoxLength,
    #[error("points per axis must be even and at least 2, got {0}")]
    OddPoints(usize),
    #[error("grid of {points} points exceeds the budget of {budget}")]
    GridBudget { points: usize, budget: usize },
    #[error("grid axis counts differ: {lengths} lengths vs {points} point counts")]
    GridAxes { lengths: usize, points: usize },
    #[error("initial-condition file does not match the requested grid: {0}")]
    IcMismatch(String),
    #[error("malformed field CSV: {0}")]
    Csv(String),
    #[error("unknown gallery operator '{0}'")]
    UnknownGallery(String),
    #[error("mode index {index} outside the representable range [{lo}, {hi}] on axis {axis}")]
    ModeRange { axis: usize, index: i64, lo: i64, hi: i64 },
    #[error(transparent)]
    Operator(#[from] symprop_core::OperatorError),
    #[error(transparent)]
    Classify(#[from] symprop_core::ClassifyError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Where a report should go.
#[derive(Clone, Debug)]
pub enum Output {
    Stdout,
    Dir(PathBuf),
}
