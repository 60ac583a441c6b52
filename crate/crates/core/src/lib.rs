//! Analysis of constant-coefficient matrix differential operators through
//! their Fourier symbols.
//!
//! An operator `G(∂₁,…,∂ₙ)` is an m×m matrix whose entries are polynomials in
//! the partial derivatives with constant complex coefficients. Substituting
//! `∂ⱼ ↦ iξⱼ` gives the symbol `A(ξ) = G(iξ)`, a dense complex matrix per real
//! frequency ξ. Everything this crate computes is a function of that symbol:
//!
//! * [`operator`] — operator representation, symbol evaluation, the exact
//!   characteristic polynomial `P(λ, ζ) = det(λ·I − G(ζ))`, its degree data,
//!   and companion (first-order) reductions of scalar equations;
//! * [`matrix`] / [`eig`] / [`expm`] — dense complex matrices, eigenvalues by
//!   shifted QR, and the matrix exponential by Padé scaling-and-squaring;
//! * [`shilov`] — the norm bound `‖exp(tA)‖ ≤ ρ(exp(tA))·(1 + Σ (2t)ᵏ/k!·‖A‖ᵏ)`;
//! * [`classify`] — sampled estimation of the spectral bound
//!   `s₀ = sup_ξ max Re σ(A(ξ))` over dyadic frequency shells, the Petrovskii
//!   verdict, hyperbolicity (finite s₀ together with `deg P = m`), and an
//!   empirical growth-bound consistency check.
//!
//! The crate is `no_std` (alloc required); float math goes through libm. All
//! types are immutable after construction and all operations are pure
//! functions, so everything is safe to share across threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod classify;
pub mod eig;
pub mod expm;
pub mod matrix;
pub mod operator;
pub mod poly;
pub mod shilov;

pub use classify::{
    classify, classify_with_report, growth_bound_check, petrovskii_verdict,
    sample_spectral_bound, serialize_extended_f64, Classification, ClassifyError,
    GrowthBoundConfig, GrowthBoundReport, PetrovskiiVerdict, SamplingConfig, ShellSample,
    SpectralReport,
};
pub use eig::{eigenvalues, match_spectra, operator_norm, spectral_abscissa, spectral_radius,
    EigError, Spectrum};
pub use expm::{matrix_exp, matrix_exp_scaled, ExpmError};
pub use matrix::ComplexMatrix;
pub use operator::{char_poly_in_lambda, companion_operator, companion_symbol, parse_operator,
    poly_from, reduced_order, total_degree, OperatorError, PolyMatrixOperator};
pub use poly::MultiPoly;
pub use shilov::shilov_bound;
