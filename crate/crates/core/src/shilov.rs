//! The Shilov norm bound for matrix exponentials:
//!
//! `‖exp(tA)‖ ≤ ρ(exp(tA)) · (1 + Σ_{k=1}^{m−1} (2t)ᵏ/k! · ‖A‖ᵏ)`
//!
//! with `ρ(exp(tA)) = e^{t · max Re σ(A)}` by spectral mapping. The matrix
//! norm is fixed to the operator 2-norm; any submultiplicative norm keeps the
//! bound valid, the 2-norm makes it tightest among the common choices.

// Float supplies the libm-backed f64 math in no_std builds; std builds
// resolve the same calls inherently, so the import can look unused there.
#[allow(unused_imports)]
use num_traits::Float;

use crate::eig::{operator_norm, spectral_abscissa};
use crate::matrix::ComplexMatrix;

/// Upper bound for `‖exp(tA)‖₂`, `t ≥ 0`. Never fails: the result may be
/// `+inf` on floating overflow, and if the eigenvalue iteration does not
/// converge the bound degenerates to `+inf` (still a valid upper bound).
pub fn shilov_bound(a: &ComplexMatrix, t: f64) -> f64 {
    assert!(t >= 0.0, "shilov_bound requires t >= 0");
    let m = a.dim();
    if m == 0 {
        return 1.0;
    }
    let abscissa = match spectral_abscissa(a) {
        Ok(v) => v,
        Err(_) => return f64::INFINITY,
    };
    let norm = operator_norm(a);
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..m {
        term *= 2.0 * t * norm / (k as f64);
        sum += term;
    }
    (t * abscissa).exp() * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use num_complex::Complex64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn zero_matrix_bound_is_one() {
        for &t in &[0.0, 0.5, 3.0] {
            assert_eq!(shilov_bound(&ComplexMatrix::zeros(3), t), 1.0);
        }
    }

    #[test]
    fn scalar_case_is_exact() {
        // m = 1: the sum is empty and the bound equals ‖exp(ta)‖ itself.
        let a = ComplexMatrix::from_rows(&[vec![c(-0.3, 2.0)]]).unwrap();
        let t = 1.7;
        let bound = shilov_bound(&a, t);
        assert!((bound - (t * -0.3).exp()).abs() < 1e-13);
    }
}
