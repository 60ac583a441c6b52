//! Structural properties of symbols, the exact characteristic polynomial,
//! and the companion reduction, checked against independent numeric oracles.

mod common;

use common::*;
use num_complex::Complex64;
use num_rational::Ratio;
use symprop_core::{
    char_poly_in_lambda, companion_symbol, eigenvalues, match_spectra, reduced_order,
    total_degree, ComplexMatrix, MultiPoly,
};

fn rel_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.sub(b).norm_fro() / a.norm_fro().max(b.norm_fro()).max(1.0)
}

#[test]
fn symbol_substitution_is_additive_and_multiplicative() {
    let mut rng = Rng::new(101);
    for trial in 0..40 {
        let m = 1 + rng.usize_below(4);
        let n = 1 + rng.usize_below(3);
        let g = random_operator(&mut rng, m, n, 2);
        let h = random_operator(&mut rng, m, n, 2);
        let xi: Vec<f64> = (0..n).map(|_| 3.0 * rng.sym()).collect();

        let sum = g.add(&h).unwrap().symbol_at(&xi).unwrap();
        let sum_direct = g.symbol_at(&xi).unwrap().add(&h.symbol_at(&xi).unwrap());
        assert!(rel_diff(&sum, &sum_direct) < 1e-12, "additivity, trial {trial}");

        let prod = g.compose(&h).unwrap().symbol_at(&xi).unwrap();
        let prod_direct = g.symbol_at(&xi).unwrap().matmul(&h.symbol_at(&xi).unwrap());
        assert!(rel_diff(&prod, &prod_direct) < 1e-12, "multiplicativity, trial {trial}");
    }
}

/// Evaluates `P(λ, iξ) = λ^m + Σ Q_k(iξ) λ^k` from characteristic
/// coefficients.
fn eval_char_poly(q: &[MultiPoly], lambda: Complex64, xi: &[f64]) -> (Complex64, f64) {
    let m = q.len();
    let point: Vec<Complex64> = xi.iter().map(|&x| Complex64::new(0.0, x)).collect();
    let mut value = lambda.powu(m as u32);
    let mut scale = lambda.norm().powi(m as i32);
    for (k, poly) in q.iter().enumerate() {
        let qv = poly.eval(&point).unwrap();
        value += qv * lambda.powu(k as u32);
        scale += qv.norm() * lambda.norm().powi(k as i32);
    }
    (value, scale.max(1e-300))
}

#[test]
fn char_poly_matches_numeric_determinant() {
    let mut rng = Rng::new(2024);
    let g = random_operator(&mut rng, 3, 2, 2);
    let q = char_poly_in_lambda(&g).unwrap();
    for trial in 0..100 {
        let lambda = Complex64::new(4.0 * rng.sym(), 4.0 * rng.sym());
        let xi: Vec<f64> = (0..2).map(|_| 3.0 * rng.sym()).collect();
        let (value, scale) = eval_char_poly(&q, lambda, &xi);
        let a = g.symbol_at(&xi).unwrap();
        let shifted = ComplexMatrix::identity(3).scale(lambda).sub(&a);
        let det = shifted.det();
        assert!(
            (value - det).norm() <= 1e-10 * scale.max(det.norm()),
            "trial {trial}: P = {value}, det = {det}"
        );
    }
}

#[test]
fn companion_spectrum_equals_char_poly_roots() {
    let mut rng = Rng::new(7);
    for trial in 0..25 {
        let m = 1 + rng.usize_below(5);
        let n = 1 + rng.usize_below(2);
        let mut q: Vec<MultiPoly> = (0..m).map(|_| random_poly(&mut rng, n, 2, 2)).collect();
        q.push(MultiPoly::one(n));
        let xi: Vec<f64> = (0..n).map(|_| 2.0 * rng.sym()).collect();
        let point: Vec<Complex64> = xi.iter().map(|&x| Complex64::new(0.0, x)).collect();
        let coeffs: Vec<Complex64> =
            q[..m].iter().map(|p| p.eval(&point).unwrap()).collect();

        let companion = companion_symbol(&q, &xi).unwrap();
        let spec = eigenvalues(&companion).unwrap();
        let roots = durand_kerner_roots(&coeffs);
        let dist = match_spectra(spec.eigenvalues(), &roots);
        assert!(dist < 1e-9, "trial {trial} (m = {m}): multiset distance {dist}");
    }
}

#[test]
fn degree_data_invariant_under_axis_relabeling() {
    let mut rng = Rng::new(55);
    let perms: [[usize; 3]; 3] = [[1, 2, 0], [2, 0, 1], [0, 2, 1]];
    for trial in 0..12 {
        let m = 1 + rng.usize_below(3);
        let g = random_operator(&mut rng, m, 3, 3);
        let q = char_poly_in_lambda(&g).unwrap();
        for perm in &perms {
            let permuted = g.permute_axes(perm).unwrap();
            let qp = char_poly_in_lambda(&permuted).unwrap();
            assert_eq!(total_degree(&q), total_degree(&qp), "trial {trial}");
            assert_eq!(reduced_order(&q), reduced_order(&qp), "trial {trial}");
        }
    }
}

#[test]
fn degree_m_iff_reduced_order_at_most_one() {
    let mut rng = Rng::new(99);
    let mut gallery = vec![heat(1), backward_heat(1), schrodinger(1), transport(1.5), wave_system(), wave_energy()];
    for _ in 0..20 {
        let m = 1 + rng.usize_below(4);
        let n = 1 + rng.usize_below(2);
        gallery.push(random_operator(&mut rng, m, n, 2));
    }
    for g in &gallery {
        let q = char_poly_in_lambda(g).unwrap();
        let deg = total_degree(&q);
        let p0 = reduced_order(&q);
        assert_eq!(
            deg as usize == g.m(),
            p0 <= Ratio::new(1, 1),
            "deg P = {deg}, m = {}, p0 = {p0}",
            g.m()
        );
    }
}
