//! Property tests for the polynomial layer and operator documents.

use num_complex::Complex64;
use proptest::collection::vec;
use proptest::prelude::*;
use symprop_core::poly::{MultiPoly, Term};
use symprop_core::{parse_operator, PolyMatrixOperator};

fn term_strategy(n: usize) -> impl Strategy<Value = Term> {
    (
        -1.0f64..1.0,
        -1.0f64..1.0,
        vec(0u32..4, n),
    )
        .prop_map(|(re, im, alpha)| Term { coeff: Complex64::new(re, im), alpha })
}

fn poly_strategy(n: usize) -> impl Strategy<Value = MultiPoly> {
    vec(term_strategy(n), 0..5).prop_map(move |terms| MultiPoly::from_terms(n, terms).unwrap())
}

fn point_strategy(n: usize) -> impl Strategy<Value = Vec<Complex64>> {
    vec((-2.0f64..2.0, -2.0f64..2.0), n)
        .prop_map(|pairs| pairs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
}

proptest! {
    #[test]
    fn eval_is_additive((p, q, x) in (1usize..=3).prop_flat_map(|n| {
        (poly_strategy(n), poly_strategy(n), point_strategy(n))
    })) {
        let lhs = p.add(&q).unwrap().eval(&x).unwrap();
        let rhs = p.eval(&x).unwrap() + q.eval(&x).unwrap();
        let scale = lhs.norm().max(rhs.norm()).max(1.0);
        prop_assert!((lhs - rhs).norm() <= 1e-12 * scale);
    }

    #[test]
    fn eval_is_multiplicative((p, q, x) in (1usize..=3).prop_flat_map(|n| {
        (poly_strategy(n), poly_strategy(n), point_strategy(n))
    })) {
        let lhs = p.mul(&q).unwrap().eval(&x).unwrap();
        let rhs = p.eval(&x).unwrap() * q.eval(&x).unwrap();
        let scale = p.eval(&x).unwrap().norm() * q.eval(&x).unwrap().norm();
        prop_assert!((lhs - rhs).norm() <= 1e-11 * scale.max(1.0));
    }

    #[test]
    fn operator_documents_round_trip((m, n, polys) in (1usize..=3, 1usize..=2).prop_flat_map(|(m, n)| {
        (Just(m), Just(n), vec(poly_strategy(n), m * m))
    })) {
        let entries = polys
            .into_iter()
            .enumerate()
            .map(|(idx, p)| (idx / m, idx % m, p));
        let op = PolyMatrixOperator::from_entries(m, n, entries).unwrap();
        let doc = op.to_document();
        let back = parse_operator(&doc).unwrap();
        prop_assert_eq!(&back, &op);
        prop_assert_eq!(back.to_document(), doc);
    }
}
