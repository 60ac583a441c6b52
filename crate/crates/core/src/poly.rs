//! Multivariate polynomials with complex coefficients.
//!
//! A [`MultiPoly`] is a canonical term list over a fixed number of variables:
//! terms are sorted in graded-lexicographic order, no two terms share a
//! multi-index, and coefficients that are exactly zero or negligibly small
//! relative to the largest coefficient of the same polynomial are dropped.
//! The canonical form makes serialization deterministic and keeps degree
//! queries exact.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_complex::Complex64;
use num_traits::Zero;

/// Coefficients with magnitude below this fraction of the largest coefficient
/// of the same polynomial are dropped, once, at canonicalization.
pub const COEFF_DROP_REL: f64 = 1e-13;

/// Multi-index of exponents, one entry per variable.
pub type MultiIndex = Vec<u32>;

/// Sum of the entries, `|α| = α₁ + … + αₙ`.
pub fn index_order(alpha: &[u32]) -> u32 {
    alpha.iter().sum()
}

/// Graded-lexicographic comparison: total order first, lexicographic tie-break.
pub fn graded_lex(a: &[u32], b: &[u32]) -> Ordering {
    index_order(a).cmp(&index_order(b)).then_with(|| a.cmp(b))
}

/// One monomial `coeff · x^α`.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Complex64,
    pub alpha: MultiIndex,
}

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("multi-index of length {found} in a polynomial over {expected} variables")]
    AlphaLength { expected: usize, found: usize },
    #[error("non-finite coefficient")]
    NonFiniteCoeff,
    #[error("variable index {index} out of range for {vars} variables")]
    VarRange { index: usize, vars: usize },
    #[error("evaluation point of length {found}, expected {expected}")]
    PointLength { expected: usize, found: usize },
}

/// Polynomial in `vars` complex variables, canonical term list.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    vars: usize,
    terms: Vec<Term>,
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly { vars, terms: Vec::new() }
    }

    pub fn constant(vars: usize, c: Complex64) -> Self {
        let mut p = MultiPoly { vars, terms: vec![Term { coeff: c, alpha: vec![0; vars] }] };
        p.canonicalize();
        p
    }

    pub fn one(vars: usize) -> Self {
        Self::constant(vars, Complex64::new(1.0, 0.0))
    }

    /// The single variable `x_index`.
    pub fn variable(vars: usize, index: usize) -> Result<Self, PolyError> {
        if index >= vars {
            return Err(PolyError::VarRange { index, vars });
        }
        let mut alpha = vec![0u32; vars];
        alpha[index] = 1;
        Self::monomial(vars, Complex64::new(1.0, 0.0), alpha)
    }

    pub fn monomial(vars: usize, coeff: Complex64, alpha: MultiIndex) -> Result<Self, PolyError> {
        Self::from_terms(vars, vec![Term { coeff, alpha }])
    }

    /// Builds a polynomial from arbitrary terms, merging duplicate
    /// multi-indices and canonicalizing.
    pub fn from_terms(vars: usize, terms: Vec<Term>) -> Result<Self, PolyError> {
        for t in &terms {
            if t.alpha.len() != vars {
                return Err(PolyError::AlphaLength { expected: vars, found: t.alpha.len() });
            }
            if !t.coeff.re.is_finite() || !t.coeff.im.is_finite() {
                return Err(PolyError::NonFiniteCoeff);
            }
        }
        let mut p = MultiPoly { vars, terms };
        p.canonicalize();
        Ok(p)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && index_order(&self.terms[0].alpha) == 0)
    }

    /// Total degree, `max |α|` over the terms. The zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| index_order(&t.alpha)).max().unwrap_or(0)
    }

    fn canonicalize(&mut self) {
        self.terms.sort_by(|a, b| graded_lex(&a.alpha, &b.alpha));
        let mut merged: Vec<Term> = Vec::with_capacity(self.terms.len());
        for t in self.terms.drain(..) {
            match merged.last_mut() {
                Some(last) if last.alpha == t.alpha => last.coeff += t.coeff,
                _ => merged.push(t),
            }
        }
        let max_mag = merged.iter().map(|t| t.coeff.norm()).fold(0.0, f64::max);
        merged.retain(|t| {
            let mag = t.coeff.norm();
            mag > 0.0 && mag >= COEFF_DROP_REL * max_mag
        });
        self.terms = merged;
    }

    fn check_same_vars(&self, other: &Self) -> Result<(), PolyError> {
        if self.vars != other.vars {
            return Err(PolyError::AlphaLength { expected: self.vars, found: other.vars });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same_vars(other)?;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        let mut p = MultiPoly { vars: self.vars, terms };
        p.canonicalize();
        Ok(p)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let mut p = MultiPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: t.coeff * c, alpha: t.alpha.clone() })
                .collect(),
        };
        p.canonicalize();
        p
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_same_vars(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let alpha: MultiIndex =
                    a.alpha.iter().zip(&b.alpha).map(|(x, y)| x + y).collect();
                terms.push(Term { coeff: a.coeff * b.coeff, alpha });
            }
        }
        let mut p = MultiPoly { vars: self.vars, terms };
        p.canonicalize();
        Ok(p)
    }

    pub fn eval(&self, point: &[Complex64]) -> Result<Complex64, PolyError> {
        if point.len() != self.vars {
            return Err(PolyError::PointLength { expected: self.vars, found: point.len() });
        }
        let mut acc = Complex64::zero();
        for t in &self.terms {
            let mut v = t.coeff;
            for (x, &a) in point.iter().zip(&t.alpha) {
                if a > 0 {
                    v *= x.powu(a);
                }
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Relabels variables: variable `j` of the result is variable `perm[j]`
    /// of `self`. `perm` must be a permutation of `0..vars`.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<Self, PolyError> {
        if perm.len() != self.vars {
            return Err(PolyError::PointLength { expected: self.vars, found: perm.len() });
        }
        let mut seen = vec![false; self.vars];
        for &p in perm {
            if p >= self.vars || seen[p] {
                return Err(PolyError::VarRange { index: p, vars: self.vars });
            }
            seen[p] = true;
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff,
                alpha: perm.iter().map(|&p| t.alpha[p]).collect(),
            })
            .collect();
        let mut p = MultiPoly { vars: self.vars, terms };
        p.canonicalize();
        Ok(p)
    }

    /// Embeds into a polynomial with one extra leading variable of exponent 0.
    pub fn lift_front(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut alpha = Vec::with_capacity(t.alpha.len() + 1);
                alpha.push(0);
                alpha.extend_from_slice(&t.alpha);
                Term { coeff: t.coeff, alpha }
            })
            .collect();
        MultiPoly { vars: self.vars + 1, terms }
    }

    /// Splits by the exponent of the first variable: entry `k` of the result
    /// is the coefficient of `x₀^k`, a polynomial in the remaining variables.
    /// The result has `deg₀ + 1` entries (a single zero entry for the zero
    /// polynomial).
    pub fn coeffs_in_first_var(&self) -> Vec<MultiPoly> {
        assert!(self.vars >= 1, "needs at least one variable");
        let deg0 = self.terms.iter().map(|t| t.alpha[0]).max().unwrap_or(0) as usize;
        let mut out: Vec<MultiPoly> =
            (0..=deg0).map(|_| MultiPoly { vars: self.vars - 1, terms: Vec::new() }).collect();
        for t in &self.terms {
            out[t.alpha[0] as usize]
                .terms
                .push(Term { coeff: t.coeff, alpha: t.alpha[1..].to_vec() });
        }
        for p in &mut out {
            p.canonicalize();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn canonical_drops_zero_terms() {
        let p = MultiPoly::from_terms(
            1,
            vec![
                Term { coeff: c(0.0, 0.0), alpha: vec![3] },
                Term { coeff: c(2.0, 0.0), alpha: vec![1] },
            ],
        )
        .unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.total_degree(), 1);
    }

    #[test]
    fn canonical_merges_duplicate_indices() {
        let p = MultiPoly::from_terms(
            2,
            vec![
                Term { coeff: c(1.0, 0.0), alpha: vec![1, 1] },
                Term { coeff: c(2.0, 0.0), alpha: vec![1, 1] },
            ],
        )
        .unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms()[0].coeff, c(3.0, 0.0));
    }

    #[test]
    fn canonical_drops_relatively_tiny_coefficients() {
        let p = MultiPoly::from_terms(
            1,
            vec![
                Term { coeff: c(1.0, 0.0), alpha: vec![0] },
                Term { coeff: c(1e-15, 0.0), alpha: vec![2] },
            ],
        )
        .unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.total_degree(), 0);
    }

    #[test]
    fn alpha_length_mismatch_rejected() {
        let err = MultiPoly::monomial(1, c(1.0, 0.0), vec![1, 2]).unwrap_err();
        assert_eq!(err, PolyError::AlphaLength { expected: 1, found: 2 });
    }

    #[test]
    fn graded_lex_is_total_degree_first() {
        assert_eq!(graded_lex(&[0, 2], &[1, 0]), Ordering::Greater);
        assert_eq!(graded_lex(&[0, 1], &[1, 0]), Ordering::Less);
        assert_eq!(graded_lex(&[1, 1], &[1, 1]), Ordering::Equal);
    }

    #[test]
    fn eval_matches_hand_expansion() {
        // p(x, y) = 3xy + x^2 - i
        let p = MultiPoly::from_terms(
            2,
            vec![
                Term { coeff: c(3.0, 0.0), alpha: vec![1, 1] },
                Term { coeff: c(1.0, 0.0), alpha: vec![2, 0] },
                Term { coeff: c(0.0, -1.0), alpha: vec![0, 0] },
            ],
        )
        .unwrap();
        let v = p.eval(&[c(2.0, 0.0), c(0.0, 1.0)]).unwrap();
        assert_eq!(v, c(4.0, 5.0));
    }

    #[test]
    fn coeffs_in_first_var_splits() {
        // q(l, z) = l^2 + 2 l z + z^3
        let q = MultiPoly::from_terms(
            2,
            vec![
                Term { coeff: c(1.0, 0.0), alpha: vec![2, 0] },
                Term { coeff: c(2.0, 0.0), alpha: vec![1, 1] },
                Term { coeff: c(1.0, 0.0), alpha: vec![0, 3] },
            ],
        )
        .unwrap();
        let parts = q.coeffs_in_first_var();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].total_degree(), 3);
        assert_eq!(parts[1].terms()[0].coeff, c(2.0, 0.0));
        assert!(parts[2].is_constant());
    }
}
