//! Matrix differential operators with constant complex coefficients.
//!
//! A [`PolyMatrixOperator`] holds an m×m matrix of polynomials in the partial
//! derivatives ∂₁,…,∂ₙ. Its Fourier symbol at a real frequency ξ is the
//! complex matrix obtained by substituting ∂ⱼ ↦ iξⱼ into every entry. The
//! module also computes the characteristic polynomial
//! `P(λ, ζ) = det(λ·I − G(ζ))` by exact symbolic cofactor expansion (the
//! degree data it feeds must be exact, so no numeric interpolation), the
//! total degree and the reduced order `p₀ = max_k deg Q_k / (m−k)`, and the
//! per-frequency companion matrix of a scalar equation `Σ Q_k ∂ₜᵏ u = 0`.
//!
//! Operator documents are UTF-8 JSON:
//!
//! ```json
//! {"m": 1, "n": 1, "entries": [
//!   {"row": 0, "col": 0, "terms": [{"coeff": [0.0, 1.0], "alpha": [2]}]}
//! ]}
//! ```
//!
//! Absent entries are zero; serialization emits entries in (row, col) order
//! with terms in graded-lexicographic order, so documents round-trip
//! byte-identically through [`parse_operator`] / [`PolyMatrixOperator::to_document`].

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::matrix::ComplexMatrix;
use crate::poly::{index_order, MultiPoly, PolyError, Term};

/// Side length cap for the exact characteristic polynomial: cofactor
/// expansion term counts stay tractable and the systems this crate targets
/// are small.
pub const MAX_CHAR_POLY_DIM: usize = 8;

#[derive(Debug, PartialEq, thiserror::Error)]
pub enum OperatorError {
    #[error("system size and spatial dimension must both be at least 1")]
    EmptyShape,
    #[error("entry index ({row}, {col}) outside an {m}x{m} system")]
    EntryRange { row: usize, col: usize, m: usize },
    #[error("frequency vector of length {found}, expected {expected}")]
    FrequencyLength { expected: usize, found: usize },
    #[error("operator shapes differ: {left_m}x{left_m} over {left_n} axes vs {right_m}x{right_m} over {right_n} axes")]
    ShapeMismatch { left_m: usize, left_n: usize, right_m: usize, right_n: usize },
    #[error("system size {m} exceeds the exact characteristic-polynomial cap {cap}")]
    SizeCap { m: usize, cap: usize },
    #[error("need at least two coefficient polynomials (Q_0..Q_m)")]
    CompanionTooShort,
    #[error("coefficient polynomials disagree on the variable count")]
    CompanionMixedVars,
    #[error("leading coefficient Q_m vanishes at the requested frequency")]
    DegenerateLeading,
    #[error("leading coefficient Q_m must be a nonzero constant to build an operator")]
    NonConstantLeading,
    #[error("malformed operator document: {0}")]
    Document(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// m×m matrix of constant-coefficient polynomials in ∂₁,…,∂ₙ.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrixOperator {
    m: usize,
    n: usize,
    entries: Vec<MultiPoly>,
}

impl PolyMatrixOperator {
    pub fn zero(m: usize, n: usize) -> Result<Self, OperatorError> {
        if m == 0 || n == 0 {
            return Err(OperatorError::EmptyShape);
        }
        Ok(PolyMatrixOperator { m, n, entries: vec![MultiPoly::zero(n); m * m] })
    }

    /// Builds from sparse (row, col, polynomial) triples; omitted entries are
    /// zero and repeated positions accumulate.
    pub fn from_entries(
        m: usize,
        n: usize,
        entries: impl IntoIterator<Item = (usize, usize, MultiPoly)>,
    ) -> Result<Self, OperatorError> {
        let mut op = Self::zero(m, n)?;
        for (row, col, poly) in entries {
            if row >= m || col >= m {
                return Err(OperatorError::EntryRange { row, col, m });
            }
            if poly.vars() != n {
                return Err(OperatorError::Poly(PolyError::AlphaLength {
                    expected: n,
                    found: poly.vars(),
                }));
            }
            let slot = &mut op.entries[row * m + col];
            *slot = slot.add(&poly)?;
        }
        Ok(op)
    }

    /// c·I as a zero-order operator.
    pub fn scaled_identity(m: usize, n: usize, c: Complex64) -> Result<Self, OperatorError> {
        let mut op = Self::zero(m, n)?;
        for i in 0..m {
            op.entries[i * m + i] = MultiPoly::constant(n, c);
        }
        Ok(op)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &MultiPoly {
        &self.entries[row * self.m + col]
    }

    /// Maximum order d of the scalar entries (max |α| over all terms).
    /// The zero operator reports 0.
    pub fn max_order(&self) -> u32 {
        self.entries.iter().map(|p| p.total_degree()).max().unwrap_or(0)
    }

    fn check_shape(&self, other: &Self) -> Result<(), OperatorError> {
        if self.m != other.m || self.n != other.n {
            return Err(OperatorError::ShapeMismatch {
                left_m: self.m,
                left_n: self.n,
                right_m: other.m,
                right_n: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, OperatorError> {
        self.check_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrixOperator { m: self.m, n: self.n, entries })
    }

    /// Operator composition G∘H: the matrix product of the polynomial
    /// entries (coefficients are constant, so entries commute with ∂).
    pub fn compose(&self, other: &Self) -> Result<Self, OperatorError> {
        self.check_shape(other)?;
        let m = self.m;
        let mut entries = vec![MultiPoly::zero(self.n); m * m];
        for i in 0..m {
            for j in 0..m {
                let mut acc = MultiPoly::zero(self.n);
                for k in 0..m {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j))?)?;
                }
                entries[i * m + j] = acc;
            }
        }
        Ok(PolyMatrixOperator { m, n: self.n, entries })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        PolyMatrixOperator {
            m: self.m,
            n: self.n,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Relabels the spatial axes: axis `j` of the result is axis `perm[j]`
    /// of `self`.
    pub fn permute_axes(&self, perm: &[usize]) -> Result<Self, OperatorError> {
        let entries = self
            .entries
            .iter()
            .map(|p| p.permute_vars(perm))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrixOperator { m: self.m, n: self.n, entries })
    }

    /// The Fourier symbol `A(ξ) = G(iξ₁,…,iξₙ)`.
    pub fn symbol_at(&self, xi: &[f64]) -> Result<ComplexMatrix, OperatorError> {
        if xi.len() != self.n {
            return Err(OperatorError::FrequencyLength { expected: self.n, found: xi.len() });
        }
        let point: Vec<Complex64> = xi.iter().map(|&x| Complex64::new(0.0, x)).collect();
        let m = self.m;
        let mut out = ComplexMatrix::zeros(m);
        for i in 0..m {
            for j in 0..m {
                out[(i, j)] = self.entry(i, j).eval(&point)?;
            }
        }
        Ok(out)
    }

    /// Canonical operator document (see the module docs for the schema).
    pub fn to_document(&self) -> String {
        let mut entries = Vec::new();
        for row in 0..self.m {
            for col in 0..self.m {
                let poly = self.entry(row, col);
                if poly.is_zero() {
                    continue;
                }
                entries.push(EntryDoc {
                    row,
                    col,
                    terms: poly
                        .terms()
                        .iter()
                        .map(|t| TermDoc { coeff: [t.coeff.re, t.coeff.im], alpha: t.alpha.clone() })
                        .collect(),
                });
            }
        }
        let doc = OperatorDoc { m: self.m, n: self.n, entries };
        serde_json::to_string(&doc).expect("operator document serialization cannot fail")
    }
}

#[derive(Serialize, Deserialize)]
struct OperatorDoc {
    m: usize,
    n: usize,
    entries: Vec<EntryDoc>,
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    row: usize,
    col: usize,
    terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    coeff: [f64; 2],
    alpha: Vec<u32>,
}

/// Parses an operator-description document. Duplicate (row, col) entries and
/// duplicate multi-indices accumulate; zero and negligible coefficients are
/// dropped by canonicalization.
pub fn parse_operator(text: &str) -> Result<PolyMatrixOperator, OperatorError> {
    let doc: OperatorDoc =
        serde_json::from_str(text).map_err(|e| OperatorError::Document(e.to_string()))?;
    if doc.m == 0 || doc.n == 0 {
        return Err(OperatorError::EmptyShape);
    }
    let mut op = PolyMatrixOperator::zero(doc.m, doc.n)?;
    for entry in doc.entries {
        if entry.row >= doc.m || entry.col >= doc.m {
            return Err(OperatorError::EntryRange { row: entry.row, col: entry.col, m: doc.m });
        }
        let terms: Vec<Term> = entry
            .terms
            .into_iter()
            .map(|t| Term { coeff: Complex64::new(t.coeff[0], t.coeff[1]), alpha: t.alpha })
            .collect();
        let poly = MultiPoly::from_terms(doc.n, terms)?;
        let slot = &mut op.entries[entry.row * doc.m + entry.col];
        *slot = slot.add(&poly)?;
    }
    Ok(op)
}

/// Coefficients `Q₀,…,Q_{m−1}` of the monic characteristic polynomial
/// `P(λ, ζ) = det(λ·I − G(ζ)) = λᵐ + Q_{m−1}(ζ)λ^{m−1} + … + Q₀(ζ)`,
/// computed by exact cofactor expansion over polynomial entries.
pub fn char_poly_in_lambda(g: &PolyMatrixOperator) -> Result<Vec<MultiPoly>, OperatorError> {
    let m = g.m();
    if m > MAX_CHAR_POLY_DIM {
        return Err(OperatorError::SizeCap { m, cap: MAX_CHAR_POLY_DIM });
    }
    let vars = g.n() + 1; // variable 0 is λ, variables 1..=n are ζ
    let lambda = MultiPoly::variable(vars, 0).expect("vars >= 1");
    let mut mat: Vec<MultiPoly> = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            let mut p = g.entry(i, j).lift_front().neg();
            if i == j {
                p = p.add(&lambda)?;
            }
            mat.push(p);
        }
    }
    let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut memo: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    let det = det_expand(&mat, m, vars, full, &mut memo)?;
    let mut coeffs = det.coeffs_in_first_var();
    debug_assert_eq!(coeffs.len(), m + 1, "characteristic polynomial must be monic of degree m");
    let lead = coeffs.pop().expect("nonempty");
    let lead_coeff =
        if lead.is_zero() { Complex64::zero() } else { lead.terms()[0].coeff };
    debug_assert!(
        lead.is_constant() && (lead_coeff - Complex64::new(1.0, 0.0)).norm() < 1e-9,
        "leading coefficient must be 1"
    );
    while coeffs.len() < m {
        coeffs.push(MultiPoly::zero(g.n()));
    }
    Ok(coeffs)
}

/// Determinant of the square polynomial matrix restricted to the last
/// `popcount(colmask)` rows and the columns in `colmask`, expanding along the
/// topmost remaining row with memoization on the column set.
fn det_expand(
    mat: &[MultiPoly],
    m: usize,
    vars: usize,
    colmask: u32,
    memo: &mut BTreeMap<u32, MultiPoly>,
) -> Result<MultiPoly, PolyError> {
    if colmask == 0 {
        return Ok(MultiPoly::one(vars));
    }
    if let Some(p) = memo.get(&colmask) {
        return Ok(p.clone());
    }
    let k = colmask.count_ones() as usize;
    let row = m - k;
    let mut acc = MultiPoly::zero(vars);
    let mut sign_flip = false;
    for j in 0..m {
        if colmask & (1 << j) == 0 {
            continue;
        }
        let entry = &mat[row * m + j];
        if !entry.is_zero() {
            let minor = det_expand(mat, m, vars, colmask & !(1 << j), memo)?;
            let prod = entry.mul(&minor)?;
            acc = if sign_flip { acc.sub(&prod)? } else { acc.add(&prod)? };
        }
        sign_flip = !sign_flip;
    }
    memo.insert(colmask, acc.clone());
    Ok(acc)
}

/// deg P = max(m, max over nonzero k of (k + deg Q_k)); the λᵐ term always
/// contributes m.
pub fn total_degree(q: &[MultiPoly]) -> u32 {
    let m = q.len() as u32;
    let mut deg = m;
    for (k, poly) in q.iter().enumerate() {
        if !poly.is_zero() {
            deg = deg.max(k as u32 + poly.total_degree());
        }
    }
    deg
}

/// Reduced order `p₀ = max_k deg Q_k / (m−k)` as an exact rational;
/// 0 when every Q_k is constant.
pub fn reduced_order(q: &[MultiPoly]) -> Ratio<i64> {
    let m = q.len();
    let mut p0 = Ratio::zero();
    for (k, poly) in q.iter().enumerate() {
        let deg = poly.total_degree();
        if deg > 0 {
            p0 = p0.max(Ratio::new(deg as i64, (m - k) as i64));
        }
    }
    p0
}

fn eval_q_at_ixi(q: &[MultiPoly], xi: &[f64]) -> Result<Vec<Complex64>, OperatorError> {
    if q.len() < 2 {
        return Err(OperatorError::CompanionTooShort);
    }
    let n = q[0].vars();
    if q.iter().any(|p| p.vars() != n) {
        return Err(OperatorError::CompanionMixedVars);
    }
    if xi.len() != n {
        return Err(OperatorError::FrequencyLength { expected: n, found: xi.len() });
    }
    let point: Vec<Complex64> = xi.iter().map(|&x| Complex64::new(0.0, x)).collect();
    q.iter().map(|p| p.eval(&point).map_err(OperatorError::from)).collect()
}

/// Companion matrix Ĝ(ξ) of the scalar problem `Σ_{k=0}^m Q_k ∂ₜᵏ u = 0`:
/// ones on the superdiagonal and last row
/// `[−Q₀(iξ)/Q_m(iξ), …, −Q_{m−1}(iξ)/Q_m(iξ)]`, so that
/// `σ(Ĝ(ξ)) = {λ : P(λ, iξ) = 0}`. `q` lists Q₀,…,Q_m.
pub fn companion_symbol(q: &[MultiPoly], xi: &[f64]) -> Result<ComplexMatrix, OperatorError> {
    let values = eval_q_at_ixi(q, xi)?;
    let m = q.len() - 1;
    let qm = values[m];
    if qm.norm() == 0.0 {
        return Err(OperatorError::DegenerateLeading);
    }
    let mut out = ComplexMatrix::zeros(m);
    for i in 0..m.saturating_sub(1) {
        out[(i, i + 1)] = Complex64::new(1.0, 0.0);
    }
    for k in 0..m {
        out[(m - 1, k)] = -values[k] / qm;
    }
    Ok(out)
}

/// First-order system whose symbol is the companion matrix, available when
/// Q_m is a nonzero constant (otherwise the companion entries are rational,
/// not polynomial, and only [`companion_symbol`] applies).
pub fn companion_operator(q: &[MultiPoly]) -> Result<PolyMatrixOperator, OperatorError> {
    if q.len() < 2 {
        return Err(OperatorError::CompanionTooShort);
    }
    let n = q[0].vars();
    if q.iter().any(|p| p.vars() != n) {
        return Err(OperatorError::CompanionMixedVars);
    }
    let m = q.len() - 1;
    let qm = &q[m];
    if !qm.is_constant() || qm.is_zero() {
        return Err(OperatorError::NonConstantLeading);
    }
    let c = qm.terms()[0].coeff;
    let inv = -Complex64::new(1.0, 0.0) / c;
    let mut entries = Vec::with_capacity(2 * m);
    for i in 0..m.saturating_sub(1) {
        entries.push((i, i + 1, MultiPoly::one(n)));
    }
    for (k, poly) in q.iter().take(m).enumerate() {
        entries.push((m - 1, k, poly.scale(inv)));
    }
    PolyMatrixOperator::from_entries(m, n, entries)
}

/// Helper for building entries without spelling out [`Term`]s: each item is
/// `(re, im, alpha)`.
pub fn poly_from(n: usize, items: &[(f64, f64, &[u32])]) -> Result<MultiPoly, PolyError> {
    let terms = items
        .iter()
        .map(|&(re, im, alpha)| Term { coeff: Complex64::new(re, im), alpha: alpha.to_vec() })
        .collect();
    MultiPoly::from_terms(n, terms)
}

/// Sum of |α| over a term — exposed for reporting.
pub fn term_order(t: &Term) -> u32 {
    index_order(&t.alpha)
}
