//! Eigenvalues of dense complex matrices.
//!
//! The pipeline is the classical dense one: radix-2 balancing, Householder
//! reduction to upper Hessenberg form, then an explicitly shifted QR
//! iteration with Wilkinson shifts and deflation. Matrices here are small
//! (systems have m ≤ 8; the operator 2-norm path squares up to 64), so the
//! O(n³)-per-sweep explicit iteration is the right trade for robustness.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
// Float supplies the libm-backed f64 math in no_std builds; std builds
// resolve the same calls inherently, so the import can look unused there.
#[allow(unused_imports)]
use num_traits::{Float, Zero};

use crate::matrix::ComplexMatrix;

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum EigError {
    #[error("QR iteration failed to converge after {sweeps} sweeps on one block")]
    NoConvergence { sweeps: usize },
    #[error("non-finite entry in input matrix")]
    NonFinite,
}

/// Eigenvalues with algebraic multiplicity; as many entries as the source
/// matrix has rows. Sorted by (re, im) so equal spectra compare equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<Complex64>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// max Re σ; 0 for an empty spectrum.
    pub fn abscissa(&self) -> f64 {
        if self.eigenvalues.is_empty() {
            0.0
        } else {
            self.eigenvalues.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max)
        }
    }

    /// max |σ|; 0 for an empty spectrum.
    pub fn radius(&self) -> f64 {
        self.eigenvalues.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// All eigenvalues of `a`, with multiplicity.
pub fn eigenvalues(a: &ComplexMatrix) -> Result<Spectrum, EigError> {
    if !a.is_finite() {
        return Err(EigError::NonFinite);
    }
    let n = a.dim();
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new() });
    }
    if n == 1 {
        return Ok(Spectrum { eigenvalues: vec![a[(0, 0)]] });
    }
    let mut h = a.clone();
    balance(&mut h);
    hessenberg(&mut h);
    let mut eigs = hessenberg_qr(h)?;
    eigs.sort_unstable_by(|x, y| {
        x.re.partial_cmp(&y.re).unwrap().then(x.im.partial_cmp(&y.im).unwrap())
    });
    Ok(Spectrum { eigenvalues: eigs })
}

/// max Re σ(A). The zero matrix reports 0.
pub fn spectral_abscissa(a: &ComplexMatrix) -> Result<f64, EigError> {
    Ok(eigenvalues(a)?.abscissa())
}

/// max |σ(A)|.
pub fn spectral_radius(a: &ComplexMatrix) -> Result<f64, EigError> {
    Ok(eigenvalues(a)?.radius())
}

/// Operator 2-norm (largest singular value), computed as
/// `sqrt(λ_max(AᴴA))`. Falls back to power iteration on AᴴA in the unlikely
/// event the QR iteration does not converge, so it never fails.
pub fn operator_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    if n == 0 {
        return 0.0;
    }
    let b = a.adjoint().matmul(a);
    match eigenvalues(&b) {
        Ok(spec) => {
            let lmax = spec.eigenvalues().iter().map(|z| z.re).fold(0.0, f64::max);
            lmax.max(0.0).sqrt()
        }
        Err(_) => power_norm(&b),
    }
}

fn power_norm(b: &ComplexMatrix) -> f64 {
    let n = b.dim();
    let mut v: Vec<Complex64> =
        (0..n).map(|i| Complex64::new(1.0 + (i as f64) * 1e-3, 0.0)).collect();
    let mut lambda = 0.0;
    for _ in 0..500 {
        let w = b.apply(&v);
        let norm = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        let next = norm;
        v = w.iter().map(|z| z / norm).collect();
        if (next - lambda).abs() <= 1e-15 * next {
            lambda = next;
            break;
        }
        lambda = next;
    }
    lambda.max(0.0).sqrt()
}

/// Parlett–Reinsch balancing with radix-2 scale factors (exact in floating
/// point, so eigenvalues are unchanged).
fn balance(a: &mut ComplexMatrix) {
    const RADIX: f64 = 2.0;
    let n = a.dim();
    loop {
        let mut done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in 0..n {
                if j != i {
                    c += a[(j, i)].norm();
                    r += a[(i, j)].norm();
                }
            }
            if c == 0.0 || r == 0.0 || !c.is_finite() || !r.is_finite() {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            while c < r / RADIX {
                c *= RADIX;
                r /= RADIX;
                f *= RADIX;
            }
            while c >= r * RADIX {
                c /= RADIX;
                r *= RADIX;
                f /= RADIX;
            }
            if f != 1.0 && (c + r) < 0.95 * s {
                done = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= inv;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
        if done {
            break;
        }
    }
}

/// Householder reduction to upper Hessenberg form (in place).
fn hessenberg(a: &mut ComplexMatrix) {
    let n = a.dim();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let mut xnorm_sq = 0.0;
        for i in k + 1..n {
            xnorm_sq += a[(i, k)].norm_sqr();
        }
        let xnorm = xnorm_sq.sqrt();
        if xnorm == 0.0 {
            continue;
        }
        let x0 = a[(k + 1, k)];
        let phase = if x0.norm() == 0.0 { Complex64::new(1.0, 0.0) } else { x0 / x0.norm() };
        let alpha = -phase * xnorm;
        let mut v: Vec<Complex64> = (k + 1..n).map(|i| a[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if vnorm == 0.0 {
            continue;
        }
        for z in v.iter_mut() {
            *z /= vnorm;
        }
        // left: A ← (I − 2vvᴴ) A on rows k+1..n
        for j in k..n {
            let mut s = Complex64::zero();
            for i in k + 1..n {
                s += v[i - k - 1].conj() * a[(i, j)];
            }
            s *= 2.0;
            for i in k + 1..n {
                let sub = v[i - k - 1] * s;
                a[(i, j)] -= sub;
            }
        }
        // right: A ← A (I − 2vvᴴ) on columns k+1..n
        for i in 0..n {
            let mut s = Complex64::zero();
            for j in k + 1..n {
                s += a[(i, j)] * v[j - k - 1];
            }
            s *= 2.0;
            for j in k + 1..n {
                let sub = s * v[j - k - 1].conj();
                a[(i, j)] -= sub;
            }
        }
        a[(k + 1, k)] = alpha;
        for i in k + 2..n {
            a[(i, k)] = Complex64::zero();
        }
    }
}

/// Complex Givens rotation `G = [[c, s], [-s̄, c]]` (c real) with
/// `-s̄·a + c·b = 0`.
fn givens(a: Complex64, b: Complex64) -> (f64, Complex64) {
    let an = a.norm();
    let bn = b.norm();
    if bn == 0.0 {
        return (1.0, Complex64::zero());
    }
    let r = an.hypot(bn);
    if an == 0.0 {
        return (0.0, b.conj() / bn);
    }
    (an / r, (a / an) * b.conj() / r)
}

/// Eigenvalues of `[[a, b], [c, d]]` by the stable quadratic formula.
fn eig2(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> (Complex64, Complex64) {
    let half_tr = (a + d) * 0.5;
    let det = a * d - b * c;
    let disc = (half_tr * half_tr - det).sqrt();
    let plus = half_tr + disc;
    let minus = half_tr - disc;
    let l1 = if plus.norm() >= minus.norm() { plus } else { minus };
    let l2 = if l1.norm() > 0.0 { det / l1 } else { a + d - l1 };
    (l1, l2)
}

const MAX_SWEEPS_PER_BLOCK: usize = 80;
const EXCEPTIONAL_EVERY: usize = 12;

/// Shifted QR with deflation on an upper Hessenberg matrix; consumes `h`.
fn hessenberg_qr(mut h: ComplexMatrix) -> Result<Vec<Complex64>, EigError> {
    let n = h.dim();
    let mut eigs = Vec::with_capacity(n);
    let hnorm = h.norm_fro().max(f64::MIN_POSITIVE);
    let mut hi = n - 1;
    let mut sweeps_this_block = 0usize;
    loop {
        // Walk up from hi, zeroing negligible subdiagonals; lo is the start
        // of the unreduced block that ends at hi.
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let local = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            let thresh =
                if local > 0.0 { f64::EPSILON * local } else { f64::EPSILON * hnorm };
            if sub <= thresh {
                h[(lo, lo - 1)] = Complex64::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            eigs.push(h[(hi, hi)]);
            if hi == 0 {
                break;
            }
            hi -= 1;
            sweeps_this_block = 0;
            continue;
        }
        if lo + 1 == hi {
            let (l1, l2) = eig2(h[(lo, lo)], h[(lo, hi)], h[(hi, lo)], h[(hi, hi)]);
            eigs.push(l1);
            eigs.push(l2);
            if lo == 0 {
                break;
            }
            hi = lo - 1;
            sweeps_this_block = 0;
            continue;
        }
        sweeps_this_block += 1;
        if sweeps_this_block > MAX_SWEEPS_PER_BLOCK {
            return Err(EigError::NoConvergence { sweeps: sweeps_this_block });
        }
        let shift = if sweeps_this_block % EXCEPTIONAL_EVERY == 0 {
            h[(hi, hi)] + Complex64::new(0.75 * h[(hi, hi - 1)].norm(), 0.0)
        } else {
            let (l1, l2) =
                eig2(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)]);
            if (l1 - h[(hi, hi)]).norm() <= (l2 - h[(hi, hi)]).norm() {
                l1
            } else {
                l2
            }
        };
        qr_sweep(&mut h, lo, hi, shift);
        if !h.is_finite() {
            return Err(EigError::NoConvergence { sweeps: sweeps_this_block });
        }
    }
    Ok(eigs)
}

/// One explicit shifted QR step on the block `[lo, hi]`:
/// `H ← R·Q + μI` where `Q·R = H − μI`, built from Givens rotations.
fn qr_sweep(h: &mut ComplexMatrix, lo: usize, hi: usize, shift: Complex64) {
    for i in lo..=hi {
        h[(i, i)] -= shift;
    }
    let mut rots: Vec<(f64, Complex64)> = Vec::with_capacity(hi - lo);
    for i in lo..hi {
        let (c, s) = givens(h[(i, i)], h[(i + 1, i)]);
        rots.push((c, s));
        for j in i..=hi {
            let x = h[(i, j)];
            let y = h[(i + 1, j)];
            h[(i, j)] = c * x + s * y;
            h[(i + 1, j)] = -s.conj() * x + c * y;
        }
        h[(i + 1, i)] = Complex64::zero();
    }
    for (idx, &(c, s)) in rots.iter().enumerate() {
        let i = lo + idx;
        let top = if i + 1 < hi { i + 1 } else { hi };
        for r in lo..=top {
            let x = h[(r, i)];
            let y = h[(r, i + 1)];
            h[(r, i)] = c * x + y * s.conj();
            h[(r, i + 1)] = -s * x + c * y;
        }
    }
    for i in lo..=hi {
        h[(i, i)] += shift;
    }
}

/// Smallest achievable maximum pairwise distance over bijections between two
/// equally sized spectra (optimal assignment in the min-max sense, by
/// branch-and-bound; intended for the small multisets that occur in tests).
pub fn match_spectra(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len(), "spectra must have equal cardinality");
    let n = a.len();
    assert!(n <= 12, "assignment search is exponential; keep multisets small");
    if n == 0 {
        return 0.0;
    }
    let mut used = vec![false; n];
    let mut best = f64::INFINITY;
    fn rec(
        i: usize,
        cur_max: f64,
        a: &[Complex64],
        b: &[Complex64],
        used: &mut [bool],
        best: &mut f64,
    ) {
        if cur_max >= *best {
            return;
        }
        if i == a.len() {
            *best = cur_max;
            return;
        }
        for j in 0..b.len() {
            if used[j] {
                continue;
            }
            let d = (a[i] - b[j]).norm();
            used[j] = true;
            rec(i + 1, cur_max.max(d), a, b, used, best);
            used[j] = false;
        }
    }
    rec(0, 0.0, a, b, &mut used, &mut best);
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn identity_eigenvalues() {
        let spec = eigenvalues(&ComplexMatrix::identity(2)).unwrap();
        assert_eq!(spec.eigenvalues(), &[c(1.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn rotation_generator_eigenvalues() {
        // [[0, 1], [-9, 0]] has eigenvalues ±3i.
        let a = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(-9.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        let spec = eigenvalues(&a).unwrap();
        let expect = [c(0.0, -3.0), c(0.0, 3.0)];
        assert!(match_spectra(spec.eigenvalues(), &expect) < 1e-12);
    }

    #[test]
    fn triangular_eigenvalues_are_diagonal() {
        let n = 6;
        let mut a = ComplexMatrix::zeros(n);
        let mut state = 1u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64) / ((1u64 << 53) as f64) * 2.0 - 1.0
        };
        for i in 0..n {
            for j in i..n {
                a[(i, j)] = c(next(), next());
            }
        }
        let diag: Vec<Complex64> = (0..n).map(|i| a[(i, i)]).collect();
        let spec = eigenvalues(&a).unwrap();
        assert!(match_spectra(spec.eigenvalues(), &diag) < 1e-10);
    }

    #[test]
    fn abscissa_and_radius_on_diagonal() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(1.0, 2.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(-3.0, 0.0)],
        ])
        .unwrap();
        assert!((spectral_abscissa(&a).unwrap() - 1.0).abs() < 1e-14);
        // max(|1+2i|, |-3|) = max(√5, 3) = 3
        assert!((spectral_radius(&a).unwrap() - 3.0).abs() < 1e-14);
        let b = ComplexMatrix::from_rows(&[vec![c(1.0, 2.0)]]).unwrap();
        assert!((spectral_radius(&b).unwrap() - 5.0f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn nilpotent_abscissa_and_radius_are_zero() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 0.0), c(0.0, 0.0)],
        ])
        .unwrap();
        assert_eq!(spectral_abscissa(&a).unwrap(), 0.0);
        assert_eq!(spectral_radius(&a).unwrap(), 0.0);
    }

    #[test]
    fn operator_norm_of_identity_is_one() {
        assert_eq!(operator_norm(&ComplexMatrix::identity(4)), 1.0);
    }

    #[test]
    fn operator_norm_of_scalar_is_modulus() {
        let a = ComplexMatrix::from_rows(&[vec![c(3.0, 4.0)]]).unwrap();
        assert!((operator_norm(&a) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn nonfinite_input_rejected() {
        let a = ComplexMatrix::from_rows(&[vec![c(f64::INFINITY, 0.0)]]).unwrap();
        assert_eq!(eigenvalues(&a).unwrap_err(), EigError::NonFinite);
    }
}
