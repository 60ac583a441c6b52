//! Matrix exponential by Padé approximation with scaling and squaring
//! (Higham 2005): pick the smallest diagonal Padé degree whose accuracy
//! window contains ‖A‖₁, otherwise scale by a power of two, use degree 13,
//! and square back up.


use num_complex::Complex64;
// Float supplies the libm-backed f64 math in no_std builds; std builds
// resolve the same calls inherently, so the import can look unused there.
#[allow(unused_imports)]
use num_traits::Float;

use crate::matrix::ComplexMatrix;

#[derive(Debug, PartialEq, thiserror::Error)]
pub enum ExpmError {
    #[error("matrix exponential overflowed floating range (input 1-norm {norm})")]
    Overflow { norm: f64 },
    #[error("Padé denominator solve failed")]
    Solve,
}

const THETA_3: f64 = 1.495585217958292e-2;
const THETA_5: f64 = 2.539398330063230e-1;
const THETA_7: f64 = 9.504178996162932e-1;
const THETA_9: f64 = 2.097847961257068e0;
const THETA_13: f64 = 5.371920351148152e0;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] =
    [17297280.0, 8648640.0, 1995840.0, 277200.0, 25200.0, 1512.0, 56.0, 1.0];
const B9: [f64; 10] = [
    17643225600.0,
    8821612800.0,
    2075673600.0,
    302702400.0,
    30270240.0,
    2162160.0,
    110880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64764752532480000.0,
    32382376266240000.0,
    7771770303897600.0,
    1187353796428800.0,
    129060195264000.0,
    10559470521600.0,
    670442572800.0,
    33522128640.0,
    1323241920.0,
    40840800.0,
    960960.0,
    16380.0,
    182.0,
    1.0,
];

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// U = A·(odd part), V = even part for degrees 3..9, given the even powers
/// A², A⁴, … already computed.
fn pade_low(a: &ComplexMatrix, even_powers: &[&ComplexMatrix], b: &[f64]) -> (ComplexMatrix, ComplexMatrix) {
    let n = a.dim();
    let mut odd = ComplexMatrix::identity(n).scale(real(b[1]));
    let mut even = ComplexMatrix::identity(n).scale(real(b[0]));
    for (k, p) in even_powers.iter().enumerate() {
        odd = odd.add(&p.scale(real(b[2 * k + 3])));
        even = even.add(&p.scale(real(b[2 * k + 2])));
    }
    (a.matmul(&odd), even)
}

fn pade_13(a: &ComplexMatrix, a2: &ComplexMatrix, a4: &ComplexMatrix, a6: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let b = &B13;
    let n = a.dim();
    let u_hi = a6
        .scale(real(b[13]))
        .add(&a4.scale(real(b[11])))
        .add(&a2.scale(real(b[9])));
    let u_lo = a6
        .scale(real(b[7]))
        .add(&a4.scale(real(b[5])))
        .add(&a2.scale(real(b[3])))
        .add(&ComplexMatrix::identity(n).scale(real(b[1])));
    let u = a.matmul(&a6.matmul(&u_hi).add(&u_lo));
    let v_hi = a6
        .scale(real(b[12]))
        .add(&a4.scale(real(b[10])))
        .add(&a2.scale(real(b[8])));
    let v = a6
        .matmul(&v_hi)
        .add(&a6.scale(real(b[6])))
        .add(&a4.scale(real(b[4])))
        .add(&a2.scale(real(b[2])))
        .add(&ComplexMatrix::identity(n).scale(real(b[0])));
    (u, v)
}

/// exp(A).
pub fn matrix_exp(a: &ComplexMatrix) -> Result<ComplexMatrix, ExpmError> {
    if !a.is_finite() {
        return Err(ExpmError::Overflow { norm: f64::INFINITY });
    }
    let n = a.dim();
    if n == 0 {
        return Ok(ComplexMatrix::zeros(0));
    }
    let norm = a.norm_one();
    let a2 = a.matmul(a);
    let (u, v, squarings) = if norm <= THETA_3 {
        let (u, v) = pade_low(a, &[&a2], &B3);
        (u, v, 0u32)
    } else if norm <= THETA_5 {
        let a4 = a2.matmul(&a2);
        let (u, v) = pade_low(a, &[&a2, &a4], &B5);
        (u, v, 0)
    } else if norm <= THETA_7 {
        let a4 = a2.matmul(&a2);
        let a6 = a4.matmul(&a2);
        let (u, v) = pade_low(a, &[&a2, &a4, &a6], &B7);
        (u, v, 0)
    } else if norm <= THETA_9 {
        let a4 = a2.matmul(&a2);
        let a6 = a4.matmul(&a2);
        let a8 = a6.matmul(&a2);
        let (u, v) = pade_low(a, &[&a2, &a4, &a6, &a8], &B9);
        (u, v, 0)
    } else {
        let s = (norm / THETA_13).log2().ceil().max(0.0) as u32;
        let scaled = a.scale(real(0.5f64.powi(s as i32)));
        let a2 = scaled.matmul(&scaled);
        let a4 = a2.matmul(&a2);
        let a6 = a4.matmul(&a2);
        let (u, v) = pade_13(&scaled, &a2, &a4, &a6);
        (u, v, s)
    };
    let p = v.add(&u);
    let q = v.sub(&u);
    let mut x = q.solve(&p).map_err(|_| ExpmError::Solve)?;
    for _ in 0..squarings {
        x = x.matmul(&x);
        if !x.is_finite() {
            return Err(ExpmError::Overflow { norm });
        }
    }
    if !x.is_finite() {
        return Err(ExpmError::Overflow { norm });
    }
    Ok(x)
}

/// exp(t·A); convenience wrapper used by the per-frequency propagators.
pub fn matrix_exp_scaled(a: &ComplexMatrix, t: f64) -> Result<ComplexMatrix, ExpmError> {
    matrix_exp(&a.scale(real(t)))
}
