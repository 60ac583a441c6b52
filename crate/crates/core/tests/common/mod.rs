//! Shared helpers for the integration tests: a deterministic RNG, gallery
//! operators, random generators, and an independent polynomial root finder
//! used as an oracle against the companion/eigenvalue path.

#![allow(dead_code)]

use num_complex::Complex64;
use symprop_core::{poly_from, ComplexMatrix, MultiPoly, PolyMatrixOperator};

/// SplitMix64: tiny, deterministic, good enough for test data.
pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [-1, 1).
    pub fn sym(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64) / ((1u64 << 53) as f64) * 2.0 - 1.0
    }

    /// Uniform in [0, 1).
    pub fn unit(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64) / ((1u64 << 53) as f64)
    }

    pub fn complex(&mut self) -> Complex64 {
        Complex64::new(self.sym(), self.sym())
    }

    pub fn usize_below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}

pub fn random_matrix(rng: &mut Rng, dim: usize, target_norm: f64) -> ComplexMatrix {
    let raw = ComplexMatrix::from_fn(dim, |_, _| rng.complex());
    let norm = symprop_core::operator_norm(&raw);
    if norm == 0.0 {
        return raw;
    }
    raw.scale(Complex64::new(target_norm / norm, 0.0))
}

/// Random polynomial over `n` variables with total degree ≤ `max_deg`.
pub fn random_poly(rng: &mut Rng, n: usize, max_deg: u32, terms: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(n);
    for _ in 0..terms {
        let mut alpha = vec![0u32; n];
        let mut budget = max_deg;
        for slot in alpha.iter_mut() {
            let a = (rng.next_u64() % (budget as u64 + 1)) as u32;
            *slot = a;
            budget -= a;
        }
        let mono = MultiPoly::monomial(n, rng.complex(), alpha).unwrap();
        acc = acc.add(&mono).unwrap();
    }
    acc
}

pub fn random_operator(rng: &mut Rng, m: usize, n: usize, max_deg: u32) -> PolyMatrixOperator {
    let mut entries = Vec::new();
    for i in 0..m {
        for j in 0..m {
            entries.push((i, j, random_poly(rng, n, max_deg, 2)));
        }
    }
    PolyMatrixOperator::from_entries(m, n, entries).unwrap()
}

pub fn heat(n: usize) -> PolyMatrixOperator {
    let mut lap = MultiPoly::zero(n);
    for axis in 0..n {
        let mut alpha = vec![0u32; n];
        alpha[axis] = 2;
        lap = lap.add(&MultiPoly::monomial(n, Complex64::new(1.0, 0.0), alpha).unwrap()).unwrap();
    }
    PolyMatrixOperator::from_entries(1, n, [(0, 0, lap)]).unwrap()
}

pub fn backward_heat(n: usize) -> PolyMatrixOperator {
    heat(n).scale(Complex64::new(-1.0, 0.0))
}

pub fn schrodinger(n: usize) -> PolyMatrixOperator {
    heat(n).scale(Complex64::new(0.0, 1.0))
}

pub fn transport(c: f64) -> PolyMatrixOperator {
    PolyMatrixOperator::from_entries(1, 1, [(0, 0, poly_from(1, &[(c, 0.0, &[1])]).unwrap())])
        .unwrap()
}

/// [[0, 1], [∂²ₓ, 0]].
pub fn wave_system() -> PolyMatrixOperator {
    PolyMatrixOperator::from_entries(
        2,
        1,
        [
            (0, 1, MultiPoly::one(1)),
            (1, 0, poly_from(1, &[(1.0, 0.0, &[2])]).unwrap()),
        ],
    )
    .unwrap()
}

/// Wave equation in energy variables, [[0, ∂ₓ], [∂ₓ, 0]]: the symbol is
/// skew-adjoint, so the propagator is unitary per mode.
pub fn wave_energy() -> PolyMatrixOperator {
    let dx = poly_from(1, &[(1.0, 0.0, &[1])]).unwrap();
    PolyMatrixOperator::from_entries(2, 1, [(0, 1, dx.clone()), (1, 0, dx)]).unwrap()
}

/// Durand–Kerner root finder for a monic polynomial with the given
/// coefficients `c[0] + c[1]λ + … + c[m−1]λ^{m−1} + λ^m`; the independent
/// oracle for companion-matrix eigenvalues.
pub fn durand_kerner_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let m = coeffs.len();
    if m == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    // start on a circle with a radius bound from the coefficients
    let radius = 1.0 + coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..m)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / m as f64;
            seed + Complex64::new(radius * angle.cos(), radius * angle.sin())
        })
        .collect();
    for _ in 0..400 {
        let mut max_step = 0.0f64;
        for i in 0..m {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..m {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 * radius {
            break;
        }
    }
    roots
}
