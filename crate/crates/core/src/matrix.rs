//! Dense square complex matrices with the factorizations the rest of the
//! crate needs: arithmetic, elementwise access, norms, and LU with partial
//! pivoting for determinants and linear solves.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
// Float supplies the libm-backed f64 math in no_std builds; std builds
// resolve the same calls inherently, so the import can look unused there.
#[allow(unused_imports)]
use num_traits::{Float, One, Zero};

#[derive(Debug, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("singular matrix")]
    Singular,
    #[error("row of length {found} in a {dim}x{dim} matrix")]
    RowLength { dim: usize, found: usize },
}

/// Square matrix of `Complex64`, row-major storage.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix { dim, data: vec![Complex64::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            for j in 0..dim {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self, MatrixError> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(MatrixError::RowLength { dim, found: row.len() });
            }
            data.extend_from_slice(row);
        }
        Ok(ComplexMatrix { dim, data })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions must agree");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        ComplexMatrix { dim: self.dim, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions must agree");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        ComplexMatrix { dim: self.dim, data }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ComplexMatrix { dim: self.dim, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matrix dimensions must agree");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let aik = self.data[i * n + k];
                if aik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += aik * other.data[k * n + j];
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "vector length must match");
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j] * v[j]).sum())
            .collect()
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |i, j| self.data[j * n + i].conj())
    }

    /// Maximum column sum of absolute values (operator 1-norm).
    pub fn norm_one(&self) -> f64 {
        let n = self.dim;
        (0..n)
            .map(|j| (0..n).map(|i| self.data[i * n + j].norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn norm_fro(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn norm_max(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn lu(&self) -> Lu {
        let n = self.dim;
        let mut f = self.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0usize;
        let mut singular = false;
        for k in 0..n {
            let mut pivot = k;
            let mut best = f[(k, k)].norm();
            for i in k + 1..n {
                let mag = f[(i, k)].norm();
                if mag > best {
                    best = mag;
                    pivot = i;
                }
            }
            if best == 0.0 {
                singular = true;
                continue;
            }
            if pivot != k {
                for j in 0..n {
                    let tmp = f[(k, j)];
                    f[(k, j)] = f[(pivot, j)];
                    f[(pivot, j)] = tmp;
                }
                perm.swap(k, pivot);
                swaps += 1;
            }
            let inv = Complex64::one() / f[(k, k)];
            for i in k + 1..n {
                let factor = f[(i, k)] * inv;
                f[(i, k)] = factor;
                for j in k + 1..n {
                    let sub = factor * f[(k, j)];
                    f[(i, j)] -= sub;
                }
            }
        }
        Lu { factors: f, perm, swaps, singular }
    }

    /// Determinant via LU; 0 for exactly singular input.
    pub fn det(&self) -> Complex64 {
        self.lu().det()
    }

    /// Solves `self · X = rhs`.
    pub fn solve(&self, rhs: &Self) -> Result<Self, MatrixError> {
        self.lu().solve_matrix(rhs)
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

/// LU factorization with partial pivoting, `P·A = L·U`.
pub struct Lu {
    factors: ComplexMatrix,
    perm: Vec<usize>,
    swaps: usize,
    singular: bool,
}

impl Lu {
    pub fn is_singular(&self) -> bool {
        self.singular
    }

    pub fn det(&self) -> Complex64 {
        if self.singular {
            return Complex64::zero();
        }
        let n = self.factors.dim();
        let mut d = if self.swaps % 2 == 0 { Complex64::one() } else { -Complex64::one() };
        for i in 0..n {
            d *= self.factors[(i, i)];
        }
        d
    }

    pub fn solve_vec(&self, b: &[Complex64]) -> Result<Vec<Complex64>, MatrixError> {
        if self.singular {
            return Err(MatrixError::Singular);
        }
        let n = self.factors.dim();
        assert_eq!(b.len(), n, "right-hand side length must match");
        let mut y: Vec<Complex64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 1..n {
            for j in 0..i {
                let sub = self.factors[(i, j)] * y[j];
                y[i] -= sub;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let sub = self.factors[(i, j)] * y[j];
                y[i] -= sub;
            }
            y[i] /= self.factors[(i, i)];
        }
        Ok(y)
    }

    pub fn solve_matrix(&self, rhs: &ComplexMatrix) -> Result<ComplexMatrix, MatrixError> {
        let n = self.factors.dim();
        if rhs.dim() != n {
            return Err(MatrixError::DimensionMismatch { left: n, right: rhs.dim() });
        }
        let mut out = ComplexMatrix::zeros(n);
        let mut col = vec![Complex64::zero(); n];
        for j in 0..n {
            for i in 0..n {
                col[i] = rhs[(i, j)];
            }
            let x = self.solve_vec(&col)?;
            for i in 0..n {
                out[(i, j)] = x[i];
            }
        }
        Ok(out)
    }
}
