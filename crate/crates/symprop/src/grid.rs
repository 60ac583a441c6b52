//! Periodic-box grid specification and the fixed frequency/coordinate
//! layouts.
//!
//! Per axis with box length L and an even point count N, the stored order is
//! the standard FFT layout. Frequencies run over the half-open symmetric
//! range `ξ_k = 2πk/L, k ∈ {−N/2, …, N/2−1}`, stored as
//! `k = 0, 1, …, N/2−1, −N/2, …, −1`. Physical coordinates use the same
//! wrap-around: index p carries `x_p = p·L/N` for `p < N/2` and
//! `(p−N)·L/N` otherwise, so x = 0 sits at index 0 and the box is
//! `[−L/2, L/2)`. Multi-axis grids are row-major with axis 0 slowest.

use serde::Serialize;

use crate::SolverError;

/// Default cap on total grid points (storage is m complex values per point).
pub const DEFAULT_MAX_POINTS: usize = 1 << 24;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    box_lengths: Vec<f64>,
    points_per_axis: Vec<usize>,
}

impl GridSpec {
    pub fn new(box_lengths: Vec<f64>, points_per_axis: Vec<usize>) -> Result<Self, SolverError> {
        Self::with_budget(box_lengths, points_per_axis, DEFAULT_MAX_POINTS)
    }

    pub fn with_budget(
        box_lengths: Vec<f64>,
        points_per_axis: Vec<usize>,
        budget: usize,
    ) -> Result<Self, SolverError> {
        if box_lengths.len() != points_per_axis.len() || box_lengths.is_empty() {
            return Err(SolverError::GridAxes {
                lengths: box_lengths.len(),
                points: points_per_axis.len(),
            });
        }
        if box_lengths.iter().any(|&l| !(l.is_finite() && l > 0.0)) {
            return Err(SolverError::BadBoxLength);
        }
        for &np in &points_per_axis {
            if np < 2 || np % 2 != 0 {
                return Err(SolverError::OddPoints(np));
            }
        }
        let mut total: usize = 1;
        for &np in &points_per_axis {
            total = total.checked_mul(np).ok_or(SolverError::GridBudget {
                points: usize::MAX,
                budget,
            })?;
        }
        if total > budget {
            return Err(SolverError::GridBudget { points: total, budget });
        }
        Ok(GridSpec { box_lengths, points_per_axis })
    }

    pub fn n(&self) -> usize {
        self.box_lengths.len()
    }

    pub fn lengths(&self) -> &[f64] {
        &self.box_lengths
    }

    pub fn points(&self) -> &[usize] {
        &self.points_per_axis
    }

    pub fn total_points(&self) -> usize {
        self.points_per_axis.iter().product()
    }

    /// Grid spacing L/N on one axis.
    pub fn cell(&self, axis: usize) -> f64 {
        self.box_lengths[axis] / self.points_per_axis[axis] as f64
    }

    pub fn max_cell(&self) -> f64 {
        (0..self.n()).map(|a| self.cell(a)).fold(0.0, f64::max)
    }

    /// Signed mode number for a storage index on one axis.
    pub fn mode_number(&self, axis: usize, idx: usize) -> i64 {
        let np = self.points_per_axis[axis];
        if idx < np / 2 {
            idx as i64
        } else {
            idx as i64 - np as i64
        }
    }

    /// Frequency ξ = 2πk/L at a storage index.
    pub fn frequency(&self, axis: usize, idx: usize) -> f64 {
        2.0 * std::f64::consts::PI * self.mode_number(axis, idx) as f64 / self.box_lengths[axis]
    }

    /// Wrapped physical coordinate at a storage index.
    pub fn coordinate(&self, axis: usize, idx: usize) -> f64 {
        self.mode_number(axis, idx) as f64 * self.cell(axis)
    }

    /// Storage index of a signed mode number.
    pub fn mode_to_index(&self, axis: usize, k: i64) -> Result<usize, SolverError> {
        let np = self.points_per_axis[axis] as i64;
        let (lo, hi) = (-np / 2, np / 2 - 1);
        if k < lo || k > hi {
            return Err(SolverError::ModeRange { axis, index: k, lo, hi });
        }
        Ok(if k >= 0 { k as usize } else { (k + np) as usize })
    }

    /// Decomposes a flat index (row-major, axis 0 slowest).
    pub fn unflatten(&self, mut flat: usize, out: &mut [usize]) {
        for axis in (0..self.n()).rev() {
            let np = self.points_per_axis[axis];
            out[axis] = flat % np;
            flat /= np;
        }
    }

    /// Frequency vector at a flat index.
    pub fn xi_at(&self, flat: usize, idx_buf: &mut [usize], out: &mut [f64]) {
        self.unflatten(flat, idx_buf);
        for axis in 0..self.n() {
            out[axis] = self.frequency(axis, idx_buf[axis]);
        }
    }

    /// Coordinate vector at a flat index.
    pub fn x_at(&self, flat: usize, idx_buf: &mut [usize], out: &mut [f64]) {
        self.unflatten(flat, idx_buf);
        for axis in 0..self.n() {
            out[axis] = self.coordinate(axis, idx_buf[axis]);
        }
    }
}
