//! Discrete Fourier transforms on the periodic box.
//!
//! The forward transform uses the `e^{−ix·ξ}` kernel:
//! `û_k = Σ_p e^{−i x_p ξ_k} u_p`, which on the grid's layout is exactly the
//! standard unnormalized forward DFT per axis (the wrapped coordinates differ
//! from `p·L/N` by full periods, which the discrete kernel cannot see). The
//! inverse carries the `1/∏Nⱼ` normalization, so a round trip is the
//! identity.

use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftDirection, FftPlanner};

use crate::field::{FieldState, Representation};
use crate::grid::GridSpec;
use crate::SolverError;

/// Per-grid transform plans; build once, apply to many planes.
pub struct FftEngine {
    grid: GridSpec,
    forward: HashMap<usize, Arc<dyn Fft<f64>>>,
    inverse: HashMap<usize, Arc<dyn Fft<f64>>>,
}

impl FftEngine {
    pub fn new(grid: &GridSpec) -> Self {
        let mut planner = FftPlanner::new();
        let mut forward = HashMap::new();
        let mut inverse = HashMap::new();
        for &np in grid.points() {
            forward
                .entry(np)
                .or_insert_with(|| planner.plan_fft(np, FftDirection::Forward));
            inverse
                .entry(np)
                .or_insert_with(|| planner.plan_fft(np, FftDirection::Inverse));
        }
        FftEngine { grid: grid.clone(), forward, inverse }
    }

    /// Unnormalized forward transform of one component plane, in place.
    pub fn forward_plane(&self, data: &mut [Complex64]) {
        self.transform_plane(data, true);
    }

    /// Inverse transform of one plane, in place, normalized by 1/∏Nⱼ.
    pub fn inverse_plane(&self, data: &mut [Complex64]) {
        self.transform_plane(data, false);
        let scale = 1.0 / self.grid.total_points() as f64;
        for z in data.iter_mut() {
            *z *= scale;
        }
    }

    fn transform_plane(&self, data: &mut [Complex64], forward: bool) {
        let total = self.grid.total_points();
        assert_eq!(data.len(), total, "plane length must match the grid");
        let n = self.grid.n();
        let mut scratch = Vec::new();
        // stride of the last axis is 1; axis a has stride ∏ N[a+1..]
        for axis in 0..n {
            let np = self.grid.points()[axis];
            let stride: usize = self.grid.points()[axis + 1..].iter().product();
            let plan =
                if forward { &self.forward[&np] } else { &self.inverse[&np] };
            scratch.resize(np, Complex64::new(0.0, 0.0));
            let block = np * stride;
            for outer in 0..total / block {
                for inner in 0..stride {
                    let base = outer * block + inner;
                    for k in 0..np {
                        scratch[k] = data[base + k * stride];
                    }
                    plan.process(&mut scratch);
                    for k in 0..np {
                        data[base + k * stride] = scratch[k];
                    }
                }
            }
        }
    }
}

/// Physical → frequency representation.
pub fn forward_fft(f: &FieldState) -> Result<FieldState, SolverError> {
    if f.representation != Representation::Physical {
        return Err(SolverError::RepresentationMismatch {
            expected: Representation::Physical,
            found: f.representation,
        });
    }
    let engine = FftEngine::new(&f.grid);
    let mut out = f.clone();
    out.representation = Representation::Frequency;
    for c in 0..f.m {
        engine.forward_plane(out.plane_mut(c));
    }
    Ok(out)
}

/// Frequency → physical representation.
pub fn inverse_fft(f: &FieldState) -> Result<FieldState, SolverError> {
    if f.representation != Representation::Frequency {
        return Err(SolverError::RepresentationMismatch {
            expected: Representation::Frequency,
            found: f.representation,
        });
    }
    let engine = FftEngine::new(&f.grid);
    let mut out = f.clone();
    out.representation = Representation::Physical;
    for c in 0..f.m {
        engine.inverse_plane(out.plane_mut(c));
    }
    Ok(out)
}
