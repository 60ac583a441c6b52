//! Thresholded support radii and propagation-cone estimates.
//!
//! Distribution-theoretic support is not numerically observable, so the
//! surrogate is amplitude thresholding: a point belongs to the support when
//! its pointwise matrix norm exceeds `threshold × (field max norm)`. For
//! hyperbolic kernels the wavefront carries the dominant amplitude, so a
//! large threshold (default 0.5) tracks the front to within a cell or two;
//! small thresholds expose the `O(1/(ξ_max·d))` Gibbs tails of band-limited
//! kernels instead of the support. The cone estimate reports, per probe
//! direction, the radius at each time, the speed `max_t radius/t`, and the
//! spread of `radius(t)/t` across times in grid cells — the numerical
//! surrogate for the scale invariance `(1/t)·convsupp S_t = const`.
//! The reported cone is `{(t, x) : x·dir ≤ t·speed(dir)}` over the probe set.

use serde::Serialize;
use symprop_core::{classify, PolyMatrixOperator, SamplingConfig};

use crate::field::KernelField;
use crate::grid::GridSpec;
use crate::propagate::{kernel, PropagateOptions};
use crate::SolverError;

/// Default amplitude threshold for cone-front detection.
pub const DEFAULT_CONE_THRESHOLD: f64 = 0.5;

/// Default amplitude threshold for raw support probing.
pub const DEFAULT_SUPPORT_THRESHOLD: f64 = 1e-8;

/// Radii below this many grid cells are treated as unresolved and excluded
/// from speed and spread statistics.
pub const RADIUS_FLOOR_CELLS: f64 = 2.0;

/// Largest projection `x·direction` over grid points whose pointwise matrix
/// norm exceeds `threshold × max norm`; 0 when no point qualifies or every
/// projection is negative (radii are cone radii, hence nonnegative).
pub fn support_radius(
    field: &KernelField,
    direction: &[f64],
    threshold: f64,
) -> Result<f64, SolverError> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(SolverError::ThresholdRange(threshold));
    }
    assert_eq!(direction.len(), field.grid.n(), "one direction entry per axis");
    let p_total = field.total_points();
    let max_norm = (0..p_total).map(|p| field.point_matrix_norm(p)).fold(0.0, f64::max);
    if max_norm == 0.0 {
        return Ok(0.0);
    }
    let cut = threshold * max_norm;
    let mut best = f64::NEG_INFINITY;
    let mut idx_buf = vec![0usize; field.grid.n()];
    let mut x = vec![0.0; field.grid.n()];
    for p in 0..p_total {
        if field.point_matrix_norm(p) > cut {
            field.grid.x_at(p, &mut idx_buf, &mut x);
            let proj: f64 = x.iter().zip(direction).map(|(a, b)| a * b).sum();
            best = best.max(proj);
        }
    }
    Ok(best.max(0.0))
}

#[derive(Clone, Debug, Serialize)]
pub struct ConeEstimate {
    pub times: Vec<f64>,
    /// Probe directions (unit vectors).
    pub directions: Vec<Vec<f64>>,
    /// `radii[d][k]` is the support radius along `directions[d]` at
    /// `times[k]`.
    pub radii: Vec<Vec<f64>>,
    /// Per-direction cone speed: max over resolved times of radius/t.
    pub speeds: Vec<f64>,
    /// Max over directions of the spread of radius(t)/t across resolved
    /// times, in grid cells (relative to the smallest resolved time).
    pub scaled_radii_spread: f64,
    pub threshold: f64,
    /// Largest grid spacing, the unit for the spread.
    pub grid_cell: f64,
}

/// Probe direction set for cone estimation: ± axis vectors plus a
/// deterministic low-discrepancy tail up to `count`, deduplicated.
pub fn probe_directions(n: usize, count: usize) -> Vec<Vec<f64>> {
    let axis = 2 * n;
    let cfg = SamplingConfig {
        lowdisc_directions: count.saturating_sub(axis),
        random_directions: 0,
        ..SamplingConfig::default()
    };
    let mut dirs = symprop_core::classify::direction_set(n, &cfg);
    let mut seen: Vec<Vec<f64>> = Vec::new();
    dirs.retain(|d| {
        if seen.iter().any(|s| s == d) {
            false
        } else {
            seen.push(d.clone());
            true
        }
    });
    dirs
}

/// Estimates the propagation cone of a hyperbolic operator from kernel
/// support radii at several times. Classifies the operator first and
/// refuses non-hyperbolic input (the kernel support is unbounded there and
/// no cone exists).
pub fn cone_estimate(
    g: &PolyMatrixOperator,
    times: &[f64],
    grid: &GridSpec,
    directions: &[Vec<f64>],
    threshold: f64,
    sampling: &SamplingConfig,
) -> Result<ConeEstimate, SolverError> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(SolverError::ThresholdRange(threshold));
    }
    let classification = classify(g, sampling)?;
    if !classification.hyperbolic {
        return Err(SolverError::NotHyperbolic(classification.ehrenpreis_note));
    }
    let opts = PropagateOptions { force: false, verdict: Some(classification.petrovskii) };
    let cell = grid.max_cell();
    let floor = RADIUS_FLOOR_CELLS * cell;
    let mut radii = vec![Vec::with_capacity(times.len()); directions.len()];
    for &t in times {
        if !(t > 0.0) {
            return Err(SolverError::NegativeTime(t));
        }
        let k = kernel(g, t, grid, &opts)?;
        for (d, dir) in directions.iter().enumerate() {
            radii[d].push(support_radius(&k, dir, threshold)?);
        }
    }
    let mut speeds = Vec::with_capacity(directions.len());
    let mut spread = 0.0f64;
    let mut any_resolved = false;
    for per_time in &radii {
        let resolved: Vec<(f64, f64)> = per_time
            .iter()
            .zip(times)
            .filter(|(r, _)| **r > floor)
            .map(|(r, t)| (*r, *t))
            .collect();
        if resolved.is_empty() {
            speeds.push(0.0);
            continue;
        }
        any_resolved = true;
        let vs: Vec<f64> = resolved.iter().map(|(r, t)| r / t).collect();
        speeds.push(vs.iter().copied().fold(0.0, f64::max));
        if vs.len() >= 2 {
            let vmax = vs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let vmin = vs.iter().copied().fold(f64::INFINITY, f64::min);
            let t_min = resolved.iter().map(|(_, t)| *t).fold(f64::INFINITY, f64::min);
            spread = spread.max((vmax - vmin) * t_min / cell);
        }
    }
    if !any_resolved {
        return Err(SolverError::TimesTooSmall);
    }
    Ok(ConeEstimate {
        times: times.to_vec(),
        directions: directions.to_vec(),
        radii,
        speeds,
        scaled_radii_spread: spread,
        threshold,
        grid_cell: cell,
    })
}
