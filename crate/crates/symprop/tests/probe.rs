//! Temporary calibration probe (run with --ignored); deleted before release.

use symprop::cone::support_radius;
use symprop::field::FieldState;
use symprop::grid::GridSpec;
use symprop::propagate::{kernel, propagate, PropagateOptions};
use symprop_core::{poly_from, PolyMatrixOperator};

fn schrodinger() -> PolyMatrixOperator {
    PolyMatrixOperator::from_entries(1, 1, [(0, 0, poly_from(1, &[(0.0, 1.0, &[2])]).unwrap())])
        .unwrap()
}

fn transport(c: f64) -> PolyMatrixOperator {
    PolyMatrixOperator::from_entries(1, 1, [(0, 0, poly_from(1, &[(c, 0.0, &[1])]).unwrap())])
        .unwrap()
}

fn wave() -> PolyMatrixOperator {
    PolyMatrixOperator::from_entries(
        2,
        1,
        [
            (0, 1, symprop_core::MultiPoly::one(1)),
            (1, 0, poly_from(1, &[(1.0, 0.0, &[2])]).unwrap()),
        ],
    )
    .unwrap()
}

#[test]
#[ignore]
fn probe_schrodinger_kernel_magnitude() {
    let grid = GridSpec::new(vec![200.0], vec![4096]).unwrap();
    let t = 0.5;
    let k = kernel(&schrodinger(), t, &grid, &PropagateOptions::default()).unwrap();
    let expected = (4.0 * std::f64::consts::PI * t).powf(-0.5);
    let mut idx = vec![0usize; 1];
    let mut x = vec![0.0; 1];
    for w in [10.0, 20.0, 25.0, 30.0, 32.0, 35.0, 40.0, 45.0, 50.0, 60.0] {
        let mut max_rel: f64 = 0.0;
        for p in 0..k.total_points() {
            k.grid.x_at(p, &mut idx, &mut x);
            if x[0].abs() <= w {
                let rel = (k.get(0, 0, p).norm() - expected).abs() / expected;
                if rel > max_rel {
                    max_rel = rel;
                }
            }
        }
        println!("schrodinger kernel |x|<={w}: max rel deviation {max_rel:e}");
    }
    for w in [25.0, 50.0] {
        let mut sum_sq = 0.0;
        let mut sum = 0.0;
        let mut count = 0usize;
        for p in 0..k.total_points() {
            k.grid.x_at(p, &mut idx, &mut x);
            if x[0].abs() <= w {
                let rel = (k.get(0, 0, p).norm() - expected) / expected;
                sum_sq += rel * rel;
                sum += k.get(0, 0, p).norm();
                count += 1;
            }
        }
        let rms = (sum_sq / count as f64).sqrt();
        let mean_rel = (sum / count as f64 - expected).abs() / expected;
        println!("schrodinger kernel |x|<={w}: rms rel {rms:e}, mean-magnitude rel {mean_rel:e}");
    }
}

#[test]
#[ignore]
fn probe_transport_kernel_translation() {
    let grid = GridSpec::new(vec![200.0], vec![4096]).unwrap();
    for &c in &[1.0, -1.7, 2.3] {
        for &t in &[0.5, 1.0, 2.0] {
            let k = kernel(&transport(c), t, &grid, &PropagateOptions::default()).unwrap();
            let mut best = (0usize, 0.0f64);
            for p in 0..k.total_points() {
                let norm = k.point_matrix_norm(p);
                if norm > best.1 {
                    best = (p, norm);
                }
            }
            let mut idx = vec![0usize; 1];
            let mut x = vec![0.0; 1];
            k.grid.x_at(best.0, &mut idx, &mut x);
            println!(
                "transport c={c} t={t}: argmax at x={} (want {}), cell {}",
                x[0],
                -c * t,
                grid.cell(0)
            );
        }
    }
}

#[test]
#[ignore]
fn probe_wave_cone_radii() {
    let grid = GridSpec::new(vec![200.0], vec![4096]).unwrap();
    let cell = grid.cell(0);
    for &threshold in &[1e-8, 1e-3, 0.1, 0.25, 0.5, 0.8] {
        let mut line = format!("threshold {threshold:>8}: ");
        for &t in &[0.5, 1.0, 2.0] {
            let k = kernel(&wave(), t, &grid, &PropagateOptions::default()).unwrap();
            let rp = support_radius(&k, &[1.0], threshold).unwrap();
            let rm = support_radius(&k, &[-1.0], threshold).unwrap();
            line.push_str(&format!(
                "t={t}: +r={:.4} ({:+.2} cells), -r={:.4}; ",
                rp,
                (rp - t) / cell,
                rm
            ));
        }
        println!("{line}");
    }
}

#[test]
#[ignore]
fn probe_wave_mass_outside_cone() {
    let grid = GridSpec::new(vec![200.0], vec![4096]).unwrap();
    let width = 200.0 / 32.0;
    let u0 = FieldState::bump(grid.clone(), 2, width);
    for &t in &[0.5, 1.0, 2.0] {
        let u = propagate(&wave(), &u0, t, &PropagateOptions::default()).unwrap();
        let mut idx = vec![0usize; 1];
        let mut x = vec![0.0; 1];
        let total: f64 = (0..u.total_points()).map(|p| u.point_norm(p).powi(2)).sum();
        let radius = width + t + 3.0 * grid.cell(0);
        let outside: f64 = (0..u.total_points())
            .filter(|&p| {
                u.grid.x_at(p, &mut idx, &mut x);
                x[0].abs() > radius
            })
            .map(|p| u.point_norm(p).powi(2))
            .sum();
        println!("wave t={t}: outside/total = {:e}", outside / total);
    }
}

#[test]
#[ignore]
fn probe_wave_energy_unitarity() {
    let grid = GridSpec::new(vec![50.0], vec![256]).unwrap();
    let dx = poly_from(1, &[(1.0, 0.0, &[1])]).unwrap();
    let g = PolyMatrixOperator::from_entries(2, 1, [(0, 1, dx.clone()), (1, 0, dx)]).unwrap();
    let u0 = FieldState::bump(grid, 2, 3.0);
    let before = symprop::fft::forward_fft(&u0).unwrap();
    let after = propagate(&g, &u0, 1.3, &PropagateOptions::default()).unwrap();
    let after_hat = symprop::fft::forward_fft(&after).unwrap();
    let (lo, hi) = symprop::propagate::mode_magnitude_ratios(&before, &after_hat, 1e-9).unwrap();
    println!("wave-energy per-mode magnitude ratios: ({lo}, {hi})");
}
