//! The `symprop` command-line front end.
//!
//! Subcommands: `analyze`, `classify`, `solve`, `cone`, `gallery`. The
//! operator argument is either a path to an operator-description document or
//! `gallery:<name>`. Reports are JSON (stdout by default, files under
//! `--out <dir>`); solution fields dump to CSV next to the report. Exit
//! codes: 0 on success, 2 when `solve` meets a `violated` classification
//! without `--force`, 1 on any error.

use std::ffi::OsString;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use symprop_core::{growth_bound_check, GrowthBoundConfig, PetrovskiiVerdict, SamplingConfig};

use crate::cone::{cone_estimate, probe_directions, DEFAULT_CONE_THRESHOLD};
use crate::field::{FieldState, Representation};
use crate::gallery::{gallery_entries, resolve_operator};
use crate::grid::GridSpec;
use crate::propagate::{mode_magnitude_ratios, propagate, PropagateOptions};
use crate::report::{
    emit, operator_value, AnalyzeReport, ClassifyReport, ConeReport, GalleryReport, SolveReport,
    SCHEMA_VERSION,
};
use crate::{fft, Output, SolverError};

#[derive(Parser)]
#[command(
    name = "symprop",
    version,
    about = "Fourier-symbol analysis and periodic-box Cauchy solver for constant-coefficient operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SamplingArgs {
    /// Largest dyadic shell exponent J (shells |xi| = 2^j, j = 0..=J)
    #[arg(long, default_value_t = 16)]
    shells: u32,
    /// Directions per shell in each of the low-discrepancy and random sets
    #[arg(long, default_value_t = 64)]
    dirs: usize,
    /// Seed for the random direction set
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SamplingArgs {
    fn config(&self) -> SamplingConfig {
        SamplingConfig {
            max_shell_exponent: self.shells,
            lowdisc_directions: self.dirs,
            random_directions: self.dirs,
            seed: self.seed,
            slope_threshold: None,
        }
    }
}

#[derive(Args, Clone)]
struct GridArgs {
    /// Points per axis (even), comma separated; a single value broadcasts
    #[arg(long = "N", value_delimiter = ',', default_value = "256")]
    points: Vec<usize>,
    /// Box lengths per axis, comma separated; a single value broadcasts
    #[arg(long = "L", value_delimiter = ',', default_value = "50")]
    lengths: Vec<f64>,
}

impl GridArgs {
    fn grid(&self, n: usize) -> Result<GridSpec, SolverError> {
        let points = broadcast(&self.points, n)?;
        let lengths = broadcast(&self.lengths, n)?;
        GridSpec::new(lengths, points)
    }
}

fn broadcast<T: Clone>(values: &[T], n: usize) -> Result<Vec<T>, SolverError> {
    if values.len() == n {
        Ok(values.to_vec())
    } else if values.len() == 1 {
        Ok(vec![values[0].clone(); n])
    } else {
        Err(SolverError::GridAxes { lengths: values.len(), points: n })
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify, estimate the spectral bound, and run the growth-bound check
    Analyze {
        /// Operator document path or gallery:<name>
        operator: String,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Directory for reports (stdout when absent)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact degree data plus the sampled Petrovskii verdict
    Classify {
        operator: String,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the Cauchy problem on a periodic box and dump the field
    Solve {
        operator: String,
        /// Propagation time
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        grid: GridArgs,
        /// Initial condition: field CSV path, preset:bump, preset:bump:<width>,
        /// or preset:mode:<k[,k...]>
        #[arg(long, default_value = "preset:bump")]
        ic: String,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Propagate even when the classification verdict is 'violated'
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Estimate the propagation cone of a hyperbolic system
    Cone {
        operator: String,
        /// Kernel times, comma separated
        #[arg(long, value_delimiter = ',')]
        times: Vec<f64>,
        #[command(flatten)]
        grid: GridArgs,
        /// Support threshold relative to the field maximum
        #[arg(long)]
        threshold: Option<f64>,
        #[command(flatten)]
        sampling: SamplingArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List built-in operators with their embedded documents
    Gallery {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn output_of(dir: Option<PathBuf>) -> Output {
    match dir {
        Some(d) => Output::Dir(d),
        None => Output::Stdout,
    }
}

/// Runs the CLI; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, SolverError> {
    match cli.command {
        Command::Analyze { operator, sampling, out } => {
            let (g, doc) = resolve_operator(&operator)?;
            let cfg = sampling.config();
            let (classification, spectral_report) =
                symprop_core::classify_with_report(&g, &cfg)?;
            let growth_bound = if classification.petrovskii == PetrovskiiVerdict::Satisfied
                && spectral_report.s0_estimate.is_finite()
            {
                Some(growth_bound_check(
                    &g,
                    spectral_report.s0_estimate,
                    &cfg,
                    &GrowthBoundConfig::default(),
                )?)
            } else {
                None
            };
            let report = AnalyzeReport {
                schema: SCHEMA_VERSION,
                command: "analyze",
                operator: operator_value(&doc),
                classification,
                spectral_report,
                growth_bound,
            };
            emit(&report, &output_of(out), "analyze.json")?;
            Ok(0)
        }
        Command::Classify { operator, sampling, out } => {
            let (g, doc) = resolve_operator(&operator)?;
            let classification = symprop_core::classify(&g, &sampling.config())?;
            let report = ClassifyReport {
                schema: SCHEMA_VERSION,
                command: "classify",
                operator: operator_value(&doc),
                classification,
            };
            emit(&report, &output_of(out), "classify.json")?;
            Ok(0)
        }
        Command::Solve { operator, t, grid, ic, sampling, force, out } => {
            let (g, doc) = resolve_operator(&operator)?;
            let grid = grid.grid(g.n())?;
            let classification = symprop_core::classify(&g, &sampling.config())?;
            if classification.petrovskii == PetrovskiiVerdict::Violated && !force {
                eprintln!(
                    "classification verdict is 'violated'; pass --force to propagate anyway"
                );
                return Ok(2);
            }
            let u0 = build_initial_condition(&ic, &grid, g.m())?;
            let opts = PropagateOptions { force, verdict: Some(classification.petrovskii) };
            let solution = propagate(&g, &u0, t, &opts)?;
            let before = fft::forward_fft(&u0)?;
            let after = fft::forward_fft(&solution)?;
            let (lo, hi) = mode_magnitude_ratios(&before, &after, 1e-12)?;
            let output = output_of(out);
            let field_csv = match &output {
                Output::Dir(dir) => {
                    std::fs::create_dir_all(dir)?;
                    let name = format!("solution_t{t}.csv");
                    let file = File::create(dir.join(&name))?;
                    solution.write_csv(std::io::BufWriter::new(file))?;
                    Some(name)
                }
                Output::Stdout => None,
            };
            let report = SolveReport {
                schema: SCHEMA_VERSION,
                command: "solve",
                operator: operator_value(&doc),
                t,
                grid,
                initial_condition: ic,
                classification,
                mode_magnitude_min: lo,
                mode_magnitude_max: hi,
                unitary_modes: (lo - 1.0).abs() <= 1e-9 && (hi - 1.0).abs() <= 1e-9,
                solution_l2: solution.l2_norm(),
                field_csv,
            };
            emit(&report, &output, "solve.json")?;
            Ok(0)
        }
        Command::Cone { operator, times, grid, threshold, sampling, out } => {
            let (g, doc) = resolve_operator(&operator)?;
            let grid = grid.grid(g.n())?;
            let threshold = threshold.unwrap_or(DEFAULT_CONE_THRESHOLD);
            let dirs = probe_directions(g.n(), sampling.dirs.max(2 * g.n()));
            let cone = cone_estimate(&g, &times, &grid, &dirs, threshold, &sampling.config())?;
            let report = ConeReport {
                schema: SCHEMA_VERSION,
                command: "cone",
                operator: operator_value(&doc),
                grid,
                cone,
            };
            emit(&report, &output_of(out), "cone.json")?;
            Ok(0)
        }
        Command::Gallery { out } => {
            let report = GalleryReport {
                schema: SCHEMA_VERSION,
                command: "gallery",
                operators: gallery_entries(),
            };
            emit(&report, &output_of(out), "gallery.json")?;
            Ok(0)
        }
    }
}

fn build_initial_condition(
    spec: &str,
    grid: &GridSpec,
    m: usize,
) -> Result<FieldState, SolverError> {
    if spec == "preset:bump" {
        let width = grid.lengths().iter().cloned().fold(f64::NEG_INFINITY, f64::max) / 32.0;
        return Ok(FieldState::bump(grid.clone(), m, width));
    }
    if let Some(w) = spec.strip_prefix("preset:bump:") {
        let width: f64 =
            w.parse().map_err(|e| SolverError::IcMismatch(format!("bump width: {e}")))?;
        if !(width.is_finite() && width > 0.0) {
            return Err(SolverError::IcMismatch(format!("bump width {width} not positive")));
        }
        return Ok(FieldState::bump(grid.clone(), m, width));
    }
    if let Some(ks) = spec.strip_prefix("preset:mode:") {
        let k: Vec<i64> = ks
            .split(',')
            .map(|s| s.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| SolverError::IcMismatch(format!("mode numbers: {e}")))?;
        if k.len() != grid.n() {
            return Err(SolverError::IcMismatch(format!(
                "{} mode numbers for {} axes",
                k.len(),
                grid.n()
            )));
        }
        return FieldState::mode(grid.clone(), m, &k);
    }
    if spec.starts_with("preset:") {
        return Err(SolverError::IcMismatch(format!("unknown preset '{spec}'")));
    }
    let field = FieldState::read_csv(BufReader::new(File::open(spec)?))?;
    if field.grid != *grid {
        return Err(SolverError::IcMismatch(format!(
            "file grid {:?}/{:?} differs from requested {:?}/{:?}",
            field.grid.lengths(),
            field.grid.points(),
            grid.lengths(),
            grid.points()
        )));
    }
    if field.m != m {
        return Err(SolverError::IcMismatch(format!(
            "file has {} components, operator wants {m}",
            field.m
        )));
    }
    if field.representation != Representation::Physical {
        return Err(SolverError::IcMismatch("initial condition must be physical-space".into()));
    }
    Ok(field)
}
