//! JSON report envelopes and output plumbing. Every report carries
//! `"schema": 1`; serialization is field-order stable and free of
//! timestamps or absolute paths, so identical runs produce byte-identical
//! documents.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use serde_json::Value;
use symprop_core::{Classification, GrowthBoundReport, SpectralReport};

use crate::cone::ConeEstimate;
use crate::grid::GridSpec;
use crate::{Output, SolverError};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct ClassifyReport {
    pub schema: u32,
    pub command: &'static str,
    pub operator: Value,
    pub classification: Classification,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub schema: u32,
    pub command: &'static str,
    pub operator: Value,
    pub classification: Classification,
    pub spectral_report: SpectralReport,
    /// Present when the Petrovskii verdict admits the check.
    pub growth_bound: Option<GrowthBoundReport>,
}

#[derive(Serialize)]
pub struct SolveReport {
    pub schema: u32,
    pub command: &'static str,
    pub operator: Value,
    pub t: f64,
    pub grid: GridSpec,
    pub initial_condition: String,
    pub classification: Classification,
    /// Min/max of per-mode magnitude ratios ‖û(t,ξ)‖/‖û₀(ξ)‖ over carried
    /// modes.
    pub mode_magnitude_min: f64,
    pub mode_magnitude_max: f64,
    /// True when every carried mode keeps its magnitude to 1e−9 (unitary
    /// per-mode propagation).
    pub unitary_modes: bool,
    pub solution_l2: f64,
    /// File the solution field was dumped to, when directed at a directory.
    pub field_csv: Option<String>,
}

#[derive(Serialize)]
pub struct ConeReport {
    pub schema: u32,
    pub command: &'static str,
    pub operator: Value,
    pub grid: GridSpec,
    pub cone: ConeEstimate,
}

#[derive(Serialize)]
pub struct GalleryReport {
    pub schema: u32,
    pub command: &'static str,
    pub operators: Vec<crate::gallery::GalleryEntry>,
}

/// Parses an operator document string into a JSON value for embedding.
pub fn operator_value(document: &str) -> Value {
    serde_json::from_str(document).expect("operator documents are valid JSON")
}

pub fn render_json<T: Serialize>(report: &T) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}

/// Writes a report to stdout or `<dir>/<name>`; returns the path used, if
/// any.
pub fn emit<T: Serialize>(
    report: &T,
    output: &Output,
    name: &str,
) -> Result<Option<PathBuf>, SolverError> {
    let text = render_json(report);
    match output {
        Output::Stdout => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(None)
        }
        Output::Dir(dir) => {
            fs::create_dir_all(dir)?;
            let path = dir.join(name);
            fs::write(&path, text)?;
            Ok(Some(path))
        }
    }
}
