//! Gridded states: ℂᵐ-valued fields und m×m kernel fields on a periodic box,
//! with CSV dumps and read-back.
//!
//! Storage is planar: component c (or kernel entry (i, j) at plane i·m+j)
//! occupies a contiguous block of `total_points` complex values in the grid's
//! row-major point order. CSV dumps emit one row per grid point in exactly
//! that order: coordinate columns first, then `re, im` interleaved per
//! component, preceded by a `#`-prefixed metadata line and a column-name
//! header.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::grid::GridSpec;
use crate::SolverError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Representation {
    Physical,
    Frequency,
}

/// ℂᵐ-valued state on a grid, in physical- or frequency-space
/// representation.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldState {
    pub grid: GridSpec,
    pub m: usize,
    pub representation: Representation,
    pub time_label: f64,
    data: Vec<Complex64>,
}

impl FieldState {
    pub fn zeros(grid: GridSpec, m: usize, representation: Representation) -> Self {
        let len = m * grid.total_points();
        FieldState { grid, m, representation, time_label: 0.0, data: vec![Complex64::new(0.0, 0.0); len] }
    }

    pub fn constant(grid: GridSpec, m: usize, value: Complex64) -> Self {
        let mut f = Self::zeros(grid, m, Representation::Physical);
        f.data.fill(value);
        f
    }

    /// Single Fourier mode `e^{iξ·x}` with unit amplitude in every component;
    /// `k` is the signed mode number per axis.
    pub fn mode(grid: GridSpec, m: usize, k: &[i64]) -> Result<Self, SolverError> {
        assert_eq!(k.len(), grid.n(), "one mode number per axis");
        let mut xi = vec![0.0; grid.n()];
        for (axis, &kk) in k.iter().enumerate() {
            let idx = grid.mode_to_index(axis, kk)?;
            xi[axis] = grid.frequency(axis, idx);
        }
        let p_total = grid.total_points();
        let mut f = Self::zeros(grid, m, Representation::Physical);
        let mut idx_buf = vec![0usize; f.grid.n()];
        let mut x = vec![0.0; f.grid.n()];
        for p in 0..p_total {
            f.grid.x_at(p, &mut idx_buf, &mut x);
            let phase: f64 = x.iter().zip(&xi).map(|(a, b)| a * b).sum();
            let value = Complex64::new(0.0, phase).exp();
            for c in 0..m {
                f.data[c * p_total + p] = value;
            }
        }
        Ok(f)
    }

    /// Compactly supported smooth bump `exp(1 − 1/(1 − (|x|/width)²))` for
    /// `|x| < width`, zero outside, in every component. Max value 1 at the
    /// origin.
    pub fn bump(grid: GridSpec, m: usize, width: f64) -> Self {
        let p_total = grid.total_points();
        let mut f = Self::zeros(grid, m, Representation::Physical);
        let mut idx_buf = vec![0usize; f.grid.n()];
        let mut x = vec![0.0; f.grid.n()];
        for p in 0..p_total {
            f.grid.x_at(p, &mut idx_buf, &mut x);
            let r_sq: f64 = x.iter().map(|v| v * v).sum::<f64>() / (width * width);
            let value = if r_sq < 1.0 { (1.0 - 1.0 / (1.0 - r_sq)).exp() } else { 0.0 };
            for c in 0..m {
                f.data[c * p_total + p] = Complex64::new(value, 0.0);
            }
        }
        f
    }

    pub fn total_points(&self) -> usize {
        self.grid.total_points()
    }

    pub fn get(&self, component: usize, point: usize) -> Complex64 {
        self.data[component * self.total_points() + point]
    }

    pub fn set(&mut self, component: usize, point: usize, value: Complex64) {
        let p_total = self.total_points();
        self.data[component * p_total + point] = value;
    }

    pub fn plane(&self, component: usize) -> &[Complex64] {
        let p = self.total_points();
        &self.data[component * p..(component + 1) * p]
    }

    pub fn plane_mut(&mut self, component: usize) -> &mut [Complex64] {
        let p = self.total_points();
        &mut self.data[component * p..(component + 1) * p]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Plain ℓ² norm over all points and components (no volume element).
    pub fn l2_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.grid, other.grid);
        assert_eq!(self.m, other.m);
        assert_eq!(self.representation, other.representation);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    /// Euclidean norm of the component vector at one point.
    pub fn point_norm(&self, point: usize) -> f64 {
        let p_total = self.total_points();
        (0..self.m)
            .map(|c| self.data[c * p_total + point].norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<(), SolverError> {
        write_metadata_line(&mut w, "field", &self.grid, self.m, Some(self.representation), self.time_label)?;
        let n = self.grid.n();
        let mut cols: Vec<String> = (1..=n).map(|a| format!("x{a}")).collect();
        for c in 1..=self.m {
            cols.push(format!("u{c}_re"));
            cols.push(format!("u{c}_im"));
        }
        writeln!(w, "{}", cols.join(","))?;
        let p_total = self.total_points();
        let mut idx_buf = vec![0usize; n];
        let mut x = vec![0.0; n];
        for p in 0..p_total {
            self.grid.x_at(p, &mut idx_buf, &mut x);
            let mut row = String::new();
            for (a, v) in x.iter().enumerate() {
                if a > 0 {
                    row.push(',');
                }
                let coord = if self.representation == Representation::Frequency {
                    self.grid.frequency(a, idx_buf[a])
                } else {
                    *v
                };
                row.push_str(&format!("{coord}"));
            }
            for c in 0..self.m {
                let z = self.data[c * p_total + p];
                row.push_str(&format!(",{},{}", z.re, z.im));
            }
            writeln!(w, "{row}")?;
        }
        Ok(())
    }

    /// Reads a field dumped by [`FieldState::write_csv`]. Rows must be in
    /// storage order; coordinates are recomputed from the metadata, the
    /// coordinate columns are ignored.
    pub fn read_csv<R: BufRead>(r: R) -> Result<Self, SolverError> {
        let mut lines = r.lines();
        let meta_line = lines
            .next()
            .ok_or_else(|| SolverError::Csv("empty file".into()))??;
        let meta = Metadata::parse(&meta_line)?;
        let grid = GridSpec::new(meta.lengths.clone(), meta.points.clone())?;
        let representation = match meta.representation.as_str() {
            "physical" => Representation::Physical,
            "frequency" => Representation::Frequency,
            other => return Err(SolverError::Csv(format!("unknown representation '{other}'"))),
        };
        let _header = lines
            .next()
            .ok_or_else(|| SolverError::Csv("missing column header".into()))??;
        let mut field = FieldState::zeros(grid, meta.m, representation);
        field.time_label = meta.time;
        let p_total = field.total_points();
        let n = field.grid.n();
        let mut count = 0usize;
        for (line_no, line) in lines.enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            if count >= p_total {
                return Err(SolverError::Csv("more rows than grid points".into()));
            }
            let cells: Vec<&str> = line.split(',').collect();
            if cells.len() != n + 2 * meta.m {
                return Err(SolverError::Csv(format!(
                    "row {} has {} columns, expected {}",
                    line_no + 3,
                    cells.len(),
                    n + 2 * meta.m
                )));
            }
            for c in 0..meta.m {
                let re: f64 = cells[n + 2 * c]
                    .parse()
                    .map_err(|e| SolverError::Csv(format!("row {}: {e}", line_no + 3)))?;
                let im: f64 = cells[n + 2 * c + 1]
                    .parse()
                    .map_err(|e| SolverError::Csv(format!("row {}: {e}", line_no + 3)))?;
                field.data[c * p_total + count] = Complex64::new(re, im);
            }
            count += 1;
        }
        if count != p_total {
            return Err(SolverError::Csv(format!(
                "{count} rows for a grid of {p_total} points"
            )));
        }
        Ok(field)
    }
}

/// m×m complex matrix per grid point; the discrete kernel S_t.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelField {
    pub grid: GridSpec,
    pub m: usize,
    pub time_label: f64,
    data: Vec<Complex64>,
}

impl KernelField {
    pub fn zeros(grid: GridSpec, m: usize) -> Self {
        let len = m * m * grid.total_points();
        KernelField { grid, m, time_label: 0.0, data: vec![Complex64::new(0.0, 0.0); len] }
    }

    pub fn total_points(&self) -> usize {
        self.grid.total_points()
    }

    pub fn get(&self, row: usize, col: usize, point: usize) -> Complex64 {
        self.data[(row * self.m + col) * self.total_points() + point]
    }

    pub fn set(&mut self, row: usize, col: usize, point: usize, value: Complex64) {
        let p_total = self.total_points();
        self.data[(row * self.m + col) * p_total + point] = value;
    }

    pub fn plane_mut(&mut self, row: usize, col: usize) -> &mut [Complex64] {
        let p = self.total_points();
        let offset = (row * self.m + col) * p;
        &mut self.data[offset..offset + p]
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Frobenius norm of the matrix at one point.
    pub fn point_matrix_norm(&self, point: usize) -> f64 {
        let p_total = self.total_points();
        let mm = self.m * self.m;
        (0..mm)
            .map(|e| self.data[e * p_total + point].norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Applies the kernel matrix at `point` to a component vector.
    pub fn apply_at(&self, point: usize, v: &[Complex64], out: &mut [Complex64]) {
        let p_total = self.total_points();
        for i in 0..self.m {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 0..self.m {
                acc += self.data[(i * self.m + j) * p_total + point] * v[j];
            }
            out[i] = acc;
        }
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<(), SolverError> {
        write_metadata_line(&mut w, "kernel", &self.grid, self.m, None, self.time_label)?;
        let n = self.grid.n();
        let mut cols: Vec<String> = (1..=n).map(|a| format!("x{a}")).collect();
        for i in 1..=self.m {
            for j in 1..=self.m {
                cols.push(format!("k{i}{j}_re"));
                cols.push(format!("k{i}{j}_im"));
            }
        }
        writeln!(w, "{}", cols.join(","))?;
        let p_total = self.total_points();
        let mut idx_buf = vec![0usize; n];
        let mut x = vec![0.0; n];
        for p in 0..p_total {
            self.grid.x_at(p, &mut idx_buf, &mut x);
            let mut row = String::new();
            for (a, v) in x.iter().enumerate() {
                if a > 0 {
                    row.push(',');
                }
                row.push_str(&format!("{v}"));
            }
            for e in 0..self.m * self.m {
                let z = self.data[e * p_total + p];
                row.push_str(&format!(",{},{}", z.re, z.im));
            }
            writeln!(w, "{row}")?;
        }
        Ok(())
    }
}

fn write_metadata_line<W: Write>(
    w: &mut W,
    kind: &str,
    grid: &GridSpec,
    m: usize,
    representation: Option<Representation>,
    time: f64,
) -> Result<(), SolverError> {
    let ls: Vec<String> = grid.lengths().iter().map(|l| format!("{l}")).collect();
    let ns: Vec<String> = grid.points().iter().map(|n| format!("{n}")).collect();
    let repr = match representation {
        Some(Representation::Physical) => " representation=physical",
        Some(Representation::Frequency) => " representation=frequency",
        None => "",
    };
    writeln!(
        w,
        "# symprop {kind} schema=1 n={} m={m}{repr} time={time} L={} N={}",
        grid.n(),
        ls.join(";"),
        ns.join(";"),
    )?;
    Ok(())
}

struct Metadata {
    m: usize,
    representation: String,
    time: f64,
    lengths: Vec<f64>,
    points: Vec<usize>,
}

impl Metadata {
    fn parse(line: &str) -> Result<Self, SolverError> {
        if !line.starts_with('#') {
            return Err(SolverError::Csv("missing metadata line".into()));
        }
        let mut m = None;
        let mut representation = String::from("physical");
        let mut time = 0.0;
        let mut lengths = Vec::new();
        let mut points = Vec::new();
        for token in line.trim_start_matches('#').split_whitespace() {
            if let Some((key, value)) = token.split_once('=') {
                match key {
                    "m" => m = value.parse().ok(),
                    "representation" => representation = value.to_string(),
                    "time" => {
                        time = value
                            .parse()
                            .map_err(|e| SolverError::Csv(format!("time: {e}")))?;
                    }
                    "L" => {
                        lengths = value
                            .split(';')
                            .map(|v| v.parse::<f64>())
                            .collect::<Result<_, _>>()
                            .map_err(|e| SolverError::Csv(format!("L: {e}")))?;
                    }
                    "N" => {
                        points = value
                            .split(';')
                            .map(|v| v.parse::<usize>())
                            .collect::<Result<_, _>>()
                            .map_err(|e| SolverError::Csv(format!("N: {e}")))?;
                    }
                    _ => {}
                }
            }
        }
        let m = m.ok_or_else(|| SolverError::Csv("metadata lacks m".into()))?;
        if lengths.is_empty() || points.is_empty() {
            return Err(SolverError::Csv("metadata lacks L or N".into()));
        }
        Ok(Metadata { m, representation, time, lengths, points })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> GridSpec {
        GridSpec::new(vec![4.0], vec![8]).unwrap()
    }

    #[test]
    fn bump_is_compact_and_normalized() {
        let f = FieldState::bump(grid(), 1, 1.0);
        assert_eq!(f.get(0, 0), Complex64::new(1.0, 0.0));
        // cell is 0.5; |x| = 1.5 at index 3 lies outside the bump
        assert_eq!(f.get(0, 3), Complex64::new(0.0, 0.0));
        assert!(f.get(0, 1).re > 0.0);
        assert_eq!(f.get(0, 1), f.get(0, 7), "bump must be even in x");
    }

    #[test]
    fn csv_round_trip() {
        let mut f = FieldState::bump(grid(), 2, 1.0);
        f.time_label = 0.25;
        f.set(1, 3, Complex64::new(-0.5, 2.0));
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let back = FieldState::read_csv(std::io::Cursor::new(&buf)).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn csv_rejects_truncated_input() {
        let f = FieldState::bump(grid(), 1, 1.0);
        let mut buf = Vec::new();
        f.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let truncated: String =
            text.lines().take(6).map(|l| format!("{l}\n")).collect();
        assert!(matches!(
            FieldState::read_csv(std::io::Cursor::new(truncated.as_bytes())),
            Err(SolverError::Csv(_))
        ));
    }

    #[test]
    fn mode_respects_range() {
        assert!(FieldState::mode(grid(), 1, &[3]).is_ok());
        assert!(matches!(
            FieldState::mode(grid(), 1, &[4]),
            Err(SolverError::ModeRange { .. })
        ));
        assert!(FieldState::mode(grid(), 1, &[-4]).is_ok());
    }
}
