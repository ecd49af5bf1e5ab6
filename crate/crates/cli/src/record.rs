use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{Map, Value};

use crate::config::{ExperimentConfig, Format};
use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(u64),
    Float(f64),
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Float(v)
    }
}

/// Floats are written with 17 significant digits, which round-trips every
/// `f64` exactly.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// One table of numbers produced by an experiment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Series {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Series {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Self {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Comma-separated, header row first, LF line endings.
    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                match cell {
                    Cell::Int(v) => write!(out, "{v}").unwrap(),
                    Cell::Float(v) => out.push_str(&format_float(*v)),
                }
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("series serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentRecord {
    pub config: ExperimentConfig,
    #[serde(skip)]
    pub series: Vec<Series>,
    pub summary: Map<String, Value>,
    pub version: String,
    pub wall_clock_seconds: f64,
    /// Formatted text for experiments that print a table.
    #[serde(skip)]
    pub text: Option<String>,
}

impl ExperimentRecord {
    pub fn series(&self, name: &str) -> Option<&Series> {
        self.series.iter().find(|s| s.name == name)
    }

    /// Writes one file per series plus `summary.json` into `dir`; returns the
    /// paths written, series first.
    pub fn write(&self, dir: &Path) -> Result<Vec<PathBuf>, CliError> {
        let io = |path: &Path| {
            let path = path.to_path_buf();
            move |source| CliError::Io { path, source }
        };
        fs::create_dir_all(dir).map_err(io(dir))?;
        let mut written = Vec::new();
        let mut files = Vec::new();
        for s in &self.series {
            let (ext, body) = match self.config.format {
                Format::Csv => ("csv", s.to_csv()),
                Format::Json => ("json", s.to_json()),
            };
            let path = dir.join(format!("{}.{ext}", s.name));
            fs::write(&path, body).map_err(io(&path))?;
            files.push(path.file_name().unwrap().to_string_lossy().into_owned());
            written.push(path);
        }
        let mut summary = serde_json::to_value(self).expect("record serializes");
        summary
            .as_object_mut()
            .unwrap()
            .insert("series_files".into(), files.into());
        let path = dir.join("summary.json");
        let mut body = serde_json::to_string_pretty(&summary).expect("summary serializes");
        body.push('\n');
        fs::write(&path, body).map_err(io(&path))?;
        written.push(path);
        Ok(written)
    }
}
