//! Reproduction commands behind the `cvbell` binary: each one computes a
//! published quantity, writes its artifacts and returns a printable report.

mod commands;
mod output;
mod svg;

use std::f64::consts::FRAC_1_SQRT_2;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::Error;

pub use commands::{
    cmd_abs_wigner, cmd_bell_state, cmd_chsh_check, cmd_eigenvalues, cmd_plot, cmd_star_check, run, Command,
};
pub use output::{figure1_csv, figure2_csv, fmt17, parse_figure1_csv, parse_figure2_csv, Figure2Row};
pub use svg::{Chart, Marker, Series};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub m_max: usize,
    pub radii: Vec<f64>,
    pub tol: f64,
    /// Nodes per axis for the full-quadrature routes; `None` picks defaults.
    pub grid_n: Option<usize>,
    pub format: Format,
    pub out: PathBuf,
    pub seed: u64,
    /// Offset added to one route of `bell-state` before the consistency check.
    /// Exists to exercise the failure path.
    pub route_offset: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            m_max: 30,
            radii: vec![FRAC_1_SQRT_2, 3.5, 5.5],
            tol: 1e-10,
            grid_n: None,
            format: Format::Csv,
            out: PathBuf::from("."),
            seed: 42,
            route_offset: 0.0,
        }
    }
}

/// One named check inside a report.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// What a command prints and which files it wrote.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub lines: Vec<String>,
    pub checks: Vec<Check>,
    pub data: serde_json::Value,
    pub files: Vec<PathBuf>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => output::to_json(self).unwrap_or_default(),
            Format::Csv => {
                let mut out = String::new();
                for l in &self.lines {
                    out.push_str(l);
                    out.push('\n');
                }
                for c in &self.checks {
                    let verdict = if c.passed { "PASS" } else { "FAIL" };
                    out.push_str(&format!("{verdict} {}: {}\n", c.name, c.detail));
                }
                for f in &self.files {
                    out.push_str(&format!("wrote {}\n", f.display()));
                }
                out
            }
        }
    }

    /// Process exit status for a finished report: 0 if every check passed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }
}

/// Process exit status for an error: 1 for bad input or I/O, 2 for numerical failures.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) | Error::Config(_) | Error::Io(_) => 1,
        Error::Numerical { .. } | Error::Truncation { .. } => 2,
    }
}
