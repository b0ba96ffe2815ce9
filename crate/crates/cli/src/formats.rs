//! File formats: matrix CSV, vector CSV, sidecar and report JSON, and
//! the sweep CSV table.
//!
//! Floating values in CSV files are written as plain decimals with 17
//! fractional digits, which round-trips bit-stably for the entry range
//! of these matrices and is locale-independent.

use std::fmt::Write as _;

use dtt_core::{DwtParams, FamilyParams, ParamsPqr, Rational, SweepOutcome, SweepReport};
use serde::{Deserialize, Serialize};

/// Matrix CSV: one row per line, comma-separated fields, no header.
pub fn write_matrix_csv(rows: usize, cols: usize, entries: &[f64]) -> String {
    assert_eq!(entries.len(), rows * cols);
    let mut out = String::new();
    for r in 0..rows {
        for c in 0..cols {
            if c > 0 {
                out.push(',');
            }
            let _ = write!(out, "{:.17}", entries[r * cols + c]);
        }
        out.push('\n');
    }
    out
}

/// Parse a matrix CSV. Every line must have the same number of fields.
pub fn parse_matrix_csv(text: &str) -> Result<(usize, usize, Vec<f64>), String> {
    let mut entries = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        match cols {
            None => cols = Some(fields.len()),
            Some(c) if c != fields.len() => {
                return Err(format!(
                    "line {}: expected {} fields, found {}",
                    lineno + 1,
                    c,
                    fields.len()
                ));
            }
            Some(_) => {}
        }
        for field in fields {
            let v: f64 = field
                .trim()
                .parse()
                .map_err(|_| format!("line {}: invalid number {:?}", lineno + 1, field))?;
            if !v.is_finite() {
                return Err(format!("line {}: non-finite value", lineno + 1));
            }
            entries.push(v);
        }
        rows += 1;
    }
    let cols = cols.ok_or_else(|| "empty matrix file".to_string())?;
    Ok((rows, cols, entries))
}

/// Vector CSV: one value per line.
pub fn write_vector_csv(values: &[f64]) -> String {
    let mut out = String::new();
    for v in values {
        let _ = writeln!(out, "{v:.17}");
    }
    out
}

pub fn parse_vector_csv(text: &str) -> Result<Vec<f64>, String> {
    let mut values = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let v: f64 = line
            .parse()
            .map_err(|_| format!("line {}: invalid number {:?}", lineno + 1, line))?;
        if !v.is_finite() {
            return Err(format!("line {}: non-finite value", lineno + 1));
        }
        values.push(v);
    }
    if values.is_empty() {
        return Err("empty signal file".to_string());
    }
    Ok(values)
}

/// Family parameters as they appear in sidecar and report JSON.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamsJson {
    Pqr { p: u64, q: u64, r: u64 },
    Dwt { alpha: String, beta: String, gamma: u64 },
}

impl ParamsJson {
    pub fn from_family_params(params: &FamilyParams) -> Self {
        match params {
            FamilyParams::Pqr(p) => ParamsJson::Pqr { p: p.p(), q: p.q(), r: p.r() },
            FamilyParams::Dwt(d) => ParamsJson::Dwt {
                alpha: d.alpha().to_string(),
                beta: d.beta().to_string(),
                gamma: d.gamma(),
            },
        }
    }

    pub fn to_family_params(&self) -> Result<FamilyParams, String> {
        match self {
            ParamsJson::Pqr { p, q, r } => ParamsPqr::new(*p, *q, *r)
                .map(FamilyParams::Pqr)
                .map_err(|e| e.to_string()),
            ParamsJson::Dwt { alpha, beta, gamma } => {
                let alpha: Rational = alpha.parse().map_err(|e| format!("{e}"))?;
                let beta: Rational = beta.parse().map_err(|e| format!("{e}"))?;
                DwtParams::new(alpha, beta, *gamma)
                    .map(FamilyParams::Dwt)
                    .map_err(|e| e.to_string())
            }
        }
    }
}

/// Sidecar JSON written next to a generated matrix.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Sidecar {
    pub family: String,
    pub n: u64,
    pub params: Option<ParamsJson>,
}

/// The JSON report emitted by the check command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportFile {
    pub family: String,
    pub n: u64,
    pub params: Option<ParamsJson>,
    pub condition_satisfied: Option<bool>,
    pub max_offdiag: f64,
    pub max_diag_dev: f64,
    pub orthogonal: bool,
    pub tolerance: f64,
}

/// Sweep table CSV. For (p, q, r) families all three parameter columns
/// are filled; probe rows over the unified family fill only q. Rows
/// whose builder rejected the parameters carry `error` in the deviation
/// column.
pub fn write_sweep_csv(report: &SweepReport) -> String {
    let mut out = String::from("family,n,p,q,r,condition_satisfied,gram_max_dev\n");
    for row in report.rows() {
        let (p, q, r) = match &row.params {
            FamilyParams::Pqr(params) => {
                (params.p().to_string(), params.q().to_string(), params.r().to_string())
            }
            FamilyParams::Dwt(params) => (String::new(), params.gamma().to_string(), String::new()),
        };
        let dev = match &row.outcome {
            SweepOutcome::Deviation(d) => format!("{d:e}"),
            SweepOutcome::BuildError(_) => "error".to_string(),
        };
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            row.family.name(),
            row.n,
            p,
            q,
            r,
            row.condition_satisfied,
            dev
        );
    }
    out
}
