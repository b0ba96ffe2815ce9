//! Command implementations. Each returns the process exit code:
//! 0 for success (and orthogonal for check), 1 for a checked property
//! that failed, 2 for usage, parse or I/O errors (via `CliError`).

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dtt_core::{
    apply_entries, build, check_conditions, forward, lcg, sweep, sweep_unified_probe, DwtParams,
    FamilyParams, GramReport, ParamsPqr, TransformFamily, TransformMatrix, INVERSE_GATE_TOL,
};
use serde::Serialize;

use crate::args::{ApplyArgs, BenchArgs, CheckArgs, FamilyArgs, GenArgs, SourceArgs, SweepArgs};
use crate::formats;

/// Errors that terminate the process with exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError(msg.into())
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

/// Resolve --family/--n plus parameter flags into a built matrix
/// specification.
pub fn resolve_family(args: &FamilyArgs) -> Result<(TransformFamily, u64, Option<FamilyParams>), CliError> {
    let name = args.family.as_deref().ok_or_else(|| usage("--family is required"))?;
    let family: TransformFamily = name.parse().map_err(|e| usage(format!("{e}")))?;
    let n = args.n.ok_or_else(|| usage("--n is required"))?;
    let has_pqr = args.p.is_some() || args.q.is_some() || args.r.is_some();
    let has_dwt = args.alpha.is_some() || args.beta.is_some() || args.gamma.is_some();

    if family.takes_pqr() {
        if has_dwt {
            return Err(usage(format!("family {family} takes --p/--q/--r, not --alpha/--beta/--gamma")));
        }
        let (p, q, r) = match (args.p, args.q, args.r) {
            (Some(p), Some(q), Some(r)) => (p, q, r),
            _ => return Err(usage(format!("family {family} requires --p, --q, --r"))),
        };
        let params = ParamsPqr::new(p, q, r).map_err(|e| usage(e.to_string()))?;
        Ok((family, n, Some(FamilyParams::Pqr(params))))
    } else if family.takes_dwt_params() {
        if has_pqr {
            return Err(usage(format!("family {family} takes --alpha/--beta/--gamma, not --p/--q/--r")));
        }
        let (alpha, beta, gamma) = match (args.alpha, args.beta, args.gamma) {
            (Some(a), Some(b), Some(g)) => (a, b, g),
            _ => return Err(usage(format!("family {family} requires --alpha, --beta, --gamma"))),
        };
        let params = DwtParams::new(alpha, beta, gamma).map_err(|e| usage(e.to_string()))?;
        Ok((family, n, Some(FamilyParams::Dwt(params))))
    } else {
        if has_pqr || has_dwt {
            return Err(usage(format!("family {family} takes no parameters")));
        }
        Ok((family, n, None))
    }
}

fn build_from_family(args: &FamilyArgs) -> Result<TransformMatrix, CliError> {
    let (family, n, params) = resolve_family(args)?;
    build(family, n, params.as_ref()).map_err(|e| usage(e.to_string()))
}

/// A matrix to operate on: either built from a family or loaded from a
/// CSV file (with optional sidecar metadata).
pub enum LoadedMatrix {
    Built(TransformMatrix),
    File {
        rows: usize,
        cols: usize,
        entries: Vec<f64>,
        family: Option<TransformFamily>,
        n: Option<u64>,
        params: Option<FamilyParams>,
    },
}

impl LoadedMatrix {
    pub fn rows(&self) -> usize {
        match self {
            LoadedMatrix::Built(m) => m.rows(),
            LoadedMatrix::File { rows, .. } => *rows,
        }
    }

    pub fn cols(&self) -> usize {
        match self {
            LoadedMatrix::Built(m) => m.cols(),
            LoadedMatrix::File { cols, .. } => *cols,
        }
    }

    pub fn entries(&self) -> &[f64] {
        match self {
            LoadedMatrix::Built(m) => m.entries(),
            LoadedMatrix::File { entries, .. } => entries,
        }
    }

    fn family(&self) -> Option<TransformFamily> {
        match self {
            LoadedMatrix::Built(m) => Some(m.family()),
            LoadedMatrix::File { family, .. } => *family,
        }
    }

    fn family_name(&self) -> String {
        self.family().map_or_else(|| "file".to_string(), |f| f.name().to_string())
    }

    fn n_param(&self) -> u64 {
        match self {
            LoadedMatrix::Built(m) => m.n_param(),
            LoadedMatrix::File { n, rows, .. } => n.unwrap_or(*rows as u64),
        }
    }

    fn params(&self) -> Option<FamilyParams> {
        match self {
            LoadedMatrix::Built(m) => m.params().copied(),
            LoadedMatrix::File { params, .. } => *params,
        }
    }

    /// Condition verdict for the report: computed for (p, q, r)
    /// families, trivially true for fixed-kernel families, unknown
    /// (null) for the free-form unified family and for raw files.
    fn condition_satisfied(&self) -> Option<bool> {
        let family = self.family()?;
        if family.takes_pqr() {
            let pqr = match self.params() {
                Some(FamilyParams::Pqr(p)) => p,
                _ => return None,
            };
            check_conditions(family, self.n_param(), Some(&pqr))
                .ok()
                .map(|report| report.satisfied())
        } else if family.takes_dwt_params() {
            None
        } else {
            Some(true)
        }
    }
}

fn load_source(source: &SourceArgs) -> Result<LoadedMatrix, CliError> {
    match (&source.matrix, &source.family.family) {
        (Some(_), Some(_)) => Err(usage("give either --matrix or --family, not both")),
        (Some(path), None) => load_matrix_file(path),
        (None, Some(_)) => Ok(LoadedMatrix::Built(build_from_family(&source.family)?)),
        (None, None) => Err(usage("either --matrix or --family is required")),
    }
}

fn load_matrix_file(path: &Path) -> Result<LoadedMatrix, CliError> {
    let text = read_file(path)?;
    let (rows, cols, entries) =
        formats::parse_matrix_csv(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let mut family = None;
    let mut n = None;
    let mut params = None;
    let sidecar_path = sidecar_path_for(path);
    if sidecar_path.exists() {
        match read_sidecar(&sidecar_path) {
            Ok((f, meta_n, p)) => {
                family = f;
                n = Some(meta_n);
                params = p;
            }
            Err(e) => eprintln!("warning: ignoring sidecar {}: {e}", sidecar_path.display()),
        }
    }
    Ok(LoadedMatrix::File { rows, cols, entries, family, n, params })
}

fn sidecar_path_for(path: &Path) -> PathBuf {
    let mut os = path.as_os_str().to_owned();
    os.push(".json");
    PathBuf::from(os)
}

fn read_sidecar(path: &Path) -> Result<(Option<TransformFamily>, u64, Option<FamilyParams>), String> {
    let text = fs::read_to_string(path).map_err(|e| e.to_string())?;
    let sidecar: formats::Sidecar = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let family = sidecar.family.parse::<TransformFamily>().ok();
    let params = match &sidecar.params {
        Some(p) => Some(p.to_family_params()?),
        None => None,
    };
    Ok((family, sidecar.n, params))
}

pub fn run_gen(args: &GenArgs) -> Result<i32, CliError> {
    let matrix = build_from_family(&args.family)?;
    let csv = formats::write_matrix_csv(matrix.rows(), matrix.cols(), matrix.entries());
    write_file(&args.out, &csv)?;
    if args.sidecar {
        let sidecar = formats::Sidecar {
            family: matrix.family().name().to_string(),
            n: matrix.n_param(),
            params: matrix.params().map(formats::ParamsJson::from_family_params),
        };
        let json = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
        write_file(&sidecar_path_for(&args.out), &json)?;
    }
    Ok(0)
}

pub fn run_check(args: &CheckArgs) -> Result<i32, CliError> {
    let loaded = load_source(&args.source)?;
    let report = GramReport::compute(loaded.rows(), loaded.cols(), loaded.entries())
        .map_err(|e| usage(e.to_string()))?;
    let orthogonal = report.orthogonal_at(args.tol);
    let file = formats::ReportFile {
        family: loaded.family_name(),
        n: loaded.n_param(),
        params: loaded.params().as_ref().map(formats::ParamsJson::from_family_params),
        condition_satisfied: loaded.condition_satisfied(),
        max_offdiag: report.max_offdiag(),
        max_diag_dev: report.max_diag_dev(),
        orthogonal,
        tolerance: args.tol,
    };
    println!("{}", serde_json::to_string_pretty(&file).expect("report serializes"));
    Ok(if orthogonal { 0 } else { 1 })
}

pub fn run_sweep(args: &SweepArgs) -> Result<i32, CliError> {
    let family: TransformFamily = args.family.parse().map_err(|e| usage(format!("{e}")))?;
    if args.n.is_empty() {
        return Err(usage("--n requires at least one size"));
    }
    let report = if family.takes_pqr() {
        let (p_max, q_max, r_max) = match (args.p_max, args.q_max, args.r_max) {
            (Some(p), Some(q), Some(r)) => (p, q, r),
            _ => return Err(usage(format!("family {family} requires --p-max, --q-max, --r-max"))),
        };
        sweep(family, &args.n, p_max, q_max, r_max, args.tol).map_err(|e| usage(e.to_string()))?
    } else if family.takes_dwt_params() {
        if args.p_max.is_some() || args.r_max.is_some() {
            return Err(usage(format!(
                "family {family} sweeps the (1/2, 1/q, q) slice and takes only --q-max"
            )));
        }
        let q_max = args.q_max.ok_or_else(|| usage(format!("family {family} requires --q-max")))?;
        sweep_unified_probe(&args.n, q_max, args.tol).map_err(|e| usage(e.to_string()))?
    } else {
        return Err(usage(format!("family {family} takes no p,q,r and cannot be swept")));
    };
    let csv = formats::write_sweep_csv(&report);
    match &args.out {
        Some(path) => write_file(path, &csv)?,
        None => print!("{csv}"),
    }
    let violations = report.condition_violations().count();
    if violations > 0 {
        eprintln!("{violations} condition-satisfied rows exceed tolerance {:e}", report.tol());
        return Ok(1);
    }
    Ok(0)
}

pub fn run_apply(args: &ApplyArgs) -> Result<i32, CliError> {
    let loaded = load_source(&args.source)?;
    let text = read_file(&args.signal)?;
    let values = formats::parse_vector_csv(&text)
        .map_err(|e| usage(format!("{}: {e}", args.signal.display())))?;

    let expected = if args.inverse { loaded.rows() } else { loaded.cols() };
    if values.len() != expected {
        return Err(usage(format!(
            "length mismatch: matrix needs {expected} values, signal has {}",
            values.len()
        )));
    }

    if args.inverse {
        // Same gate as the library inverse: cached on built matrices,
        // measured directly for file matrices.
        let deviation = match &loaded {
            LoadedMatrix::Built(m) => m.gram_deviation(),
            LoadedMatrix::File { rows, cols, entries, .. } => {
                GramReport::compute(*rows, *cols, entries)
                    .map_err(|e| usage(e.to_string()))?
                    .max_dev()
            }
        };
        if deviation > INVERSE_GATE_TOL {
            eprintln!("matrix is not orthogonal (measured Gram deviation {deviation:e})");
            return Ok(1);
        }
    }

    let output = apply_entries(loaded.rows(), loaded.cols(), loaded.entries(), &values, args.inverse)
        .map_err(|e| usage(e.to_string()))?;
    write_file(&args.out, &formats::write_vector_csv(&output))?;
    Ok(0)
}

pub fn run_bench(args: &BenchArgs) -> Result<i32, CliError> {
    if args.repeats == 0 {
        return Err(usage("--repeats must be at least 1"));
    }
    let (family, n, params) = resolve_family(&args.family)?;

    let start = Instant::now();
    let mut matrix = None;
    for _ in 0..args.repeats {
        matrix = Some(build(family, n, params.as_ref()).map_err(|e| usage(e.to_string()))?);
    }
    let build_ms = start.elapsed().as_secs_f64() * 1e3 / args.repeats as f64;
    let matrix = matrix.expect("repeats >= 1");

    let signal = lcg::test_signal(1, matrix.cols());
    let start = Instant::now();
    for _ in 0..args.repeats {
        std::hint::black_box(forward(&matrix, &signal).map_err(|e| usage(e.to_string()))?);
    }
    let apply_ms_per_signal = start.elapsed().as_secs_f64() * 1e3 / args.repeats as f64;

    #[derive(Serialize)]
    struct BenchOutput {
        build_ms: f64,
        apply_ms_per_signal: f64,
        n: usize,
        repeats: u32,
    }
    let out = BenchOutput {
        build_ms,
        apply_ms_per_signal,
        n: matrix.rows(),
        repeats: args.repeats,
    };
    println!("{}", serde_json::to_string(&out).expect("bench output serializes"));
    Ok(0)
}
