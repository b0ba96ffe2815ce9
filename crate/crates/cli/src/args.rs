use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use dtt_core::Rational;

#[derive(Parser)]
#[command(
    name = "dtt",
    version,
    about = "Discrete trigonometric transform matrices: generate, check, sweep, apply, bench"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate a transform matrix as CSV
    Gen(GenArgs),
    /// Measure orthogonality of a matrix and emit a JSON report
    Check(CheckArgs),
    /// Sweep a parameterized family over a grid and tabulate deviations
    Sweep(SweepArgs),
    /// Apply a transform (or its transpose inverse) to a signal
    Apply(ApplyArgs),
    /// Time matrix construction and application
    Bench(BenchArgs),
}

/// Family selection plus per-family parameters.
#[derive(Args, Clone)]
pub struct FamilyArgs {
    /// Family tag: dct1..dct4, gen-dct2, gen-dct3, gen-dct4, new-dct,
    /// new-dst, new-sct, dwt1..dwt4, dwt-unified, gen-dwt-cas, gen-dwt4
    #[arg(long)]
    pub family: Option<String>,

    /// Size parameter N (matrix is NxN except dct1: (N+1)x(N+1) and
    /// new-sct: (2N+1)x(2N+1))
    #[arg(long)]
    pub n: Option<u64>,

    /// Kernel parameter p (gen-dct*, gen-dwt-cas, gen-dwt4)
    #[arg(long)]
    pub p: Option<u64>,

    /// Kernel parameter q
    #[arg(long)]
    pub q: Option<u64>,

    /// Kernel parameter r
    #[arg(long)]
    pub r: Option<u64>,

    /// Row phase offset as a rational literal like 1/2 (dwt-unified)
    #[arg(long)]
    pub alpha: Option<Rational>,

    /// Column phase offset as a rational literal like 1/2 (dwt-unified)
    #[arg(long)]
    pub beta: Option<Rational>,

    /// Frequency multiplier (dwt-unified)
    #[arg(long)]
    pub gamma: Option<u64>,
}

/// Where the matrix comes from: a CSV file or a family build.
#[derive(Args, Clone)]
pub struct SourceArgs {
    /// Path to a matrix CSV (reads <path>.json sidecar when present)
    #[arg(long)]
    pub matrix: Option<PathBuf>,

    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// Output path for the matrix CSV
    #[arg(long)]
    pub out: PathBuf,

    /// Also write family metadata to <out>.json
    #[arg(long)]
    pub sidecar: bool,
}

#[derive(Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Orthogonality tolerance on the largest Gram deviation
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
}

#[derive(Args)]
pub struct SweepArgs {
    /// Family to sweep: gen-dct2/3/4, gen-dwt-cas, gen-dwt4, or
    /// dwt-unified for the (1/2, 1/q, q) probe slice
    #[arg(long)]
    pub family: String,

    /// Comma-separated list of sizes, e.g. 4,5,6
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<u64>,

    /// Largest p to sweep
    #[arg(long = "p-max")]
    pub p_max: Option<u64>,

    /// Largest q to sweep
    #[arg(long = "q-max")]
    pub q_max: Option<u64>,

    /// Largest r to sweep
    #[arg(long = "r-max")]
    pub r_max: Option<u64>,

    /// Tolerance used for the condition-satisfied verdicts
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    /// Output path for the CSV table (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct ApplyArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    /// Signal CSV, one value per line
    #[arg(long)]
    pub signal: PathBuf,

    /// Apply the transpose (inverse) action instead of the forward one
    #[arg(long)]
    pub inverse: bool,

    /// Output path for the transformed vector CSV
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub family: FamilyArgs,

    /// Number of build/apply repetitions to average over
    #[arg(long)]
    pub repeats: u32,
}
