//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(
    name = "cubinv",
    version,
    about = "Exact invariants, curvature and coefficient positivity for ternary cubics"
)]
pub struct Cli {
    /// Worker threads (default: CUBINV_WORKERS, else all cores).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Leave `runtime_seconds` out of reports, making them byte-reproducible.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Append a run record to this JSON-lines file.
    #[arg(long, global = true)]
    pub record: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the cubic of a spec file and print it in canonical text form.
    Build(BuildArgs),
    /// S, H and the cofactors of a cubic.
    Invariants(CubicSource),
    /// Positivity and sign checks, and the exact identity suite
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Coefficient of one monomial of S, or the closed form of the t-family.
    Coeff(CoeffArgs),
    /// Curvature of the Hessian metric at rational points
    #[command(subcommand)]
    Curvature(CurvatureCommand),
    /// The six-part sum for the coefficient of s [3,0,1; 1,3,0; 0,1,3] in S.
    Appendix(AppendixArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct BuildArgs {
    /// Spec file: {"d": [d1, d2, d3], "factors": [[a, b, c] | "symbolic", ...]}.
    pub spec: PathBuf,
}

#[derive(Debug, Clone, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct CubicSource {
    /// Cubic file in canonical text form (as written by `build`) or an expression.
    pub cubic: Option<PathBuf>,
    /// Cubic given inline, e.g. "x1^3 + x2^3 + x3^3 + 6*lambda*x1*x2*x3".
    #[arg(long)]
    pub expr: Option<String>,
    /// Build the cubic from a spec file.
    #[arg(long)]
    pub spec: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Exact identities on seeded random integer cubics.
    Identities(IdentitiesArgs),
    /// Non-negativity of every coefficient of S.
    Positivity(PositivityArgs),
    /// Non-negativity of every coefficient of 9H^2 - 6^6 S F^2.
    Bound(BoundArgs),
    /// Coefficient signs of the cofactors and of H.
    Signs(SignsArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct IdentitiesArgs {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 2024)]
    pub seed: u64,
    /// Normalised coefficients are drawn from [-range, range].
    #[arg(long, default_value_t = 9)]
    pub range: i64,
}

#[derive(Debug, Args, Serialize)]
pub struct PositivityArgs {
    /// Degrees, e.g. "3,3,3".
    #[arg(long)]
    pub d: String,
    /// Skip monomials containing a fourth power of a single variable.
    #[arg(long)]
    pub no_fourth_powers: bool,
    /// Compare every type against the full expansion of S.
    #[arg(long)]
    pub cross_check: bool,
    /// Directory for shard checkpoints and the run log; reruns resume.
    #[arg(long)]
    #[serde(skip)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = crate::drivers::DEFAULT_SHARD_SIZE)]
    pub shard_size: usize,
    /// Allow runs with some d_p >= 4.
    #[arg(long)]
    #[serde(skip)]
    pub long: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct BoundArgs {
    #[arg(long)]
    pub d: String,
    #[arg(long)]
    pub no_fourth_powers: bool,
    /// Allow runs with four or more factor triples.
    #[arg(long)]
    #[serde(skip)]
    pub long: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct SignsArgs {
    #[arg(long)]
    pub d: String,
    /// Allow runs with some d_p >= 4.
    #[arg(long)]
    #[serde(skip)]
    pub long: bool,
}

#[derive(Debug, Args, Serialize)]
pub struct CoeffArgs {
    /// Exponent matrix, rows separated by ';', e.g. "3,0,1;1,3,0;0,1,3".
    #[arg(long, conflicts_with = "closed_form", required_unless_present = "closed_form")]
    pub matrix: Option<String>,
    /// Repeat the columns of the matrix this many times.
    #[arg(long, default_value_t = 1)]
    pub replicate: usize,
    /// Degrees; inferred from the row sums when omitted.
    #[arg(long)]
    pub d: Option<String>,
    /// Closed form of the t-family, checked against the factorisation.
    #[arg(long)]
    pub closed_form: Option<u32>,
    /// Compare with the full expansion of S.
    #[arg(long)]
    pub cross_check: bool,
    /// Also report the contribution of each cofactor pair.
    #[arg(long)]
    pub breakdown: bool,
}

#[derive(Debug, Subcommand)]
pub enum CurvatureCommand {
    /// Metric data, level-set curvature and Ricci tensor at one point.
    At(AtArgs),
    /// The same on a grid in the positive octant.
    Scan(ScanArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct AtArgs {
    #[command(flatten)]
    pub source: CubicSource,
    /// Point, e.g. "1,1/2,3".
    #[arg(long)]
    pub x: String,
    /// Tangent vectors for the sectional identity.
    #[arg(long, requires = "eta")]
    pub xi: Option<String>,
    #[arg(long, requires = "xi")]
    pub eta: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct ScanArgs {
    #[command(flatten)]
    pub source: CubicSource,
    /// Points per axis.
    #[arg(long, default_value_t = 5)]
    pub grid: u32,
    /// Coordinates are k / denominator for k = 1..=grid.
    #[arg(long, default_value_t = 1)]
    pub denominator: u32,
}

#[derive(Debug, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct AppendixArgs {
    #[arg(long)]
    pub s: Option<u32>,
    /// Inclusive range "a..b".
    #[arg(long)]
    pub range: Option<String>,
}
