use std::ffi::OsString;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use polyrec_core::transform::SampleBox;
use polyrec_core::{Error, Polytope, Rational};

use crate::commands::{self, Done, Failure};
use crate::input::{self, InputError};
use crate::report::RunReport;

pub const EXIT_VERIFIED: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_BAD_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "polyrec", version, about = "Exact integer point transforms, recursions and Schur polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Record wall-clock time in the report (makes output non-deterministic).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Debug, Args)]
struct PolytopeArg {
    /// Polytope JSON file: {"dim": n, "vertices": [[...], ...]}.
    #[arg(short = 'p', long = "polytope", alias = "p", value_name = "FILE")]
    polytope: PathBuf,
}

#[derive(Debug, Args)]
struct OffsetArg {
    /// Offset polytope Q (default: the origin).
    #[arg(long, value_name = "FILE")]
    q: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ShapeArg {
    /// Shape JSON file: {"lambda": [...], "mu": [...], "n": n}.
    #[arg(long, value_name = "FILE")]
    shape: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Integer point transform σ_P.
    Transform(PolytopeArg),
    /// Vertex recursion for σ_{kP+Q} with minimality residuals.
    RecursionVerify {
        #[command(flatten)]
        p: PolytopeArg,
        #[command(flatten)]
        q: OffsetArg,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
    },
    /// Dropped-vertex residuals and the sequence σ_{kP+Q}.
    Minimality {
        #[command(flatten)]
        p: PolytopeArg,
        #[command(flatten)]
        q: OffsetArg,
        #[arg(long, default_value_t = 5)]
        kmax: usize,
    },
    /// Pointwise indicator recursion on a half-integer grid.
    IndicatorCheck {
        #[command(flatten)]
        p: PolytopeArg,
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Lower corner of the sample cube (default: bounding box of (k+r)P).
        #[arg(long, allow_hyphen_values = true, requires = "hi")]
        lo: Option<i64>,
        #[arg(long, allow_hyphen_values = true, requires = "lo")]
        hi: Option<i64>,
    },
    /// Lattice point counts of kP and the (X-1)^{dim+1} annihilation check.
    Ehrhart {
        #[command(flatten)]
        p: PolytopeArg,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
    },
    /// Brion's identity for a polytope with simplicial vertex cones.
    Brion(PolytopeArg),
    /// Skew Schur polynomial.
    Schur(ShapeArg),
    /// Vertices of the Gelfand-Tsetlin polytope with their weights.
    GtVertices(ShapeArg),
    /// Kostka coefficient for a weight.
    Kostka {
        #[command(flatten)]
        shape: ShapeArg,
        /// Comma-separated weight (default: the shape file's "weight").
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        weight: Option<Vec<i64>>,
    },
    /// Dominant tableau weights versus Gelfand-Tsetlin vertex weights.
    Counterexample(ShapeArg),
    /// Vertex-weight recursion for s_{κ+lλ/ν+lμ}.
    SchurRecursion {
        #[command(flatten)]
        shape: ShapeArg,
        /// Last index (default: the shape file's "l_max").
        #[arg(long)]
        lmax: Option<usize>,
    },
    /// Reproduces the counterexample and the non-lattice offset instance.
    ReproPaper,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Transform(_) => "transform",
            Command::RecursionVerify { .. } => "recursion-verify",
            Command::Minimality { .. } => "minimality",
            Command::IndicatorCheck { .. } => "indicator-check",
            Command::Ehrhart { .. } => "ehrhart",
            Command::Brion(_) => "brion",
            Command::Schur(_) => "schur",
            Command::GtVertices(_) => "gt-vertices",
            Command::Kostka { .. } => "kostka",
            Command::Counterexample(_) => "counterexample",
            Command::SchurRecursion { .. } => "schur-recursion",
            Command::ReproPaper => "repro-paper",
        }
    }
}

/// Result of one invocation. `stdout` is empty when `--out` was written.
#[derive(Debug)]
pub struct Outcome {
    pub code: u8,
    pub report: Option<RunReport>,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn bad_input(message: String) -> Self {
        Outcome { code: EXIT_BAD_INPUT, report: None, stdout: String::new(), stderr: message }
    }
}

fn offset(q: &OffsetArg, p: &Polytope) -> Result<Polytope, InputError> {
    match &q.q {
        Some(path) => input::load_polytope(path),
        None => Ok(Polytope::point(vec![Rational::from_integer(0.into()); p.ambient_dim()])),
    }
}

fn dispatch(command: &Command) -> Result<Done, Failure> {
    let load = |a: &PolytopeArg| input::load_polytope(&a.polytope);
    let shape = |a: &ShapeArg| -> Result<_, InputError> { input::load_shape(&a.shape)?.skew_shape() };
    match command {
        Command::Transform(a) => commands::transform(&load(a)?),
        Command::RecursionVerify { p, q, kmax } => {
            let p = load(p)?;
            commands::recursion_verify(&p, &offset(q, &p)?, *kmax)
        }
        Command::Minimality { p, q, kmax } => {
            let p = load(p)?;
            commands::minimality(&p, &offset(q, &p)?, *kmax)
        }
        Command::IndicatorCheck { p, k, lo, hi } => {
            let p = load(p)?;
            let sample = match (lo, hi) {
                (Some(lo), Some(hi)) => SampleBox::cube(p.ambient_dim(), *lo, *hi),
                _ => commands::default_box(&p, *k)?,
            };
            commands::indicator_check(&p, *k, &sample)
        }
        Command::Ehrhart { p, kmax } => commands::ehrhart(&load(p)?, *kmax),
        Command::Brion(a) => commands::brion(&load(a)?),
        Command::Schur(a) => commands::schur(&shape(a)?),
        Command::GtVertices(a) => commands::gt_vertices(&shape(a)?),
        Command::Kostka { shape: a, weight } => {
            let file = input::load_shape(&a.shape)?;
            let w = weight.clone().or_else(|| file.weight.clone()).ok_or_else(|| {
                InputError::new("kostka", "no weight given: pass --weight or set field `weight`")
            })?;
            commands::kostka_number(&file.skew_shape()?, &w)
        }
        Command::Counterexample(a) => commands::counterexample(&shape(a)?),
        Command::SchurRecursion { shape: a, lmax } => {
            let file = input::load_shape(&a.shape)?;
            let l_max = lmax.or(file.l_max).ok_or_else(|| {
                InputError::new("schur-recursion", "no l_max given: pass --lmax or set field `l_max`")
            })?;
            commands::schur_recursion(&file, l_max)
        }
        Command::ReproPaper => commands::repro(),
    }
}

fn write_out(path: &Path, text: &str) -> Result<(), InputError> {
    std::fs::write(path, text).map_err(|e| InputError::new(path.display().to_string(), e.to_string()))
}

/// Runs the CLI on `argv` (program name first) without touching the
/// process's stdout or exit status.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        // --help and --version land here too, on stdout with status 0
        Err(e) if !e.use_stderr() => {
            return Outcome { code: EXIT_VERIFIED, report: None, stdout: e.render().to_string(), stderr: String::new() }
        }
        Err(e) => return Outcome::bad_input(e.render().to_string()),
    };

    let started = Instant::now();
    let done = match dispatch(&cli.command) {
        Ok(done) => done,
        Err(Failure::Input(e)) => return Outcome::bad_input(format!("error: {e}\n")),
        Err(Failure::Core(e)) => {
            let mut out = Outcome::bad_input(format!("error: {}: {}\n", cli.command.name(), describe(&e)));
            if is_verification_failure(&e) {
                out.code = EXIT_FAILED;
            }
            return out;
        }
    };
    let report = RunReport {
        command: cli.command.name().into(),
        inputs: done.inputs,
        verified: done.verified,
        artifacts: done.artifacts,
        elapsed: cli.timing.then(|| format!("{:.3}s", started.elapsed().as_secs_f64())),
    };
    let rendered = if cli.json { report.to_json() } else { done.text.unwrap_or_else(|| report.to_text()) };
    let code = if report.verified { EXIT_VERIFIED } else { EXIT_FAILED };
    let mut outcome = Outcome { code, report: None, stdout: String::new(), stderr: String::new() };
    match &cli.out {
        Some(path) => {
            if let Err(e) = write_out(path, &rendered) {
                return Outcome::bad_input(format!("error: {e}\n"));
            }
        }
        None => outcome.stdout = rendered,
    }
    outcome.report = Some(report);
    outcome
}

/// Errors that mean an identity did not hold, as opposed to unusable input.
fn is_verification_failure(e: &Error) -> bool {
    matches!(
        e,
        Error::RecursionFailure { .. }
            | Error::InconsistentResidual { .. }
            | Error::IndicatorMismatch { .. }
            | Error::SchurMismatch
    )
}

fn describe(e: &Error) -> String {
    match e {
        Error::NonSimplicialCone { .. } => format!("{e}; only simple polytopes are supported"),
        _ => e.to_string(),
    }
}
