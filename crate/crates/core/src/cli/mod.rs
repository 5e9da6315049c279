//! Command-line front end and the text formats it reads and writes.
//!
//! Exit codes: 0 on success or a valid certificate, 1 on an invalid
//! certificate, 2 on usage, parse or input errors.

pub mod format;
pub mod qform;
pub mod report;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use thiserror::Error;

pub use format::{
    parse_int_matrix, parse_matrix, parse_trace, serialize_int_matrix, serialize_matrix,
    serialize_trace,
};
pub use qform::parse_quadratic_form;
pub use report::{blowup_report, BlowupReport, ReportError};

use crate::cct::{cct_search, icct_trace, reduce_binary_form, CctError};
use crate::goeritz::{goeritz_matrix, parse_diagram, DiagramError};
use crate::linalg::{determinant, inertia};
use crate::moves::{verify_trace, TraceStats};
use crate::reducer::{four_squares, reduce, ReduceError, Target};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("line {line}: bad rational '{token}'")]
    BadRational { line: usize, token: String },
    #[error("unknown variable '{name}' (expected x1, x2, ...)")]
    UnknownVariable { name: String },
    #[error("term '{term}' is not quadratic")]
    Degree { term: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Diagram { path: String, source: DiagramError },
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Cct(#[from] CctError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Parser)]
#[command(name = "kinkeq", version, about = "Exact kink-equivalence of symmetric matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the inertia (n_plus, n_minus, n_zero) of a matrix file.
    Inertia { file: PathBuf },
    /// Print the exact determinant of a matrix file.
    Det { file: PathBuf },
    /// Reduce a matrix to a definite or semidefinite representative.
    Reduce {
        file: PathBuf,
        /// pos, neg, pos-semi or neg-semi
        #[arg(long)]
        target: Target,
        /// Write the trace here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay and check one or more trace certificates.
    Verify {
        #[arg(required = true)]
        traces: Vec<PathBuf>,
    },
    /// Count moves by kind in a valid trace.
    Stats { trace: PathBuf },
    /// Write K as a sum of four squares.
    Foursquares { k: BigInt },
    /// Gram factorizations G = C Cᵀ.
    #[command(subcommand)]
    Cct(CctCommand),
    /// Goeritz matrix of a diagram file.
    Goeritz { file: PathBuf },
    /// Gram matrix of a quadratic form expression.
    Qform { expr: String },
    /// Arithmetic reports.
    #[command(subcommand)]
    Report(ReportCommand),
}

#[derive(Debug, Subcommand)]
pub enum CctCommand {
    /// Exhaustive search for an integer C with C Cᵀ = G.
    Search { file: PathBuf },
    /// Trace from I + C Cᵀ to -(I + Cᵀ C) for an integer matrix file `mat R C`.
    Icct { cfile: PathBuf },
    /// Gauss-reduce a positive-definite 2x2 matrix.
    Reduce2 { file: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum ReportCommand {
    /// Blow-up counts for a unimodular form, with verified traces.
    Blowup { file: PathBuf },
}

/// Result of one command invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Output::ok(text)
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(command: Command) -> Output {
    match execute(command) {
        Ok(out) => out,
        Err(e) => Output {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {}\n", e),
        },
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn load_matrix(path: &Path) -> Result<crate::SymMatrix, CliError> {
    parse_matrix(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn load_trace(path: &Path) -> Result<crate::Trace, CliError> {
    parse_trace(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn execute(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Inertia { file } => {
            let i = inertia(&load_matrix(&file)?);
            Ok(Output::ok(format!("{}\n", i)))
        }
        Command::Det { file } => {
            let d = determinant(&load_matrix(&file)?);
            Ok(Output::ok(format!("{}\n", d)))
        }
        Command::Reduce { file, target, out } => {
            let g = load_matrix(&file)?;
            let trace = reduce(&g, target)?;
            let text = serialize_trace(&trace);
            match out {
                Some(path) => {
                    std::fs::write(&path, &text).map_err(|source| CliError::Io { path, source })?;
                    let mut s = serialize_matrix(&trace.end);
                    write!(s, "{}", TraceStats::count(&trace.moves)).unwrap();
                    Ok(Output::ok(s))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::Verify { traces } => verify_files(&traces),
        Command::Stats { trace } => {
            let t = load_trace(&trace)?;
            let report = verify_trace(&t);
            match report.failure {
                Some(f) => Ok(Output {
                    code: 1,
                    stdout: String::new(),
                    stderr: format!("INVALID: {}\n", f),
                }),
                None => Ok(Output::ok(TraceStats::count(&t.moves).to_string())),
            }
        }
        Command::Foursquares { k } => {
            if k < BigInt::from(0) {
                return Err(CliError::Usage("K must be nonnegative".into()));
            }
            let [a, b, c, d] = four_squares(&k);
            Ok(Output::ok(format!("{} {} {} {}\n", a, b, c, d)))
        }
        Command::Cct(CctCommand::Search { file }) => {
            let g = load_matrix(&file)?;
            match cct_search(&g)? {
                Some(f) => Ok(Output::ok(serialize_int_matrix(f.matrix()))),
                None => Ok(Output::ok("NONE\n".into())),
            }
        }
        Command::Cct(CctCommand::Icct { cfile }) => {
            let c = parse_int_matrix(&read(&cfile)?).map_err(|source| CliError::Parse {
                path: cfile.display().to_string(),
                source,
            })?;
            Ok(Output::ok(serialize_trace(&icct_trace(&c))))
        }
        Command::Cct(CctCommand::Reduce2 { file }) => {
            let g = load_matrix(&file)?;
            let (r, e) = reduce_binary_form(&g)?;
            let mut s = serialize_matrix(&r);
            s.push_str(&serialize_int_matrix(&e));
            Ok(Output::ok(s))
        }
        Command::Goeritz { file } => {
            let d = parse_diagram(&read(&file)?).map_err(|source| CliError::Diagram {
                path: file.display().to_string(),
                source,
            })?;
            Ok(Output::ok(serialize_matrix(&goeritz_matrix(&d))))
        }
        Command::Qform { expr } => {
            let g = parse_quadratic_form(&expr).map_err(|source| CliError::Parse {
                path: "<expr>".into(),
                source,
            })?;
            Ok(Output::ok(serialize_matrix(&g)))
        }
        Command::Report(ReportCommand::Blowup { file }) => {
            let r = blowup_report(&load_matrix(&file)?)?;
            Ok(Output::ok(r.to_string()))
        }
    }
}

/// Verifies each file on its own thread; output keeps argument order.
fn verify_files(paths: &[PathBuf]) -> Result<Output, CliError> {
    let traces = paths
        .iter()
        .map(|p| load_trace(p))
        .collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = traces
            .iter()
            .map(|t| s.spawn(move || verify_trace(t)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verifier thread panicked"))
            .collect()
    });

    let mut stdout = String::new();
    let mut all_valid = true;
    for (path, report) in paths.iter().zip(&reports) {
        if paths.len() > 1 {
            writeln!(stdout, "== {}", path.display()).unwrap();
        }
        write!(stdout, "{}", report).unwrap();
        all_valid &= report.is_valid();
    }
    Ok(Output {
        code: if all_valid { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    })
}
