//! The `acw` command line: argument parsing, dispatch and exit codes.

pub mod commands;
pub mod inputs;
pub mod report;
pub mod suite;

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use acw_core::Error;
use commands::Options;
use report::Report;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_PRECISION: i32 = 4;
pub const EXIT_CAP: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "acw", version, about = "Exact adelic Chern-Weil and Bott residue checks")]
pub struct Cli {
    /// Working precision for truncated series.
    #[arg(long, global = true)]
    pub precision: Option<u32>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Residue of a generalized fraction.
    Residue { file: PathBuf },
    /// Sum of local invariants over the zeros of a scenario.
    Bott {
        file: PathBuf,
        /// Invariant polynomial in c1..cr, e.g. c1^2 or c2.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Compare Sullivan forms with cochains on a simplicial set.
    Derham {
        file: PathBuf,
        #[arg(long)]
        weight_cap: Option<usize>,
    },
    /// Connection, curvature and Chern form components on one chain.
    Chern {
        file: PathBuf,
        #[arg(long)]
        chain: String,
    },
    /// Sum of residues of c1 over the chains of a curve.
    Curve { file: PathBuf },
    /// Run every shipped scenario.
    VerifyAll,
}

/// What a run printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::PrecisionExhausted { .. } => EXIT_PRECISION,
        Error::CapExceeded(_) | Error::CapInsufficient { .. } | Error::MembershipNotFound { .. } | Error::NotFinite { .. } => {
            EXIT_CAP
        }
        Error::IdentityFailed { .. } => EXIT_FAILED,
        _ => EXIT_ERROR,
    }
}

fn read(path: &Path) -> Result<(String, String), Error> {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string());
    let src = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok((name, src))
}

fn execute(cli: &Cli) -> Result<Report, Error> {
    let opts = Options { precision: cli.precision };
    match &cli.command {
        Command::Residue { file } => {
            let (name, src) = read(file)?;
            commands::residue(&name, &src, opts)
        }
        Command::Bott { file, poly } => {
            let (name, src) = read(file)?;
            commands::bott(&name, &src, poly.as_deref(), opts)
        }
        Command::Derham { file, weight_cap } => {
            let (name, src) = read(file)?;
            commands::derham(&name, &src, *weight_cap)
        }
        Command::Chern { file, chain } => {
            let (name, src) = read(file)?;
            commands::chern(&name, &src, chain, opts)
        }
        Command::Curve { file } => {
            let (name, src) = read(file)?;
            commands::curve(&name, &src, opts)
        }
        Command::VerifyAll => Ok(suite::verify_all(opts)),
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => Outcome {
            code: if report.passed { EXIT_PASS } else { EXIT_FAILED },
            stdout: if cli.json { report.render_json() } else { report.render_text() },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
