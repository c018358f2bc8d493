//! Command-line front end: manifests in, deterministic reports out.

pub mod commands;
pub mod report;
pub mod selftest;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use levikit_core::parser::parse_manifest;
use levikit_core::{Error, Result};
use serde_json::{json, Value};

pub use report::Report;

#[derive(Debug, Parser)]
#[command(name = "levikit", version, about = "Exact Levi forms, CR types and integrability checks")]
pub struct Cli {
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// CR type, Levi matrix and signature of an embedded or tube manifold at a point.
    Analyze {
        manifest: PathBuf,
        /// Comma-separated complex coordinates, e.g. `1,0` or `1/2+i,0`.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Comma-separated rational conormal coefficients.
        #[arg(long, allow_hyphen_values = true)]
        conormal: Option<String>,
    },
    /// Integrability verdicts for an almost complex structure or almost CR frame.
    Nijenhuis { manifest: PathBuf },
    /// CR type and parametrised Levi form of a homogeneous CR algebra.
    Homogeneous {
        manifest: PathBuf,
        /// `name=value`, repeatable.
        #[arg(long = "specialize", value_name = "NAME=VALUE", allow_hyphen_values = true)]
        specialize: Vec<String>,
    },
    /// Recompute the golden values of the worked examples.
    Selftest,
}

/// Exit status, standard output and standard error of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: &Error) -> Self {
        Self {
            code: exit_code(e),
            stdout: String::new(),
            stderr: format!("error: {}: {e}\n", e.name()),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_validation() {
        1
    } else {
        2
    }
}

/// Runs the command line `args`, program name first.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 { (text, String::new()) } else { (String::new(), text) };
            return Outcome { code, stdout, stderr };
        }
    };
    let command: Vec<String> = args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    match dispatch(&cli) {
        Ok((report, code)) => {
            let report = Report { command, ..report };
            let stdout = if cli.json { report.to_json() } else { report.to_text() };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome::error(&e),
    }
}

fn read(path: &PathBuf) -> Result<(levikit_core::parser::Manifest, String)> {
    let bytes = std::fs::read(path).map_err(|e| Error::IoError {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let text = String::from_utf8(bytes).map_err(|_| Error::ValidationError {
        field: "<file>".into(),
        message: "manifest is not UTF-8".into(),
    })?;
    let digest = report::digest(text.as_bytes());
    Ok((parse_manifest(&text)?, digest))
}

fn dispatch(cli: &Cli) -> Result<(Report, i32)> {
    let with = |digest: String, (result, warnings): (Value, Vec<String>)| Report {
        command: Vec::new(),
        input_digest: Some(digest),
        result,
        warnings,
    };
    match &cli.command {
        Command::Analyze {
            manifest,
            point,
            conormal,
        } => {
            let (m, digest) = read(manifest)?;
            Ok((with(digest, commands::analyze(&m, point.as_deref(), conormal.as_deref())?), 0))
        }
        Command::Nijenhuis { manifest } => {
            let (m, digest) = read(manifest)?;
            Ok((with(digest, commands::nijenhuis(&m)?), 0))
        }
        Command::Homogeneous { manifest, specialize } => {
            let (m, digest) = read(manifest)?;
            Ok((with(digest, commands::homogeneous(&m, specialize)?), 0))
        }
        Command::Selftest => {
            let checks = selftest::run_all();
            let failed = checks.iter().filter(|c| !c.passed).count();
            let report = Report {
                command: Vec::new(),
                input_digest: None,
                result: json!({ "checks": checks, "failed": failed, "total": checks.len() }),
                warnings: Vec::new(),
            };
            Ok((report, if failed == 0 { 0 } else { 2 }))
        }
    }
}
