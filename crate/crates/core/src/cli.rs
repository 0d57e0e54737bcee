//! Command-line front end. The `andrasfai` binary is a thin wrapper around [`run`].
//!
//! Exit codes: 0 when every verdict passed or recorded an erratum, 1 when
//! any verdict failed, 2 for usage errors (bad flags, `k` out of range,
//! unwritable output path).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::circulant::andrasfai;
use crate::closed_form::spectrum_closed_form;
use crate::error::{Error, Result};
use crate::export::{export_graph, GraphFormat};
use crate::spectrum_io;
use crate::verifier::{run_sweep_with, ClaimId, SweepOptions, Tolerances, DEFAULT_ORACLE_LIMIT};

/// Environment variable overriding the clustering tolerance.
pub const TOL_CLUSTER_ENV: &str = "SPECTRA_TOL_CLUSTER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "andrasfai",
    version,
    about = "Spectra of Andrásfai graphs And(k) and checks of their spectral claims"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form spectrum x_0 … x_{n-1} of And(k)
    Spectrum {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify every claim for a single k
    Verify {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        check: CheckArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Verify every claim for k in [from, to]
    Sweep {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        #[command(flatten)]
        check: CheckArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Export And(k) as DOT, an edge list or JSON
    Export {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
    Dot,
    EdgeList,
    Table,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Defaults to `table` on a terminal and `json` otherwise (`dot` for export)
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// Skip the Jacobi oracle entirely
    #[arg(long)]
    no_oracle: bool,
    /// Largest vertex count handed to the oracle
    #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
    oracle_limit: usize,
    #[arg(long)]
    tol_sym: Option<f64>,
    #[arg(long)]
    tol_cluster: Option<f64>,
    /// Corrupt one claim's prediction (exercises the failure exit code)
    #[arg(long, hide = true)]
    falsify: Option<String>,
}

struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
///
/// `interactive` selects the default output format when `--format` is absent.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, interactive: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, interactive) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, interactive: bool) -> std::result::Result<i32, Usage> {
    let default_format = if interactive { OutputFormat::Table } else { OutputFormat::Json };
    match command {
        Command::Spectrum { k, out: o } => {
            let spectrum = spectrum_closed_form(k)?;
            let text = match o.format.unwrap_or(default_format) {
                OutputFormat::Json => spectrum_io::to_json(&spectrum)?,
                OutputFormat::Csv => spectrum_io::to_csv(&spectrum),
                OutputFormat::Table => spectrum_io::to_table(&spectrum),
                other => return Err(Usage(format!("spectrum cannot be written as {other:?}"))),
            };
            emit(&text, o.output.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Export { k, out: o } => {
            let graph = andrasfai(k)?;
            let format = match o.format.unwrap_or(OutputFormat::Dot) {
                OutputFormat::Dot => GraphFormat::Dot,
                OutputFormat::EdgeList => GraphFormat::EdgeList,
                OutputFormat::Json => GraphFormat::Json,
                other => return Err(Usage(format!("graphs cannot be exported as {other:?}"))),
            };
            emit(&export_graph(&graph, format), o.output.as_ref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { k, check, out: o } => verify(k, k, check, o, default_format, out),
        Command::Sweep { from, to, check, out: o } => verify(from, to, check, o, default_format, out),
    }
}

fn verify(
    k_min: usize,
    k_max: usize,
    check: CheckArgs,
    o: OutputArgs,
    default_format: OutputFormat,
    out: &mut dyn Write,
) -> std::result::Result<i32, Usage> {
    if k_min < 2 {
        return Err(Usage(format!(
            "spectral claims are only checked for k >= 2 (And(1) = K_2 is excluded), got k = {k_min}"
        )));
    }
    let options = SweepOptions {
        oracle_limit: if check.no_oracle { 0 } else { check.oracle_limit },
        tolerances: tolerances(&check)?,
        falsify: check.falsify.as_deref().map(str::parse::<ClaimId>).transpose()?,
    };
    let report = run_sweep_with(k_min, k_max, &options)?;
    let text = match o.format.unwrap_or(default_format) {
        OutputFormat::Json => report.to_json()?,
        OutputFormat::Table => report.to_table(),
        other => return Err(Usage(format!("reports cannot be written as {other:?}"))),
    };
    emit(&text, o.output.as_ref(), out)?;
    Ok(if report.exit_code() == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn tolerances(check: &CheckArgs) -> Result<Tolerances> {
    let mut tol = Tolerances::default();
    if let Ok(raw) = std::env::var(TOL_CLUSTER_ENV) {
        tol.tol_cluster =
            raw.trim().parse().map_err(|_| Error::Parse(format!("{TOL_CLUSTER_ENV}={raw:?} is not a number")))?;
    }
    if let Some(t) = check.tol_sym {
        tol.tol_sym = t;
    }
    if let Some(t) = check.tol_cluster {
        tol.tol_cluster = t;
    }
    tol.validate()?;
    Ok(tol)
}

fn emit(text: &str, path: Option<&PathBuf>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("cannot write {}: {e}", path.display())))),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}
