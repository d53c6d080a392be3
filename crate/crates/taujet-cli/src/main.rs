//! `taujet` — exact construction and verification of recursive scale
//! cascades for the scale-invariant equation `t dτ/dt = τ`.
//!
//! Exit codes: 0 success, 1 invariant failure (a verify check failed),
//! 2 usage error, 3 resource limit (dense depth cap), 4 I/O error.

use std::process::ExitCode;

use clap::Parser;

mod commands;
mod config;
mod report;
mod verify;

use config::{Cli, Command};
use report::{render, write_out, ConfigEcho, Report, VerifyCliReport};

/// Failure modes that abort a run, in exit-code order.
#[derive(Debug)]
pub enum CliError {
    /// Invalid parameters or parameter combinations — exit 2.
    Usage(String),
    /// A computation over the configured resource limits — exit 3.
    Resource(String),
    /// The report could not be delivered — exit 4.
    Io(String),
}

impl CliError {
    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Resource(m) | CliError::Io(m) => m,
        }
    }

    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Io(_) => 4,
        }
    }
}

impl From<taujet_core::Error> for CliError {
    fn from(err: taujet_core::Error) -> Self {
        match err {
            taujet_core::Error::Domain(m) => CliError::Usage(m),
            taujet_core::Error::Resource(m) => CliError::Resource(m),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.code())
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Jets(args) => emit(commands::jets(args)?, args),
        Command::Verify(args) => {
            let (checks, overall) = verify::run_suite(args)?;
            let report = VerifyCliReport {
                config: ConfigEcho::new("verify", args),
                checks,
                overall: if overall { "pass" } else { "fail" }.to_string(),
            };
            let text = render(&report, args.format)?;
            write_out(&text, args.output.as_deref())?;
            Ok(if overall {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Residual(args) => emit(commands::residual(args)?, args),
        Command::JumpScan(scan_args) => emit(commands::jump_scan(scan_args)?, &scan_args.common),
        Command::Parity(parity_args) => emit(commands::parity(parity_args)?, &parity_args.common),
        Command::Generation(args) => emit(commands::generation(args)?, args),
        Command::Telescope(args) => emit(commands::telescope(args)?, args),
        Command::Compare(compare_args) => {
            emit(commands::compare(compare_args)?, &compare_args.common)
        }
        Command::Schedule(args) => emit(commands::schedule(args)?, args),
    }
}

fn emit<R: Report>(report: R, args: &config::CommonArgs) -> Result<ExitCode, CliError> {
    let text = render(&report, args.format)?;
    write_out(&text, args.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}
