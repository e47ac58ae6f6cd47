mod args;
mod commands;
mod demo;
mod error;
mod expect;
mod render;
mod source;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use qlat_core::ToleranceConfig;

use crate::args::Cli;
use crate::error::{CliError, CliResult};

fn tolerances(cli: &Cli) -> CliResult<ToleranceConfig> {
    let d = ToleranceConfig::default();
    ToleranceConfig::new(cli.eps.unwrap_or(d.eps_equal), cli.eps_eig.unwrap_or(d.eps_eig))
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn run(cli: &Cli) -> CliResult<u8> {
    let tol = tolerances(cli)?;
    let outcome = commands::run(&cli.command, &tol)?;
    let failed: Vec<String> = outcome
        .failed()
        .iter()
        .map(|c| {
            format!(
                "expectation failed: {} (expected {}, observed {})",
                c.name, c.expected, c.observed
            )
        })
        .collect();
    let out = render::render(&outcome.into_report(), cli.format);
    let mut stdout = std::io::stdout().lock();
    stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush())
        .map_err(|e| CliError::Input(format!("stdout: {e}")))?;
    for line in &failed {
        eprintln!("qlat: {line}");
    }
    Ok(if failed.is_empty() { 0 } else { 4 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("qlat: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
