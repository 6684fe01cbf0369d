//! `skein`: evaluate, convert and tabulate arrow diagrams from the command line.

mod check;
mod convert;
mod error;
mod eval;
mod input;
mod report;
mod tables;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use skein_core::diagram::crossing_cap_from_env;

use error::CliError;
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "skein", version, about = "Kauffman bracket and HOMFLYPT skein modules of the solid torus and lens spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Write the JSON report to this file.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Largest crossing count accepted by state sums. Defaults to
    /// SKEIN_CROSSING_CAP, then 24.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,
}

impl Common {
    pub fn cap(&self) -> usize {
        self.cap.unwrap_or_else(crossing_cap_from_env)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a diagram in the skein module of the solid torus or of L(p,1).
    Eval(eval::EvalArgs),
    /// Convert between classical, arrow and mixed diagrams.
    Convert(convert::ConvertArgs),
    /// Compute a change-of-basis or presentation table with its certificate.
    Tables(tables::TablesArgs),
    /// Run a seeded property suite.
    Check(check::CheckArgs),
}

fn run(cli: &Cli) -> Report {
    let c = &cli.common;
    let (name, config, outcome) = match &cli.command {
        Command::Eval(a) => ("eval", eval::config(a, c), eval::run(a, c)),
        Command::Convert(a) => ("convert", convert::config(a, c), convert::run(a, c)),
        Command::Tables(a) => ("tables", tables::config(a, c), tables::run(a, c)),
        Command::Check(a) => ("check", check::config(a, c), check::run(a, c)),
    };
    match outcome {
        Ok((result, text)) => Report::new(name, config, result, text),
        Err(Outcome::Failed { result, text, error }) => Report::new(name, config, result, text).fail_with(error),
        Err(Outcome::Stopped(e)) => Report::error(name, config, &e),
    }
}

/// How a command can end short of success.
pub enum Outcome {
    /// Stopped before producing a result.
    Stopped(CliError),
    /// Produced a result that failed its certificate.
    Failed { result: serde_json::Value, text: String, error: CliError },
}

impl<E: Into<CliError>> From<E> for Outcome {
    fn from(e: E) -> Self {
        Outcome::Stopped(e.into())
    }
}

/// Result value and terminal text of a command.
pub type CommandResult = Result<(serde_json::Value, String), Outcome>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(&cli);
    print!("{}", report.text);
    if let Some(path) = &cli.common.out {
        if let Err(e) = std::fs::write(path, report.json_text()) {
            eprintln!("skein: cannot write {}: {e}", path.display());
            return ExitCode::from(1);
        }
    }
    match &report.failure {
        None => ExitCode::SUCCESS,
        Some((code, msg)) => {
            eprintln!("skein: {msg}");
            ExitCode::from(*code as u8)
        }
    }
}
