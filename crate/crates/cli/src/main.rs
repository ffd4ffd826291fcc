//! `hhcalc`: Hochschild cohomology of quadratic string algebras from the
//! command line.

mod commands;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hochschild_core::format::FormatError;
use hochschild_core::{FieldError, GerstenhaberError, HypothesisError};
use thiserror::Error;

#[derive(Parser, Debug)]
#[command(name = "hhcalc", version, about = "Exact Hochschild cohomology of quadratic string algebras")]
struct Cli {
    /// Machine-readable JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct FieldArg {
    /// Characteristic of the ground field (0 or a prime); overrides the file's `char:` line.
    #[arg(long = "char", value_name = "P")]
    characteristic: Option<u64>,
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct Mode {
    /// Only the cochain-complex computation.
    #[arg(long)]
    oracle: bool,
    /// Only the closed-form counts.
    #[arg(long)]
    formula: bool,
    /// Both, with an agreement column (default).
    #[arg(long)]
    both: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Cup,
    Bracket,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the string, gentle, connectivity and finiteness conditions.
    Validate { file: PathBuf },
    /// Dimensions of HH^0..HH^N.
    Dims {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_degree: usize,
        #[command(flatten)]
        field: FieldArg,
        #[command(flatten)]
        mode: Mode,
    },
    /// Cup products of cohomology basis classes in degrees N and M.
    Cup {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["N", "M"], required = true)]
        deg: Vec<usize>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Brackets of cohomology basis classes in degrees N and M.
    Bracket {
        file: PathBuf,
        #[arg(long, num_args = 2, value_names = ["N", "M"], required = true)]
        deg: Vec<usize>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Search for a verified non-vanishing product.
    Witness {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_degree: usize,
        #[arg(long, value_enum, default_value = "cup")]
        kind: Kind,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Run every invariant suite on this quiver.
    Selftest {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        field: FieldArg,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{source}")]
    Format { path: PathBuf, source: FormatError },
    #[error("{0}")]
    Usage(String),
    #[error("invalid characteristic: {0}")]
    Field(#[from] FieldError),
    #[error(transparent)]
    Hypothesis(#[from] HypothesisError),
    #[error(transparent)]
    Gerstenhaber(#[from] GerstenhaberError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Format { .. } | CliError::Usage(_) | CliError::Field(_) => 2,
            CliError::Hypothesis(_) => 3,
            CliError::Gerstenhaber(GerstenhaberError::Complex(_)) => 1,
            CliError::Gerstenhaber(_) => 3,
        }
    }
}

/// What a command produced: text for stdout and the exit code.
pub struct Outcome {
    pub text: String,
    pub code: u8,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, cli.json) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("hhcalc: {e}");
            if let CliError::Hypothesis(HypothesisError::NotString(report)) = &e {
                for v in &report.violations {
                    eprintln!("  {}", commands::describe(v));
                }
            }
            ExitCode::from(e.exit_code())
        }
    }
}
