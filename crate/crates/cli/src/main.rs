mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Mismatch(String),
    #[error(transparent)]
    Core(#[from] bgq_core::Error),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) | CliError::Core(bgq_core::Error::TheoryViolation(_)) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "bgq",
    version,
    about = "Dual Brown-Gitler modules and the Q(n,m) extensions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Monomial basis of J(n).
    Basis {
        n: u64,
        #[arg(long)]
        degree: Option<i32>,
    },
    /// Apply Sq^i to a polynomial, e.g. `bgq sq 1 "x1*x2"`.
    Sq { i: u32, poly: String },
    /// Apply the Milnor primitive Q_m to a polynomial.
    Qm { m: u32, poly: String },
    /// Q_m-homology of J:n or Q:n,m.
    Margolis {
        #[arg(long)]
        module: String,
        #[arg(long = "m", default_value_t = 1)]
        m: u32,
    },
    /// Build Q(n,m) and print its dimensions.
    Qmodule {
        n: u64,
        m: u64,
        /// Print the full module dump with its structure maps.
        #[arg(long)]
        dump: bool,
        #[arg(long)]
        a1_free: bool,
    },
    /// Compare the criterion with the homology oracle on a rectangle.
    Scan {
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        mmax: u64,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Ranks k_{m,n} of Q_m-homology of J(n).
    Table {
        #[arg(long = "m")]
        m: u32,
        #[arg(long)]
        nmax: u64,
    },
    /// Write a DOT diagram of the Sq^1, Sq^2, Sq^4, Sq^8 action.
    Diagram {
        #[arg(long)]
        module: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let mut out = String::new();
    let result = commands::run(cli.command, &mut out);
    print!("{out}");
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("bgq: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
