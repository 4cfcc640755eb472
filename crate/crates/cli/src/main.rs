//! `cayrec`: counting sequences, tables, brute-force verification,
//! bijection pictures and identity checks for recurrent functional digraphs.
//!
//! Exit status: 0 success, 1 verification mismatch, 2 usage error,
//! 3 enumeration budget exceeded.

mod args;
mod commands;
mod output;

use std::io;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

pub enum Failure {
    Usage(String),
    Budget(String),
    Mismatch(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Budget(m) | Failure::Mismatch(m) => m,
        }
    }
}

impl From<cayrec_core::Error> for Failure {
    fn from(e: cayrec_core::Error) -> Self {
        match e {
            cayrec_core::Error::BudgetExceeded { .. } => {
                Failure::Budget(format!("{e}; pass --override-budget to enumerate anyway"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(format!("output: {e}"))
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Seq(a) => commands::seq(a),
        Command::Table(a) => commands::table(a),
        Command::Count(a) => commands::count_cmd(a),
        Command::Verify(a) => commands::verify_cmd(a),
        Command::Joyal(a) => commands::joyal(a),
        Command::Check(a) => commands::check(a),
        Command::Report(a) => commands::report(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
