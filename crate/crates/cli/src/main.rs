//! `snchar`: symmetric-group characters and the decomposition of the
//! induced character from an n-cycle centralizer.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failure (or on an
//! internal error), 2 on a usage error.

mod render;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use snchar::checks::invariant_suites;
use snchar::closed_forms::verify_closed_forms;
use snchar::{character_table, decompose_phi, enumerate_partitions, mn_value, CharacterCache, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "snchar", version, about = "Exact symmetric-group characters and induced-character decompositions")]
struct Cli {
    /// Output format; json and csv are stable, table is for humans.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: OutputFormat,

    /// Include zero multiplicities in the table view of `decompose`.
    #[arg(long, global = true)]
    show_zeros: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every partition of N in descending lexicographic order.
    Partitions { n: usize },
    /// Evaluate an irreducible character on a conjugacy class.
    Char {
        /// Shape of the character, e.g. 3,1.
        #[arg(long)]
        shape: Partition,
        /// Cycle type of the class, e.g. 2,1,1.
        #[arg(long = "class")]
        class_type: Partition,
    },
    /// Decompose the induced character from the centralizer of an n-cycle in S_2n.
    Decompose {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
    },
    /// Check every closed form and structural invariant for n up to MAX_N.
    Verify {
        #[arg(long = "max-n", value_parser = clap::value_parser!(u64).range(2..))]
        max_n: u64,
    },
    /// Dump the full character table of S_M.
    Table {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<snchar::Error> for Failure {
    fn from(e: snchar::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<bool, Failure> {
    let cache = CharacterCache::new();
    let format = cli.format;
    match cli.command {
        Command::Partitions { n } => {
            render::partitions(out, format, n, &enumerate_partitions(n))?;
        }
        Command::Char { shape, class_type } => {
            let value = match mn_value(&shape, &class_type, &cache) {
                Ok(v) => v,
                Err(e @ snchar::Error::WeightMismatch { .. }) => return Err(Failure::Usage(e.to_string())),
                Err(e) => return Err(e.into()),
            };
            render::character_value(out, format, &shape, &class_type, &value)?;
        }
        Command::Decompose { n } => {
            let d = decompose_phi(n as usize, &cache)?;
            render::decomposition(out, format, &d, cli.show_zeros)?;
        }
        Command::Verify { max_n } => {
            let report = verify_closed_forms(max_n as usize, &cache)?;
            let invariants = invariant_suites(max_n as usize, &cache)?;
            let pass = report.passed() && invariants.iter().all(|c| c.pass);
            render::verification(out, format, &report, &invariants, pass)?;
            return Ok(pass);
        }
        Command::Table { m } => {
            let table = character_table(m as usize, &cache);
            render::table(out, format, &table)?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
