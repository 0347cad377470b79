//! `dedekind`: exact normalized Dedekind sums from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 precondition violation,
//! 3 internal invariant violation.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dedekind::BigInt;

use crate::commands::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "dedekind",
    version,
    about = "Exact normalized Dedekind sums S(a,b) = 12 s(a,b)"
)]
pub struct Cli {
    /// Emit one JSON object per line; integers are encoded as strings.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMethod {
    Fast,
    Def,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SearchMethod {
    Brute,
    Lemma1,
    Both,
}

fn parse_big(s: &str) -> Result<BigInt, String> {
    dedekind::parse_int(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print S(a,b) as k/q.
    #[command(allow_negative_numbers = true)]
    Sum {
        #[arg(value_parser = parse_big)]
        a: BigInt,
        #[arg(value_parser = parse_big)]
        b: BigInt,
        #[arg(long, value_enum, default_value_t = SumMethod::Fast)]
        method: SumMethod,
    },
    /// Print the (k, q, t, s, r, n) data of a pair with non-integer value.
    #[command(allow_negative_numbers = true)]
    Decompose {
        #[arg(value_parser = parse_big)]
        a: BigInt,
        #[arg(value_parser = parse_big)]
        b: BigInt,
    },
    /// Stream the pairs (a3, b3) sharing the value of the seed (a, b).
    #[command(allow_negative_numbers = true)]
    Generate {
        #[arg(value_parser = parse_big)]
        a: BigInt,
        #[arg(value_parser = parse_big)]
        b: BigInt,
        #[arg(long, default_value_t = 3)]
        r1_max: u64,
        /// Recompute S(a3, b3) for every row.
        #[arg(long)]
        verify: bool,
    },
    /// List all pairs 0 ≤ a < b ≤ b-max with S(a,b) = k/q.
    #[command(allow_negative_numbers = true)]
    Enumerate {
        #[arg(value_parser = parse_big)]
        k: BigInt,
        #[arg(value_parser = parse_big)]
        q: BigInt,
        #[arg(long, default_value_t = 1000)]
        b_max: u64,
        #[arg(long, value_enum, default_value_t = SearchMethod::Lemma1)]
        method: SearchMethod,
    },
    /// Convergents of a periodic continued fraction "head;period", e.g. "0;3,2,1".
    Cfrac {
        expansion: String,
        #[arg(long, default_value_t = 10)]
        max_order: usize,
        /// Keep only convergents a/b with S(a,b) equal to this value.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Distinct moduli per decade: all moduli versus the generated sequence.
    #[command(allow_negative_numbers = true)]
    Density {
        #[arg(value_parser = parse_big)]
        k: BigInt,
        #[arg(value_parser = parse_big)]
        q: BigInt,
        #[arg(long, default_value_t = 1000)]
        b_max: u64,
        #[arg(long, default_value_t = 5)]
        r1_max: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
