//! `zmdeg` — exact subgroup-lattice statistics of ZM-groups.
//!
//! Exit codes: 0 success, 1 check failure, 2 invalid input, 3 resource bound
//! exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::Zero;

mod commands;
mod output;

use output::OutputFormat;

/// A rendered failure with its process exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn check(message: String) -> Self {
        Failure { code: 1, message }
    }

    fn invalid(message: String) -> Self {
        Failure { code: 2, message }
    }

    fn resource(message: String) -> Self {
        Failure { code: 3, message }
    }
}

#[derive(Parser)]
#[command(
    name = "zmdeg",
    version,
    about = "Exact subgroup-lattice statistics of ZM-groups: subgroup counts, factorization numbers F2/CF2 and the (cyclic) subgroup commutativity degrees sd/csd, with a built-in brute-force oracle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Write output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact report for one presentation ZM(m,n,r)
    Report {
        /// Order of the generator a (odd, coprime to n)
        #[arg(short, value_parser = parse_positive)]
        m: BigUint,
        /// Order of the generator b
        #[arg(short, value_parser = parse_positive)]
        n: BigUint,
        /// Conjugation exponent in b^-1 a b = a^r
        #[arg(short, value_parser = parse_natural)]
        r: BigUint,
        /// Also compute definitional values by brute force and report a verdict
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// One report row per valid presentation with order up to the bound
    Sweep {
        /// Largest group order m*n to include
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_mn: u64,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Compare every formula value against the brute-force oracle
    OracleCheck {
        /// Largest group order m*n to check
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_mn: u64,
    },
    /// Degree table along m = p^alpha for an odd prime p
    Asymptote {
        /// Odd prime base of the tower
        #[arg(short, value_parser = parse_positive)]
        p: BigUint,
        /// Largest exponent alpha
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        alpha_max: u32,
        /// Fail (exit 1) unless sd and csd strictly decrease in alpha
        #[arg(long)]
        assert_decreasing: bool,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// List presentations with sd = csd != 1 up to the bound
    SearchEqual {
        /// Largest group order m*n to search
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_mn: u64,
        #[command(flatten)]
        fmt: FormatArgs,
    },
}

fn parse_natural(s: &str) -> Result<BigUint, String> {
    s.parse::<BigUint>()
        .map_err(|_| format!("`{s}` is not a non-negative integer"))
}

fn parse_positive(s: &str) -> Result<BigUint, String> {
    let v = parse_natural(s)?;
    if v.is_zero() {
        return Err("must be at least 1".into());
    }
    Ok(v)
}

/// Oracle element bound: `ZMDEG_ORACLE_BOUND` env override, else the default.
fn oracle_bound() -> Result<usize, Failure> {
    match std::env::var("ZMDEG_ORACLE_BOUND") {
        Ok(s) => s
            .parse::<usize>()
            .map_err(|_| Failure::invalid(format!("ZMDEG_ORACLE_BOUND=`{s}` is not a valid bound"))),
        Err(_) => Ok(zmdeg_core::DEFAULT_ELEMENT_BOUND),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Report { m, n, r, oracle, fmt } => {
            commands::report(&m, &n, &r, oracle, fmt.format, &fmt.out, oracle_bound()?)
        }
        Command::Sweep { max_mn, fmt } => commands::sweep(max_mn, fmt.format, &fmt.out),
        Command::OracleCheck { max_mn } => commands::oracle_check(max_mn, oracle_bound()?),
        Command::Asymptote { p, alpha_max, assert_decreasing, fmt } => {
            commands::asymptote(&p, alpha_max, assert_decreasing, fmt.format, &fmt.out)
        }
        Command::SearchEqual { max_mn, fmt } => commands::search_equal(max_mn, fmt.format, &fmt.out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
