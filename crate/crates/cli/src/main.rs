//! `wlp`: Hilbert functions, Weak Lefschetz checks and Betti tables from the
//! command line.
//!
//! Exit codes: 0 for a positive answer, 1 for a negative one, 2 for a
//! sequence that is not an O-sequence (`classify`), 3 for usage, parse and
//! computation errors, 4 when `verify-theorem5` would exceed its size guard.

mod commands;
mod error;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wlp_core::ideal::DEFAULT_DCAP;
use wlp_core::Field;

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "wlp", version, about = "Hilbert functions forcing the Weak Lefschetz Property")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Global {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for random linear forms and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Coefficient field: `rational` (exact) or `prime:<p>` (fast, heuristic).
    #[arg(long, global = true, default_value = "rational", value_parser = Field::parse)]
    pub field: Field,
    /// Highest degree computed before a quotient is declared non-artinian.
    #[arg(long, global = true, default_value_t = DEFAULT_DCAP)]
    pub dcap: usize,
    /// Run even when the size guard would refuse.
    #[arg(long, global = true)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CompareMode {
    /// First table is entrywise at least the second.
    Dominate,
    /// Second table arises from the first by consecutive cancellations.
    Cancel,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a Hilbert function forces the WLP (exit 0 yes, 1 no, 2 invalid).
    Classify {
        /// Comma-separated values, e.g. 1,3,6,10,12,12.
        hf: String,
    },
    /// Binomial expansion of n and the three derived operators.
    #[command(alias = "ops")]
    Expand { n: String, i: u64 },
    /// Lex-segment ideal with a given Hilbert function, as an ideal file.
    Lexideal {
        hf: String,
        /// Number of variables (defaults to h_1).
        #[arg(long)]
        ring: Option<usize>,
    },
    /// Vanishing ideal of a points file, as an ideal file.
    PointsIdeal {
        points: PathBuf,
        /// Compute forms up to this degree (default: number of points, or power - 1).
        #[arg(long)]
        degree: Option<usize>,
        /// Also add the s-th power of the maximal ideal.
        #[arg(long)]
        power: Option<usize>,
    },
    /// Multiplication ranks and WLP verdict (exit 0 WLP, 1 not).
    Wlp {
        ideal: PathBuf,
        #[arg(long)]
        linear_form: Option<String>,
    },
    /// Split the Hilbert function along a linear form: h = b + c.
    Decompose {
        ideal: PathBuf,
        #[arg(long)]
        linear_form: Option<String>,
    },
    /// Compare dim (R/(I, L))_d with the restriction bound (exit 1 on a violation).
    Green {
        ideal: PathBuf,
        #[arg(long)]
        linear_form: Option<String>,
    },
    /// Socle dimensions by degree and the level test.
    Socle { ideal: PathBuf },
    /// Graded Betti table by Koszul homology.
    Betti { ideal: PathBuf },
    /// Compare two Betti tables (JSON or diagram files); exit 0 true, 1 false.
    BettiCompare {
        first: PathBuf,
        second: PathBuf,
        #[arg(long, value_enum, default_value_t = CompareMode::Dominate)]
        mode: CompareMode,
        /// Number of variables (inferred from the tables if absent).
        #[arg(long)]
        ring: Option<usize>,
    },
    /// List the O-sequences with h_1 = codim in a box.
    EnumerateHf {
        #[arg(long)]
        codim: u64,
        #[arg(long)]
        max_degree: usize,
        #[arg(long)]
        max_value: u64,
    },
    /// List every monomial ideal with a given Hilbert function.
    EnumerateIdeals {
        hf: String,
        /// Stop after this many ideals.
        #[arg(long)]
        limit: Option<u64>,
        /// Only print the number of ideals.
        #[arg(long)]
        count: bool,
    },
    /// Check the forcing criterion against every monomial ideal in a box
    /// (exit 0 clean, 1 contradiction or violation, 4 size guard).
    #[command(name = "verify-theorem5")]
    VerifyTheorem5 {
        #[arg(long, required_unless_present = "hf")]
        codim: Option<u64>,
        #[arg(long, required_unless_present = "hf")]
        max_degree: Option<usize>,
        #[arg(long, required_unless_present = "hf")]
        max_value: Option<u64>,
        /// Only this Hilbert function.
        #[arg(long)]
        hf: Option<String>,
        /// Visit every monomial ideal (the default).
        #[arg(long, conflicts_with = "sample")]
        exhaustive: bool,
        /// Visit the lex ideal plus N random ideals per Hilbert function.
        #[arg(long, value_name = "N")]
        sample: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.global.json;
    match commands::run(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report.json).expect("serializable"))
            } else {
                write!(out, "{}", report.text)
            };
            ExitCode::from(report.code)
        }
        Err(e) => fail(&e, json),
    }
}

fn fail(e: &CliError, json: bool) -> ExitCode {
    if json {
        let value = serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    }
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code())
}
