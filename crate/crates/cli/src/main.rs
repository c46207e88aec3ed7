//! `moments`: generate Catalan-like numbers and certify them as Stieltjes
//! moment sequences, in exact arithmetic.
//!
//! Exit codes: 0 success / PASS, 1 a checked property FAILED (or could not
//! be certified), 2 usage or parse error.

mod commands;
mod source;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use moments_core::exact::DEFAULT_MINOR_BUDGET;

#[derive(Parser, Debug)]
#[command(
    name = "moments",
    version,
    about = "Catalan-like numbers and exact Stieltjes moment certificates"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Maximum number of minors a brute-force check may evaluate.
    #[arg(long, env = "MOMENTS_BUDGET", default_value_t = DEFAULT_MINOR_BUDGET, global = true)]
    pub budget: u64,

    /// Evaluate independent determinants concurrently (output is identical).
    #[arg(long, global = true)]
    pub parallel: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Where the weights come from: a catalog name, or σ and τ separately.
/// Each of `--sigma`/`--tau` takes a catalog name, inline JSON or `@file`.
#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    /// Catalog entry (see `moments catalog`).
    #[arg(long, conflicts_with_all = ["sigma", "tau"])]
    pub name: Option<String>,
    /// Diagonal weights s_0, s_1, ...
    #[arg(long, requires = "tau")]
    pub sigma: Option<String>,
    /// Subdiagonal weights t_1, t_2, ...
    #[arg(long, requires = "sigma")]
    pub tau: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Catalan-like numbers r_{0,0}..r_{N,0}.
    Gen {
        #[command(flatten)]
        weights: WeightArgs,
        /// Last index N.
        #[arg(short = 'n', default_value_t = 8)]
        n: usize,
    },
    /// Dump rows 0..=N of the recursive matrix.
    Matrix {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(short = 'n', default_value_t = 8)]
        n: usize,
    },
    /// Both Hankel determinant families up to a depth; PASS iff all are >= 0.
    Stieltjes {
        #[command(flatten)]
        weights: WeightArgs,
        /// Explicit moments, comma separated (or @file).
        #[arg(long, conflicts_with_all = ["name", "sigma", "tau"])]
        terms: Option<String>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// det H_k by elimination next to the product of T_j = t_1...t_j.
    HankelDet {
        #[command(flatten)]
        weights: WeightArgs,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// Total positivity of the coefficient matrix.
    Tp {
        /// Catalog entry whose coefficient matrix to test.
        #[arg(long, conflicts_with_all = ["pqst", "sigma", "tau"])]
        jacobi_name: Option<String>,
        /// Parameters of J(p,q;s,t), comma separated.
        #[arg(long, conflicts_with_all = ["sigma", "tau"])]
        pqst: Option<String>,
        #[arg(long, requires = "tau")]
        sigma: Option<String>,
        #[arg(long, requires = "sigma")]
        tau: Option<String>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        /// Also enumerate every minor of the section (subject to --budget).
        #[arg(long)]
        all_minors: bool,
    },
    /// Expand a generating function.
    Series {
        /// Catalog name with a closed form, inline JSON GF spec, or @file.
        #[arg(long)]
        gf: String,
        /// Truncation order N.
        #[arg(short = 'n', default_value_t = 16)]
        n: usize,
    },
    /// Run every applicable cross-check for a catalog entry.
    Verify {
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
    /// List the catalog.
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(if out.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
