//! `nlrep`: Littlewood-Richardson and Newell-Littlewood coefficients,
//! classical-group tensor products and detection verdicts from the shell.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nlrep::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    AsciiDiagram,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Odd,
    Even,
}

#[derive(Debug, Parser)]
#[command(name = "nlrep", version, about = "Littlewood-Richardson and Newell-Littlewood coefficients")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    pub format: OutputFormat,

    /// Worker threads for sweeps and decompositions.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Maximum number of memoised LR coefficients; 0 disables the memo.
    #[arg(long, global = true, env = "NLREP_CACHE_CAP", hide = true)]
    pub cache_cap: Option<usize>,

    /// Colour plain output: on or off.
    #[arg(long, global = true, env = "NLREP_COLOR", hide = true, default_value = "off")]
    pub color: String,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// c^nu_{lambda mu}: number of LR tableaux of shape nu/lambda with content mu.
    Lr {
        lambda: String,
        mu: String,
        nu: String,
        /// List every LR tableau.
        #[arg(long)]
        certificates: bool,
        /// Cross-check against the Schur polynomial expansion.
        #[arg(long, hide = true)]
        oracle: bool,
    },
    /// N^nu_{lambda mu}, the Newell-Littlewood triple sum.
    Nl {
        lambda: String,
        mu: String,
        nu: String,
        /// List the nonzero (alpha, beta, gamma) terms with their three factors.
        #[arg(long)]
        support: bool,
    },
    /// Tensor product of two irreducibles of SO(2n+1), Sp(2n) or SO(2n).
    Decompose {
        lambda: String,
        mu: String,
        /// B, C or D.
        #[arg(long)]
        family: String,
        /// The rank n.
        #[arg(long)]
        rank: u32,
    },
    /// Whether N^lambda_{lambda lambda} > 0, with a witness when lambda is in a known family.
    Detect { lambda: String },
    /// Exhaustive sweep over all partitions of odd or even size.
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        #[arg(long)]
        max_size: Option<u32>,
    },
    /// Draw a skew tableau given as rows, e.g. --fill "1,1,1/1,2/2,2,3/3,4".
    Render {
        outer: String,
        #[arg(default_value = "")]
        inner: String,
        /// Entries of the skew boxes, rows separated by '/', entries by ','.
        #[arg(long)]
        fill: String,
    },
}

pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse { .. } | Error::NotAPartition(_) | Error::Precondition(_) | Error::BoundExceeded(_) => 2,
        Error::Overflow => 3,
        Error::Invariant(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("nlrep: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
