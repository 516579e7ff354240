//! `corners`: census, verification, closed forms, bijections and sampling
//! for tree-like, permutation, type-B and symmetric tableaux.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use corners::verify::Suite;
use corners::Family;

use output::OutputArgs;

#[derive(Parser, Debug)]
#[command(name = "corners", version, about = "Corners of tree-like, permutation and type-B tableaux")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct SizeArgs {
    /// Tableau family.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Size n; symmetric tableaux of size 2n + 1 are indexed by n.
    #[arg(short = 'n', long = "size", visible_alias = "n")]
    pub size: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Exact corner statistics of every tableau of one size.
    Census {
        #[command(flatten)]
        size: SizeArgs,
        /// Enumerate on one thread.
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List every tableau of one size.
    Enumerate {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the identities: closed form against chain DP against census.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        /// Largest size enumerated (further capped per family).
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        /// Largest size for DP against closed forms.
        #[arg(long, default_value_t = 60)]
        dp_max: usize,
        #[arg(long)]
        sequential: bool,
        /// Include the elapsed time in the report.
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Evaluate closed forms.
    Formula {
        #[command(subcommand)]
        which: FormulaCommand,
    },
    /// Apply the symmetric/type-B bijection or the shape correspondence.
    Bijection {
        #[command(subcommand)]
        which: BijectionCommand,
    },
    /// Uniform sampling and Monte Carlo corner estimates.
    Sample {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit sampled permutation tableaux instead of a report.
        #[arg(long)]
        tableaux: bool,
        #[arg(long)]
        sequential: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum FormulaCommand {
    /// Expected and total number of corners.
    Corners {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Probability of a corner at step k (every k when omitted).
    Probability {
        #[command(flatten)]
        size: SizeArgs,
        #[arg(short, long)]
        k: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Number of tableaux.
    Count {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Law of the number of unrestricted rows.
    ULaw {
        #[command(flatten)]
        size: SizeArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FillingArgs {
    /// Border path, e.g. SWSWS.
    #[arg(long)]
    pub path: String,
    /// Rows top to bottom, comma separated; `1`/`0` for 0/1 fillings,
    /// `1`, `*` or `●` for points and `0` or `.` for empty cells.
    #[arg(long, allow_hyphen_values = true)]
    pub rows: String,
}

#[derive(Subcommand, Debug)]
pub enum BijectionCommand {
    /// Symmetric tableau of size 2n + 1 to its type-B image.
    Forward {
        #[command(flatten)]
        filling: FillingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Type-B tableau to its symmetric preimage.
    Inverse {
        #[command(flatten)]
        filling: FillingArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Tree-like shape to its permutation shape.
    Shape {
        #[arg(long)]
        path: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The worked size-11 / size-5 pair.
    Drawn {
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: corners::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: corners::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
