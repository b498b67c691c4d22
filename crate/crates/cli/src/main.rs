use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ufo7::CycNum;

mod commands;
mod output;
mod report;

use output::Format;

#[derive(Parser, Debug)]
#[command(name = "ufo7", version, about = "Simple modules over the double of the Nichols algebra ufo(7)")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Md, global = true)]
    pub format: Format,
    /// directory of cached reports
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// worker threads for independent weights
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
    #[command(subcommand)]
    pub command: Command,
}

fn cyc(s: &str) -> Result<CycNum, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Args, Debug, Clone)]
pub struct WeightArgs {
    /// use the representative weight of this family
    #[arg(long, conflicts_with_all = ["l1", "l2"])]
    pub family: Option<u32>,
    #[arg(long, value_parser = cyc, requires = "l2", allow_hyphen_values = true)]
    pub l1: Option<CycNum>,
    #[arg(long, value_parser = cyc, requires = "l1", allow_hyphen_values = true)]
    pub l2: Option<CycNum>,
    #[arg(long, value_parser = cyc, allow_hyphen_values = true)]
    pub q12: Option<CycNum>,
    /// λ(σ1); λ(g1) is then λ1/λ(σ1)
    #[arg(long, value_parser = cyc, allow_hyphen_values = true)]
    pub ls1: Option<CycNum>,
    #[arg(long, value_parser = cyc, allow_hyphen_values = true)]
    pub ls2: Option<CycNum>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// family, conditions and Shapovalov value of (λ1, λ2)
    Classify {
        #[arg(long, value_parser = cyc, allow_hyphen_values = true)]
        l1: CycNum,
        #[arg(long, value_parser = cyc, allow_hyphen_values = true)]
        l2: CycNum,
    },
    /// the report of L(λ)
    Simple(WeightArgs),
    /// graded dimensions of L(λ)
    Hilbert(WeightArgs),
    /// recompute the classification table
    Table1 {
        /// exit 1 unless every row matches the stored table
        #[arg(long)]
        check: bool,
    },
    /// the relation catalog, confluence and singular vectors
    Verify {
        #[arg(long, value_parser = cyc, default_value = "z", allow_hyphen_values = true)]
        q12: CycNum,
        /// number of sampled weights
        #[arg(long, default_value_t = 3)]
        weights: usize,
    },
    /// count the simple modules over Z12 x Z12^
    #[command(name = "example-z12")]
    ExampleZ12 {
        /// exit 1 unless the counts match the printed table
        #[arg(long)]
        check: bool,
    },
    /// the rank-one relative at a root of unity
    Rank1 {
        #[arg(long = "N", visible_alias = "n")]
        n: u32,
        #[arg(long, value_parser = cyc, allow_hyphen_values = true)]
        q: CycNum,
        #[arg(long, value_parser = cyc, allow_hyphen_values = true)]
        lam: CycNum,
        /// also compute the radical of the Verma module
        #[arg(long)]
        oracle: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(commands::Outcome::Ok) => ExitCode::SUCCESS,
        Ok(commands::Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
