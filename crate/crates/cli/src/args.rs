use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "sgames",
    version,
    about = "Count, enumerate and canonicalize simple games"
)]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form counts, one row per player count.
    Count {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), conflicts_with = "n_range")]
        n: Option<u32>,
        /// Inclusive range such as `2..10`.
        #[arg(long, value_parser = parse_range)]
        n_range: Option<RangeInclusive<u32>>,
    },
    /// Stream one canonical pair per bipartite game as JSON lines.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=64))]
        n: u32,
    },
    /// Read a vector game and print the game with all minimal winning coalitions.
    Expand {
        /// JSON file; standard input when omitted.
        input: Option<PathBuf>,
    },
    /// Read a simple game and print its canonical vector game.
    Canon { input: Option<PathBuf> },
    /// Read two simple games and print whether they are isomorphic.
    Iso {
        /// Two JSON files; without them both games are read from standard input.
        #[arg(num_args = 0..=2)]
        inputs: Vec<PathBuf>,
    },
    /// Classify every labeled game on N players.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=6))]
        n: u32,
        /// Permit the n = 6 run (millions of games).
        #[arg(long)]
        allow_n6: bool,
    },
    /// Cross-check formulas, generators and the oracle; exit 1 on any mismatch.
    Verify {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..=64))]
        max_n: u32,
        /// Largest n handed to the brute-force oracle.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(2..=6))]
        oracle_max_n: u32,
        #[arg(long)]
        allow_n6: bool,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LOW..HIGH, got {s:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u32 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad lower bound: {e}"))?;
    let hi: u32 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad upper bound: {e}"))?;
    if lo < 1 {
        return Err("n starts at 1".into());
    }
    if hi < lo {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}
