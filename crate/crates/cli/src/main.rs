//! `strong-edge`: graph generation, strong edge coloring and certificate
//! checking from the command line.
//!
//! Exit codes: 0 success, 1 negative result, 2 input error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "strong-edge", version, about = "Strong edge coloring toolkit")]
struct Cli {
    /// Also write the report text to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph, list assignment or certificate.
    Gen {
        #[command(subcommand)]
        what: GenKind,
        /// Output file (stdout when omitted).
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Strongly color a graph from [k] or from a list assignment.
    Color {
        graph: PathBuf,
        #[arg(long, conflicts_with = "lists", required_unless_present = "lists")]
        k: Option<u32>,
        #[arg(long)]
        lists: Option<PathBuf>,
    },
    /// Exact strong chromatic index.
    Index { graph: PathBuf },
    /// Check a coefficient certificate, optionally with random soundness trials.
    Certify {
        certificate: PathBuf,
        #[arg(long)]
        soundness: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        palette: u32,
    },
    /// Recompute the cycle coefficients.
    VerifyPaper {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        claim: u8,
        /// Cycle length; staged runs without it cover 8..=20.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
    },
    /// Random list-coloring experiments.
    Campaign {
        #[arg(value_enum)]
        kind: CampaignKind,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        size: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        palette: u32,
        #[arg(long, default_value_t = 10)]
        list_size: usize,
        /// Directory for reproducer files of failed instances.
        #[arg(long, default_value = ".")]
        reproducer_dir: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenKind {
    Cnplus {
        #[arg(long)]
        n: usize,
    },
    Cubic {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        girth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Weight6 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Petersen,
    /// Random lists for every edge of a graph file.
    Lists {
        graph: PathBuf,
        #[arg(long, default_value_t = 10)]
        size: usize,
        #[arg(long, default_value_t = 30)]
        palette: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The certificate for the six-cycle configuration.
    Claim1Certificate,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Staged,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CampaignKind {
    Cubic,
    Weight6,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Gen { what, out } => commands::gen(what, out.as_deref()),
        Command::Color { graph, k, lists } => commands::color(&graph, k, lists.as_deref()),
        Command::Index { graph } => commands::index(&graph),
        Command::Certify {
            certificate,
            soundness,
            seed,
            palette,
        } => commands::certify(&certificate, soundness, seed, palette),
        Command::VerifyPaper { claim, n, method } => {
            commands::verify_paper(claim, n, matches!(method, MethodArg::Staged))
        }
        Command::Campaign {
            kind,
            count,
            size,
            seed,
            palette,
            list_size,
            reproducer_dir,
        } => commands::campaign(&commands::CampaignConfig {
            kind,
            count,
            size,
            seed,
            palette,
            list_size,
            reproducer_dir,
        }),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    print!("{}", outcome.text);
    if let Some(path) = cli.report {
        if let Err(e) = std::fs::write(&path, &outcome.text) {
            eprintln!("error: cannot write report {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(outcome.code)
}
