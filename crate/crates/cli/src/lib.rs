//! Command-line front end for `surfkit-core`: argument parsing, config
//! files, JSON reports and the table reproduction run.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{FileConfig, Overrides, RunConfig};
use error::CliError;

#[derive(Parser)]
#[command(name = "surfkit", version, about = "Degree 10 surfaces in P^5 over a prime field")]
struct Cli {
    /// Field characteristic (a prime above 1000).
    #[arg(long, global = true)]
    prime: Option<u32>,
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Degree bound; each command has its own default.
    #[arg(long, global = true)]
    degree_bound: Option<u32>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Output directory for generated files.
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
    /// TOML file with defaults for the flags above.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family's ideal and write ideal.txt and meta.json.
    Construct { family: String },
    /// Betti table by Koszul homology and by a minimal resolution.
    Betti { ideal: PathBuf },
    /// Hilbert function and Hilbert series numerator.
    Hilbert { ideal: PathBuf },
    /// The adjunction case tree for degree 10, genus 6.
    Classify {
        /// Construct the rejected surfaces and count their quadrics.
        #[arg(long)]
        verify: bool,
    },
    /// Matrix factorization over a random cubic through the surface.
    Mf { ideal: PathBuf },
    /// Sections of the normal bundle in a random cubic fourfold.
    NormalBundle { ideal: PathBuf },
    /// Rebuild the table of seven families and check every cell.
    VerifyTable1 {
        /// Comma-separated family ids, e.g. k2=-6,k2=-1.
        #[arg(long, value_delimiter = ',')]
        rows: Option<Vec<String>>,
    },
}

fn run(cli: Cli) -> Result<(commands::Output, bool), CliError> {
    let file = match &cli.config {
        Some(path) => FileConfig::load(path)?,
        None => FileConfig::default(),
    };
    let rows = match &cli.command {
        Command::VerifyTable1 { rows } => rows.clone(),
        _ => None,
    };
    let flags = Overrides {
        prime: cli.prime,
        seed: cli.seed,
        degree_bound: cli.degree_bound,
        out: cli.out,
        json: cli.json,
        rows,
    };
    let cfg = RunConfig::merge(flags, file)?;
    let out = match &cli.command {
        Command::Construct { family } => commands::construct(family, &cfg)?,
        Command::Betti { ideal } => commands::betti(ideal, &cfg)?,
        Command::Hilbert { ideal } => commands::hilbert(ideal, &cfg)?,
        Command::Classify { verify } => commands::classify_cmd(*verify, &cfg)?,
        Command::Mf { ideal } => commands::mf(ideal, &cfg)?,
        Command::NormalBundle { ideal } => commands::normal_bundle(ideal, &cfg)?,
        Command::VerifyTable1 { .. } => commands::verify_table(&cfg)?,
    };
    Ok((out, cfg.json))
}

/// Parses the process arguments, runs one command and prints its output.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, json)) => {
            let text = if json { out.json } else { out.text };
            let _ = std::io::stdout().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("surfkit: {e}");
            ExitCode::from(e.code)
        }
    }
}
