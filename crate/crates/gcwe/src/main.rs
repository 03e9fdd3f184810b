//! Command-line front end for the crystal-basis genetic code model.
//!
//! Exit codes: 0 success, 1 mismatch against the expected result, 2 usage
//! or malformed input.

mod config;
mod pipeline;
mod query;
mod sensitivity;
mod style;
mod table;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gcwe_core::PipelineConfig;
use style::Style;

#[derive(Debug, Parser)]
#[command(version, about, long_about = None)]
struct Cli {
    /// Pipeline configuration file (flat `key = value`).
    #[arg(long, global = true, env = "GCWE_CONFIG")]
    config: Option<PathBuf>,
    /// Plain output without ANSI colours.
    #[arg(long, global = true)]
    no_color: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Codon label table, optionally checked against the published one.
    Table(table::TableArgs),
    /// Run the five-level multiplet merging pipeline.
    Pipeline(pipeline::PipelineArgs),
    /// Whether a single or double misreading is allowed.
    Check(query::CheckArgs),
    /// Crystal coupling of |j1 m1> with a rank-j2 component m2.
    Couple(query::CoupleArgs),
    /// Small-q limit checks.
    Qcheck(query::QcheckArgs),
    /// Amino-acid usage frequencies beside model multiplet sizes.
    Freq(query::FreqArgs),
    /// Rerun the pipeline over a grid of rank or policy values.
    Sensitivity(sensitivity::SensitivityArgs),
}

fn load_config(path: Option<&PathBuf>) -> anyhow::Result<PipelineConfig> {
    Ok(match path {
        Some(p) => config::load(p)?,
        None => PipelineConfig::default(),
    })
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let style = Style { color: !cli.no_color };
    let cfg = load_config(cli.config.as_ref())?;
    match &cli.command {
        Command::Table(a) => table::run(a, style),
        Command::Pipeline(a) => pipeline::run(a, &cfg, style),
        Command::Check(a) => query::check(a, &cfg, style),
        Command::Couple(a) => query::couple_cmd(a, &cfg),
        Command::Qcheck(a) => query::qcheck(a, style),
        Command::Freq(a) => query::freq(a, &cfg),
        Command::Sensitivity(a) => sensitivity::run(a, &cfg, style),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
