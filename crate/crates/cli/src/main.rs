//! `rvc`: exact rainbow vertex-connection numbers, extremal constructions and
//! the Nordhaus-Gaddum census from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error, 3 bound violation.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use crate::commands::Failure;

#[derive(Debug, Parser)]
#[command(name = "rvc", version, about = "Rainbow vertex-connection number tools")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute rvc exactly for graph6 arguments, or one graph6 per stdin line.
    Compute { graph6: Vec<String> },
    /// Check whether a 1-based coloring makes the graph rainbow vertex-connected.
    Check {
        graph6: String,
        /// Comma-separated 1-based colors, one per vertex.
        colors: String,
    },
    /// Build an extremal family and verify its values.
    Construct {
        #[arg(value_enum)]
        family: Family,
        /// Number of vertices
        #[arg(long)]
        n: usize,
    },
    /// Compute rvc on both sides of every graph of one order.
    #[command(group(ArgGroup::new("source").required(true).args(["builtin", "file"])))]
    Census {
        /// Number of vertices
        #[arg(long)]
        n: usize,
        /// Enumerate all graphs internally (n <= 7).
        #[arg(long)]
        builtin: bool,
        /// Read graph6 lines from a file.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Keep one graph per isomorphism class.
        #[arg(long)]
        dedup: bool,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write one CSV row per graph
        #[arg(long)]
        out_csv: Option<PathBuf>,
        /// Also write the summary JSON to a file
        #[arg(long)]
        out_summary: Option<PathBuf>,
        /// Abort on the first malformed graph6 line.
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Path and its complement (sum n - 1).
    PathPair,
    /// Diameter-two graph whose complement has diameter two (sum 2).
    Diam2,
    /// Cycle and its complement.
    Cycle,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Compute { graph6 } => commands::compute(graph6),
        Command::Check { graph6, colors } => commands::check(&graph6, &colors),
        Command::Construct { family, n } => commands::construct(family, n),
        Command::Census {
            n,
            builtin: _,
            file,
            dedup,
            workers,
            out_csv,
            out_summary,
            strict,
        } => commands::census(commands::CensusArgs {
            n,
            file,
            dedup,
            workers,
            out_csv,
            out_summary,
            strict,
        }),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Data(m) | Failure::Violation(m) => f.write_str(m),
        }
    }
}
