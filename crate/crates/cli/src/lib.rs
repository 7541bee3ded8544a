//! Command-line front end: edge-list generation, analysis reports,
//! formula-versus-measurement verification and CSV sweeps.

pub mod commands;
pub mod range;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hfnet_core::DEFAULT_MAX_NODES;

pub use range::IntRange;

/// Exit status for success.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification check fails.
pub const EXIT_MISMATCH: i32 = 1;
/// Exit status for usage and validation errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "hfnet", version, about = "Hierarchical scale-free fractal networks: generate, analyze, verify")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Guard {
    /// Largest graph (in nodes) that may be materialized.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the edge list of G_t^z.
    Generate {
        #[arg(long)]
        z: u32,
        #[arg(long)]
        t: u32,
        /// Output file; stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        guard: Guard,
    },
    /// Report closed-form properties, optionally measured on the graph.
    Analyze {
        #[arg(long)]
        z: u32,
        #[arg(long)]
        t: u32,
        /// Build the graph and check every closed form against it.
        #[arg(long)]
        with_graph: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        guard: Guard,
    },
    /// Check closed forms against brute-force measurements over a grid.
    Verify {
        #[arg(long)]
        z: IntRange,
        #[arg(long)]
        t: IntRange,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        guard: Guard,
    },
    /// Tabulate a quantity over a (z, t) grid as CSV.
    Sweep {
        quantity: SweepQuantity,
        #[arg(long, default_value = "3")]
        z: IntRange,
        #[arg(long)]
        t: IntRange,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Print the asymptotic constants for one z.
    Limits {
        #[arg(long)]
        z: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepQuantity {
    Clustering,
    Apl,
    #[value(name = "apl-vs-lnN", alias = "apl-vs-lnn")]
    AplVsLnN,
    DegreeCdf,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            return code;
        }
    };
    match commands::dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
