//! Batch front end for `polyloop-core`.
//!
//! Exit codes: 0 success, 1 oracle mismatch, 2 invalid input, 3 sphere
//! ceiling too low, 4 oracle precondition failed, 5 Hochster enumeration
//! ceiling exceeded.

pub mod cache;
pub mod commands;
pub mod error;
pub mod family;
pub mod json;
pub mod parallel;
pub mod sexpr;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{run, Report};
pub use error::{CliError, CliResult};
pub use family::Family;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    /// Sphere table of the decomposition against Hochster's formula.
    PorterHochster,
    /// Series of the decomposition against the Koszul dual of the face ring.
    Koszul,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    /// Loop homology series of a flag complex.
    Koszul,
    /// Hilbert series of the face ring.
    Hilbert,
    /// Poincaré series of a term, given as an s-expression or JSON.
    Term,
}

#[derive(Debug, Parser)]
#[command(name = "polyloop", version, about = "Loop space decompositions of polyhedral products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Truncation degree of every series.
    #[arg(long = "N", global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Highest sphere dimension reported in wedge tables.
    #[arg(long = "max-dim", global = true, default_value_t = 16, value_parser = clap::value_parser!(u32).range(2..))]
    pub max_dim: u32,
    /// Worker threads for Hochster enumeration; defaults to available parallelism.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Reuse results stored under this directory.
    #[arg(long = "cache-dir", global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Write the result here, atomically, instead of to standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit a complex as JSON.
    Build {
        #[arg(required = true, num_args = 1.., value_name = "FAMILY PARAMS")]
        family: Vec<String>,
    },
    /// Decompose the loop space of the Davis–Januszkiewicz space.
    Decompose {
        #[arg(required = true, num_args = 1.., value_name = "FAMILY PARAMS")]
        family: Vec<String>,
    },
    /// Compare a decomposition against an independent oracle.
    Verify {
        #[arg(value_enum)]
        mode: VerifyMode,
        #[arg(required = true, num_args = 1.., value_name = "FAMILY PARAMS")]
        family: Vec<String>,
    },
    /// Betti numbers of the moment-angle complex.
    Hochster {
        #[arg(required = true, num_args = 1.., value_name = "FAMILY PARAMS")]
        family: Vec<String>,
    },
    /// Truncated series of a complex or a term.
    Series {
        #[arg(value_enum)]
        kind: SeriesKind,
        #[arg(required = true, num_args = 1.., value_name = "FAMILY PARAMS | TERM")]
        args: Vec<String>,
    },
}

impl Cli {
    pub fn jobs(&self) -> usize {
        match self.jobs {
            Some(j) => j as usize,
            None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
        }
    }
}
