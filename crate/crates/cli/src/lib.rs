//! Command-line driver: instance I/O, experiment commands and deterministic reports.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use error::{CliError, CliResult};
pub use report::{Report, Status};

#[derive(Debug, Parser)]
#[command(
    name = "twistcox",
    version,
    about = "Twists, markings and complexity of Coxeter generating sets"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GlobalOpts {
    /// Ball radius for chamber and conjugator searches.
    #[arg(long, global = true, default_value_t = 10)]
    pub radius: usize,
    /// Cutoff for product-order iteration.
    #[arg(long, global = true, default_value_t = 100)]
    pub cutoff: u32,
    /// Depth of twist-sequence searches.
    #[arg(long, global = true, default_value_t = 8)]
    pub depth: usize,
    /// Node cap for enumerations.
    #[arg(long, global = true, default_value_t = 100_000)]
    pub cap: usize,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

impl Default for GlobalOpts {
    fn default() -> Self {
        GlobalOpts {
            radius: 10,
            cutoff: 100,
            depth: 8,
            cap: 100_000,
            seed: 0,
        }
    }
}

impl GlobalOpts {
    pub fn params(&self) -> twistcox::Params {
        twistcox::Params {
            radius: self.radius,
            cutoff: self.cutoff,
            cap: self.cap,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every nonempty subset of the generators.
    Classify { file: PathBuf },
    /// Whether every clique of finite labels is spherical.
    Fc { file: PathBuf },
    /// k-rigidity with a weakly separating witness.
    Rigidity {
        file: PathBuf,
        #[arg(short, default_value_t = 3)]
        k: usize,
    },
    /// List the elementary twists.
    Twists { file: PathBuf },
    /// Graphs reachable by twists, up to label-preserving isomorphism.
    TwistClass { file: PathBuf },
    /// Apply one twist; prints the new instance and the new generators as words.
    Apply {
        file: PathBuf,
        /// Members of J, comma separated.
        #[arg(long = "j", value_delimiter = ',', required = true)]
        j: Vec<String>,
        /// Members of the conjugated side B, comma separated.
        #[arg(long = "b", value_delimiter = ',', required = true)]
        b: Vec<String>,
        /// Write the twisted instance here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the generator words here.
        #[arg(long)]
        words_out: Option<PathBuf>,
    },
    /// Complexity of a generating set given by words in the reference generators.
    Complexity { reference: PathBuf, words: PathBuf },
    /// Minimize complexity over twist sequences, then search for a conjugator.
    Minimize {
        reference: PathBuf,
        words: PathBuf,
        /// Keep at most this many sets per level.
        #[arg(long)]
        beam: Option<usize>,
    },
    /// Run a named check, or `all`.
    Verify { name: String },
    /// Enumerate test instances up to isomorphism.
    FindInstances {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Allowed finite labels, comma separated; absent edges are always allowed.
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        labels: Vec<u32>,
        /// Extra filters: dihedral-twistable.
        #[arg(long)]
        filter: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a seeded random sequence of twists with |J| ≤ 2 to the standard generators.
    Scramble {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        steps: usize,
        #[arg(long)]
        words_out: Option<PathBuf>,
    },
}

/// Runs a parsed command line; the argument echo is used as the report's command line.
pub fn run(cli: &Cli, echo: &str) -> CliResult<Report> {
    commands::dispatch(&cli.command, &cli.opts, echo)
}
