use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use matsplit_core::Label;

#[derive(Debug, Parser)]
#[command(name = "matsplit", version, about = "es-splitting of GF(p)-representable matroids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, circuits, bases, cocircuits, connectivity and the Eulerian/Hamiltonian predicates.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write the es-splitting matroid M^e_{a,b}.
    Esplit(BuildArgs),
    /// Write the splitting matroid M_{a,b}.
    Split(BuildArgs),
    /// Write the element-splitting matroid M'_{a,b}.
    Elsplit(BuildArgs),
    /// Circuits of M, M_{a,b} and M^e_{a,b}, grouped by class.
    Report {
        file: PathBuf,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        json: bool,
    },
    /// Check the characterizations against brute force, on a file or on random instances.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct SpecArgs {
    #[arg(short = 'a')]
    pub a: Option<Label>,
    #[arg(short = 'b')]
    pub b: Option<Label>,
    /// The element copied by gamma; must be a or b.
    #[arg(short = 'e')]
    pub e: Option<Label>,
    #[arg(long, default_value_t = 1)]
    pub alpha_row: u32,
    #[arg(long, default_value_t = 1)]
    pub alpha_z: u32,
    /// Run on matroids with coloops instead of rejecting them.
    #[arg(long)]
    pub allow_coloops: bool,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Output file; standard output when absent.
    #[arg(short = 'o', long = "out")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub spec: SpecArgs,
    /// circuits, bases, rank, cocircuit, connectivity, eulerian, hamiltonian, lift or all.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Number of random instances to generate instead of reading FILE.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Field order for random instances; 3, 5 or 7 drawn per seed when absent.
    #[arg(long)]
    pub p: Option<u32>,
    #[arg(long, default_value_t = 7)]
    pub max_cols: usize,
    /// Drop one predicted circuit before comparing, to exercise the failure path.
    #[arg(long)]
    pub corrupt_prediction: bool,
}
