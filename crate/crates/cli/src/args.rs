use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rootforge::rootsys::Family;

#[derive(Debug, Parser)]
#[command(name = "rootforge", version, about = "Exact root systems, Hermitian regular subalgebras and weighted Dynkin diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a root system and list its positive roots
    Build(BuildArgs),
    /// Π-system validation, generation, rebasing, naming and equivalence
    #[command(subcommand)]
    Pisystem(PiCommand),
    /// Weighted Dynkin diagrams
    #[command(subcommand)]
    Wdd(WddCommand),
    /// Maximal Hermitian regular subalgebras and inclusion chains
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Replay the reference computations and report each check
    VerifyPaper(VerifyArgs),
}

/// Which root system to work in. Either `--family` with `--rank`, an inline
/// `--cartan` matrix, or a JSON `--system-file`.
#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    #[arg(long)]
    pub family: Option<Family>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Rows separated by `;`, entries by `,`, e.g. "2,-1;-1,2"
    #[arg(long, conflicts_with_all = ["family", "rank"])]
    pub cartan: Option<String>,
    #[arg(long, conflicts_with_all = ["family", "rank", "cartan"])]
    pub system_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    #[arg(long)]
    pub json: bool,
}

/// A Π-system given inline or in a JSON file.
#[derive(Debug, Clone, Args)]
pub struct PiArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Semicolon-separated coefficient lists, e.g. "[1,0,0];[0,1,0]"
    #[arg(long)]
    pub gens: Option<String>,
    /// JSON file with `generators` and optionally `system` and `mark`
    #[arg(long, conflicts_with = "gens")]
    pub file: Option<PathBuf>,
    /// The noncompact simple root, counted from 1
    #[arg(long)]
    pub mark: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum PiCommand {
    /// Validate a Π-system
    Check(PiArgs),
    /// Generated subsystem: size, Dynkin types and positive roots
    Generate(PiArgs),
    /// Positive basis with compact/noncompact classes (needs --mark)
    Rebase(PiArgs),
    /// Real form of the generated subalgebra (needs --mark)
    Name(PiArgs),
    /// Search for a Weyl group element carrying one subsystem to another
    Equiv(EquivArgs),
}

#[derive(Debug, Args)]
pub struct EquivArgs {
    #[command(flatten)]
    pub first: PiArgs,
    /// Generators of the second subsystem
    #[arg(long)]
    pub other: Option<String>,
    #[arg(long, conflicts_with = "other")]
    pub other_file: Option<PathBuf>,
    /// Overrides ROOTFORGE_BFS_BUDGET
    #[arg(long)]
    pub budget: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub system: SystemArgs,
    /// Node weights, e.g. "2,-4,1,3,0,0"
    #[arg(long, allow_hyphen_values = true)]
    pub weights: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum WddCommand {
    /// Diagram of a Cartan element given over the simple coroots
    Weights {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, allow_hyphen_values = true)]
        coroot: String,
        #[arg(long)]
        json: bool,
    },
    /// Move a diagram into the dominant chamber
    Dominate(DiagramArgs),
    /// Whether the dominant form has all weights in {0,1,2}
    Admissible(DiagramArgs),
    /// Push a coroot vector through an embedding of a regular subalgebra
    Push {
        #[command(flatten)]
        system: SystemArgs,
        /// JSON file `{"images": [...]}` with one coroot vector per node
        #[arg(long)]
        embedding: Option<PathBuf>,
        /// Generators of the subalgebra; their coroots form the embedding
        #[arg(long, conflicts_with = "embedding")]
        gens: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        coroot: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Maximal Hermitian regular subalgebras of an ambient algebra
    List {
        /// e.g. "e6(-14)", "su(2,4)", "so*(10)", "so(8,2)"
        #[arg(long)]
        ambient: String,
        /// Keep entries contained in another entry of the same row
        #[arg(long)]
        all: bool,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Chains of maximal entries from an ambient algebra down to a target
    Chains {
        #[arg(long)]
        target: String,
        #[arg(long)]
        ambient: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Print the generator tables as JSON
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Group {
    /// Root counts and highest roots
    Roots,
    /// su(2,2) -> e6(-14) diagram computation
    Pipeline,
    /// sl2 admissibility of the resulting diagram and its double
    Admissible,
    /// su(2,2) inclusion chains in e6(-14)
    Chains,
    /// Table rows at small parameters
    Tables,
    /// Tube, sp and rank-sum filters
    Filters,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub json: bool,
    /// Run only these groups
    #[arg(long, value_enum, value_delimiter = ',')]
    pub only: Vec<Group>,
    /// Use tables from this JSON file instead of the built-in ones
    #[arg(long)]
    pub catalog: Option<PathBuf>,
}
