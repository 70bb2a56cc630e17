use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use distgirth_core::base::DEFAULT_MAX_DIMENSION;
use distgirth_core::lll::DEFAULT_TOLERANCE;
use distgirth_core::model::DEFAULT_EVENT_GUARD;
use distgirth_core::solvers::{SolveBudget, DEFAULT_MAX_CYCLE_LENGTH};

/// Seed used when a randomized command gets no `--seed`.
pub const DEFAULT_SEED: u64 = 0;

#[derive(Debug, Parser)]
#[command(
    name = "distgirth",
    version,
    about = "Distance graphs of large girth and chromatic number"
)]
#[command(args_override_self = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the base graph G_{4n} as DIMACS plus its vertex coordinates.
    Gen(GenArgs),
    /// Run an exact solver on a DIMACS graph.
    Solve(SolveArgs),
    /// Draw a random subgraph of G_{4n}.
    Sample(SampleArgs),
    /// Enumerate the cycle and independent-set events of G_{4n}.
    Events(EventsArgs),
    /// Check the Local Lemma conditions on an event system.
    LllCheck(LllArgs),
    /// Print the parameter recipe for (k, delta).
    Params(ParamsArgs),
    /// Tabulate gamma windows over a grid of (k, epsilon, f).
    Scan(ScanArgs),
    /// Search for a subgraph of girth above k and certify it.
    Search(SearchArgs),
    /// Certify an edge mask, or re-verify a certificate.
    Certify(CertifyArgs),
    /// Write the subgraph of a certificate or mask as DIMACS.
    Export(ExportArgs),
}

#[derive(Debug, Clone, Args)]
pub struct BaseArgs {
    /// G_{4n} has dimension 4n.
    #[arg(long)]
    pub n: u32,
    /// Largest dimension 4n accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_DIMENSION)]
    pub max_dim: u32,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct BudgetArgs {
    /// Search-tree node limit for exact solvers (0: none).
    #[arg(long, default_value_t = 0)]
    pub node_limit: u64,
    /// Wall-clock limit in seconds for exact solvers (0: none).
    #[arg(long, default_value_t = 0.0)]
    pub time_limit: f64,
}

impl BudgetArgs {
    pub fn budget(&self) -> SolveBudget {
        SolveBudget {
            node_limit: self.node_limit,
            time_limit: self.time_limit,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
#[group(required = true, multiple = false)]
pub struct ProbArgs {
    /// Edge probability p = gamma^(4n).
    #[arg(long)]
    pub gamma: Option<f64>,
    /// Edge probability given directly.
    #[arg(long)]
    pub p: Option<f64>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    /// DIMACS output (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Vertex JSON output; defaults to `<out>.vertices.json` next to `--out`.
    #[arg(long)]
    pub vertices: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolveWhat {
    Girth,
    Alpha,
    Chi,
    Cycles,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// DIMACS input.
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long, value_enum)]
    pub what: SolveWhat,
    /// Cycle length for `--what cycles`.
    #[arg(long, default_value_t = 3)]
    pub s: u32,
    /// Largest cycle length accepted by `--what cycles`.
    #[arg(long, default_value_t = DEFAULT_MAX_CYCLE_LENGTH)]
    pub max_len: u32,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[command(flatten)]
    pub prob: ProbArgs,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Stream index for independent samples under one seed.
    #[arg(long, default_value_t = 0)]
    pub replica: u64,
    /// JSON report output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// DIMACS of the sampled subgraph.
    #[arg(long)]
    pub dimacs: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EventsArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[command(flatten)]
    pub prob: ProbArgs,
    /// Include cycle events of lengths 3..=k.
    #[arg(long)]
    pub k: Option<u32>,
    /// Include independent-set events for all l-subsets.
    #[arg(long)]
    pub l: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_EVENT_GUARD)]
    pub guard: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct LllArgs {
    /// Event system JSON.
    #[arg(long)]
    pub events: PathBuf,
    /// Assignment JSON `{style, multipliers}`.
    #[arg(
        long,
        required_unless_present = "paper_multipliers",
        conflicts_with = "paper_multipliers"
    )]
    pub assignment: Option<PathBuf>,
    /// Use the construction's multipliers (needs `n` and `p` in the event file).
    #[arg(long)]
    pub paper_multipliers: bool,
    /// Exponent slack `f` of the construction's multipliers.
    #[arg(long, default_value_t = 0.0)]
    pub f: f64,
    #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
    pub tolerance: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ParamsArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub delta: f64,
    /// Dimension parameter used for `l` and `p`.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long, default_value_t = 3)]
    pub k_min: u32,
    #[arg(long, default_value_t = 10)]
    pub k_max: u32,
    #[arg(long)]
    pub delta: f64,
    /// Comma-separated epsilon grid.
    #[arg(long, value_delimiter = ',', default_value = "0.1,0.2,0.3,0.5,1,2")]
    pub epsilon: Vec<f64>,
    /// Comma-separated f grid.
    #[arg(long, value_delimiter = ',', default_value = "0,0.01,0.1,0.5")]
    pub f: Vec<f64>,
    /// Tab-separated table instead of JSON.
    #[arg(long)]
    pub tsv: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Sample once, delete an edge from every short cycle.
    Delete,
    /// Moser–Tardos resampling.
    Mt,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub base: BaseArgs,
    #[command(flatten)]
    pub prob: ProbArgs,
    /// Forbid cycles of length at most k.
    #[arg(long)]
    pub k: u32,
    /// Required independence bound (default: certify the exact value).
    #[arg(long)]
    pub l: Option<u64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Method::Delete)]
    pub method: Method,
    /// Restarts with seeds seed, seed+1, ...; the first success in seed
    /// order wins.
    #[arg(long, default_value_t = 1)]
    pub restarts: u64,
    /// Worker threads for restarts (0: all cores).
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub max_resamples: u64,
    /// Add independent-set events to Moser–Tardos (needs `--l`).
    #[arg(long)]
    pub subset_events: bool,
    #[arg(long, default_value_t = DEFAULT_EVENT_GUARD)]
    pub guard: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CertifyArgs {
    /// Certificate JSON to re-verify.
    #[arg(long, conflicts_with_all = ["mask", "mask_file"])]
    pub cert: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_MAX_DIMENSION)]
    pub max_dim: u32,
    /// Edge mask as hex.
    #[arg(long, conflicts_with = "mask_file")]
    pub mask: Option<String>,
    /// File holding the hex edge mask.
    #[arg(long)]
    pub mask_file: Option<PathBuf>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub l: Option<u64>,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// Certificate JSON whose subgraph is exported.
    #[arg(long, conflicts_with = "mask")]
    pub cert: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_MAX_DIMENSION)]
    pub max_dim: u32,
    #[arg(long)]
    pub mask: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
