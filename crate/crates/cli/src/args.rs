use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "ramlab", version, about = "Random-walk mixing experiments on regular graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and write it as an edge list with a provenance sidecar.
    Build(GraphCmd),
    /// Diameter, girth and distance profiles.
    Metrics(MetricsCmd),
    /// Mixing curves of the simple or nonbacktracking walk.
    Mix(MixCmd),
    /// Empirical total-variation cutoff profile against the predicted one.
    Profile(ProfileCmd),
    /// Adjacency spectrum and its certificate.
    Spectrum(SpectrumCmd),
    /// Block decomposition of the nonbacktracking operator, with residuals.
    Decompose(DecomposeCmd),
    /// Ramanujan / weakly Ramanujan certificate.
    Certify(SpectrumCmd),
    /// Closed-form predictions for given n and d.
    Theory(TheoryCmd),
    /// Radial law of the simple walk on the d-regular tree.
    Tree(TreeCmd),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Lps,
    RandomRegular,
    Lift,
    Named,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelArg {
    Srw,
    Nbrw,
}

/// Where the graph comes from: a family with parameters, or a file.
#[derive(Debug, Clone, Args, Serialize)]
pub struct GraphSource {
    /// Graph family.
    #[arg(long, value_enum, conflicts_with = "file", required_unless_present = "file")]
    pub family: Option<Family>,
    /// Edge-list file (a `<file>.json` provenance sidecar is read if present).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// LPS generator prime.
    #[arg(long)]
    pub p: Option<u64>,
    /// LPS field size.
    #[arg(long)]
    pub q: Option<u64>,
    /// Number of vertices (random-regular).
    #[arg(long)]
    pub n: Option<usize>,
    /// Degree (random-regular).
    #[arg(long)]
    pub d: Option<usize>,
    /// Named graph, e.g. `petersen`, `complete(4)`; also the base of a lift.
    #[arg(long)]
    pub name: Option<String>,
    /// Fiber size of a lift.
    #[arg(long)]
    pub cover: Option<usize>,
    /// Seed for randomized builders and start sampling.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct Output {
    /// Output directory, created if missing.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct GraphCmd {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct MetricsCmd {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub output: Output,
    /// Number of BFS sources for distance profiles.
    #[arg(long, default_value_t = 10)]
    pub sources: usize,
    /// Half-width of the window around log_{d-1} n; defaults to
    /// 3 log_{d-1} ln n.
    #[arg(long)]
    pub window: Option<f64>,
}

#[derive(Debug, Args)]
pub struct MixCmd {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub output: Output,
    #[arg(long, value_enum, default_value = "srw")]
    pub kernel: KernelArg,
    /// Average the first two steps (removes periodicity on bipartite graphs).
    #[arg(long)]
    pub lazy_first_step: bool,
    /// Record D_p for every integer p in 2..=PMAX.
    #[arg(long, conflicts_with = "lp")]
    pub pmax: Option<u32>,
    /// Explicit exponent list, e.g. `1.5,2,inf`.
    #[arg(long, value_delimiter = ',')]
    pub lp: Vec<String>,
    #[arg(long, default_value_t = 30)]
    pub tmax: usize,
    /// Single start state; otherwise the worst case over sampled starts.
    #[arg(long)]
    pub start: Option<usize>,
    /// Number of sampled starts when the state space is large.
    #[arg(long, default_value_t = ramlab::walk::DEFAULT_START_SAMPLE)]
    pub starts: usize,
    /// Also report the first time each column drops to this level.
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ProfileCmd {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub output: Output,
    /// Window offsets s at which t = round(t_star + s sqrt(log_{d-1} n)).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-2,-1,0,1,2")]
    pub s: Vec<f64>,
    #[arg(long, default_value_t = ramlab::walk::DEFAULT_START_SAMPLE)]
    pub starts: usize,
}

#[derive(Debug, Args)]
pub struct SpectrumCmd {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub output: Output,
    /// Largest order handled by the dense eigensolver.
    #[arg(long, default_value_t = ramlab::spectral::DENSE_CAP)]
    pub dense_cap: usize,
    /// Weak-Ramanujan margin accepted for certification.
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    /// Number of exceptional eigenvalues allowed.
    #[arg(long, default_value_t = 0)]
    pub exceptions: usize,
    /// Minimum spectral gap required of exceptional eigenvalues.
    #[arg(long, default_value_t = 1e-6)]
    pub gap_floor: f64,
}

#[derive(Debug, Args)]
pub struct DecomposeCmd {
    #[command(flatten)]
    pub source: GraphSource,
    #[command(flatten)]
    pub output: Output,
    /// Largest number of directed edges handled densely.
    #[arg(long, default_value_t = ramlab::spectral::DENSE_CAP)]
    pub dense_cap: usize,
}

#[derive(Debug, Args)]
pub struct TheoryCmd {
    #[command(flatten)]
    pub output: Output,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// L^p exponent (a number > 1 or `inf`).
    #[arg(long)]
    pub p: Option<String>,
    /// Second largest absolute eigenvalue, for diameter bounds.
    #[arg(long)]
    pub lambda: Option<f64>,
}

#[derive(Debug, Args)]
pub struct TreeCmd {
    #[command(flatten)]
    pub output: Output,
    #[arg(long)]
    pub d: usize,
    #[arg(long, default_value_t = 30)]
    pub tmax: usize,
    /// Also print exact rational probabilities.
    #[arg(long)]
    pub exact: bool,
}
