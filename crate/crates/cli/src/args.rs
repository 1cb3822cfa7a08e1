use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

/// Exact triangle cover / triangle-independent experiments.
#[derive(Parser, Debug, Serialize)]
#[command(name = "tritau", version, about)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct Common {
    /// Branch-and-bound node limit per solve (0 = unlimited).
    #[arg(long, global = true, default_value_t = 200_000)]
    pub budget_nodes: u64,
    /// Wall-clock limit per solve in seconds (0 = unlimited). Makes output
    /// timing-dependent when it triggers.
    #[arg(long, global = true, default_value_t = 0.0)]
    pub budget_secs: f64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads across independent runs.
    #[arg(long, global = true, default_value_t = 1)]
    pub parallel: usize,
    /// Exit with status 3 if any solve ends without a certified optimum.
    #[arg(long, global = true)]
    pub require_exact: bool,
    /// Include wall-clock seconds in reports.
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Generate graphs as graph6 lines.
    Gen(GenArgs),
    /// Solve one problem on every graph of a graph6 file.
    Solve(SolveArgs),
    /// Run a construction pipeline.
    #[command(subcommand)]
    Construct(ConstructCmd),
    /// Run a verification check.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Grid of construction runs as a csv table.
    Sweep(SweepArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum GraphKind {
    Gnp,
    /// `G(n, n^-θ)` with an inclusion-minimal triangle cover removed.
    Trifree,
    /// Triangle-free with small independence number (local search).
    LowAlpha,
    Complete,
    Empty,
    Cycle,
    Path,
    /// `K_{a,b}`.
    Bipartite,
}

#[derive(Args, Debug, Serialize)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: GraphKind,
    #[arg(long)]
    pub n: usize,
    /// Edge probability; defaults to n^-θ.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 0.75)]
    pub theta: f64,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    #[arg(long, default_value_t = tritau_core::constructions::DEFAULT_EFFORT)]
    pub effort: u64,
    /// Number of graphs, with seeds seed, seed+1, ...
    #[arg(long, default_value_t = 1)]
    pub count: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum ProblemArg {
    Tau,
    Alpha1,
    Alpha,
    Phi,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Branch and bound.
    Bnb,
    /// Exhaustive enumeration.
    Oracle,
    /// `τ(K̄_k ∨ G)` for triangle-free input `G`, via `max φ_k(G)`.
    Join,
}

#[derive(Args, Debug, Serialize)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub problem: ProblemArg,
    #[arg(long = "in")]
    pub input: PathBuf,
    /// `k` for `phi`, hub count for `--method join`.
    #[arg(long)]
    pub k: Option<f64>,
    #[arg(long, value_enum, default_value_t = Method::Bnb)]
    pub method: Method,
    #[arg(long, default_value_t = 1 << 20)]
    pub oracle_limit: u64,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructCmd {
    /// Cleaned random graph, the join with ⌊k⌋ hubs and its ratios.
    Egt(EgtArgs),
    /// `K₁ ∨ H` for a triangle-free `H` of small independence number.
    Norin(NorinArgs),
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct PipelineArgs {
    #[arg(long, default_value_t = 0.75)]
    pub theta: f64,
    /// Constant in the reported margin `α₁ + c·τ - |E|`.
    #[arg(long, default_value_t = 1.5)]
    pub c: f64,
    /// Attempt an exact `α₁(H)` when `|E(H)| ≤ 2000`.
    #[arg(long)]
    pub alpha1_exact: bool,
    #[arg(long, default_value_t = 200_000)]
    pub alpha1_budget_nodes: u64,
    /// Also solve `τ(H)` directly on the join.
    #[arg(long)]
    pub direct_tau: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct EgtArgs {
    #[arg(long)]
    pub n: usize,
    /// Defaults to the maximizer of the min-ratio prediction.
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct NorinArgs {
    #[arg(long, default_value_t = 100)]
    pub n: usize,
    /// Rational `c > 1`, such as `3/2` or `1.5`.
    #[arg(long, default_value = "3/2")]
    pub c: String,
    #[arg(long, default_value_t = tritau_core::constructions::DEFAULT_EFFORT)]
    pub effort: u64,
    /// Use the first graph of this file as `H` instead of searching.
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerifyCmd {
    /// `α₁ + τ ≤ m`, `4(α₁ + τ) ≤ n²`, `2τ ≤ m`.
    Suite(SuiteArgs),
    /// `τ(K̄_k ∨ G) = nk - max φ_k(G)` on small triangle-free graphs.
    Tritau(TritauArgs),
    /// `α₁ + τ = n²/4` for `K_n`, `K_{n/2,n/2}` and the `K_s ⊔ K_{t,t}` baseline.
    Tightness(TightnessArgs),
    /// Search for sparse large vertex subsets.
    Density(DensityArgs),
    /// `max φ_k ≤ k²/(2(1-ε)p)`.
    Phibound(PhiboundArgs),
}

#[derive(Args, Debug, Serialize)]
pub struct SuiteArgs {
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Number of seeded `G(n, p)` graphs with `n` cycling over 1..=max-n.
    #[arg(long, default_value_t = 0)]
    pub random: u64,
    #[arg(long, default_value_t = 9)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
}

#[derive(Args, Debug, Serialize)]
pub struct TritauArgs {
    #[arg(long, default_value_t = 5)]
    pub exhaustive_n: usize,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    pub k: Vec<usize>,
    /// Extra sampled triangle-free graphs.
    #[arg(long, default_value_t = 0)]
    pub sample: usize,
    #[arg(long, default_value_t = 6)]
    pub sample_min_n: usize,
    #[arg(long, default_value_t = 8)]
    pub sample_max_n: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct TightnessArgs {
    #[arg(long, default_value_t = 6)]
    pub n: usize,
    #[arg(long, default_value_t = 8)]
    pub s: usize,
    #[arg(long, default_value_t = 3)]
    pub t: usize,
    #[arg(long, default_value_t = 1 << 20)]
    pub oracle_limit: u64,
}

/// Input graphs: a file, or `count` seeded samples of order `n`.
#[derive(Args, Debug, Clone, Serialize)]
pub struct GraphSource {
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0.75)]
    pub theta: f64,
    /// Edge probability; defaults to n^-θ.
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub count: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct DensityArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    #[arg(long, default_value_t = 20_000)]
    pub effort: u64,
}

#[derive(Args, Debug, Serialize)]
pub struct PhiboundArgs {
    #[command(flatten)]
    pub source: GraphSource,
    #[arg(long)]
    pub d: Option<f64>,
    #[arg(long, default_value_t = 0.5)]
    pub eps: f64,
    /// Remove a triangle cover from sampled graphs first.
    #[arg(long)]
    pub clean: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum ObjectiveArg {
    MinRatio,
    SumRatio,
}

#[derive(Args, Debug, Serialize)]
pub struct SweepArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    pub n: Vec<usize>,
    /// Defaults to the optimal `d` for `--objective`.
    #[arg(long, value_delimiter = ',')]
    pub d: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    pub eps: Vec<f64>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub seeds: Vec<u64>,
    #[arg(long, value_enum, default_value_t = ObjectiveArg::MinRatio)]
    pub objective: ObjectiveArg,
    #[command(flatten)]
    pub pipeline: PipelineArgs,
}
