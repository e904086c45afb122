//! Command-line arguments. Every command is serde-serializable, so a run can
//! be written out with `--print-config` and replayed with `--config`.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Debug, Parser)]
#[command(name = "symperm", version, about = "Symmetrized random permutations, last-passage percolation and Tracy–Widom laws")]
pub struct Cli {
    /// Worker threads for sampling (results do not depend on it).
    #[arg(long, global = true, env = "SYMPERM_THREADS")]
    pub threads: Option<usize>,

    /// Output file (standard output if omitted).
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Replay a configuration written by `--print-config`.
    #[arg(long, conflicts_with = "print_config")]
    pub config: Option<PathBuf>,

    /// Print the configuration as JSON instead of running it.
    #[arg(long, global = true)]
    pub print_config: bool,

    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

/// A complete, reproducible experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    #[serde(flatten)]
    pub command: Command,
    pub output: Option<PathBuf>,
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Sample LIS values of a symmetrized ensemble (raw and χ-scaled CSV).
    Sample(SampleArgs),
    /// Exact law of the LIS of a small ensemble.
    Exact(ExactArgs),
    /// Tabulate F1, F2, F4 and optionally F^□(·;w), F^⊠(·;w).
    Twtable(TwTableArgs),
    /// Sample last-passage values G(N) (raw and scaled CSV).
    Lpp(LppArgs),
    /// Random-turn walker histories and their tableaux.
    Walk(WalkArgs),
    /// KS distance and moments of a sample against a distribution table.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct EnsembleArgs {
    /// plain, invol, anti-invol, signed or signed-invol.
    #[arg(long)]
    pub symmetry: String,
    #[arg(long)]
    pub n: usize,
    /// Boundary points for invol / anti-invol.
    #[arg(long)]
    pub m: Option<usize>,
    /// Diagonal points m₊ for signed-invol.
    #[arg(long)]
    pub m_plus: Option<usize>,
    /// Anti-diagonal points m₋ for signed-invol.
    #[arg(long)]
    pub m_minus: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SampleArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    /// Set the boundary counts from α: m = [√(2n)α] (invol), m₊ = [√n α].
    #[arg(long, conflicts_with_all = ["m", "m_plus", "w"])]
    pub alpha: Option<f64>,
    /// Set the boundary counts from β: m = [√(2n)β] (anti-invol), m₋ = [√n β].
    #[arg(long, conflicts_with_all = ["m", "m_minus"])]
    pub beta: Option<f64>,
    /// Transition regime: m = [√(2n) − 2w(2n)^{1/3}] (invol), m₊ = [√n − 2wn^{1/3}].
    #[arg(long, conflicts_with_all = ["m", "m_plus"])]
    pub w: Option<f64>,
    /// Uniform involutions of n letters with any number of fixed points.
    #[arg(long)]
    pub unconstrained: bool,
    /// Scale by the Gaussian-regime normalization for this α > 1.
    #[arg(long)]
    pub gaussian: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExactMethod {
    /// RSK where it is implemented (□, ○, ◇), enumeration otherwise.
    Auto,
    Rsk,
    Brute,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ExactArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    /// RSK/hook-length sums (□, ○, ◇) or exhaustive enumeration.
    #[arg(long, value_enum, default_value_t = ExactMethod::Auto)]
    pub method: ExactMethod,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct TwTableArgs {
    #[arg(long, default_value_t = -8.0, allow_hyphen_values = true)]
    pub x_min: f64,
    #[arg(long, default_value_t = 6.0, allow_hyphen_values = true)]
    pub x_max: f64,
    #[arg(long, default_value_t = 0.05)]
    pub step: f64,
    /// Add the interpolating laws at this w (repeatable).
    #[arg(long, allow_hyphen_values = true)]
    pub w: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct LppArgs {
    /// plain, invol, anti-invol, signed or signed-invol.
    #[arg(long)]
    pub model: String,
    #[arg(long = "N", alias = "side")]
    #[serde(rename = "N")]
    pub side: usize,
    #[arg(long)]
    pub q: f64,
    #[arg(long, default_value_t = 0.0, conflicts_with = "w")]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0)]
    pub beta: f64,
    /// Transition regime: α from w (invol, signed-invol).
    #[arg(long, allow_hyphen_values = true)]
    pub w: Option<f64>,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct WalkArgs {
    #[arg(long)]
    pub steps: usize,
    /// Number of particles (unbounded if omitted).
    #[arg(long)]
    pub particles: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct CompareArgs {
    /// Sample CSV (column `scaled`, or one value per line).
    #[arg(long)]
    pub sample: PathBuf,
    /// Distribution table written by `twtable`.
    #[arg(long)]
    pub table: PathBuf,
    /// Table column used as the reference distribution function.
    #[arg(long)]
    pub column: String,
    /// Seed of the sample, recorded in the summary.
    #[arg(long)]
    pub seed: Option<u64>,
}
