use std::path::PathBuf;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rgsmooth",
    version,
    about = "Renormalization-group smoothing of point sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Smooth and compress an ordered point sequence read from CSV.
    Smooth(SmoothArgs),
    /// Write a synthetic noisy signal as CSV.
    Generate(GenerateArgs),
}

/// Number of smoothing steps, or `max` for as many as the input allows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepsArg {
    Count(usize),
    Max,
}

impl FromStr for StepsArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("max") {
            return Ok(StepsArg::Max);
        }
        s.parse()
            .map(StepsArg::Count)
            .map_err(|_| format!("expected a non-negative integer or `max`, got {s:?}"))
    }
}

#[derive(Debug, Clone, Args)]
#[command(group(ArgGroup::new("amount").required(true).args(["steps", "target_cr"])))]
pub struct SmoothArgs {
    /// Input CSV, one point per row; stdin when omitted.
    #[arg(long)]
    pub input: Option<PathBuf>,

    /// Output CSV; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,

    /// Number of smoothing steps (`max` = points - 2).
    #[arg(long)]
    pub steps: Option<StepsArg>,

    /// Smallest step count reaching this compression ratio, in percent.
    #[arg(long = "target-cr", value_name = "PCT")]
    pub target_cr: Option<f64>,

    /// Also write an SVG overlay of input and output.
    #[arg(long)]
    pub svg: Option<PathBuf>,

    /// Coordinate axes plotted in the SVG.
    #[arg(long, value_delimiter = ',', num_args = 2, default_values_t = [0, 1])]
    pub axes: Vec<usize>,

    #[arg(long, default_value_t = ',')]
    pub delimiter: char,

    /// Input has a header row (one is written to the output as well).
    #[arg(long)]
    pub header: bool,

    /// Zero-based columns to use as coordinates; all columns by default.
    #[arg(long, value_delimiter = ',')]
    pub columns: Option<Vec<usize>>,

    /// Print the per-step schedule to stderr.
    #[arg(long)]
    pub trace: bool,

    /// Clamp an oversized step count to the maximum instead of failing.
    #[arg(long)]
    pub clamp: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignalKind {
    /// `sin(x)` plus seeded Gaussian noise.
    SineNoise,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum, default_value_t = SignalKind::SineNoise)]
    pub kind: SignalKind,

    /// Number of points.
    #[arg(long, default_value_t = 101)]
    pub n: usize,

    /// Right end of the regular x grid starting at 0.
    #[arg(long = "x-max", default_value_t = 20.0)]
    pub x_max: f64,

    /// Standard deviation of the additive noise.
    #[arg(long, default_value_t = 0.3)]
    pub sigma: f64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Output CSV; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}
