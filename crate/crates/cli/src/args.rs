use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kselect::{Method, Scheme};

use crate::input::LabelColumns;

#[derive(Debug, Parser)]
#[command(name = "kselect", version, about = "Choose the number of k-means clusters with effective degrees of freedom")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit k-means over a range of k on a CSV file and run the selectors.
    Select(SelectArgs),
    /// Replicated selection experiments on synthetic mixtures.
    Simulate(SimulateArgs),
    /// Degrees of freedom of fixed-k fits as the nuisance model size k' varies.
    DfCurve(DfCurveArgs),
    /// Sampling oracle versus plug-in degrees of freedom on a synthetic mixture.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.trim().parse().map_err(|e: kselect::Error| e.to_string())
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.trim().parse().map_err(|e: kselect::Error| e.to_string())
}

/// `a..b`, `a-b` or a single integer, inclusive.
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let s = s.trim();
    let (lo, hi) = match s.split_once("..").or_else(|| s.split_once('-')) {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range '{s}'"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range '{s}'"))?;
    if lo > hi {
        return Err(format!("empty range '{s}'"));
    }
    Ok(lo..=hi)
}

/// Output destination and shape, shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores). Results do not depend on it.
    #[arg(long)]
    pub threads: Option<usize>,
    /// Add wall-clock timings to the report (makes output non-reproducible).
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Args)]
pub struct FitArgs {
    #[arg(long, default_value_t = 1)]
    pub kmin: usize,
    #[arg(long, default_value_t = 30)]
    pub kmax: usize,
    /// Random restarts per k.
    #[arg(long, default_value_t = 10)]
    pub inits: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SelectorArgs {
    /// Comma-separated subset of: fk, gap, silhouette, jump, bic_naive, bic_edf.
    #[arg(long, value_delimiter = ',', value_parser = parse_method,
          default_value = "fk,gap,silhouette,jump,bic_naive,bic_edf")]
    pub methods: Vec<Method>,
    /// Smoothing bandwidth of the degrees-of-freedom curve, in units of k.
    #[arg(long, default_value_t = 3.0)]
    pub bandwidth: f64,
    /// Use the raw instead of the smoothed degrees-of-freedom curve.
    #[arg(long)]
    pub raw_df: bool,
    /// Reference datasets for the gap statistic.
    #[arg(long = "gap-B", default_value_t = 50)]
    pub gap_b: usize,
    /// Jump exponent (default d/2).
    #[arg(long)]
    pub jump_power: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// RFC-4180 CSV file; a header row is detected automatically.
    pub input: PathBuf,
    /// Label columns: last, first, none, or zero-based indices (comma list
    /// for several ground truths).
    #[arg(long, default_value = "none")]
    pub labels: LabelColumns,
    /// Scale every feature to unit variance (default).
    #[arg(long, overrides_with = "no_standardize")]
    pub standardize: bool,
    #[arg(long, overrides_with = "standardize")]
    pub no_standardize: bool,
}

impl InputArgs {
    pub fn standardize(&self) -> bool {
        !self.no_standardize
    }
}

#[derive(Debug, Clone, Args)]
pub struct MixtureArgs {
    #[arg(long, value_delimiter = ',', value_parser = parse_scheme, default_value = "assumptions_met")]
    pub scheme: Vec<Scheme>,
    /// Number of mixture components.
    #[arg(long, value_delimiter = ',', default_value = "5")]
    pub clusters: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "5")]
    pub dims: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1000")]
    pub n: Vec<usize>,
    /// Minimum distance between component means, in units of sigma.
    #[arg(long, default_value_t = 6.0)]
    pub separation: f64,
    #[arg(long, default_value_t = 1.0)]
    pub sigma: f64,
}

#[derive(Debug, Args)]
pub struct SelectArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub fit: FitArgs,
    #[command(flatten)]
    pub selectors: SelectorArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub mixture: MixtureArgs,
    #[arg(long, default_value_t = 30)]
    pub reps: usize,
    /// Write the first replicate's data (labels in the last column) here.
    #[arg(long)]
    pub dump: Option<PathBuf>,
    #[command(flatten)]
    pub fit: FitArgs,
    #[command(flatten)]
    pub selectors: SelectorArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DfCurveArgs {
    /// CSV file; without it a mixture is generated from the mixture flags.
    pub input: Option<PathBuf>,
    #[arg(long, default_value = "none")]
    pub labels: LabelColumns,
    #[arg(long, overrides_with = "no_standardize")]
    pub standardize: bool,
    #[arg(long, overrides_with = "standardize")]
    pub no_standardize: bool,
    #[command(flatten)]
    pub mixture: MixtureArgs,
    /// Model sizes whose degrees of freedom are estimated.
    #[arg(long, value_delimiter = ',', default_value = "5,10,15")]
    pub ks: Vec<usize>,
    /// Nuisance model sizes, e.g. 1..30.
    #[arg(long, value_parser = parse_range, default_value = "1..30")]
    pub kprime: RangeInclusive<usize>,
    #[arg(long, default_value_t = 10)]
    pub inits: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub mixture: MixtureArgs,
    /// Model sizes, e.g. 1..10.
    #[arg(long, value_parser = parse_range, default_value = "1..10")]
    pub ks: RangeInclusive<usize>,
    /// Nuisance model size (default: largest k + 1).
    #[arg(long)]
    pub kprime: Option<usize>,
    /// Sampled datasets.
    #[arg(long, default_value_t = 30)]
    pub reps: usize,
    #[arg(long, default_value_t = 10)]
    pub inits: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}
