mod commands;
mod report;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "ballcut", version, about = "Balanced separators for disjoint unit balls")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Gen(GenArgs),
    /// Compute a separator and print it as JSON.
    Halve(HalveArgs),
    /// Check a hyperplane against an instance.
    Verify(VerifyArgs),
    /// Time an algorithm over a range of sizes and write CSV.
    Bench(BenchArgs),
    /// Draw an instance, a result, and optionally a planar trace as SVG.
    Plot(PlotArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    Grid,
    Clusters,
    Row,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// Direction search, any dimension.
    Nd,
    /// Exact halving line, plane only.
    Planar,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Nd => "nd",
            Algo::Planar => "planar",
        }
    }
}

#[derive(Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    #[arg(long, value_enum, default_value_t = Layout::Grid)]
    pub layout: Layout,
    /// Grid side length (grid layout).
    #[arg(long, conflicts_with = "n")]
    pub side: Option<usize>,
    /// Number of balls.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 2.5)]
    pub spacing: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of clusters (clusters layout).
    #[arg(long, default_value_t = 4)]
    pub clusters: usize,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Args, Clone)]
pub struct SeparatorArgs {
    #[arg(long, value_enum, default_value_t = Algo::Planar)]
    pub algo: Algo,
    /// Balance parameter in (0, 1/2) for the nd algorithm.
    #[arg(long, conflicts_with = "f_log")]
    pub alpha: Option<f64>,
    /// Use f(n) = log2(n) for the nd algorithm.
    #[arg(long)]
    pub f_log: bool,
    #[arg(long, default_value_t = 0.25)]
    pub gamma: f64,
    #[arg(long, default_value_t = 0.25)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 24)]
    pub min_lines: usize,
    /// Pick the best of 33 points in the final slab.
    #[arg(long)]
    pub optimize_finish: bool,
    /// Report zero for all timings, so output is reproducible byte for byte.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Args)]
pub struct HalveArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[command(flatten)]
    pub sep: SeparatorArgs,
    /// Write one JSON object per iteration here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Comma-separated normal; need not be unit length.
    #[arg(long, allow_hyphen_values = true)]
    pub normal: String,
    #[arg(long, allow_hyphen_values = true)]
    pub offset: f64,
    /// Required count in each closed halfspace.
    #[arg(long)]
    pub m: usize,
}

#[derive(Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub sep: SeparatorArgs,
    #[arg(long, default_value_t = 2)]
    pub dim: usize,
    /// Comma-separated instance sizes.
    #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    /// CSV destination; stdout if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args)]
pub struct PlotArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Result JSON from `halve`.
    #[arg(long)]
    pub result: Option<PathBuf>,
    /// Planar trace from `halve --trace`; one extra SVG per iteration.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    // usage errors exit with 1; 2 is reserved for results carrying warnings
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Gen(a) => commands::gen(&a),
        Command::Halve(a) => commands::halve(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Bench(a) => commands::bench(&a),
        Command::Plot(a) => commands::plot(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
