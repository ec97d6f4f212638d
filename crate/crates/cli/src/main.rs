//! `wiener`: Wiener index, order/size/diameter lower bound, and bound
//! verification from the command line.
//!
//! Exit codes: 0 success, 1 bound violation found, 2 input or usage error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "wiener", version, about = "Wiener index and its order/size/diameter lower bound")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    G6,
    Edgelist,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Wiener index, diameter and bound for each input graph.
    Compute(ComputeArgs),
    /// Evaluate the bound from (n, m, d) or (n, m, delta).
    Bound(BoundArgs),
    /// Check the bound over a sweep of graphs.
    Verify(VerifyArgs),
    /// Print a named graph.
    Generate(GenerateArgs),
    /// Sharpness and monotonicity scans.
    #[command(subcommand)]
    Scan(ScanCommand),
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Input file; stdin when omitted or "-".
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "g6")]
    pub format: Format,
    /// Line-delimited JSON instead of a table.
    #[arg(long)]
    pub json: bool,
    /// Report disconnected graphs (wiener: null) instead of failing.
    #[arg(long)]
    pub allow_disconnected: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    /// Diameter.
    #[arg(long, conflicts_with = "delta", required_unless_present = "delta")]
    pub d: Option<u64>,
    /// Maximum degree; the diameter is bounded below through the Moore bound.
    #[arg(long)]
    pub delta: Option<u64>,
    /// Print each term of the bound.
    #[arg(long)]
    pub trace: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["exhaustive", "stream", "random"])))]
pub struct VerifyArgs {
    /// Every labeled graph on this many vertices (2..=7).
    #[arg(long, value_name = "N")]
    pub exhaustive: Option<usize>,
    /// graph6 file, one graph per line ("-" for stdin).
    #[arg(long, value_name = "FILE")]
    pub stream: Option<PathBuf>,
    /// Number of seeded random connected graphs.
    #[arg(long, value_name = "COUNT", requires = "order")]
    pub random: Option<u64>,
    /// Largest order for --random.
    #[arg(long, value_name = "N")]
    pub order: Option<usize>,
    /// Smallest order for --random (defaults to --order).
    #[arg(long, value_name = "N")]
    pub min_order: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip unparsable stream lines instead of failing.
    #[arg(long)]
    pub skip_invalid: bool,
    /// Run on a single thread.
    #[arg(long)]
    pub sequential: bool,
    /// Maximum number of tight graph6 examples kept.
    #[arg(long, default_value_t = wiener_core::verifier::DEFAULT_EXAMPLE_CAP)]
    pub examples: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    Path,
    Cycle,
    Star,
    Complete,
    Prism,
    Petersen,
    Random,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: GenFamily,
    /// Order (path, cycle, complete, random) or leaf count (star).
    pub param: Option<usize>,
    #[arg(long, value_enum, default_value = "g6")]
    pub emit: Format,
    /// Extra-edge probability for random graphs.
    #[arg(long, default_value_t = 0.1)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum ScanCommand {
    /// Evaluate a witness family over a parameter range.
    Sharpness(SharpnessArgs),
    /// Bound as a function of d for fixed n and m.
    Monotonicity(MonotonicityArgs),
}

#[derive(Debug, Args)]
pub struct SharpnessArgs {
    /// path, star, prism or petersen.
    pub family: String,
    #[arg(long, default_value_t = 3)]
    pub from: usize,
    #[arg(long, default_value_t = 12)]
    pub to: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MonotonicityArgs {
    #[arg(long)]
    pub n: u64,
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub json: bool,
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(raw) = std::env::var("WIENER_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| anyhow::anyhow!("WIENER_THREADS must be a nonnegative integer, got {raw:?}"))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e:#}");
        return ExitCode::from(2);
    }
    let result = match cli.command {
        Command::Compute(args) => commands::compute(&args),
        Command::Bound(args) => commands::bound(&args),
        Command::Verify(args) => commands::verify(&args),
        Command::Generate(args) => commands::generate(&args),
        Command::Scan(ScanCommand::Sharpness(args)) => commands::sharpness(&args),
        Command::Scan(ScanCommand::Monotonicity(args)) => commands::monotonicity(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) if output::is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
