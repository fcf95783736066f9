mod commands;
mod error;
mod runner;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

/// Exact tools for K_{2,t}-bootstrap percolation.
#[derive(Parser)]
#[command(name = "perclab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a gadget graph as an edge list with role comments.
    Gadget(GadgetArgs),
    /// Compute the K_{2,t} closure of a graph.
    Close(CloseArgs),
    /// Maximum subgraph density with a witness set.
    Density(DensityArgs),
    /// Print eta(t) as a reduced fraction.
    Eta(EtaArgs),
    /// Densities of the seven candidate vertex sets of H_t.
    Seven(SevenArgs),
    /// Build and verify a non-percolation witness.
    Witness(WitnessArgs),
    /// Estimate the critical probability by bisection.
    Pc(PcArgs),
    /// Percolation frequency over a grid of probabilities.
    Curve(CurveArgs),
    /// Estimate p_c for several n and fit the exponent.
    Exponent(ExponentArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file; stdin when absent or "-".
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output file; stdout when absent or "-".
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    /// s copies of K_{2,r} glued at one vertex; params r,s.
    Fan,
    /// H_t; params t.
    Ht,
    /// fan(t-1, t-2); params t.
    Remark,
    /// K_{a,b}; params a,b.
    Kst,
    /// Complete split graph; params i,c.
    Split,
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long, value_enum)]
    kind: GadgetKind,
    /// Comma-separated integer parameters.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    params: Vec<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CloseFormat {
    Edgelist,
    Json,
}

#[derive(Args)]
struct CloseArgs {
    #[arg(long)]
    t: usize,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Write the step-by-step certificate trace as JSON.
    #[arg(long, value_name = "FILE")]
    trace: Option<PathBuf>,
    /// Use the round scheduler and record rounds in the trace.
    #[arg(long, requires = "trace")]
    rounds: bool,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: CloseFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum DensityMethod {
    /// Brute force up to 26 vertices, flow beyond.
    Auto,
    Brute,
    Flow,
}

#[derive(Args)]
struct DensityArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long, value_enum, default_value = "auto")]
    method: DensityMethod,
}

#[derive(Args)]
struct EtaArgs {
    #[arg(long)]
    t: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Args)]
struct SevenArgs {
    #[arg(long)]
    t: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WitnessMode {
    /// Greedy disjoint K_{2,t-1} family, any t >= 4.
    General,
    /// Component growth procedure for t = 4.
    T4,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    t: usize,
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
    /// Defaults to t4 when t = 4 and general otherwise.
    #[arg(long, value_enum)]
    mode: Option<WitnessMode>,
}

#[derive(Args)]
struct PcArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    /// Trials per bisection step.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Stop once p_hi - p_lo < tol * p_hat.
    #[arg(long, default_value_t = 0.05)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Percolation frequency to locate.
    #[arg(long, default_value_t = 0.5)]
    target: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    /// Linear grid lo:hi:steps, both ends included.
    #[arg(long, value_name = "LO:HI:STEPS")]
    pgrid: String,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ExponentArgs {
    #[arg(long)]
    t: usize,
    /// Comma-separated vertex counts.
    #[arg(long, value_delimiter = ',', num_args = 1.., default_value = "200,400,800,1600")]
    ns: Vec<usize>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0.05)]
    tol: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    output: OutputArgs,
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gadget(a) => commands::gadget(a),
        Command::Close(a) => commands::close(a),
        Command::Density(a) => commands::density(a),
        Command::Eta(a) => commands::eta(a),
        Command::Seven(a) => commands::seven(a),
        Command::Witness(a) => commands::witness(a),
        Command::Pc(a) => commands::pc(a),
        Command::Curve(a) => commands::curve(a),
        Command::Exponent(a) => commands::exponent(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("perclab: {e}");
            ExitCode::from(e.code())
        }
    }
}
