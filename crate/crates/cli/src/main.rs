//! `morsekit`: build complexes, transform them, run seeded Morse spectra and
//! verify results.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 unparsable input,
//! 3 failed consistency check.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use morsekit_core::morse::Strategy;

#[derive(Debug, Parser)]
#[command(name = "morsekit", version, about = "Discrete Morse spectra of simplicial complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a named complex as a facet file.
    Build(BuildArgs),
    /// Run many seeded deconstructions and report the observed Morse vectors.
    Spectrum(SpectrumArgs),
    /// Apply an operator to a complex.
    Transform(TransformArgs),
    /// Check properties of a complex.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BuildName {
    Simplex,
    #[value(name = "simplex_boundary")]
    SimplexBoundary,
    #[value(name = "cross_polytope")]
    CrossPolytope,
    Antiprism,
    Sigma,
    #[value(name = "two_optima")]
    TwoOptima,
    #[value(name = "sigma2_sigma3prime")]
    Sigma2Sigma3Prime,
    #[value(name = "E")]
    E,
    #[value(name = "dunce_hat")]
    DunceHat,
    Poincare,
    #[value(name = "pipeline_5manifold")]
    Pipeline5Manifold,
}

#[derive(Debug, Args)]
struct BuildArgs {
    name: BuildName,
    /// Dimension parameter for simplex, cross_polytope, antiprism, sigma and E.
    #[arg(long, short)]
    dim: Option<usize>,
    /// Output facet file; standard output when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Comma-separated pull order on the cube vertices (antiprism, sigma).
    #[arg(long, value_delimiter = ',')]
    pull_order: Option<Vec<u32>>,
    /// Stage report for pipeline_5manifold (JSON); standard output when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Boundary facet file for pipeline_5manifold; defaults to
    /// `<output>.boundary` next to the output.
    #[arg(long)]
    boundary: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
struct SpectrumArgs {
    input: PathBuf,
    #[arg(long, default_value = "random", value_parser = parse_strategy)]
    strategy: Strategy,
    #[arg(long, default_value_t = 1000)]
    runs: u64,
    /// Master seed; run i uses a seed derived from it.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse().map_err(|e: morsekit_core::morse::UnknownStrategy| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    Sd,
    Cone,
    Suspension,
    Opsusp,
    #[value(name = "product_I")]
    ProductI,
    Stellar,
    Stack,
    Link,
    Star,
    Delete,
    Boundary,
    Quotient,
    Contract,
}

#[derive(Debug, Args)]
struct TransformArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    op: Op,
    /// Face argument, comma-separated (stellar, stack, link, star, contract).
    #[arg(long, value_delimiter = ',')]
    face: Option<Vec<u32>>,
    /// Vertex argument (opsusp, delete).
    #[arg(long)]
    vertex: Option<u32>,
    /// New vertex for cone and stellar moves; defaults to max + 1.
    #[arg(long)]
    fresh: Option<u32>,
    /// Iterations for sd.
    #[arg(long, default_value_t = 1)]
    iterations: usize,
    /// Vertex map for quotient as `a=b,c=d`; unlisted vertices stay fixed.
    #[arg(long)]
    map: Option<String>,
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Fvector,
    Homology,
    #[value(name = "free-faces")]
    FreeFaces,
    #[value(name = "morse-check")]
    MorseCheck,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    input: PathBuf,
    #[arg(long, value_enum)]
    mode: Mode,
    /// Morse vector for morse-check, comma-separated.
    #[arg(long, value_delimiter = ',')]
    vector: Option<Vec<u64>>,
    /// Largest face count for integer homology.
    #[arg(long, env = "MORSEKIT_SIZE_LIMIT", default_value_t = morsekit_core::verify::DEFAULT_SIZE_LIMIT)]
    size_limit: usize,
    /// Compute Betti numbers over GF(p) instead of the integers.
    #[arg(long)]
    prime: Option<u64>,
    /// Node budget for the exhaustive oracles.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: ReportFormat,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("morsekit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
