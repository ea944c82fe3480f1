//! `waldron`: node generation, interpolation, Lebesgue benchmarks, spherical
//! spacing and concentric radii from the command line.
//!
//! Exit status is 0 on success, 2 on a usage error and 1 when a computation
//! fails. `WALDRON_THREADS` (or `--threads`) caps the worker pool.

mod cmd;
mod output;
mod parse;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use waldron::analysis::{FamilySpec, Grid};
use waldron::points::EdgeRule;
use waldron::{Scheme, Simplex64, Weight64};

use crate::output::Format;
use crate::parse::Degrees;

#[derive(Debug, Parser)]
#[command(name = "waldron", version, about = "Warped lattice interpolation nodes on simplices")]
struct Cli {
    /// Worker threads for the parallel lattice scans (default: all cores).
    #[arg(long, global = true, env = "WALDRON_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a node family.
    Gen(GenArgs),
    /// Interpolate a function and sample the interpolant on a lattice.
    Interp(InterpArgs),
    /// Convert points between barycentric and baryweight coordinates.
    Chart(ChartArgs),
    /// Lebesgue constants for families of nodes across degrees.
    Lebesgue(LebesgueArgs),
    /// Spacing of the spherical Waldron points.
    Spacing(SpacingArgs),
    /// Print or optimize the concentric triangle radii.
    Radii(RadiiArgs),
    /// Recompute both reference Lebesgue tables and diff them against the shipped values.
    ReproTables(ReproArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Simplex,
    Waldron,
    /// Waldron points on the tetrahedron with zero entries kept at zero.
    Waldron3m,
    Concentric,
    /// Spherical Waldron points on the positive octant.
    Spherical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EdgeArg {
    Chebyshev,
    Legendre,
}

impl From<EdgeArg> for EdgeRule {
    fn from(e: EdgeArg) -> Self {
        match e {
            EdgeArg::Chebyshev => EdgeRule::ChebyshevLobatto,
            EdgeArg::Legendre => EdgeRule::LegendreLobatto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SchemeArg {
    SimplexExplicit,
    WaldronExplicit,
    WaldronRational,
    Polynomial,
}

impl From<SchemeArg> for Scheme {
    fn from(s: SchemeArg) -> Self {
        match s {
            SchemeArg::SimplexExplicit => Scheme::SimplexExplicit,
            SchemeArg::WaldronExplicit => Scheme::WaldronExplicit,
            SchemeArg::WaldronRational => Scheme::WaldronRational,
            SchemeArg::Polynomial => Scheme::GeneralPolynomial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ChartTarget {
    /// λ (or x with --cartesian) to θ.
    Theta,
    /// θ to λ and x.
    Lambda,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StartArg {
    Neutral,
    Table,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output file (default: stdout).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ConcentricArgs {
    /// Inner radii R_1,…,R_s (default: the shipped table).
    #[arg(long, value_delimiter = ',')]
    pub radii: Option<Vec<f64>>,
    /// Edge rule on the outer triangle.
    #[arg(long, value_enum, default_value = "chebyshev")]
    pub outer_edges: EdgeArg,
    /// Edge rule on the inner triangles.
    #[arg(long, value_enum, default_value = "chebyshev")]
    pub inner_edges: EdgeArg,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum, default_value = "waldron")]
    pub family: FamilyArg,
    #[arg(long, default_value = "cosine", value_parser = parse::weight)]
    pub weight: Weight64,
    #[arg(short = 'n', long)]
    pub degree: usize,
    /// equilateral2d, tetrahedron, interval, unit2d, unit3d or vertices `x,y;x,y;x,y`
    /// (default: equilateral2d, tetrahedron for waldron3m).
    #[arg(long, value_parser = parse::simplex)]
    pub simplex: Option<Simplex64>,
    /// Reflect the spherical octant into all eight octants.
    #[arg(long)]
    pub full_sphere: bool,
    #[command(flatten)]
    pub concentric: ConcentricArgs,
    /// Also write a scatter plot of a planar family.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct InterpArgs {
    #[arg(long, value_enum, default_value = "polynomial")]
    pub scheme: SchemeArg,
    #[arg(long, value_enum, default_value = "waldron")]
    pub family: FamilyArg,
    #[arg(long, default_value = "cosine", value_parser = parse::weight)]
    pub weight: Weight64,
    #[arg(short = 'n', long, default_value_t = 5)]
    pub degree: usize,
    #[arg(long, value_parser = parse::simplex)]
    pub simplex: Option<Simplex64>,
    /// `f1` for sin(π|x|²), or a CSV whose last column holds the data at the nodes in `gen` order.
    #[arg(long = "fn", default_value = "f1")]
    pub function: String,
    /// Sample lattice subdivisions per edge.
    #[arg(long, default_value_t = 40)]
    pub samples: usize,
    #[command(flatten)]
    pub concentric: ConcentricArgs,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ChartArgs {
    #[arg(long, value_enum)]
    pub to: ChartTarget,
    #[arg(long, default_value = "cosine", value_parser = parse::weight)]
    pub weight: Weight64,
    #[arg(long, default_value = "equilateral2d", value_parser = parse::simplex)]
    pub simplex: Simplex64,
    /// Input CSV with a header row (default: stdin).
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Input rows are Cartesian points instead of barycentric coordinates.
    #[arg(long)]
    pub cartesian: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct LebesgueArgs {
    /// Comma-separated: simplex, concentric, waldron[:weight], waldron3m[:weight].
    #[arg(long, default_value = "simplex,waldron:cosine,concentric", value_delimiter = ',', value_parser = parse::family)]
    pub families: Vec<FamilySpec<f64>>,
    /// Degree list such as `1..16` or `1,2,5..8`.
    #[arg(long, default_value = "1..10", value_parser = parse::degrees)]
    pub degrees: Degrees,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(2..=3))]
    pub dim: u8,
    /// Lattice subdivisions per edge, or `auto` to double until stable.
    #[arg(long, default_value = "auto", value_parser = parse::grid)]
    pub grid: Grid,
    /// Add the rational Waldron scheme as a separate column for each Waldron family.
    #[arg(long)]
    pub rational: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SpacingArgs {
    #[arg(long, default_value = "cosine", value_parser = parse::weight)]
    pub weight: Weight64,
    /// Also measure nearest-neighbour spacing of the degree-n octant points.
    #[arg(short = 'n', long)]
    pub degree: Option<usize>,
    /// Lattice subdivisions for the extrema scan.
    #[arg(long, default_value_t = 200)]
    pub grid: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RadiiArgs {
    /// Print the shipped radii table.
    #[arg(long, conflicts_with_all = ["degrees", "start"])]
    pub table: bool,
    #[arg(long, default_value = "4..12", value_parser = parse::degrees)]
    pub degrees: Degrees,
    /// Optimizer start: the shipped table or R_i = ((s+1-i)/(s+1))^1.5.
    #[arg(long, value_enum, default_value = "neutral")]
    pub start: StartArg,
    #[arg(long, value_enum, default_value = "chebyshev")]
    pub outer_edges: EdgeArg,
    #[arg(long, value_enum, default_value = "chebyshev")]
    pub inner_edges: EdgeArg,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct ReproArgs {
    /// Only this dimension (default: both).
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
    pub dim: Option<u8>,
    /// Stop at this degree.
    #[arg(long)]
    pub max_degree: Option<usize>,
    #[arg(long, default_value = "auto", value_parser = parse::grid)]
    pub grid: Grid,
    /// Write the computed tables here as lebesgue_2d.csv and lebesgue_3d.csv.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    #[command(flatten)]
    pub out: OutputArgs,
}

/// A problem with the arguments found after parsing; exits with status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

pub fn usage<T>(msg: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(msg.into()).into())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    if let Some(n) = cli.threads {
        if n == 0 {
            return usage("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match cli.command {
        Command::Gen(a) => cmd::gen::run(a),
        Command::Interp(a) => cmd::interp::run(a),
        Command::Chart(a) => cmd::chart::run(a),
        Command::Lebesgue(a) => cmd::lebesgue::run(a),
        Command::Spacing(a) => cmd::spacing::run(a),
        Command::Radii(a) => cmd::radii::run(a),
        Command::ReproTables(a) => cmd::repro::run(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) if e.is::<Usage>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
