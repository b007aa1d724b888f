use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "nagumo-atlas",
    version,
    about = "Counts and continues periodic stationary patterns of the Nagumo lattice equation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form class counts and region totals as CSV.
    Count(CountArgs),
    /// Orbit classes of words under a symmetry group, by brute force.
    Orbits(OrbitsArgs),
    /// The equilibrium of a given type at one parameter point.
    Solve(SolveArgs),
    /// Upper boundary `d_max(a)` of a region over an a-grid, as CSV.
    Region(RegionArgs),
    /// Cross-check the formulas against enumeration and sweep the identities.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..=64))]
    pub n_max: u64,
    /// Only the region totals and Lyndon D^π counts, rows n = 2..n_max.
    #[arg(long)]
    pub table1: bool,
    /// Restrict to one alphabet (a2 or a3).
    #[arg(long)]
    pub alphabet: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OrbitsArgs {
    /// Word length; may also be written into the group name (`d6pi`).
    #[arg(short = 'n', long)]
    pub n: Option<usize>,
    #[arg(long, default_value = "a3")]
    pub alphabet: String,
    /// c, d, cpi or dpi, optionally with the length: c3, d6pi.
    #[arg(long)]
    pub group: String,
    /// Only words whose primitive period is n.
    #[arg(long)]
    pub lyndon: bool,
    /// Also list every member of each class.
    #[arg(long)]
    pub full: bool,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub word: String,
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub d: f64,
    /// Newton tolerance on the max-norm residual.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    #[arg(long)]
    pub word: String,
    #[arg(long, default_value_t = 0.005)]
    pub a_min: f64,
    #[arg(long, default_value_t = 0.995)]
    pub a_max: f64,
    #[arg(long, default_value_t = 199)]
    pub a_count: usize,
    #[arg(long, default_value_t = nagumo_atlas::regions::DEFAULT_D_CAP)]
    pub d_cap: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Second word whose boundary is compared pointwise.
    #[arg(long)]
    pub compare: Option<String>,
    /// Evaluate the compared word at 1 - a. Without --compare it defaults to
    /// the value-swapped word.
    #[arg(long)]
    pub mirror: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Skip enumeration; only run the arithmetic identities.
    #[arg(long)]
    pub identities_only: bool,
    /// Upper end of the identity sweep.
    #[arg(long, default_value_t = 10_000)]
    pub n_max: u64,
    #[arg(long, default_value_t = 12)]
    pub a2_max: usize,
    #[arg(long, default_value_t = 8)]
    pub a3_max: usize,
    /// Seed for the randomized Möbius round trips.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
