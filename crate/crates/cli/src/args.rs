use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quasibell::{Exposure, Family, NoiseKind};

use crate::grid::GridSpec;

#[derive(Debug, Parser)]
#[command(
    name = "quasibell",
    version,
    about = "Teleportation fidelity through quasi Bell channels"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate every measure for one channel and noise setting.
    Report(ReportArgs),
    /// Evaluate a grid of parameters and write one row per point.
    Sweep(SweepArgs),
    /// Run the analytic-vs-simulation self-checks.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Csv,
    Json,
}

/// A `--family` value: one family or `all`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySelection {
    One(Family),
    All,
}

impl std::str::FromStr for FamilySelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            Ok(FamilySelection::All)
        } else {
            s.parse().map(FamilySelection::One)
        }
    }
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long, default_value = "psi+")]
    pub family: Family,
    /// Modulus of the overlap, in [0, 1].
    #[arg(long, default_value_t = 0.0)]
    pub r: f64,
    /// Phase of the overlap in units of π, e.g. `1/3`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub theta: String,
    /// Read --theta as plain radians.
    #[arg(long)]
    pub radians: bool,
    #[arg(long, default_value = "none")]
    pub noise: NoiseKind,
    /// Damping rate in [0, 1].
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    #[arg(long, default_value = "bob")]
    pub exposure: Exposure,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Families to include; repeat or separate with commas.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub family: Vec<FamilySelection>,
    /// Fixed r, used when no r grid is given.
    #[arg(long, default_value_t = 0.0)]
    pub r: f64,
    /// Fixed θ in units of π, used when no theta grid is given.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub theta: String,
    /// Read θ values (fixed and grid) as plain radians.
    #[arg(long)]
    pub radians: bool,
    #[arg(long, default_value = "none")]
    pub noise: NoiseKind,
    /// Fixed η, used when no eta grid is given.
    #[arg(long, default_value_t = 0.0)]
    pub eta: f64,
    /// Noise exposures to include; repeat or separate with commas.
    #[arg(long, value_delimiter = ',', default_value = "bob")]
    pub exposure: Vec<Exposure>,
    /// `name=min:max:steps` with name r, theta or eta; steps counts both ends.
    #[arg(long, allow_hyphen_values = true)]
    pub grid: Vec<GridSpec>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only the named suites (repeatable); all suites by default.
    #[arg(long, value_delimiter = ',')]
    pub suite: Vec<String>,
}
