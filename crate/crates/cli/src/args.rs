use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dunkl_core::{HalfInt, SectorLabels};

use crate::parse::{self, PointList, SectorList};
use crate::report::Format;

#[derive(Debug, Parser)]
#[command(name = "dunkl", version, about = "Spectra, eigenfunctions and numerical checks for the 3D Dunkl-Schrodinger equation")]
#[command(allow_negative_numbers = true)]
pub struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Tolerance override for checks
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Seed for random sample points, echoed in every report
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Only report errors on standard error
    #[arg(long, global = true)]
    pub quiet: bool,

    /// Write the report to PATH instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate bound-state energies sorted by energy
    Spectrum(SpectrumArgs),
    /// Run residual and orthogonality suites
    Verify(VerifyArgs),
    /// Compare analytic energies with the finite-difference radial solver
    Oracle(OracleArgs),
    /// Evaluate a wavefunction and its separated factors at points
    Eval(EvalArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Pseudo,
    Mie,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialKind {
    Pseudo,
    Mie,
    Free,
}

impl From<BoundKind> for PotentialKind {
    fn from(k: BoundKind) -> Self {
        match k {
            BoundKind::Pseudo => PotentialKind::Pseudo,
            BoundKind::Mie => PotentialKind::Mie,
        }
    }
}

/// Coefficients of `A r^2 + B/r^2 + C` or `-A/r + B/r^2 + C`.
#[derive(Debug, Clone, Copy, Args)]
pub struct Coefficients {
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long = "B", default_value_t = 0.0, allow_hyphen_values = true)]
    pub b: f64,
    #[arg(long = "C", default_value_t = 0.0, allow_hyphen_values = true)]
    pub c: f64,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, value_enum)]
    pub potential: BoundKind,
    #[command(flatten)]
    pub coef: Coefficients,
    /// Deformation parameters mu1,mu2,mu3
    #[arg(long, value_parser = parse::mu_triple, default_value = "0,0,0", allow_hyphen_values = true)]
    pub mu: [f64; 3],
    #[arg(long, default_value_t = 0)]
    pub n_max: u32,
    /// Largest l, e.g. 3/2 or 1.5
    #[arg(long, value_parser = parse::half_int, default_value = "0")]
    pub l_max: HalfInt,
    /// Largest m, e.g. 1/2 or 0.5
    #[arg(long, value_parser = parse::half_int, default_value = "0")]
    pub m_max: HalfInt,
    /// "all" or a list of sign triples such as "+++,-+-"
    #[arg(long, value_parser = parse::sectors, default_value = "all", allow_hyphen_values = true)]
    pub sectors: SectorList,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Identities,
    Angular,
    Radial,
    Orthogonality,
    Hamiltonian,
    Commutators,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    pub suite: SuiteArg,
    #[arg(long, value_parser = parse::mu_triple, default_value = "0,0,0", allow_hyphen_values = true)]
    pub mu: [f64; 3],
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialKind,
    #[command(flatten)]
    pub coef: Coefficients,
    /// Effective angular index; otherwise computed from --l, --m and --mu
    #[arg(long, conflicts_with_all = ["l", "m"], allow_hyphen_values = true)]
    pub s: Option<f64>,
    #[arg(long, value_parser = parse::half_int, default_value = "0")]
    pub l: HalfInt,
    #[arg(long, value_parser = parse::half_int, default_value = "0")]
    pub m: HalfInt,
    #[arg(long, value_parser = parse::mu_triple, default_value = "0,0,0", allow_hyphen_values = true)]
    pub mu: [f64; 3],
    /// Interior grid points
    #[arg(long = "grid-N", default_value_t = 4000)]
    pub grid_n: usize,
    /// Box size; sized from the potential when omitted
    #[arg(long)]
    pub r_max: Option<f64>,
    /// Number of lowest states to compare
    #[arg(long, default_value_t = 4)]
    pub k: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormArg {
    Physical,
    Scaled,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub potential: PotentialKind,
    #[command(flatten)]
    pub coef: Coefficients,
    /// Energy of a free-particle state
    #[arg(long)]
    pub energy: Option<f64>,
    #[arg(long, value_parser = parse::mu_triple, default_value = "0,0,0", allow_hyphen_values = true)]
    pub mu: [f64; 3],
    #[arg(long, default_value_t = 0)]
    pub n: u32,
    #[arg(long, value_parser = parse::half_int, default_value = "0")]
    pub l: HalfInt,
    #[arg(long, value_parser = parse::half_int, default_value = "0")]
    pub m: HalfInt,
    /// Reflection eigenvalues, e.g. "+-+"
    #[arg(long, value_parser = parse::sector, default_value = "+++", allow_hyphen_values = true)]
    pub sector: SectorLabels,
    /// Points "r,theta,phi;r,theta,phi"; angles accept forms like pi/2
    #[arg(long, value_parser = parse::points, required_unless_present = "grid", conflicts_with = "grid", allow_hyphen_values = true)]
    pub points: Option<PointList>,
    /// Tensor grid "r0:r1:nr;t0:t1:nt;p0:p1:np"; any axis may be a single value
    #[arg(long, value_parser = parse::grid, allow_hyphen_values = true)]
    pub grid: Option<PointList>,
    #[arg(long, value_enum, default_value_t = NormArg::Physical)]
    pub normalization: NormArg,
}
