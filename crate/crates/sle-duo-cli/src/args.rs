use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sle_duo::closedforms::Kappa8Branch;
use sle_duo::kernel::Kappa;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "sle-duo", version, about = "Where a point sits relative to two SLE curves")]
pub struct Cli {
    /// Flat TOML file whose keys mirror the flags; flags given on the command line win.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// P_left, P_middle, P_right of the pair on a grid of t = u/v
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Prob(ProbArgs),
    /// Left probability for a single curve
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Schramm(SchrammArgs),
    /// Monte Carlo estimate of the triple, compared with quadrature
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Simulate(SimulateArgs),
    /// Mean extra current density across a strip
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Qhall(QhallArgs),
    /// Tip of the deterministic κ = 0 pair
    #[command(args_override_self = true, allow_negative_numbers = true)]
    Kzero(KzeroArgs),
    /// Run the consistency checks
    #[command(args_override_self = true)]
    Verify(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Prob(_) => "prob",
            Command::Schramm(_) => "schramm",
            Command::Simulate(_) => "simulate",
            Command::Qhall(_) => "qhall",
            Command::Kzero(_) => "kzero",
            Command::Verify(_) => "verify",
        }
    }
}

fn parse_kappa(s: &str) -> Result<Kappa, String> {
    s.parse().map_err(|e: sle_duo::SleError| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Limit,
    Direct,
}

impl From<Branch> for Kappa8Branch {
    fn from(b: Branch) -> Self {
        match b {
            Branch::Limit => Kappa8Branch::LimitFromBelow,
            Branch::Direct => Kappa8Branch::DirectAtEight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Args, Serialize)]
pub struct ProbArgs {
    /// Decimal or fraction, e.g. 8/3
    #[arg(long, value_parser = parse_kappa)]
    pub kappa: Kappa,
    #[arg(long, default_value_t = -10.0)]
    pub t_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Solution used at κ = 8
    #[arg(long, value_enum, default_value_t = Branch::Limit)]
    pub branch: Branch,
}

#[derive(Debug, Args, Serialize)]
pub struct SchrammArgs {
    #[arg(long, value_parser = parse_kappa)]
    pub kappa: Kappa,
    #[arg(long, default_value_t = -10.0)]
    pub t_min: f64,
    #[arg(long, default_value_t = 10.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 201)]
    pub points: usize,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct SimulateArgs {
    #[arg(long, value_parser = parse_kappa)]
    pub kappa: Kappa,
    #[arg(long, default_value_t = 0.0)]
    pub t: f64,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, value_name = "PATH")]
    pub json_out: PathBuf,
    #[arg(long)]
    pub dt_safety: Option<f64>,
    #[arg(long)]
    pub delta0: Option<f64>,
    #[arg(long)]
    pub x_escape: Option<f64>,
    #[arg(long)]
    pub im_floor: Option<f64>,
    #[arg(long)]
    pub max_steps: Option<u64>,
}

#[derive(Debug, Args, Serialize)]
pub struct QhallArgs {
    #[arg(long, value_parser = parse_kappa, default_value = "6")]
    pub kappa: Kappa,
    #[arg(long, default_value_t = 1.0)]
    pub width: f64,
    #[arg(long, default_value_t = 200)]
    pub points: usize,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct KzeroArgs {
    #[arg(long, default_value_t = 1.0)]
    pub delta: f64,
    #[arg(long, default_value_t = 5.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 100)]
    pub points: usize,
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Fast)]
    pub level: Level,
    /// Also write the check table as JSON
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    /// Flip the sign of B in every kernel; the run must fail
    #[arg(long, hide = true)]
    pub tamper_b_sign: bool,
}
