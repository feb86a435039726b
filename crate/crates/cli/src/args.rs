//! Argument surface of the `ctrplace` binary.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ctrplace::{Error, MajorityRule, Scenario};

#[derive(Parser)]
#[command(
    name = "ctrplace",
    version,
    about = "Controller placement and consensus-latency toolkit for distributed SDN control planes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Compute a Pareto frontier of controller placements
    Frontier(FrontierArgs),
    /// Compare approximate searches against the exact frontier over seeds
    Errors(ErrorsArgs),
    /// Reaction times per placement and data-owner choice
    React(ReactArgs),
    /// Flow-setup predictions for the measured deployment scenarios
    Scenario(ScenarioArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Exa,
    Rnd,
    Evo,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Mdo,
    Sdo,
    Both,
}

/// Either a fixed data-owner index or a sweep over all of them.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum LeaderChoice {
    Sweep,
    Fixed(usize),
}

impl FromStr for LeaderChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.eq_ignore_ascii_case("sweep") {
            return Ok(LeaderChoice::Sweep);
        }
        s.parse::<usize>().map(LeaderChoice::Fixed).map_err(|_| {
            Error::InvalidArgument(format!("leader must be an index or 'sweep', got '{s}'"))
        })
    }
}

/// Inclusive switch-count range, written `A..B`, or a single value.
#[derive(Clone, Copy)]
pub struct NswRange {
    pub start: usize,
    pub end: usize,
}

impl NswRange {
    pub fn values(self) -> impl Iterator<Item = usize> {
        self.start..=self.end
    }
}

impl FromStr for NswRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidArgument(format!("bad switch range '{s}', expected N or A..B"));
        if let Some((a, b)) = s.split_once("..") {
            let start = a.trim().parse().map_err(|_| bad())?;
            let end = b.trim().parse().map_err(|_| bad())?;
            if start > end {
                return Err(bad());
            }
            Ok(NswRange { start, end })
        } else {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok(NswRange { start: v, end: v })
        }
    }
}

pub fn parse_majority_rule(s: &str) -> Result<MajorityRule, Error> {
    s.parse()
}

pub fn parse_scenario(s: &str) -> Result<Scenario, Error> {
    s.parse()
}

#[derive(Args)]
pub struct FrontierArgs {
    /// Topology file (GraphML or JSON)
    #[arg(long)]
    pub topology: PathBuf,
    /// Number of controllers to place
    #[arg(long)]
    pub controllers: usize,
    /// Search algorithm
    #[arg(long, value_enum, default_value = "exa")]
    pub algo: Algo,
    /// Iteration budget for rnd/evo
    #[arg(long, default_value_t = 50)]
    pub iterations: u64,
    /// RNG seed for rnd/evo
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also write every enumerated point (exa only)
    #[arg(long)]
    pub scatter: bool,
    /// Propagation speed used to derive latencies from coordinates, km/ms
    #[arg(long = "speed-kmms", default_value_t = 200.0)]
    pub speed_kmms: f64,
    /// Output directory
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct ErrorsArgs {
    #[arg(long)]
    pub topology: PathBuf,
    #[arg(long)]
    pub controllers: usize,
    /// Iteration budgets to evaluate, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    pub iterations: Vec<u64>,
    /// Number of seeds to average over (base seed, base seed + 1, ...)
    #[arg(long, default_value_t = 20)]
    pub seeds: u64,
    /// Base RNG seed
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long = "speed-kmms", default_value_t = 200.0)]
    pub speed_kmms: f64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct ReactArgs {
    #[arg(long)]
    pub topology: PathBuf,
    #[arg(long)]
    pub controllers: usize,
    /// Evaluate only this placement (comma-separated node ids) instead of
    /// enumerating every placement
    #[arg(long, value_delimiter = ',')]
    pub placement: Option<Vec<usize>>,
    /// Data-owner selection: a controller index or 'sweep'
    #[arg(long, default_value = "sweep", value_parser = LeaderChoice::from_str)]
    pub leader: LeaderChoice,
    /// Which reactivity model(s) to report
    #[arg(long, value_enum, default_value = "both")]
    pub model: Model,
    /// Which follower acknowledgement commits an update
    #[arg(long = "majority-rule", default_value = "paper", value_parser = parse_majority_rule)]
    pub majority_rule: MajorityRule,
    #[arg(long = "speed-kmms", default_value_t = 200.0)]
    pub speed_kmms: f64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

#[derive(Args)]
pub struct ScenarioArgs {
    /// Scenario name: TT, TMC, TMF, TPC or TPF
    #[arg(long, value_parser = parse_scenario)]
    pub name: Scenario,
    /// Emulated network sizes, a single value or an inclusive range A..B
    #[arg(long, value_parser = NswRange::from_str)]
    pub nsw: NswRange,
    /// Controller computation time per update, ms
    #[arg(long = "tc-ms", default_value_t = ctrplace::reaction::DEFAULT_COMPUTE_MS)]
    pub tc_ms: f64,
    /// Append the simulated message traces as JSON lines to this file
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}
