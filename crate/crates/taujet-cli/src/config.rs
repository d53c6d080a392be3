//! Command-line surface: argument structs, validating value parsers, and the
//! conversion from parsed flags to the exact-arithmetic domain objects.
//!
//! Every numeric flag is an exact rational written `p/q` (a bare integer is
//! accepted as `p/1`); nothing on this surface is a float. Range constraints
//! are enforced at parse time so that a malformed or out-of-range flag is a
//! usage error (exit code 2) before any computation starts.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use taujet_core::{
    build_branch, BranchSolution, Closure, Ratio, Result, ScaleSchedule, ScheduleRule,
};

/// Exact construction and verification of recursive scale cascades for the
/// scale-invariant equation `t dtau/dt = tau`.
#[derive(Parser, Debug)]
#[command(name = "taujet", version, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the exact series coefficients of the matched branch pair
    Jets(CommonArgs),
    /// Run the full invariant suite; exit 0 iff every check passes
    Verify(CommonArgs),
    /// Equation residual of the truncated inner branch
    Residual(CommonArgs),
    /// Second-derivative jump decomposition across a grid of defects
    JumpScan(JumpScanArgs),
    /// Reflection asymmetry of the matched branch pair
    Parity(ParityArgs),
    /// Leading deviation order of the configured generation
    Generation(CommonArgs),
    /// Exact product collapse of the unscaled cascade
    Telescope(CommonArgs),
    /// Long-horizon comparison of the scaled and standard growth laws
    Compare(CompareArgs),
    /// Per-level scale table with convergence diagnostics
    Schedule(CommonArgs),
}

/// Flags shared by every subcommand. Defaults: `N = 6`, `K = 16`, `k = 1`,
/// one closure, power-tower rule, 256-bit readout precision, JSON to stdout.
#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Base scale defect, an exact rational in [0, 1) written "p/q" or "p"
    #[arg(long, default_value = "0", value_parser = parse_unit_ratio, value_name = "RATIO")]
    pub epsilon: Ratio,

    /// Cascade depth N: how many levels the product closes after
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub levels: u64,

    /// Series truncation order K (coefficients 0..=K are reported)
    #[arg(long, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..=4096))]
    pub jet_order: u64,

    /// Generation index k at which scaling switches on (levels below k are unscaled)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=32))]
    pub generation: u64,

    /// Closure factor appended after the last matched level
    #[arg(long, value_enum, default_value_t = ClosureArg::One)]
    pub closure: ClosureArg,

    /// Rule generating the per-level defects from the base defect
    #[arg(long, value_enum, default_value_t = RuleArg::PowerTower)]
    pub rule: RuleArg,

    /// Explicit per-level defects ε₀,ε₁,… (comma-separated rationals in [0, 1));
    /// overrides --rule and must list at least N+1 entries
    #[arg(long, value_delimiter = ',', value_parser = parse_unit_ratio, value_name = "LIST")]
    pub schedule_list: Option<Vec<Ratio>>,

    /// Bits of mantissa for decimal readouts (the exact rationals are unaffected)
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(2..=65536))]
    pub precision: u64,

    /// Output format
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,

    /// Write the report to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    pub output: Option<PathBuf>,

    /// Depth cap for dense polynomial computations (degrees grow as 2^N)
    #[arg(long, default_value_t = taujet_core::cascade::POLY_DEPTH_CAP as u64,
          value_parser = clap::value_parser!(u64).range(1..=30))]
    pub poly_cap: u64,

    /// Narrate progress on the diagnostic stream (the data stream is unaffected)
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(Args, Debug)]
pub struct JumpScanArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Defect grid to scan (comma-separated rationals in [0, 1))
    #[arg(long, value_delimiter = ',', value_parser = parse_unit_ratio, value_name = "LIST",
          default_values_t = [Ratio::new(1, 100), Ratio::new(1, 10), Ratio::new(1, 4)])]
    pub grid: Vec<Ratio>,
}

#[derive(Args, Debug)]
pub struct ParityArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Reflect every factor of the product, not only the base level
    #[arg(long)]
    pub reflect_all: bool,
}

#[derive(Args, Debug)]
pub struct CompareArgs {
    #[command(flatten)]
    pub common: CommonArgs,

    /// Grid start (exact rational, must be positive)
    #[arg(long, default_value = "1", value_parser = parse_positive_ratio, value_name = "RATIO")]
    pub t_lo: Ratio,

    /// Grid end (exact rational, at least --t-lo)
    #[arg(long, default_value = "1000", value_parser = parse_positive_ratio, value_name = "RATIO")]
    pub t_hi: Ratio,

    /// Number of grid points, endpoints included
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u64).range(2..=100000))]
    pub steps: u64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureArg {
    /// Close the product with the constant factor 1
    One,
    /// Close with the linear factor proportional to 1 − η_N
    Linear,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleArg {
    /// ε at the generation threshold, then repeated squaring
    PowerTower,
    /// The same cascade started one squaring deeper, at ε²
    LiteralPowerTower,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormatArg {
    Json,
    Csv,
}

/// Parses an exact rational constrained to the defect range `[0, 1)`.
fn parse_unit_ratio(s: &str) -> std::result::Result<Ratio, String> {
    let r = Ratio::parse(s).map_err(|e| e.to_string())?;
    if r.is_negative() || r >= Ratio::one() {
        return Err(format!("defect {r} lies outside [0, 1)"));
    }
    Ok(r)
}

/// Parses an exact rational that must be strictly positive.
fn parse_positive_ratio(s: &str) -> std::result::Result<Ratio, String> {
    let r = Ratio::parse(s).map_err(|e| e.to_string())?;
    if r.is_negative() || r.is_zero() {
        return Err(format!("{r} is not positive"));
    }
    Ok(r)
}

impl CommonArgs {
    pub fn levels(&self) -> usize {
        self.levels as usize
    }

    pub fn jet_order(&self) -> usize {
        self.jet_order as usize
    }

    pub fn generation(&self) -> usize {
        self.generation as usize
    }

    pub fn precision(&self) -> u32 {
        self.precision as u32
    }

    pub fn poly_cap(&self) -> usize {
        self.poly_cap as usize
    }

    pub fn closure(&self) -> Closure {
        match self.closure {
            ClosureArg::One => Closure::One,
            ClosureArg::Linear => Closure::Linear,
        }
    }

    /// The generating rule actually in force: an explicit list wins over
    /// the formula rule it overrides.
    pub fn effective_rule(&self) -> ScheduleRule {
        match &self.schedule_list {
            Some(list) => ScheduleRule::Explicit(list.clone()),
            None => match self.rule {
                RuleArg::PowerTower => ScheduleRule::PowerTower,
                RuleArg::LiteralPowerTower => ScheduleRule::LiteralPowerTower,
            },
        }
    }

    /// Builds the configured schedule, validated against the configured depth.
    pub fn schedule(&self) -> Result<ScaleSchedule> {
        ScaleSchedule::make(
            self.epsilon.clone(),
            self.levels(),
            self.generation(),
            self.effective_rule(),
        )
    }

    /// Builds the configured schedule around a different base defect
    /// (used by grid scans; rejects an explicit list, whose levels do not
    /// vary with the base defect).
    pub fn schedule_at(&self, epsilon: &Ratio) -> Result<ScaleSchedule> {
        ScaleSchedule::make(
            epsilon.clone(),
            self.levels(),
            self.generation(),
            match self.rule {
                RuleArg::PowerTower => ScheduleRule::PowerTower,
                RuleArg::LiteralPowerTower => ScheduleRule::LiteralPowerTower,
            },
        )
    }

    /// Builds the branch solution for the configured schedule.
    pub fn branch(&self) -> Result<BranchSolution> {
        build_branch(self.schedule()?, self.levels(), self.closure())
    }

    pub fn vlog(&self, message: &str) {
        if self.verbose {
            eprintln!("[taujet] {message}");
        }
    }
}
