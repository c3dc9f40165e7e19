//! Command-line front end: strict JSON configs in, reports and CSV out.
//!
//! Exit codes: 0 on success, 2 for configuration/schema/usage problems,
//! 3 for physics precondition violations (a device at or above c).
//!
//! All floating-point output uses 12 significant digits with `.` as the
//! decimal separator, independent of locale, so outputs are byte-stable
//! golden-file material.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::experiment::{linspace, scan, validate, ExperimentConfig};
use crate::montecarlo::{estimate_correlation, SamplerSpec, Theory};
use crate::quantum::{OutcomeTriple, PhaseSettings};
use crate::spacetime::{
    boost_time, classify_all, ChoiceDevice, Event, SpacetimeError, Velocity,
};

#[derive(Debug, Error)]
pub enum CliError {
    /// Schema, value, usage, or I/O problem — exit code 2.
    #[error("{0}")]
    Config(String),
    /// Physics precondition violation — exit code 3.
    #[error("{0}")]
    Physics(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Physics(_) => 3,
        }
    }
}

impl From<SpacetimeError> for CliError {
    fn from(e: SpacetimeError) -> Self {
        match e {
            SpacetimeError::SuperluminalVelocity { .. } => CliError::Physics(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }
}

/// 12 significant digits, locale-independent.
fn fmt_sig(x: f64) -> String {
    format!("{x:.11e}")
}

// --- config file schema ----------------------------------------------------

/// On-disk configuration. Units: seconds, meters, m/s, radians. Unknown keys
/// are rejected.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(default)]
    pub label: String,
    /// Exactly three devices; array order assigns ids 1, 2, 3.
    pub devices: Vec<DeviceSpec>,
    pub phases: PhasesSpec,
    /// Alignment uncertainty of the optical path-time difference, seconds.
    pub delta_t_s: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sampler: Option<SamplerSettings>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanSettings>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeviceSpec {
    pub position_m: [f64; 3],
    pub velocity_mps: [f64; 3],
    pub choice_time_s: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhasesSpec {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub phi1: f64,
    pub phi2: f64,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplerSettings {
    pub n: u64,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanSettings {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<ConfigFile, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        serde_json::from_str(&text)
            .map_err(|e| CliError::Config(format!("invalid config {}: {e}", path.display())))
    }

    pub fn to_experiment(&self) -> Result<ExperimentConfig, CliError> {
        if self.devices.len() != 3 {
            return Err(CliError::Config(format!(
                "expected exactly 3 devices, got {}",
                self.devices.len()
            )));
        }
        if !self.delta_t_s.is_finite() || self.delta_t_s <= 0.0 {
            return Err(CliError::Config("delta_t_s must be positive".to_string()));
        }
        for (i, a) in self.devices.iter().enumerate() {
            for b in &self.devices[i + 1..] {
                if a.position_m == b.position_m {
                    return Err(CliError::Config(format!(
                        "devices share position {:?}",
                        a.position_m
                    )));
                }
            }
        }
        let mut devices = Vec::with_capacity(3);
        for (i, d) in self.devices.iter().enumerate() {
            let velocity = Velocity::new(d.velocity_mps[0], d.velocity_mps[1], d.velocity_mps[2])?;
            let event = Event::new(
                d.choice_time_s,
                d.position_m[0],
                d.position_m[1],
                d.position_m[2],
            );
            devices.push(ChoiceDevice::new(i as u8 + 1, event, velocity)?);
        }
        let devices: [ChoiceDevice; 3] = [devices[0], devices[1], devices[2]];
        Ok(ExperimentConfig {
            label: self.label.clone(),
            devices,
            phases: PhaseSettings::new(
                self.phases.alpha,
                self.phases.beta,
                self.phases.gamma,
                self.phases.phi1,
                self.phases.phi2,
            ),
            delta_t: self.delta_t_s,
        })
    }

    pub fn from_experiment(
        cfg: &ExperimentConfig,
        sampler: Option<SamplerSettings>,
        scan: Option<ScanSettings>,
    ) -> ConfigFile {
        ConfigFile {
            label: cfg.label.clone(),
            devices: cfg
                .devices
                .iter()
                .map(|d| DeviceSpec {
                    position_m: [d.choice_event.x, d.choice_event.y, d.choice_event.z],
                    velocity_mps: [d.velocity.vx(), d.velocity.vy(), d.velocity.vz()],
                    choice_time_s: d.choice_event.t,
                })
                .collect(),
            phases: PhasesSpec {
                alpha: cfg.phases.alpha,
                beta: cfg.phases.beta,
                gamma: cfg.phases.gamma,
                phi1: cfg.phases.phi1,
                phi2: cfg.phases.phi2,
            },
            delta_t_s: cfg.delta_t,
            sampler,
            scan,
        }
    }
}

// --- argument surface --------------------------------------------------------

#[derive(Parser, Debug)]
#[command(
    name = "triphoton",
    about = "Timing-resolved predictions for a three-photon interferometer with moving beam-splitters",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify each device's choice timing in its own rest frame.
    Classify {
        /// JSON configuration file.
        config: PathBuf,
    },
    /// Compare both theories' correlations across an interference-phase grid.
    Scan {
        /// JSON configuration file.
        config: PathBuf,
        /// Grid as start:stop:steps (radians); falls back to the config's
        /// scan block.
        #[arg(long)]
        grid: Option<String>,
        /// Write CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Draw outcome triples and estimate the correlation coefficient.
    Sample {
        /// JSON configuration file.
        config: PathBuf,
        /// Which theory drives the sampler.
        #[arg(long, value_enum)]
        theory: TheoryArg,
        /// Number of draws; falls back to the config's sampler block.
        #[arg(long)]
        n: Option<u64>,
        /// RNG seed; falls back to the config's sampler block.
        #[arg(long)]
        seed: Option<u64>,
        /// Also write the counts as CSV here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the minimum-separation bound D > c²·δt / V.
    Feasibility(FeasibilityArgs),
    /// Check a configuration against the separation bound and its intended
    /// regime.
    Validate {
        /// JSON configuration file.
        config: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TheoryArg {
    Qm,
    Ms,
}

#[derive(Args, Debug)]
struct FeasibilityArgs {
    /// Optical path-time difference δt, seconds.
    #[arg(long = "delta-t")]
    delta_t: f64,
    /// Frame-defining speed V, m/s.
    #[arg(long)]
    velocity: f64,
    /// Actual device separation to judge, meters.
    #[arg(long)]
    distance: Option<f64>,
}

// --- commands ----------------------------------------------------------------

fn cmd_classify(path: &Path) -> Result<String, CliError> {
    let cfg = ConfigFile::load(path)?.to_experiment()?;
    let regime = classify_all(&cfg.devices)?;
    let mut out = String::new();
    if !cfg.label.is_empty() {
        writeln!(out, "label: {}", cfg.label).unwrap();
    }
    writeln!(out, "boosted choice times, one frame per row (s):").unwrap();
    for judge in &cfg.devices {
        let times: Vec<String> = cfg
            .devices
            .iter()
            .map(|d| {
                format!(
                    "T{}={}",
                    d.id,
                    fmt_sig(boost_time(&d.choice_event, &judge.velocity))
                )
            })
            .collect();
        writeln!(
            out,
            "  frame of device {}: {}  -> {}",
            judge.id,
            times.join(" "),
            regime.label(judge.id).describe()
        )
        .unwrap();
    }
    writeln!(out, "regime: {regime}").unwrap();
    Ok(out)
}

fn parse_grid(spec: &str) -> Result<Vec<f64>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    if parts.len() != 3 {
        return Err(CliError::Config(format!(
            "grid must be start:stop:steps, got {spec:?}"
        )));
    }
    let start: f64 = parts[0]
        .parse()
        .map_err(|_| CliError::Config(format!("bad grid start {:?}", parts[0])))?;
    let stop: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::Config(format!("bad grid stop {:?}", parts[1])))?;
    let steps: usize = parts[2]
        .parse()
        .map_err(|_| CliError::Config(format!("bad grid steps {:?}", parts[2])))?;
    if steps == 0 {
        return Err(CliError::Config("grid needs at least one step".to_string()));
    }
    Ok(linspace(start, stop, steps))
}

fn cmd_scan(path: &Path, grid_arg: Option<&str>, out: Option<&Path>) -> Result<String, CliError> {
    let file = ConfigFile::load(path)?;
    let cfg = file.to_experiment()?;
    let grid = match (grid_arg, file.scan) {
        (Some(spec), _) => parse_grid(spec)?,
        (None, Some(s)) => {
            if s.steps == 0 {
                return Err(CliError::Config("scan.steps must be at least 1".to_string()));
            }
            linspace(s.start, s.stop, s.steps)
        }
        (None, None) => {
            return Err(CliError::Config(
                "no grid: pass --grid start:stop:steps or add a scan block".to_string(),
            ))
        }
    };
    let rows = scan(&cfg, &grid)?;
    let mut csv = String::from("delta,e_qm,e_ms,regime\n");
    for r in rows {
        writeln!(
            csv,
            "{},{},{},{}",
            fmt_sig(r.delta),
            fmt_sig(r.e_qm),
            fmt_sig(r.e_ms),
            r.regime
        )
        .unwrap();
    }
    match out {
        Some(p) => {
            fs::write(p, &csv)
                .map_err(|e| CliError::Config(format!("cannot write {}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(csv),
    }
}

fn cmd_sample(
    path: &Path,
    theory: TheoryArg,
    n: Option<u64>,
    seed: Option<u64>,
    out: Option<&Path>,
) -> Result<String, CliError> {
    let file = ConfigFile::load(path)?;
    let cfg = file.to_experiment()?;
    let regime = classify_all(&cfg.devices)?;
    let n = n.or(file.sampler.map(|s| s.n)).unwrap_or(100_000);
    let seed = seed.or(file.sampler.map(|s| s.seed)).unwrap_or(0);
    if n == 0 {
        return Err(CliError::Config("sample count must be at least 1".to_string()));
    }
    let spec = SamplerSpec {
        theory: match theory {
            TheoryArg::Qm => Theory::Qm,
            TheoryArg::Ms => Theory::Multisim,
        },
        regime,
        phases: cfg.phases,
        n,
        seed,
    };
    let result = estimate_correlation(&spec);

    let mut report = String::new();
    writeln!(
        report,
        "theory: {}",
        match theory {
            TheoryArg::Qm => "qm",
            TheoryArg::Ms => "ms",
        }
    )
    .unwrap();
    if !cfg.label.is_empty() {
        writeln!(report, "label: {}", cfg.label).unwrap();
    }
    writeln!(report, "regime: {regime}").unwrap();
    writeln!(report, "delta: {}", fmt_sig(cfg.phases.delta())).unwrap();
    writeln!(report, "n: {n}").unwrap();
    writeln!(report, "seed: {seed}").unwrap();
    writeln!(report, "counts:").unwrap();
    for o in OutcomeTriple::ALL {
        writeln!(report, "  {}  {}", o, result.counts[o.index()]).unwrap();
    }
    writeln!(report, "e_hat: {}", fmt_sig(result.e_hat)).unwrap();
    writeln!(report, "stderr: {}", fmt_sig(result.stderr)).unwrap();

    if let Some(p) = out {
        let mut csv = String::from("rho,sigma,omega,count\n");
        for o in OutcomeTriple::ALL {
            writeln!(
                csv,
                "{},{},{},{}",
                o.rho,
                o.sigma,
                o.omega,
                result.counts[o.index()]
            )
            .unwrap();
        }
        fs::write(p, &csv)
            .map_err(|e| CliError::Config(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(report)
}

fn cmd_feasibility(args: &FeasibilityArgs) -> Result<String, CliError> {
    if !args.delta_t.is_finite() || args.delta_t <= 0.0 {
        return Err(CliError::Config("--delta-t must be positive".to_string()));
    }
    if !args.velocity.is_finite() || args.velocity <= 0.0 {
        return Err(CliError::Config("--velocity must be positive".to_string()));
    }
    if let Some(d) = args.distance {
        if !d.is_finite() || d <= 0.0 {
            return Err(CliError::Config("--distance must be positive".to_string()));
        }
    }
    let d_min = crate::spacetime::min_distance(args.delta_t, args.velocity)?;
    let mut out = String::new();
    writeln!(out, "delta_t: {} s", fmt_sig(args.delta_t)).unwrap();
    writeln!(out, "velocity: {} m/s", fmt_sig(args.velocity)).unwrap();
    writeln!(out, "D_min: {} m", fmt_sig(d_min)).unwrap();
    if let Some(d) = args.distance {
        let verdict = if d > d_min { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "distance: {} m -> {verdict} (margin {} m)",
            fmt_sig(d),
            fmt_sig(d - d_min)
        )
        .unwrap();
    }
    Ok(out)
}

/// Validate a configuration and report per-check margins.
fn cmd_validate(path: &Path) -> Result<String, CliError> {
    let cfg = ConfigFile::load(path)?.to_experiment()?;
    let report = validate(&cfg)?;
    let mut out = String::new();
    if !cfg.label.is_empty() {
        writeln!(out, "label: {}", cfg.label).unwrap();
    }
    writeln!(out, "regime: {}", report.regime).unwrap();
    for c in &report.checks {
        writeln!(
            out,
            "{}: {} ({})",
            c.name,
            if c.pass { "PASS" } else { "FAIL" },
            c.detail
        )
        .unwrap();
    }
    writeln!(
        out,
        "overall: {}",
        if report.all_pass() { "PASS" } else { "FAIL" }
    )
    .unwrap();
    Ok(out)
}

// --- dispatch ----------------------------------------------------------------

fn dispatch(cli: Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify { config } => cmd_classify(config),
        Command::Scan { config, grid, out } => {
            cmd_scan(config, grid.as_deref(), out.as_deref())
        }
        Command::Sample {
            config,
            theory,
            n,
            seed,
            out,
        } => cmd_sample(config, *theory, *n, *seed, out.as_deref()),
        Command::Feasibility(args) => cmd_feasibility(args),
        Command::Validate { config } => cmd_validate(config),
    }
}

/// Run the CLI with explicit arguments; returns the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 2;
        }
    };
    match dispatch(cli) {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Run the CLI with the process arguments.
pub fn run() -> i32 {
    run_from(std::env::args_os())
}
