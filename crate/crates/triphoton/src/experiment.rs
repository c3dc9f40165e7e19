//! Ready-made laboratory configurations, feasibility validation, and phase
//! scans comparing the two theories.
//!
//! The three presets realize the timing regimes the proposed test needs:
//!
//! * `bbb` — devices 1 and 2 recede from each other at 2.5 km/s along their
//!   110 m baseline while the resting device 3 chooses 0.75 ps earlier.
//!   Each moving device's boost correction (~1.5 ps against device 3,
//!   ~3.1 ps against its partner) outruns the lead, so every device sees
//!   its own choice first.
//! * `aab` — the same geometry with the motion reversed and a 10 ps lead
//!   for device 3; the moving devices now see both other choices as past.
//! * `aaa` — a right-angle layout with 72 m legs (hypotenuse ≈ 101.8 m),
//!   both devices moving toward the resting device 3, which chooses 1 ps
//!   late — inside the ~2.0 ps window the legs allow.
//!
//! The lab-time leads must stay inside the ±V·D/c² windows of the geometry
//! (1.5–3 ps here); larger offsets would flip the moving devices into
//! after-relative labels.

use std::str::FromStr;

use thiserror::Error;

use crate::multisim::ms_correlation;
use crate::quantum::{qm_correlation, PhaseSettings};
use crate::spacetime::{
    classify_all, min_distance, ChoiceDevice, Event, SpacetimeError, TimingLabel, TimingRegime,
    Velocity,
};

#[derive(Debug, Error, PartialEq)]
pub enum ExperimentError {
    #[error("unknown preset {0:?} (expected bbb, aab, or aaa)")]
    UnknownPreset(String),
    #[error(transparent)]
    Spacetime(#[from] SpacetimeError),
}

/// A complete scenario: geometry, phases, and the alignment uncertainty δt
/// of the optical path-time difference.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub label: String,
    pub devices: [ChoiceDevice; 3],
    pub phases: PhaseSettings,
    pub delta_t: f64,
}

impl ExperimentConfig {
    /// Timing regime realized by the geometry.
    pub fn regime(&self) -> Result<TimingRegime, SpacetimeError> {
        classify_all(&self.devices)
    }
}

/// One scan point: interference phase and both predictions.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub delta: f64,
    pub e_qm: f64,
    pub e_ms: f64,
    pub regime: TimingRegime,
}

/// The three named configurations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Bbb,
    Aab,
    Aaa,
}

impl Preset {
    pub const ALL: [Preset; 3] = [Preset::Bbb, Preset::Aab, Preset::Aaa];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Bbb => "bbb",
            Preset::Aab => "aab",
            Preset::Aaa => "aaa",
        }
    }

    /// The regime the preset is designed to realize.
    pub fn intended_regime(&self) -> TimingRegime {
        let labels = match self {
            Preset::Bbb => [TimingLabel::Before; 3],
            Preset::Aab => [TimingLabel::After, TimingLabel::After, TimingLabel::Before],
            Preset::Aaa => [TimingLabel::After; 3],
        };
        TimingRegime::new(labels).expect("static labels are valid")
    }

    pub fn config(&self) -> ExperimentConfig {
        // Nominal alignment uncertainty: 2 ps; acousto-optic drive: 2.5 km/s.
        const DELTA_T: f64 = 2e-12;
        const SPEED: f64 = 2500.0;
        let device = |id, t, pos: [f64; 3], vel: [f64; 3]| {
            ChoiceDevice::new(
                id,
                Event::new(t, pos[0], pos[1], pos[2]),
                Velocity::new(vel[0], vel[1], vel[2]).expect("preset speeds are subluminal"),
            )
            .expect("preset ids are valid")
        };
        let devices = match self {
            // 110 m baseline, mutual recession, device 3 resting at the
            // midpoint with a 0.75 ps lead (window: 0..~1.53 ps).
            Preset::Bbb => [
                device(1, 0.0, [-55.0, 0.0, 0.0], [-SPEED, 0.0, 0.0]),
                device(2, 0.0, [55.0, 0.0, 0.0], [SPEED, 0.0, 0.0]),
                device(3, -0.75e-12, [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]),
            ],
            // Motion reversed (mutual approach); any positive lead keeps the
            // moving devices after everything, 10 ps for margin.
            Preset::Aab => [
                device(1, 0.0, [-55.0, 0.0, 0.0], [SPEED, 0.0, 0.0]),
                device(2, 0.0, [55.0, 0.0, 0.0], [-SPEED, 0.0, 0.0]),
                device(3, -10e-12, [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]),
            ],
            // Right angle at device 3, 72 m legs, both devices moving toward
            // it; device 3 chooses 1 ps late (window: 0..~2.0 ps). The
            // velocity component along the 1–2 baseline is 2500/√2 ≈ 1.77 km/s.
            Preset::Aaa => [
                device(1, 0.0, [72.0, 0.0, 0.0], [-SPEED, 0.0, 0.0]),
                device(2, 0.0, [0.0, 72.0, 0.0], [0.0, -SPEED, 0.0]),
                device(3, 1e-12, [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]),
            ],
        };
        ExperimentConfig {
            label: self.name().to_string(),
            devices,
            phases: PhaseSettings::ZERO,
            delta_t: DELTA_T,
        }
    }
}

impl FromStr for Preset {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bbb" => Ok(Preset::Bbb),
            "aab" => Ok(Preset::Aab),
            "aaa" => Ok(Preset::Aaa),
            other => Err(ExperimentError::UnknownPreset(other.to_string())),
        }
    }
}

/// Look up a preset configuration by name (`bbb`, `aab`, `aaa`).
pub fn preset(name: &str) -> Result<ExperimentConfig, ExperimentError> {
    Ok(Preset::from_str(name)?.config())
}

/// One validation check with its signed margin.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    /// Meters above the separation bound, or 0 for the regime check.
    pub margin: f64,
    pub detail: String,
}

/// Validation outcome: the separation bound per moving pair plus the regime
/// match against the label's intent (when the label names a preset).
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub regime: TimingRegime,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Check the separation bound `D > c²·δt / V` for every pair of devices
/// whose orderings are reversed by motion (both members moving along their
/// separation axis), and — when the config's label names a preset — that the
/// realized regime matches the intent. Pairs involving a resting device are
/// ordered by the delay line, not by motion, so the bound does not apply.
pub fn validate(cfg: &ExperimentConfig) -> Result<ValidationReport, SpacetimeError> {
    let regime = classify_all(&cfg.devices)?;
    let mut checks = Vec::new();

    for i in 0..3 {
        for j in (i + 1)..3 {
            let a = &cfg.devices[i];
            let b = &cfg.devices[j];
            let comp_a = a
                .velocity
                .component_along(&a.choice_event, &b.choice_event)
                .abs();
            let comp_b = b
                .velocity
                .component_along(&b.choice_event, &a.choice_event)
                .abs();
            if comp_a == 0.0 || comp_b == 0.0 {
                continue;
            }
            let speed = comp_a.min(comp_b);
            let dx = a.choice_event.x - b.choice_event.x;
            let dy = a.choice_event.y - b.choice_event.y;
            let dz = a.choice_event.z - b.choice_event.z;
            let distance = (dx * dx + dy * dy + dz * dz).sqrt();
            let bound = min_distance(cfg.delta_t, speed)?;
            let margin = distance - bound;
            checks.push(CheckResult {
                name: format!("separation({},{})", a.id, b.id),
                pass: margin > 0.0,
                margin,
                detail: format!(
                    "D = {distance:.3} m vs bound {bound:.3} m at V = {speed:.1} m/s, dt = {:.3e} s",
                    cfg.delta_t
                ),
            });
        }
    }

    if let Ok(p) = Preset::from_str(&cfg.label) {
        let intended = p.intended_regime();
        let pass = regime == intended;
        checks.push(CheckResult {
            name: "regime".to_string(),
            pass,
            margin: 0.0,
            detail: format!("classified {regime}, intended {intended}"),
        });
    }

    Ok(ValidationReport { regime, checks })
}

/// `steps` evenly spaced values covering `[start, stop]` inclusive.
pub fn linspace(start: f64, stop: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 1, "grid needs at least one point");
    if steps == 1 {
        return vec![start];
    }
    let h = (stop - start) / (steps - 1) as f64;
    (0..steps).map(|i| start + i as f64 * h).collect()
}

/// Evaluate both correlations across a Δ grid under the config's regime.
///
/// Each grid point uses the convention that α carries all of Δ; any phase
/// assignment with the same Δ predicts identically.
pub fn scan(cfg: &ExperimentConfig, grid: &[f64]) -> Result<Vec<ScanRow>, SpacetimeError> {
    assert!(!grid.is_empty(), "scan grid must be nonempty");
    let regime = classify_all(&cfg.devices)?;
    Ok(grid
        .iter()
        .map(|&delta| {
            let ph = PhaseSettings::with_delta(delta);
            ScanRow {
                delta,
                e_qm: qm_correlation(&ph),
                e_ms: ms_correlation(&regime, &ph),
                regime,
            }
        })
        .collect())
}
