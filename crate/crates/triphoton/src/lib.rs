//! Timing-resolved predictions for a three-photon interferometer whose
//! beam-splitters may move.
//!
//! Three energy-time entangled photons each meet a 50-50 beam-splitter
//! ("choice-device") and exit to a ±1 detector. Standard quantum mechanics
//! predicts the joint statistics `(1/8)·[1 + ρσω·sin Δ]` regardless of when
//! or where the choices happen. The alternative model implemented here ties
//! each choice to the relativistic chronology of its own rest frame:
//! choices that are first in their own frame become independent coin flips,
//! choices that are last condition nonlocally on the others. Moving the
//! splitters fast enough flips those labels, and the two theories then
//! disagree by as much as the full correlation amplitude.
//!
//! Capabilities, one runnable example each (`cargo run --example <name>`):
//!
//! * [`spacetime`] — boost choice events into device rest frames, classify
//!   before/after timing labels, evaluate the separation bound
//!   (`classify_timing`, `feasibility_bounds`).
//! * [`quantum`] — path amplitudes, joint probabilities, correlation,
//!   splitter unitarity, marginals (`amplitude_route`).
//! * [`multisim`] — the timing-rule prediction engine and its closed forms
//!   (`regime_engine`).
//! * [`experiment`] — the three preset configurations, validation, phase
//!   scans (`qm_vs_multisim_scan`).
//! * [`montecarlo`] — seeded counter-based sampling of either theory
//!   (`monte_carlo_counts`).
//! * [`cli`] — the `triphoton` binary: classify, scan, sample, feasibility,
//!   validate (`export_preset_configs` writes starter configs).

pub mod cli;
mod dd;
pub mod experiment;
pub mod montecarlo;
pub mod multisim;
pub mod quantum;
pub mod spacetime;

pub use experiment::{preset, ExperimentConfig, Preset, ScanRow};
pub use montecarlo::{EstimateResult, SamplerSpec, Theory};
pub use multisim::RegimePrediction;
pub use quantum::{JointDistribution, OutcomeTriple, PhaseSettings, Sign};
pub use spacetime::{ChoiceDevice, Event, TimingLabel, TimingRegime, Velocity};
