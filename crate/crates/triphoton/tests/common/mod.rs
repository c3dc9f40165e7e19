//! Test-side oracles: literal transcriptions of the prediction rules,
//! written as straight summations with their own sign and phase handling so
//! they share no code path with the engine they check, plus a deterministic
//! phase/event generator built on the counter-based RNG.

use triphoton::montecarlo::philox;
use triphoton::quantum::PhaseSettings;

pub const SIGNS: [f64; 2] = [1.0, -1.0];

/// Interference phase recomputed from the raw fields.
pub fn delta_of(ph: &PhaseSettings) -> f64 {
    ph.alpha - ph.beta - ph.gamma + ph.phi2 - ph.phi1
}

/// Closed-form quantum joint probability.
pub fn closed_qm(rho: f64, sigma: f64, omega: f64, ph: &PhaseSettings) -> f64 {
    0.125 * (1.0 + rho * sigma * omega * delta_of(ph).sin())
}

/// The after-choice conditional `(1/2)·[1 + x·y·v·sin Δ]`.
fn cond(v: f64, x: f64, y: f64, ph: &PhaseSettings) -> f64 {
    0.5 * (1.0 + x * y * v * delta_of(ph).sin())
}

/// All-before rule: sum over the path class of the product of path and
/// per-device before probabilities, every factor 1/2.
pub fn oracle_all_before(_rho: f64, _sigma: f64, _omega: f64, _ph: &PhaseSettings) -> f64 {
    let mut total = 0.0;
    for _class in 0..2 {
        total += 0.5 * 0.5 * 0.5 * 0.5;
    }
    total
}

/// Rest-state rule (device 1 before, device 2 after it alone, device 3 after
/// both): the after-relative device contributes a bare 1/2 conditional and
/// the final device conditions on both actual values.
pub fn oracle_rest_state(rho: f64, sigma: f64, omega: f64, ph: &PhaseSettings) -> f64 {
    let mut total = 0.0;
    for _class in 0..2 {
        total += 0.5 * 0.5 * 0.5 * cond(omega, rho, sigma, ph);
    }
    total
}

/// Both moving devices after-relative to the resting one: their values
/// behave as before ones, so the joint equals the all-before value.
pub fn oracle_arel_arel_before(rho: f64, sigma: f64, omega: f64, ph: &PhaseSettings) -> f64 {
    oracle_all_before(rho, sigma, omega, ph)
}

/// Two-after rule: sum over the path class and the hypothetical
/// before-values ρ′, σ′ of the moving devices; the resting device's actual
/// value conditions both.
pub fn oracle_two_after(rho: f64, sigma: f64, omega: f64, ph: &PhaseSettings) -> f64 {
    let mut total = 0.0;
    for _class in 0..2 {
        for rp in SIGNS {
            for sp in SIGNS {
                total += 0.5
                    * (0.5 * 0.5 * 0.5)
                    * cond(rho, sp, omega, ph)
                    * cond(sigma, rp, omega, ph);
            }
        }
    }
    total
}

/// All-after rule: sum over the path class and all three hypothetical
/// before-values (the ω′ index is required for normalization).
pub fn oracle_all_after(rho: f64, sigma: f64, omega: f64, ph: &PhaseSettings) -> f64 {
    let mut total = 0.0;
    for _class in 0..2 {
        for rp in SIGNS {
            for sp in SIGNS {
                for wp in SIGNS {
                    total += 0.5
                        * (0.5 * 0.5 * 0.5)
                        * cond(rho, sp, wp, ph)
                        * cond(sigma, rp, wp, ph)
                        * cond(omega, rp, sp, ph);
                }
            }
        }
    }
    total
}

/// Deterministic pseudo-random phase tuple in [-8, 8)^5.
pub fn random_phases(seed: u64, index: u64) -> PhaseSettings {
    let (a, b) = philox::uniform_pair(seed, index, 0);
    let (c, d) = philox::uniform_pair(seed, index, 1);
    let (e, _) = philox::uniform_pair(seed, index, 2);
    let span = |u: f64| (u - 0.5) * 16.0;
    PhaseSettings::new(span(a), span(b), span(c), span(d), span(e))
}
