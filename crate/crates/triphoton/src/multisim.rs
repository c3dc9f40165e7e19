//! The timing-dependent alternative prediction engine.
//!
//! Two rules generate every prediction from a timing regime:
//!
//! 1. a device choosing with *before* timing produces its value as a fair,
//!    path-independent coin flip, untouched by the other particles;
//! 2. a device choosing with *after* timing conditions nonlocally on the
//!    before-values of the other two particles — their actual values when
//!    those devices chose before, or the values they *would have produced*
//!    in before-choices otherwise — via
//!    `Pr(value | x, y) = (1/2)·[1 + x·y·value·sin Δ]`.
//!
//! After-relative labels are identified with before ones, which is licensed
//! here because every two-party marginal is uniform. Hypothetical
//! before-values are latent ±1 variables summed with weight 1/2 per device.
//!
//! Consequences the engine must (and does) reproduce: all-before and
//! two-after regimes are uniform with correlation 0; one-after regimes equal
//! the quantum prediction sin Δ; the all-after regime gives sin³ Δ.

use crate::quantum::{qm_joint, JointDistribution, OutcomeTriple, PathClass, PhaseSettings, Sign};
use crate::spacetime::{TimingLabel, TimingRegime};

/// A regime's full prediction: distribution plus its correlation.
#[derive(Clone, Debug, PartialEq)]
pub struct RegimePrediction {
    pub regime: TimingRegime,
    pub dist: JointDistribution,
    pub correlation: f64,
}

/// Probability that a triplet travels either path class: 1/2 for both.
pub fn pr_path(_class: PathClass) -> f64 {
    0.5
}

/// Probability of a before-choice producing `value` given the path class:
/// 1/2 regardless — before-values carry no path information.
pub fn pr_before_given_path(_value: Sign, _class: PathClass) -> f64 {
    0.5
}

/// Probability that an after-choice produces `value` given the before-values
/// of the other two particles: `(1/2)·[1 + x·y·value·sin Δ]`.
///
/// Equals the quantum conditional Pr(ρ,σ,ω) / Σ_value Pr, which is how the
/// after-rule stays consistent with the quantum marginals.
pub fn conditional_after(value: Sign, others: (Sign, Sign), ph: &PhaseSettings) -> f64 {
    0.5 * (1.0 + others.0.value() * others.1.value() * value.value() * ph.delta().sin())
}

/// Devices with After labels, after mapping after-relative labels to before.
fn after_devices(regime: &TimingRegime) -> Vec<usize> {
    regime
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.is_effectively_after())
        .map(|(i, _)| i)
        .collect()
}

/// Joint outcome distribution under the timing rules, by direct summation
/// over the latent path class and the hypothetical before-values of every
/// after device.
pub fn ms_joint(regime: &TimingRegime, ph: &PhaseSettings) -> JointDistribution {
    // The after-relative → before identification assumes uniform two-party
    // marginals; they are an identity of the quantum module, asserted here.
    debug_assert!(
        {
            let q = qm_joint(ph);
            [(1u8, 2u8), (1, 3), (2, 3)]
                .iter()
                .all(|&(a, b)| q.marginal(a, b).iter().all(|m| (m - 0.25).abs() < 1e-12))
        },
        "after-relative identification requires uniform marginals"
    );

    let after = after_devices(regime);
    let mut p = [0.0; 8];
    for o in OutcomeTriple::ALL {
        let actual = [o.rho, o.sigma, o.omega];
        let mut total = 0.0;
        for class in PathClass::BOTH {
            // Sum over the hypothetical before-values of the after devices.
            for combo in 0..(1usize << after.len()) {
                let mut hypothetical = actual;
                for (bit, &dev) in after.iter().enumerate() {
                    hypothetical[dev] = if (combo >> bit) & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    };
                }
                let mut w = pr_path(class);
                for &value in &hypothetical {
                    // Before devices contribute their actual value, after
                    // devices their hypothetical one, both at weight 1/2.
                    w *= pr_before_given_path(value, class);
                }
                for &dev in &after {
                    let others: Vec<Sign> = (0..3)
                        .filter(|&d| d != dev)
                        .map(|d| hypothetical[d])
                        .collect();
                    w *= conditional_after(actual[dev], (others[0], others[1]), ph);
                }
                total += w;
            }
        }
        p[o.index()] = total;
    }
    JointDistribution::new(p)
}

/// Closed forms for the published regimes, keyed by the number of after
/// devices once after-relative labels map to before:
/// 0 or 2 → uniform; 1 → the quantum distribution; 3 → sin³ interference.
pub fn ms_joint_closed_form(regime: &TimingRegime, ph: &PhaseSettings) -> JointDistribution {
    match regime.after_count() {
        0 | 2 => JointDistribution::uniform(),
        1 => qm_joint(ph),
        3 => {
            let s3 = ph.delta().sin().powi(3);
            let mut p = [0.0; 8];
            for o in OutcomeTriple::ALL {
                p[o.index()] = 0.125 * (1.0 + o.product() * s3);
            }
            JointDistribution::new(p)
        }
        _ => unreachable!("three devices"),
    }
}

/// Correlation coefficient of the regime's distribution: 0 for the moving
/// configurations of the proposed test, sin³ Δ when every device is after.
pub fn ms_correlation(regime: &TimingRegime, ph: &PhaseSettings) -> f64 {
    ms_joint(regime, ph).correlation()
}

/// Distribution and correlation in one call.
pub fn predict(regime: &TimingRegime, ph: &PhaseSettings) -> RegimePrediction {
    let dist = ms_joint(regime, ph);
    let correlation = dist.correlation();
    RegimePrediction {
        regime: *regime,
        dist,
        correlation,
    }
}

/// The regime that a rest-state experiment realizes: the first device
/// before, the second after it alone, the third after both.
pub fn rest_state_regime() -> TimingRegime {
    TimingRegime::new([
        TimingLabel::Before,
        TimingLabel::AfterRelative(1),
        TimingLabel::After,
    ])
    .expect("valid labels")
}
