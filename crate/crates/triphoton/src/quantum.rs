//! Quantum-mechanical predictions for the three-photon interferometer.
//!
//! Two indistinguishable path classes interfere. In class one, photon 1
//! takes the long arm of interferometer 1 while photons 2 and 3 take the
//! short and first arms of theirs, the pump having traveled the second
//! source arm; class two is the complementary assignment. Summing the two
//! amplitude products and squaring yields the joint probability
//!
//! ```text
//! Pr(ρ,σ,ω) = (1/8)·[1 + ρσω·sin Δ],   Δ = α − β − γ + φ₂ − φ₁
//! ```
//!
//! and the correlation coefficient E = sin Δ. Both routes — the amplitude
//! products and the closed form — are exposed so they can check each other.
//!
//! Moving splitters Doppler-shift the photons they reflect, but the layout
//! equalizes the total shift along both path classes, so the interference
//! survives and no frequency bookkeeping is needed here.

use std::fmt;

use num_complex::Complex64;

/// The five interferometer phases, in radians.
///
/// `alpha` sits on the long arm of interferometer 1, `beta` on the long arm
/// of interferometer 2, `gamma` on the second arm of interferometer 3, and
/// `phi1`/`phi2` on the two long source arms.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseSettings {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub phi1: f64,
    pub phi2: f64,
}

impl PhaseSettings {
    pub const ZERO: PhaseSettings = PhaseSettings {
        alpha: 0.0,
        beta: 0.0,
        gamma: 0.0,
        phi1: 0.0,
        phi2: 0.0,
    };

    pub fn new(alpha: f64, beta: f64, gamma: f64, phi1: f64, phi2: f64) -> Self {
        PhaseSettings {
            alpha,
            beta,
            gamma,
            phi1,
            phi2,
        }
    }

    /// Settings realizing the interference phase `delta` by putting it all
    /// on `alpha`. Any assignment with the same Δ predicts identically.
    pub fn with_delta(delta: f64) -> Self {
        PhaseSettings {
            alpha: delta,
            ..Self::ZERO
        }
    }

    /// The interference phase Δ = α − β − γ + φ₂ − φ₁; every prediction
    /// depends on the phases only through this combination.
    pub fn delta(&self) -> f64 {
        self.alpha - self.beta - self.gamma + self.phi2 - self.phi1
    }
}

/// A detector outcome, ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Outcomes (ρ, σ, ω) of detectors 1, 2, 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OutcomeTriple {
    pub rho: Sign,
    pub sigma: Sign,
    pub omega: Sign,
}

impl OutcomeTriple {
    pub fn new(rho: Sign, sigma: Sign, omega: Sign) -> Self {
        OutcomeTriple { rho, sigma, omega }
    }

    /// All eight triples in index order: (+,+,+), (+,+,-), (+,-,+), ...,
    /// (-,-,-). Index bit 2 is ρ, bit 1 is σ, bit 0 is ω (Plus = 0).
    pub const ALL: [OutcomeTriple; 8] = {
        const fn bit(i: usize, b: usize) -> Sign {
            if (i >> b) & 1 == 0 {
                Sign::Plus
            } else {
                Sign::Minus
            }
        }
        let mut all = [OutcomeTriple {
            rho: Sign::Plus,
            sigma: Sign::Plus,
            omega: Sign::Plus,
        }; 8];
        let mut i = 0;
        while i < 8 {
            all[i] = OutcomeTriple {
                rho: bit(i, 2),
                sigma: bit(i, 1),
                omega: bit(i, 0),
            };
            i += 1;
        }
        all
    };

    pub fn index(self) -> usize {
        let b = |s: Sign| match s {
            Sign::Plus => 0usize,
            Sign::Minus => 1usize,
        };
        (b(self.rho) << 2) | (b(self.sigma) << 1) | b(self.omega)
    }

    /// The product ρ·σ·ω.
    pub fn product(self) -> f64 {
        self.rho.value() * self.sigma.value() * self.omega.value()
    }

    /// Outcome of device `id` (1..=3).
    pub fn of_device(self, id: u8) -> Sign {
        match id {
            1 => self.rho,
            2 => self.sigma,
            3 => self.omega,
            _ => panic!("device id {id} outside 1..=3"),
        }
    }
}

impl fmt::Display for OutcomeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.rho, self.sigma, self.omega)
    }
}

/// The two indistinguishable photon-triple path assignments whose amplitudes
/// interfere.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathClass {
    /// Photon 1 on its long arm, photons 2 and 3 on their first arms; the
    /// pair feeding interferometers 2 and 3 came through the second source
    /// arm (phase φ₂).
    C1,
    /// The complementary assignment: photons 2 and 3 on their phase-carrying
    /// arms (β, γ), photon 1 on its short arm, source phase φ₁.
    C2,
}

impl PathClass {
    pub const BOTH: [PathClass; 2] = [PathClass::C1, PathClass::C2];
}

/// Probability distribution over the eight outcome triples.
#[derive(Clone, Debug, PartialEq)]
pub struct JointDistribution {
    p: [f64; 8],
}

impl JointDistribution {
    /// Entries indexed per [`OutcomeTriple::index`]. Must be a probability
    /// vector: nonnegative and summing to 1 within 1e-12.
    pub fn new(p: [f64; 8]) -> Self {
        let sum: f64 = p.iter().sum();
        assert!(
            (sum - 1.0).abs() <= 1e-12,
            "distribution sums to {sum}, not 1"
        );
        for (i, &v) in p.iter().enumerate() {
            assert!(
                (-1e-15..=1.0 + 1e-12).contains(&v),
                "entry {i} = {v} outside [0, 1]"
            );
        }
        JointDistribution { p: p.map(|v| v.max(0.0)) }
    }

    pub fn uniform() -> Self {
        JointDistribution { p: [0.125; 8] }
    }

    pub fn probability(&self, o: OutcomeTriple) -> f64 {
        self.p[o.index()]
    }

    pub fn entries(&self) -> &[f64; 8] {
        &self.p
    }

    /// Correlation coefficient E = Σ ρσω·p / Σ p.
    pub fn correlation(&self) -> f64 {
        let num: f64 = OutcomeTriple::ALL
            .iter()
            .map(|o| o.product() * self.probability(*o))
            .sum();
        let den: f64 = self.p.iter().sum();
        num / den
    }

    /// Two-party marginal over devices `(first, second)`, summing out the
    /// third. Entries ordered (+,+), (+,-), (-,+), (-,-).
    pub fn marginal(&self, first: u8, second: u8) -> [f64; 4] {
        assert!(first != second, "marginal needs two distinct devices");
        let mut m = [0.0; 4];
        for o in OutcomeTriple::ALL {
            let a = usize::from(o.of_device(first) == Sign::Minus);
            let b = usize::from(o.of_device(second) == Sign::Minus);
            m[(a << 1) | b] += self.probability(o);
        }
        m
    }
}

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

/// Calibration phase multiplying the class-two amplitude.
///
/// With the symmetric splitter convention below (transmission 1/√2,
/// reflection i/√2) the net reflection factor between the two classes is
/// −i·ρσω, which already turns the interference term into +ρσω·sin Δ, so no
/// extra phase is needed. Pinned by `amplitude_route_matches_closed_form`.
pub const CALIBRATION_PHASE: f64 = 0.0;

/// Amplitude for one photon at its recombining 50-50 splitter.
///
/// The reference arm (the short arm of interferometers 1 and 2, the first
/// arm of interferometer 3) transmits to `+` with 1/√2 and reflects to `-`
/// with i/√2; the phase-carrying arm is mirrored.
fn splitter_factor(reference_arm: bool, outcome: Sign) -> Complex64 {
    let t = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let r = Complex64::new(0.0, FRAC_1_SQRT_2);
    match (reference_arm, outcome) {
        (true, Sign::Plus) => t,
        (true, Sign::Minus) => r,
        (false, Sign::Plus) => r,
        (false, Sign::Minus) => t,
    }
}

fn phase(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

/// Probability amplitude for path class `class` to produce outcome `o`:
/// the product of the three splitter factors, the arm phases picked up
/// along the class's paths, and the 1/√2 superposition weight.
pub fn path_amplitude(class: PathClass, o: OutcomeTriple, ph: &PhaseSettings) -> Complex64 {
    let ghz = Complex64::new(FRAC_1_SQRT_2, 0.0);
    match class {
        PathClass::C1 => {
            ghz * phase(ph.phi2)
                * (phase(ph.alpha) * splitter_factor(false, o.rho))
                * splitter_factor(true, o.sigma)
                * splitter_factor(true, o.omega)
        }
        PathClass::C2 => {
            ghz * phase(CALIBRATION_PHASE)
                * phase(ph.phi1)
                * splitter_factor(true, o.rho)
                * (phase(ph.beta) * splitter_factor(false, o.sigma))
                * (phase(ph.gamma) * splitter_factor(false, o.omega))
        }
    }
}

/// Joint outcome distribution from the closed form
/// `(1/8)·[1 + ρσω·sin Δ]`.
pub fn qm_joint(ph: &PhaseSettings) -> JointDistribution {
    let s = ph.delta().sin();
    let mut p = [0.0; 8];
    for o in OutcomeTriple::ALL {
        p[o.index()] = 0.125 * (1.0 + o.product() * s);
    }
    JointDistribution::new(p)
}

/// Joint outcome distribution from the amplitude route:
/// `|A(C1,o) + A(C2,o)|² / K` with the normalization K summed, not assumed.
pub fn qm_joint_from_amplitudes(ph: &PhaseSettings) -> JointDistribution {
    let mut raw = [0.0; 8];
    for o in OutcomeTriple::ALL {
        let a = path_amplitude(PathClass::C1, o, ph) + path_amplitude(PathClass::C2, o, ph);
        raw[o.index()] = a.norm_sqr();
    }
    let k: f64 = raw.iter().sum();
    JointDistribution::new(raw.map(|v| v / k))
}

/// Correlation coefficient E = Σ ρσω·Pr / Σ Pr = sin Δ.
pub fn qm_correlation(ph: &PhaseSettings) -> f64 {
    qm_joint(ph).correlation()
}

/// The three recombining splitters, named by their input-arm pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PortPair {
    /// Interferometer 1: long arm and short arm.
    L1S,
    /// Interferometer 2: long arm and short arm.
    L2S,
    /// Interferometer 3: the two source-matched arms.
    L1L2,
}

impl PortPair {
    pub const ALL: [PortPair; 3] = [PortPair::L1S, PortPair::L2S, PortPair::L1L2];
}

/// |A(p,+)·A*(q,+) + A(p,−)·A*(q,−)| for the splitter's two input ports.
///
/// Zero for a lossless 50-50 splitter; arm phases multiply the sum by a
/// unit-modulus factor and drop out of the magnitude.
pub fn unitarity_residual(_ports: PortPair) -> f64 {
    let mut sum = Complex64::new(0.0, 0.0);
    for out in Sign::BOTH {
        sum += splitter_factor(false, out) * splitter_factor(true, out).conj();
    }
    sum.norm()
}

/// Two-party marginal of the joint distribution; uniform 1/4 for every
/// phase setting, which is what forbids signaling through timing changes.
pub fn qm_marginal(first: u8, second: u8, ph: &PhaseSettings) -> [f64; 4] {
    qm_joint(ph).marginal(first, second)
}
