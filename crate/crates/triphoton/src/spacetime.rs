//! Special-relativistic bookkeeping for choice events.
//!
//! Each beam-splitter ("choice-device") defines an inertial frame through its
//! instantaneous velocity at the moment the transmit/reflect choice happens.
//! A device's timing label — before, after, or after relative to exactly one
//! other device — is decided by comparing the boosted times of all three
//! choice events *in that device's own frame*:
//!
//! * **Before**: its choice strictly precedes both other choices.
//! * **After**: its choice is not earlier than either other choice.
//! * **AfterRelative(k)**: later than (or tied with) device k's choice but
//!   strictly earlier than the remaining one.
//!
//! The module also evaluates the separation bound `D > c²·δt / V` that a
//! moving-splitter experiment must satisfy for the frame-dependent orderings
//! to be controllable at all.

use std::fmt;

use thiserror::Error;

use crate::dd::Dd;

/// Speed of light in vacuum, m/s (exact by definition).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Default absolute tolerance, in seconds, under which two boosted times
/// count as tied. Ties resolve toward the non-strict `>=` comparisons.
pub const TIE_TOLERANCE: f64 = 1e-18;

#[derive(Debug, Error, PartialEq)]
pub enum SpacetimeError {
    #[error("speed {speed} m/s is not strictly below c")]
    SuperluminalVelocity { speed: f64 },
    #[error("velocity component is not finite")]
    NonFiniteVelocity,
    #[error("device id {0} outside 1..=3")]
    UnknownDeviceId(u8),
    #[error("duplicate device id {0}")]
    DuplicateDeviceId(u8),
    #[error("timing label refers to device {0} itself")]
    SelfReferentialLabel(u8),
    #[error("{0} must be positive")]
    NonPositive(&'static str),
}

/// A spacetime point in the laboratory frame: time in seconds, position in
/// meters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Event {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Event {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Event {
        Event { t, x, y, z }
    }
}

/// A laboratory-frame velocity with |v| strictly below c.
///
/// Construction is the only place the speed limit is checked, so every
/// `Velocity` in circulation is valid and the boost operations cannot fail.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Velocity {
    vx: f64,
    vy: f64,
    vz: f64,
}

impl Velocity {
    pub const ZERO: Velocity = Velocity {
        vx: 0.0,
        vy: 0.0,
        vz: 0.0,
    };

    pub fn new(vx: f64, vy: f64, vz: f64) -> Result<Velocity, SpacetimeError> {
        if !(vx.is_finite() && vy.is_finite() && vz.is_finite()) {
            return Err(SpacetimeError::NonFiniteVelocity);
        }
        let speed = (vx * vx + vy * vy + vz * vz).sqrt();
        if speed >= SPEED_OF_LIGHT {
            return Err(SpacetimeError::SuperluminalVelocity { speed });
        }
        Ok(Velocity { vx, vy, vz })
    }

    pub fn vx(&self) -> f64 {
        self.vx
    }

    pub fn vy(&self) -> f64 {
        self.vy
    }

    pub fn vz(&self) -> f64 {
        self.vz
    }

    pub fn speed(&self) -> f64 {
        (self.vx * self.vx + self.vy * self.vy + self.vz * self.vz).sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.vx == 0.0 && self.vy == 0.0 && self.vz == 0.0
    }

    /// Component of this velocity along the unit direction from `from` to `to`.
    pub fn component_along(&self, from: &Event, to: &Event) -> f64 {
        let dx = to.x - from.x;
        let dy = to.y - from.y;
        let dz = to.z - from.z;
        let norm = (dx * dx + dy * dy + dz * dz).sqrt();
        if norm == 0.0 {
            return 0.0;
        }
        (self.vx * dx + self.vy * dy + self.vz * dz) / norm
    }
}

/// A beam-splitter where the transmit/reflect choice happens.
///
/// `id` is the device index 1..=3; `velocity` is the instantaneous velocity
/// at the choice instant and defines the frame used for its timing judgment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChoiceDevice {
    pub id: u8,
    pub choice_event: Event,
    pub velocity: Velocity,
}

impl ChoiceDevice {
    pub fn new(id: u8, choice_event: Event, velocity: Velocity) -> Result<Self, SpacetimeError> {
        if !(1..=3).contains(&id) {
            return Err(SpacetimeError::UnknownDeviceId(id));
        }
        Ok(ChoiceDevice {
            id,
            choice_event,
            velocity,
        })
    }
}

/// Timing of one device's choice, judged in its own frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TimingLabel {
    Before,
    /// After (or tied with) the referenced device, strictly before the other.
    AfterRelative(u8),
    After,
}

impl TimingLabel {
    /// `true` once after-relative labels are identified with before ones,
    /// which is licensed whenever the two-party marginals are uniform.
    pub fn is_effectively_after(&self) -> bool {
        matches!(self, TimingLabel::After)
    }

    /// Compact token: `b`, `a[k]`, or `a`.
    pub fn token(&self) -> String {
        match self {
            TimingLabel::Before => "b".to_string(),
            TimingLabel::AfterRelative(k) => format!("a[{k}]"),
            TimingLabel::After => "a".to_string(),
        }
    }

    /// Long form used in reports.
    pub fn describe(&self) -> String {
        match self {
            TimingLabel::Before => "Before".to_string(),
            TimingLabel::AfterRelative(k) => format!("AfterRelative({k})"),
            TimingLabel::After => "After".to_string(),
        }
    }
}

impl fmt::Display for TimingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// One timing label per device id 1..=3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TimingRegime {
    labels: [TimingLabel; 3],
}

impl TimingRegime {
    /// Labels indexed by device id 1..=3.
    pub fn new(labels: [TimingLabel; 3]) -> Result<Self, SpacetimeError> {
        for (idx, label) in labels.iter().enumerate() {
            let id = idx as u8 + 1;
            if let TimingLabel::AfterRelative(k) = label {
                if *k == id {
                    return Err(SpacetimeError::SelfReferentialLabel(id));
                }
                if !(1..=3).contains(k) {
                    return Err(SpacetimeError::UnknownDeviceId(*k));
                }
            }
        }
        Ok(TimingRegime { labels })
    }

    pub fn label(&self, id: u8) -> TimingLabel {
        self.labels[(id - 1) as usize]
    }

    pub fn labels(&self) -> [TimingLabel; 3] {
        self.labels
    }

    /// Number of full-after devices once after-relative labels are mapped to
    /// before ones.
    pub fn after_count(&self) -> usize {
        self.labels
            .iter()
            .filter(|l| l.is_effectively_after())
            .count()
    }

    /// Compact form such as `bbb`, `aab`, or `ba[1]a`.
    pub fn compact(&self) -> String {
        self.labels.iter().map(|l| l.token()).collect()
    }
}

impl fmt::Display for TimingRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

/// Inputs to the separation bound `D > c²·δt / V`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FeasibilitySpec {
    pub distance: f64,
    pub delta_t: f64,
    pub speed: f64,
}

impl FeasibilitySpec {
    pub fn new(distance: f64, delta_t: f64, speed: f64) -> Result<Self, SpacetimeError> {
        if !distance.is_finite() || distance <= 0.0 {
            return Err(SpacetimeError::NonPositive("distance"));
        }
        if !delta_t.is_finite() || delta_t <= 0.0 {
            return Err(SpacetimeError::NonPositive("delta_t"));
        }
        if !speed.is_finite() || speed <= 0.0 {
            return Err(SpacetimeError::NonPositive("speed"));
        }
        if speed >= SPEED_OF_LIGHT {
            return Err(SpacetimeError::SuperluminalVelocity { speed });
        }
        Ok(FeasibilitySpec {
            distance,
            delta_t,
            speed,
        })
    }

    pub fn min_distance(&self) -> f64 {
        min_distance(self.delta_t, self.speed).expect("validated at construction")
    }

    pub fn is_satisfied(&self) -> bool {
        self.distance > self.min_distance()
    }

    /// Distance margin above the bound, in meters (negative when violated).
    pub fn margin(&self) -> f64 {
        self.distance - self.min_distance()
    }
}

/// γ and γ−1 for the frame velocity, the latter in the cancellation-free
/// form β² / (w·(1+w)) with w = √(1−β²).
fn gamma_parts(v: &Velocity) -> (Dd, Dd) {
    let c2 = Dd::prod(SPEED_OF_LIGHT, SPEED_OF_LIGHT);
    let v2 = Dd::prod(v.vx, v.vx)
        .add(Dd::prod(v.vy, v.vy))
        .add(Dd::prod(v.vz, v.vz));
    let beta2 = v2.div(c2);
    let w = Dd::ONE.sub(beta2).sqrt();
    let gamma_m1 = beta2.div(w.mul(w.add(Dd::ONE)));
    (gamma_m1.add(Dd::ONE), gamma_m1)
}

/// v·r accumulated exactly, with the position supplied as Dd components.
fn dot_v_r(v: &Velocity, rx: Dd, ry: Dd, rz: Dd) -> Dd {
    rx.mul_f64(v.vx).add(ry.mul_f64(v.vy)).add(rz.mul_f64(v.vz))
}

/// Time coordinate of `e` in the frame moving with velocity `v`, whose
/// origin coincides with the lab origin at t = 0:
/// `t' = γ·(t − v·r / c²)`.
///
/// Computed as `u + (γ−1)·u` with `u = t − v·r/c²` in double-double
/// precision, so picosecond-scale shifts survive meter-scale coordinates.
pub fn boost_time(e: &Event, v: &Velocity) -> f64 {
    let c2 = Dd::prod(SPEED_OF_LIGHT, SPEED_OF_LIGHT);
    let (_, gamma_m1) = gamma_parts(v);
    let vr = dot_v_r(
        v,
        Dd::from_f64(e.x),
        Dd::from_f64(e.y),
        Dd::from_f64(e.z),
    );
    let u = Dd::from_f64(e.t).sub(vr.div(c2));
    u.add(gamma_m1.mul(u)).value()
}

/// Full Lorentz boost of `e` into the frame moving with velocity `v`.
///
/// The spatial part uses `(γ−1)/|v|² = 1 / (c²·w·(1+w))`, which stays finite
/// as |v| → 0.
pub fn boost_event(e: &Event, v: &Velocity) -> Event {
    if v.is_zero() {
        return *e;
    }
    let c2 = Dd::prod(SPEED_OF_LIGHT, SPEED_OF_LIGHT);
    let v2 = Dd::prod(v.vx, v.vx)
        .add(Dd::prod(v.vy, v.vy))
        .add(Dd::prod(v.vz, v.vz));
    let beta2 = v2.div(c2);
    let w = Dd::ONE.sub(beta2).sqrt();
    let gamma = beta2.div(w.mul(w.add(Dd::ONE))).add(Dd::ONE);
    let vr = dot_v_r(
        v,
        Dd::from_f64(e.x),
        Dd::from_f64(e.y),
        Dd::from_f64(e.z),
    );

    let u = Dd::from_f64(e.t).sub(vr.div(c2));
    let t_prime = gamma.mul(u);

    // r' = r + [ v·r / (c²·w·(1+w)) − γ·t ] · v
    let scale = vr
        .div(c2.mul(w.mul(w.add(Dd::ONE))))
        .sub(gamma.mul_f64(e.t));
    Event {
        t: t_prime.value(),
        x: Dd::from_f64(e.x).add(scale.mul_f64(v.vx)).value(),
        y: Dd::from_f64(e.y).add(scale.mul_f64(v.vy)).value(),
        z: Dd::from_f64(e.z).add(scale.mul_f64(v.vz)).value(),
    }
}

/// `T_a − T_b` in the frame moving with velocity `v`.
///
/// Algebraically equal to `boost_time(a, v) − boost_time(b, v)` but formed
/// from the exact coordinate differences, so a common lab-time offset on
/// both events cancels before any rounding can happen.
pub fn boosted_time_delta(a: &Event, b: &Event, v: &Velocity) -> f64 {
    let c2 = Dd::prod(SPEED_OF_LIGHT, SPEED_OF_LIGHT);
    let (_, gamma_m1) = gamma_parts(v);
    let vr = dot_v_r(
        v,
        Dd::diff(a.x, b.x),
        Dd::diff(a.y, b.y),
        Dd::diff(a.z, b.z),
    );
    let u = Dd::diff(a.t, b.t).sub(vr.div(c2));
    u.add(gamma_m1.mul(u)).value()
}

/// Squared invariant interval `c²Δt² − |Δr|²` between two events, accumulated
/// in double-double precision.
pub fn interval_squared(a: &Event, b: &Event) -> f64 {
    let c2 = Dd::prod(SPEED_OF_LIGHT, SPEED_OF_LIGHT);
    let dt = Dd::diff(a.t, b.t);
    let dx = Dd::diff(a.x, b.x);
    let dy = Dd::diff(a.y, b.y);
    let dz = Dd::diff(a.z, b.z);
    c2.mul(dt.mul(dt))
        .sub(dx.mul(dx))
        .sub(dy.mul(dy))
        .sub(dz.mul(dz))
        .value()
}

fn ensure_distinct_ids(devices: &[ChoiceDevice; 3]) -> Result<(), SpacetimeError> {
    for (i, d) in devices.iter().enumerate() {
        if !(1..=3).contains(&d.id) {
            return Err(SpacetimeError::UnknownDeviceId(d.id));
        }
        for other in &devices[i + 1..] {
            if other.id == d.id {
                return Err(SpacetimeError::DuplicateDeviceId(d.id));
            }
        }
    }
    Ok(())
}

/// Timing label of device `id`, judged in its own frame with the default tie
/// tolerance.
pub fn classify_device(
    id: u8,
    devices: &[ChoiceDevice; 3],
) -> Result<TimingLabel, SpacetimeError> {
    classify_device_with_tolerance(id, devices, TIE_TOLERANCE)
}

/// Timing label of device `id` with an explicit tie tolerance in seconds.
///
/// A boosted-time difference within `eps` of zero counts as a tie and
/// resolves toward the non-strict `>=` side, so the three label conditions
/// partition every input.
pub fn classify_device_with_tolerance(
    id: u8,
    devices: &[ChoiceDevice; 3],
    eps: f64,
) -> Result<TimingLabel, SpacetimeError> {
    ensure_distinct_ids(devices)?;
    let me = devices
        .iter()
        .find(|d| d.id == id)
        .ok_or(SpacetimeError::UnknownDeviceId(id))?;
    let mut others = devices.iter().filter(|d| d.id != id);
    let m = others.next().expect("three devices");
    let n = others.next().expect("three devices");

    // T_i >= T_x (ties count as >=) in device i's own frame.
    let geq = |other: &ChoiceDevice| {
        boosted_time_delta(&me.choice_event, &other.choice_event, &me.velocity) >= -eps
    };
    Ok(match (geq(m), geq(n)) {
        (true, true) => TimingLabel::After,
        (false, false) => TimingLabel::Before,
        // Strictly earlier than one device, not earlier than the other:
        // after relative to the one it is not earlier than.
        (false, true) => TimingLabel::AfterRelative(n.id),
        (true, false) => TimingLabel::AfterRelative(m.id),
    })
}

/// Timing labels of all three devices, each judged in its own frame.
pub fn classify_all(devices: &[ChoiceDevice; 3]) -> Result<TimingRegime, SpacetimeError> {
    classify_all_with_tolerance(devices, TIE_TOLERANCE)
}

pub fn classify_all_with_tolerance(
    devices: &[ChoiceDevice; 3],
    eps: f64,
) -> Result<TimingRegime, SpacetimeError> {
    let mut labels = [TimingLabel::Before; 3];
    for id in 1..=3u8 {
        labels[(id - 1) as usize] = classify_device_with_tolerance(id, devices, eps)?;
    }
    TimingRegime::new(labels)
}

/// Lower bound on the device separation needed so motion at speed `v` can
/// reverse choice orderings against an alignment uncertainty `delta_t`:
/// `D_min = c²·delta_t / v`.
///
/// `v = c` is accepted as the degenerate limit, where the bound reduces to
/// `c·delta_t`.
pub fn min_distance(delta_t: f64, v: f64) -> Result<f64, SpacetimeError> {
    if !delta_t.is_finite() || delta_t <= 0.0 {
        return Err(SpacetimeError::NonPositive("delta_t"));
    }
    if !v.is_finite() || v <= 0.0 {
        return Err(SpacetimeError::NonPositive("speed"));
    }
    if v > SPEED_OF_LIGHT {
        return Err(SpacetimeError::SuperluminalVelocity { speed: v });
    }
    Ok(Dd::prod(SPEED_OF_LIGHT, SPEED_OF_LIGHT)
        .mul_f64(delta_t)
        .div(Dd::from_f64(v))
        .value())
}

/// `true` when `distance` exceeds the separation bound for (`delta_t`, `v`).
pub fn check_feasibility(distance: f64, delta_t: f64, v: f64) -> Result<bool, SpacetimeError> {
    Ok(distance > min_distance(delta_t, v)?)
}
