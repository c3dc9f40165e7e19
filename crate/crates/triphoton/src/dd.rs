//! Double-double accumulation for the picosecond time bookkeeping.
//!
//! Laboratory velocities of a few km/s against baselines of tens of meters
//! shift boosted choice times by ~1e-12 s while γ−1 is ~3.5e-11. Plain f64
//! subtraction of nearly equal coordinates would erase that signal, so the
//! boost internals carry an unevaluated hi+lo pair (~106 bits) and round to
//! f64 once at the end.

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    hi: f64,
    lo: f64,
}

/// Error-free sum of two f64 values (Knuth two-sum).
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

/// Two-sum specialization valid when `|a| >= |b|`.
fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd { hi: s, lo: b - (s - a) }
}

/// Error-free product via fused multiply-add.
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    Dd {
        hi: p,
        lo: f64::mul_add(a, b, -p),
    }
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    /// Exact difference of two f64 values as a Dd.
    pub fn diff(a: f64, b: f64) -> Dd {
        two_sum(a, -b)
    }

    /// Exact product of two f64 values as a Dd.
    pub fn prod(a: f64, b: f64) -> Dd {
        two_prod(a, b)
    }

    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    pub fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    pub fn add(self, o: Dd) -> Dd {
        let s = two_sum(self.hi, o.hi);
        quick_two_sum(s.hi, s.lo + self.lo + o.lo)
    }

    pub fn sub(self, o: Dd) -> Dd {
        self.add(o.neg())
    }

    pub fn mul(self, o: Dd) -> Dd {
        let p = two_prod(self.hi, o.hi);
        quick_two_sum(p.hi, p.lo + self.hi * o.lo + self.lo * o.hi)
    }

    pub fn mul_f64(self, x: f64) -> Dd {
        let p = two_prod(self.hi, x);
        quick_two_sum(p.hi, p.lo + self.lo * x)
    }

    pub fn div(self, o: Dd) -> Dd {
        // Long division with two correction terms.
        let q1 = self.hi / o.hi;
        let r1 = self.sub(o.mul_f64(q1));
        let q2 = r1.value() / o.hi;
        let r2 = r1.sub(o.mul_f64(q2));
        let q3 = r2.value() / o.hi;
        quick_two_sum(q1, q2).add(Dd::from_f64(q3))
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        // One Newton step on the f64 estimate doubles its precision.
        let y0 = self.hi.sqrt();
        let y = Dd::from_f64(y0);
        let residual = self.sub(y.mul(y));
        y.add(Dd::from_f64(residual.value() / (2.0 * y0)))
    }
}
