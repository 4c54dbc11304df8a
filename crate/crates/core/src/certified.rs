//! Values carrying a rigorous enclosure radius.

/// Outward-rounding factor applied whenever error bounds are combined, so that
/// the propagated radius never shrinks below the true one through rounding.
pub const OUTWARD: f64 = 1.0 + 9.094947017729282e-13; // 1 + 2^-40

/// A real value together with a nonnegative radius `err` such that the
/// mathematically exact quantity lies in `[value - err, value + err]`.
///
/// Closed-form constants are represented with `err = 0`: the f64 evaluation of
/// the formula is the deliverable value. Nonzero radii arise from series
/// truncation, bracketing root finders, and quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedValue {
    pub value: f64,
    pub err: f64,
}

impl CertifiedValue {
    pub fn exact(value: f64) -> Self {
        Self { value, err: 0.0 }
    }

    pub fn new(value: f64, err: f64) -> Self {
        debug_assert!(err >= 0.0);
        Self {
            value,
            err: err.max(0.0),
        }
    }

    /// Midpoint-radius enclosure of the interval `[lo, hi]`.
    pub fn from_interval(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi);
        Self {
            value: 0.5 * (lo + hi),
            err: (0.5 * (hi - lo)) * OUTWARD,
        }
    }

    pub fn lower(&self) -> f64 {
        self.value - self.err
    }

    pub fn upper(&self) -> f64 {
        self.value + self.err
    }

    pub fn contains(&self, x: f64) -> bool {
        (x - self.value).abs() <= self.err
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            value: self.value * c,
            err: self.err * c.abs() * OUTWARD,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            value: self.value + other.value,
            err: (self.err + other.err) * OUTWARD,
        }
    }

    /// Push the enclosure through a monotonically increasing map. The value is
    /// `g(value)`; the radius covers both interval endpoints.
    pub fn map_monotone(&self, g: impl Fn(f64) -> f64) -> Self {
        let v = g(self.value);
        if self.err == 0.0 {
            return Self::exact(v);
        }
        let lo = g(self.lower());
        let hi = g(self.upper());
        let radius = (hi - v).max(v - lo).max(0.0);
        Self {
            value: v,
            err: radius * OUTWARD,
        }
    }

    /// Enclosure of `self^s` for `s > 0` on nonnegative values.
    pub fn powf(&self, s: f64) -> Self {
        debug_assert!(s > 0.0);
        self.map_monotone(|x| x.powf(s))
    }
}

impl std::fmt::Display for CertifiedValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.err == 0.0 {
            write!(f, "{} ± 0", self.value)
        } else {
            write!(f, "{} ± {:e}", self.value, self.err)
        }
    }
}
