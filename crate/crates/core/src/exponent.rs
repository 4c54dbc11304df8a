//! The exponent parameter `q` of the inequalities, with `q = inf` as a
//! distinguished state and `q = 1` admitted only where an operation
//! explicitly permits the closure point.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// An exponent `q ∈ (1, ∞]`, plus the flagged closure point `q = 1`.
///
/// The Hölder conjugate of a finite exponent is kept in implicit form
/// (`ConjugateOf(q)` stands for `q/(q-1)`), so `conjugate` round-trips
/// exactly: taking the conjugate twice reproduces the original bits. Storing
/// `q/(q-1)` as a plain f64 instead would lose up to `(q-1)^2` ulps on the way
/// back.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    /// Flagged closure point `q = 1`; rejected by most operations.
    One,
    /// The degenerate endpoint `q = ∞` (inner means collapse to `a_n`).
    Infinity,
    /// A finite exponent `q > 1`.
    Finite(f64),
    /// The Hölder conjugate `q/(q-1)` of the finite exponent `q` stored.
    ConjugateOf(f64),
}

impl Exponent {
    /// Validates `q > 1` finite, or `+∞`.
    pub fn try_new(q: f64) -> Result<Self> {
        if q.is_nan() || q <= 1.0 {
            Err(Error::InvalidExponent { q })
        } else if q.is_infinite() {
            Ok(Exponent::Infinity)
        } else {
            Ok(Exponent::Finite(q))
        }
    }

    /// The Hölder conjugate: `1/q + 1/q' = 1`, with `1 ↔ ∞`.
    pub fn conjugate(self) -> Self {
        match self {
            Exponent::One => Exponent::Infinity,
            Exponent::Infinity => Exponent::One,
            Exponent::Finite(q) => Exponent::ConjugateOf(q),
            Exponent::ConjugateOf(q) => Exponent::Finite(q),
        }
    }

    /// Numeric value of `q` (`∞` maps to `f64::INFINITY`).
    pub fn value(self) -> f64 {
        match self {
            Exponent::One => 1.0,
            Exponent::Infinity => f64::INFINITY,
            Exponent::Finite(q) => q,
            Exponent::ConjugateOf(q) => q / (q - 1.0),
        }
    }

    /// `1/q`, computed without going through `value()` for conjugates.
    pub fn recip(self) -> f64 {
        match self {
            Exponent::One => 1.0,
            Exponent::Infinity => 0.0,
            Exponent::Finite(q) => 1.0 / q,
            Exponent::ConjugateOf(q) => (q - 1.0) / q,
        }
    }

    /// `1/q' = 1 - 1/q`.
    pub fn conj_recip(self) -> f64 {
        match self {
            Exponent::One => 0.0,
            Exponent::Infinity => 1.0,
            Exponent::Finite(q) => (q - 1.0) / q,
            Exponent::ConjugateOf(q) => 1.0 / q,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinity)
    }

    pub fn is_one(self) -> bool {
        matches!(self, Exponent::One)
    }

    pub fn is_finite(self) -> bool {
        !matches!(self, Exponent::One | Exponent::Infinity)
    }

    /// Domain guard for operations that require `1 < q < ∞`.
    pub fn require_finite(self, op: &'static str) -> Result<f64> {
        if self.is_finite() {
            Ok(self.value())
        } else {
            Err(Error::ExponentOutOfRange {
                op,
                detail: format!("requires 1 < q < inf, got {self}"),
            })
        }
    }

    /// Domain guard for operations that require `q > 1` (∞ allowed).
    pub fn require_above_one(self, op: &'static str) -> Result<()> {
        if self.is_one() {
            Err(Error::ExponentOutOfRange {
                op,
                detail: "requires q > 1".to_string(),
            })
        } else {
            Ok(())
        }
    }
}

impl FromStr for Exponent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(Exponent::Infinity),
            other => {
                let q: f64 = other
                    .parse()
                    .map_err(|_| Error::InvalidExponent { q: f64::NAN })?;
                if q == 1.0 {
                    Ok(Exponent::One)
                } else {
                    Exponent::try_new(q)
                }
            }
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Infinity => write!(f, "inf"),
            other => write!(f, "{}", other.value()),
        }
    }
}
