//! Best n-term approximation in Hilbert coordinates and the equivalence of
//! approximation-space and Lorentz quasi-norms: with `τ = (α + 1/2)^{-1}`,
//!
//! `(1/c) ‖f‖_{A_r^α} ≤ ‖(f_k)‖_{ℓ_{τ,r}} ≤ C ‖f‖_{A_r^α}`,
//!
//! where for `r = τ` the optimal constants are the strong discrete constants
//! at `q = 2α + 1` raised to the power `α + 1/2`, and for `r = ∞` the weak
//! ones. Substituting `a_k = (f*_k)^τ` turns the `r = τ` equivalence into the
//! strong discrete inequality verbatim.

use crate::catalog;
use crate::certified::CertifiedValue;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::kahan::KahanSum;
use crate::sequence::{rearrange, MonotoneSequence};

/// Coefficients of an element in an orthonormal basis, zero-padded beyond the
/// stored entries. Only moduli matter to every quantity computed here.
#[derive(Debug, Clone, PartialEq)]
pub struct CoeffVector {
    coeffs: Vec<f64>,
}

impl CoeffVector {
    pub fn try_new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySequence);
        }
        for (i, &v) in coeffs.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteEntry { index: i });
            }
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn rearranged(&self) -> MonotoneSequence {
        rearrange(&self.coeffs).expect("construction guarantees a valid vector")
    }
}

/// Parameters of the approximation space `A_r^α`: `α > 0`, `r ∈ (0, ∞]`, and
/// the derived `τ = (α + 1/2)^{-1} ∈ (0, 2)`.
#[derive(Debug, Clone, Copy)]
pub struct ApproxParams {
    pub alpha: f64,
    pub r: f64,
    pub tau: f64,
}

impl ApproxParams {
    pub fn new(alpha: f64, r: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "alpha must be positive and finite, got {alpha}"
            )));
        }
        if r.is_nan() || r <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "r must be positive (inf allowed), got {r}"
            )));
        }
        Ok(Self {
            alpha,
            r,
            tau: 1.0 / (alpha + 0.5),
        })
    }
}

/// Best `n`-term approximation errors `E_n = (Σ_{k≥n} (f*_k)^2)^{1/2}` for
/// `n = 1..=len+1`; `E_1` is the full norm (approximation by nothing) and
/// `E_{len+1} = 0`.
pub fn approximation_errors(c: &CoeffVector) -> Vec<f64> {
    let sorted = c.rearranged();
    let n = sorted.len();
    let mut out = vec![0.0; n + 1];
    let mut acc = KahanSum::new();
    for i in (0..n).rev() {
        let v = sorted.entries()[i];
        acc.add(v * v);
        out[i] = acc.value().max(0.0).sqrt();
    }
    out
}

/// `‖f‖_{A_r^α} = (Σ_n (n^α E_n)^r / n)^{1/r}` (sup over `n` for `r = ∞`).
pub fn approx_space_norm(c: &CoeffVector, p: &ApproxParams) -> f64 {
    let errors = approximation_errors(c);
    if p.r.is_infinite() {
        let mut best = 0.0f64;
        for (i, &e) in errors.iter().enumerate() {
            best = best.max(((i + 1) as f64).powf(p.alpha) * e);
        }
        best
    } else {
        let mut acc = KahanSum::new();
        for (i, &e) in errors.iter().enumerate().rev() {
            if e == 0.0 {
                continue;
            }
            let n = (i + 1) as f64;
            acc.add((n.powf(p.alpha) * e).powf(p.r) / n);
        }
        acc.value().powf(1.0 / p.r)
    }
}

/// Lorentz quasi-norm `‖(f_k)‖_{ℓ_{p,r}} = (Σ_n (n^{1/p} f*_n)^r / n)^{1/r}`
/// (sup over `n` for `r = ∞`).
pub fn lorentz_norm(c: &CoeffVector, p: f64, r: f64) -> Result<f64> {
    if p.is_nan() || p <= 0.0 || r.is_nan() || r <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "lorentz orders must be positive, got p = {p}, r = {r}"
        )));
    }
    let sorted = c.rearranged();
    let ip = if p.is_infinite() { 0.0 } else { 1.0 / p };
    if r.is_infinite() {
        let mut best = 0.0f64;
        for (i, &v) in sorted.entries().iter().enumerate() {
            best = best.max(((i + 1) as f64).powf(ip) * v);
        }
        Ok(best)
    } else {
        let mut acc = KahanSum::new();
        for (i, &v) in sorted.entries().iter().enumerate().rev() {
            if v == 0.0 {
                continue;
            }
            let n = (i + 1) as f64;
            acc.add((n.powf(ip) * v).powf(r) / n);
        }
        Ok(acc.value().powf(1.0 / r))
    }
}

/// Which secondary index the equivalence is taken at.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RMode {
    /// `r = τ`: constants from the strong discrete inequality.
    Tau,
    /// `r = ∞`: constants from the weak discrete inequality.
    Infinity,
}

/// The equivalence constants at `q = 2α + 1`, raised to the power
/// `α + 1/2 = 1/τ`.
#[derive(Debug, Clone, Copy)]
pub struct DevoreConstants {
    pub lower: CertifiedValue,
    pub upper: CertifiedValue,
    /// True when the upper constant is only the best known bound rather than
    /// the proven minimal constant (strong case with `q < q0`).
    pub upper_is_bound: bool,
}

pub fn devore_constants(alpha: f64, r: RMode) -> Result<DevoreConstants> {
    if !alpha.is_finite() || alpha <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "alpha must be positive and finite, got {alpha}"
        )));
    }
    let q = Exponent::try_new(2.0 * alpha + 1.0)?;
    let power = alpha + 0.5;
    let raise = |c: CertifiedValue| {
        if power == 1.0 {
            c
        } else {
            c.powf(power)
        }
    };
    match r {
        RMode::Tau => {
            let lower = raise(catalog::strong_lower(q)?);
            let upper = raise(catalog::strong_upper(q)?);
            let q0 = catalog::gao_q0()?.value;
            Ok(DevoreConstants {
                lower,
                upper,
                upper_is_bound: q.value() < q0,
            })
        }
        RMode::Infinity => Ok(DevoreConstants {
            lower: raise(catalog::weak_lower(q)?),
            upper: raise(catalog::weak_upper(q)?),
            upper_is_bound: false,
        }),
    }
}

/// One-vector verification of the quasi-norm equivalence.
#[derive(Debug, Clone, Copy)]
pub struct EquivalenceReport {
    pub lorentz: f64,
    pub approx: f64,
    pub lower_ok: bool,
    pub upper_ok: bool,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.lower_ok && self.upper_ok
    }
}

pub fn equivalence_check(c: &CoeffVector, alpha: f64, r: RMode) -> Result<EquivalenceReport> {
    let constants = devore_constants(alpha, r)?;
    let tau = 1.0 / (alpha + 0.5);
    let (approx, lorentz) = match r {
        RMode::Tau => {
            let p = ApproxParams::new(alpha, tau)?;
            (approx_space_norm(c, &p), lorentz_norm(c, tau, tau)?)
        }
        RMode::Infinity => {
            let p = ApproxParams::new(alpha, f64::INFINITY)?;
            (
                approx_space_norm(c, &p),
                lorentz_norm(c, tau, f64::INFINITY)?,
            )
        }
    };
    let slack = 1e-12;
    let lower_ok = lorentz >= approx / constants.lower.upper() * (1.0 - slack) - slack;
    let upper_ok = lorentz <= constants.upper.upper() * approx * (1.0 + slack) + slack;
    Ok(EquivalenceReport {
        lorentz,
        approx,
        lower_ok,
        upper_ok,
    })
}
