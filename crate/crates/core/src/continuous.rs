//! The continuous inequalities on nonincreasing step functions: the strong
//! transform `∫_0^∞ ((1/t) ∫_t^∞ f(s)^q ds)^{1/q} dt` and the weak transform
//! `sup_t t ((1/t) ∫_t^∞ f(s)^q ds)^{1/q}`.
//!
//! The inner tail integral of a step function is piecewise linear and exact;
//! the outer integral is integrated per panel. On the panel touching `t = 0`
//! the substitution `t = u^{q'}` removes the `t^{-1/q}` singularity exactly
//! (in the single-step model case the integrand becomes
//! `q' (T - u^{q'})^{1/q} / T`), and adaptive panels handle the rest.

use crate::catalog;
use crate::certified::CertifiedValue;
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::kahan::KahanSum;
use crate::quad::adaptive_simpson;

/// A nonincreasing nonnegative piecewise-constant function on `(0, ∞)`:
/// `f = levels[i]` on `(breakpoints[i-1], breakpoints[i]]` (with `t_0 = 0`)
/// and `f = 0` beyond the last breakpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    breakpoints: Vec<f64>,
    levels: Vec<f64>,
}

impl StepFunction {
    pub fn try_new(breakpoints: Vec<f64>, levels: Vec<f64>) -> Result<Self> {
        if breakpoints.is_empty() || breakpoints.len() != levels.len() {
            return Err(Error::InvalidParameter(
                "need equally many breakpoints and levels, at least one each".into(),
            ));
        }
        let mut prev = 0.0;
        for (i, &t) in breakpoints.iter().enumerate() {
            if !t.is_finite() || t <= prev {
                return Err(Error::InvalidBreakpoints { index: i });
            }
            prev = t;
        }
        for (i, &v) in levels.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteEntry { index: i });
            }
            if v < 0.0 {
                return Err(Error::NegativeEntry { index: i, value: v });
            }
            if i > 0 && levels[i - 1] < v {
                return Err(Error::NotNonincreasing { index: i });
            }
        }
        Ok(Self {
            breakpoints,
            levels,
        })
    }

    /// The unit-mass model function `(1/T) χ_{(0,T)}`.
    pub fn model(t_end: f64) -> Result<Self> {
        Self::try_new(vec![t_end], vec![1.0 / t_end])
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }

    pub fn levels(&self) -> &[f64] {
        &self.levels
    }

    pub fn panels(&self) -> usize {
        self.levels.len()
    }

    pub fn value_at(&self, t: f64) -> f64 {
        if t <= 0.0 {
            return self.levels[0];
        }
        match self
            .breakpoints
            .binary_search_by(|b| b.partial_cmp(&t).unwrap())
        {
            Ok(i) => self.levels[i],
            Err(i) if i < self.levels.len() => self.levels[i],
            Err(_) => 0.0,
        }
    }

    /// `∫_0^∞ f`.
    pub fn integral(&self) -> f64 {
        let mut acc = KahanSum::new();
        let mut prev = 0.0;
        for (t, v) in self.breakpoints.iter().zip(&self.levels) {
            acc.add(v * (t - prev));
            prev = *t;
        }
        acc.value()
    }

    /// `sup_{t>0} t f(t)`, attained at a panel's right endpoint.
    pub fn weak_sup(&self) -> (f64, f64) {
        let mut best = (0.0, 0.0);
        for (t, v) in self.breakpoints.iter().zip(&self.levels) {
            let cand = t * v;
            if cand > best.0 {
                best = (cand, *t);
            }
        }
        best
    }

    /// Pointwise sum, again a nonincreasing step function.
    pub fn pointwise_sum(&self, other: &Self) -> Self {
        let mut cuts: Vec<f64> = self
            .breakpoints
            .iter()
            .chain(other.breakpoints.iter())
            .copied()
            .collect();
        cuts.sort_unstable_by(|a, b| a.partial_cmp(b).unwrap());
        cuts.dedup();
        let levels = cuts
            .iter()
            .map(|&t| self.value_at(t) + other.value_at(t))
            .collect();
        Self {
            breakpoints: cuts,
            levels,
        }
    }

    /// `Σ_{j>i} v_j^q Δ_j` for each panel: the inner tail integral beyond the
    /// panel's right endpoint.
    fn tail_energies(&self, qv: f64) -> Vec<f64> {
        let m = self.panels();
        let mut tails = vec![0.0; m];
        let mut acc = KahanSum::new();
        for j in (1..m).rev() {
            let width = self.breakpoints[j] - self.breakpoints[j - 1];
            acc.add(self.levels[j].powf(qv) * width);
            tails[j - 1] = acc.value();
        }
        tails
    }
}

/// `∫_0^∞ ((1/t) ∫_t^∞ f^q ds)^{1/q} dt` with certified-by-estimate
/// quadrature error. Fails when the accumulated error estimate exceeds
/// `quad_tol`.
pub fn strong_transform(f: &StepFunction, q: Exponent, quad_tol: f64) -> Result<CertifiedValue> {
    let qv = q.require_finite("strong_transform")?;
    if quad_tol.is_nan() || quad_tol <= 0.0 {
        return Err(Error::InvalidParameter(
            "quadrature tolerance must be positive".into(),
        ));
    }
    let qp = q.conjugate().value();
    let inv = 1.0 / qv;
    let tails = f.tail_energies(qv);
    let m = f.panels();
    let panel_tol = quad_tol / m as f64;

    let mut total = KahanSum::new();
    let mut err = 0.0;
    for (i, &tail) in tails.iter().enumerate() {
        let t_right = f.breakpoints[i];
        let t_left = if i == 0 { 0.0 } else { f.breakpoints[i - 1] };
        let vq = f.levels[i].powf(qv);
        if vq == 0.0 && tail == 0.0 {
            continue;
        }
        let r = if i == 0 {
            // remove the t^{-1/q} singularity: t = u^{q'}
            let u_end = t_right.powf(1.0 / qp);
            let integrand = |u: f64| qp * (vq * (t_right - u.powf(qp)).max(0.0) + tail).powf(inv);
            adaptive_simpson(&integrand, 0.0, u_end, panel_tol)
        } else {
            let integrand = |t: f64| ((vq * (t_right - t).max(0.0) + tail) / t).powf(inv);
            adaptive_simpson(&integrand, t_left, t_right, panel_tol)
        };
        total.add(r.value);
        err += r.err_estimate;
    }
    if err > quad_tol {
        return Err(Error::QuadratureNonConvergence {
            achieved: err,
            requested: quad_tol,
        });
    }
    Ok(CertifiedValue::new(total.value(), 2.0 * err + 1e-14))
}

const SANDWICH_TOL: f64 = 1e-9;

/// Both sides of the strong continuous sandwich on one function.
#[derive(Debug, Clone, Copy)]
pub struct SandwichRatios {
    /// `transform / ∫f`, at most the lower constant `π/(q sin(π/q))`.
    pub lhs_ratio: f64,
    /// `∫f / transform`, at most the upper constant `(q-1)^{1/q}`.
    pub rhs_ratio: f64,
    pub lhs_ok: bool,
    pub rhs_ok: bool,
}

pub fn strong_sandwich(f: &StepFunction, q: Exponent) -> Result<SandwichRatios> {
    let transform = strong_transform(f, q, 1e-10)?;
    let mass = f.integral();
    if mass == 0.0 {
        return Err(Error::ZeroIntegral);
    }
    let constants = catalog::continuous(q)?;
    let lhs_ratio = transform.value / mass;
    let rhs_ratio = mass / transform.value;
    Ok(SandwichRatios {
        lhs_ratio,
        rhs_ratio,
        lhs_ok: lhs_ratio <= constants.strong_lower.upper() * (1.0 + SANDWICH_TOL) + SANDWICH_TOL,
        rhs_ok: rhs_ratio <= constants.strong_upper.upper() * (1.0 + SANDWICH_TOL) + SANDWICH_TOL,
    })
}

/// Weak transform and weak sup of a step function, with their maximizers.
/// The per-panel objective `t^{1-1/q} (v^q (t_i - t) + R_i)^{1/q}` is maximized
/// in closed form: the interior critical point is
/// `t* = (q-1)(v^q t_i + R_i)/(q v^q)` when it falls inside the panel.
#[derive(Debug, Clone, Copy)]
pub struct WeakContValues {
    pub weak_lhs: f64,
    pub lhs_at: f64,
    pub weak_rhs: f64,
    pub rhs_at: f64,
}

pub fn weak_values(f: &StepFunction, q: Exponent) -> Result<WeakContValues> {
    let qv = q.require_finite("weak_values")?;
    let inv = 1.0 / qv;
    let co = 1.0 - inv;
    let tails = f.tail_energies(qv);

    let objective = |t: f64, vq: f64, t_right: f64, tail: f64| -> f64 {
        t.powf(co) * (vq * (t_right - t) + tail).powf(inv)
    };

    let mut best = (0.0f64, 0.0f64);
    for (i, &tail) in tails.iter().enumerate() {
        let t_right = f.breakpoints[i];
        let t_left = if i == 0 { 0.0 } else { f.breakpoints[i - 1] };
        let vq = f.levels[i].powf(qv);
        let at_right = objective(t_right, vq, t_right, tail);
        if at_right > best.0 {
            best = (at_right, t_right);
        }
        if vq > 0.0 {
            let t_star = (qv - 1.0) * (vq * t_right + tail) / (qv * vq);
            if t_star > t_left && t_star < t_right {
                let v = objective(t_star, vq, t_right, tail);
                if v > best.0 {
                    best = (v, t_star);
                }
            }
        }
    }
    let (weak_rhs, rhs_at) = f.weak_sup();
    Ok(WeakContValues {
        weak_lhs: best.0,
        lhs_at: best.1,
        weak_rhs,
        rhs_at,
    })
}

/// Weak transform of the scale-invariant extremal `f(t) = 1/t`: the constant
/// value `(q-1)^{-1/q}`, independent of `t`.
pub fn weak_reciprocal_value(q: Exponent) -> Result<f64> {
    let qv = q.require_finite("weak_reciprocal_value")?;
    Ok((qv - 1.0).powf(-1.0 / qv))
}
