//! Closed-form evaluation of the optimal constants and published upper bounds
//! of the two-sided Stechkin inequalities, the certified Riemann zeta
//! evaluation they rely on, and the implicit thresholds located by bracketing.
//!
//! Naming follows the four inequalities:
//!
//! * strong discrete:   `(1/c1) γ_q(a) ≤ Σ a_n ≤ C1 γ_q(a)`
//! * weak discrete:     the same sandwich for `sup n a_n` and its transform
//! * strong/weak continuous: integral analogues on decreasing functions
//!
//! `strong_lower`/`weak_lower` return the minimal left-hand constants (both
//! known in closed form), `weak_upper` the minimal right-hand weak constant,
//! and `strong_upper` the best known upper bound on the right-hand strong
//! constant, which is only known exactly for `q ≥ q0 ≈ 2.8855`.

use crate::certified::{CertifiedValue, OUTWARD};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::kahan::KahanSum;
use crate::roots;
use std::f64::consts::{E, LN_2, PI};

/// Right endpoint `(2 + ln 2)/(2 - ln 2) ≈ 2.0608` of the interval on which
/// the optimized-family bound `improved` is valid (there the optimal family
/// parameter reaches `p = 1`).
pub const Q_IMPROVED_MAX: f64 = (2.0 + LN_2) / (2.0 - LN_2);

/// De Bruijn's evaluation of the minimal strong upper constant at `q = 2`,
/// correct to 9 units in the last printed decimal.
pub const DE_BRUIJN_C1_2: f64 = 1.1064957714;
pub const DE_BRUIJN_C1_2_ERR: f64 = 9e-10;

/// Minimal constant `c1(q) = π/(q sin(π/q))` on the left-hand side of the
/// strong discrete inequality (Bennett's constant); `c1(∞) = 1`.
pub fn strong_lower(q: Exponent) -> Result<CertifiedValue> {
    q.require_above_one("strong_lower")?;
    if q.is_infinite() {
        return Ok(CertifiedValue::exact(1.0));
    }
    let qv = q.value();
    Ok(CertifiedValue::exact(PI / (qv * (PI / qv).sin())))
}

/// Best known upper bound for the right-hand strong constant `C1(q)`:
///
/// * `(e ln 2 / √2)^{1 - 1/q}`          for `1 ≤ q ≤ (2+ln2)/(2-ln2)`,
/// * de Bruijn's `1.1064957714 ± 9e-10` at exactly `q = 2`,
/// * `2 (2q' - 1)^{-1/q'}`              up to the Gao threshold `q0`,
/// * the exact value `(q-1)^{1/q}`      for `q ≥ q0` (and 1 at `q = ∞`).
pub fn strong_upper(q: Exponent) -> Result<CertifiedValue> {
    if q.is_one() {
        return Ok(CertifiedValue::exact(1.0));
    }
    if q.is_infinite() {
        return Ok(CertifiedValue::exact(1.0));
    }
    let qv = q.value();
    if qv == 2.0 {
        return Ok(CertifiedValue::new(DE_BRUIJN_C1_2, DE_BRUIJN_C1_2_ERR));
    }
    if qv <= Q_IMPROVED_MAX {
        return improved(q);
    }
    if qv < 3.0 {
        let q0 = gao_q0()?.value;
        if qv < q0 {
            return stechkin_choice(q);
        }
    }
    Ok(CertifiedValue::exact((qv - 1.0).powf(1.0 / qv)))
}

/// Copson's bound `C1(q) ≤ q^{1/q}`.
pub fn copson(q: Exponent) -> Result<CertifiedValue> {
    let qv = q.require_finite("copson")?;
    Ok(CertifiedValue::exact(qv.powf(1.0 / qv)))
}

pub(crate) fn levin_stechkin_branch1(qv: f64) -> f64 {
    let iq = 1.0 / qv;
    2f64.powf(iq - 2.0) * (3.0 - iq) * qv * (2.0 - iq).powf(iq - 1.0)
}

/// Levin and Stechkin's three-branch bound on `C1(q)`:
///
/// * `2^{1/q-2} (3 - 1/q) q (2 - 1/q)^{1/q-1}` for `1 < q < 5/3`,
/// * `2 (2q' - 1)^{-1/q'}`                     for `5/3 ≤ q < 3`,
/// * `(q - 1)^{1/q}` (exact there)             for `q ≥ 3`.
///
/// The first branch carries the factor `(2 - 1/q)`; printings with
/// `(1 - 1/q)` instead would not improve on Copson's bound.
pub fn levin_stechkin(q: Exponent) -> Result<CertifiedValue> {
    let qv = q.require_finite("levin_stechkin")?;
    let v = if qv < 5.0 / 3.0 {
        levin_stechkin_branch1(qv)
    } else if qv < 3.0 {
        return stechkin_choice(q);
    } else {
        (qv - 1.0).powf(1.0 / qv)
    };
    Ok(CertifiedValue::exact(v))
}

/// The bound `C1(q) ≤ 2 (2q' - 1)^{-1/q'}`, i.e. the auxiliary-sequence bound
/// with `b_k = k(k+1)`; extends Levin and Stechkin's middle branch to all
/// `1 < q < ∞`.
pub fn stechkin_choice(q: Exponent) -> Result<CertifiedValue> {
    q.require_finite("stechkin_choice")?;
    let qp = q.conjugate().value();
    let co = q.conj_recip(); // 1/q'
    Ok(CertifiedValue::exact(2.0 * (2.0 * qp - 1.0).powf(-co)))
}

/// The optimized-family bound `C1(q) ≤ (e ln 2 / √2)^{1/q'}`, valid for
/// `1 < q ≤ (2+ln2)/(2-ln2)`; obtained from `b_k = (k(k+1))^p` at the
/// minimizing `p`.
pub fn improved(q: Exponent) -> Result<CertifiedValue> {
    let qv = q.require_finite("improved")?;
    if qv > Q_IMPROVED_MAX {
        return Err(Error::ExponentOutOfRange {
            op: "improved",
            detail: format!("valid only for q <= {Q_IMPROVED_MAX}, got {qv}"),
        });
    }
    Ok(CertifiedValue::exact(
        (E * LN_2 / 2f64.sqrt()).powf(q.conj_recip()),
    ))
}

/// Gao's exact constant `C1(q) = (q-1)^{1/q}`, valid for `q ≥ q0`.
pub fn gao_exact(q: Exponent) -> Result<CertifiedValue> {
    q.require_above_one("gao_exact")?;
    if q.is_infinite() {
        return Ok(CertifiedValue::exact(1.0));
    }
    let qv = q.value();
    let q0 = gao_q0()?;
    if qv < q0.value - q0.err {
        return Err(Error::ExponentOutOfRange {
            op: "gao_exact",
            detail: format!("exactness proven only for q >= q0 = {:.6}", q0.value),
        });
    }
    Ok(CertifiedValue::exact((qv - 1.0).powf(1.0 / qv)))
}

/// `levin_stechkin` with the exactness threshold lowered from 3 to Gao's
/// `q0`; the solid composite curve of the bound overlay.
pub fn levin_stechkin_gao(q: Exponent) -> Result<CertifiedValue> {
    let qv = q.require_finite("levin_stechkin_gao")?;
    let q0 = gao_q0()?.value;
    if qv >= q0 {
        Ok(CertifiedValue::exact((qv - 1.0).powf(1.0 / qv)))
    } else {
        levin_stechkin(q)
    }
}

/// Certified `ζ(q)` from a compensated partial sum plus the midpoint of the
/// two-sided integral bracket
/// `(M+1)^{1-q}/(q-1) ≤ Σ_{k>M} k^{-q} ≤ M^{1-q}/(q-1)`,
/// with `M` chosen so the enclosure radius stays below `tol`.
pub fn zeta(q: f64, tol: f64) -> Result<CertifiedValue> {
    const M_CAP: u64 = 200_000_000;
    if !q.is_finite() || q < 1.0 + 1e-3 {
        return Err(Error::ExponentOutOfRange {
            op: "zeta",
            detail: format!("requires finite q >= 1.001 (diverges toward q = 1), got {q}"),
        });
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "tolerance must be positive, got {tol}"
        )));
    }

    let tail_bracket = |m: u64| -> (f64, f64) {
        let lo = ((m + 1) as f64).powf(1.0 - q) / (q - 1.0);
        let hi = (m as f64).powf(1.0 - q) / (q - 1.0);
        (lo, hi)
    };

    // half-width ≈ M^{-q}/2, so M ≈ (2 tol)^{-1/q} up to safety margin
    let mut m = ((2.0 * tol).powf(-1.0 / q).ceil() as u64).max(16);
    loop {
        if m > M_CAP {
            return Err(Error::ToleranceUnreachable { q, tol, cap: M_CAP });
        }
        let (lo, hi) = tail_bracket(m);
        if 0.5 * (hi - lo) * 1.05 <= tol {
            break;
        }
        m *= 2;
    }

    let partial = KahanSum::sum_iter((1..=m).rev().map(|k| (k as f64).powf(-q)));
    let (lo, hi) = tail_bracket(m);
    let value = partial + 0.5 * (lo + hi);
    let fp_slack = partial * f64::EPSILON * 4.0;
    let err = (0.5 * (hi - lo) + fp_slack) * OUTWARD;
    if err > tol {
        return Err(Error::ToleranceUnreachable { q, tol, cap: M_CAP });
    }
    Ok(CertifiedValue::new(value, err))
}

const WEAK_LOWER_DEFAULT_TOL: f64 = 1e-10;
const WEAK_LOWER_SOFT_TERMS: f64 = 2_000_000.0;

/// Minimal weak discrete left-hand constant `c_{1,∞}(q) = ζ(q)^{1/q}`;
/// requires `q ≥ 1.001` (the zeta factor diverges at 1) and returns 1 at
/// `q = ∞`. The certification tolerance adapts so evaluation stays cheap even
/// very close to the divergence.
pub fn weak_lower(q: Exponent) -> Result<CertifiedValue> {
    if q.is_infinite() {
        return Ok(CertifiedValue::exact(1.0));
    }
    let qv = q.require_finite("weak_lower")?;
    // tolerance reachable with a soft term budget: half-width ≈ M^{-q}/2
    let reachable = 0.6 * WEAK_LOWER_SOFT_TERMS.powf(-qv);
    weak_lower_with_tol(q, WEAK_LOWER_DEFAULT_TOL.max(reachable))
}

/// `weak_lower` with an explicit zeta tolerance.
pub fn weak_lower_with_tol(q: Exponent, tol: f64) -> Result<CertifiedValue> {
    if q.is_infinite() {
        return Ok(CertifiedValue::exact(1.0));
    }
    let qv = q.require_finite("weak_lower")?;
    if qv < 1.0 + 1e-3 {
        return Err(Error::ExponentOutOfRange {
            op: "weak_lower",
            detail: format!("q too close to 1 (requires q >= 1.001), got {qv}"),
        });
    }
    let z = zeta(qv, tol)?;
    Ok(z.powf(q.recip()))
}

/// Minimal weak right-hand constant, shared by the discrete and continuous
/// inequalities: `C_{1,∞}(q) = q^{1/q} (q')^{1/q'}`, symmetric under Hölder
/// conjugation; equals 1 at both endpoints `q = 1` and `q = ∞`.
pub fn weak_upper(q: Exponent) -> Result<CertifiedValue> {
    if q.is_one() || q.is_infinite() {
        return Ok(CertifiedValue::exact(1.0));
    }
    let qv = q.value();
    let cv = q.conjugate().value();
    Ok(CertifiedValue::exact(
        qv.powf(q.recip()) * cv.powf(q.conj_recip()),
    ))
}

/// The four optimal constants of the continuous inequalities.
#[derive(Debug, Clone, Copy)]
pub struct ContinuousConstants {
    /// `π/(q sin(π/q))`, identical to the discrete `strong_lower`.
    pub strong_lower: CertifiedValue,
    /// `(q-1)^{1/q}` (Hardy–Littlewood–Pólya).
    pub strong_upper: CertifiedValue,
    /// `(q-1)^{-1/q}`.
    pub weak_lower: CertifiedValue,
    /// Coincides with the discrete `weak_upper`.
    pub weak_upper: CertifiedValue,
}

pub fn continuous(q: Exponent) -> Result<ContinuousConstants> {
    q.require_above_one("continuous")?;
    if q.is_infinite() {
        let one = CertifiedValue::exact(1.0);
        return Ok(ContinuousConstants {
            strong_lower: one,
            strong_upper: one,
            weak_lower: one,
            weak_upper: one,
        });
    }
    let qv = q.value();
    Ok(ContinuousConstants {
        strong_lower: strong_lower(q)?,
        strong_upper: CertifiedValue::exact((qv - 1.0).powf(1.0 / qv)),
        weak_lower: CertifiedValue::exact((qv - 1.0).powf(-1.0 / qv)),
        weak_upper: weak_upper(q)?,
    })
}

/// Gao's threshold equation
/// `2^{1/(q-1)} ((q-1)^{q/(q-1)} - (q-1)) - ((5-q)/2)^{q/(q-1)} = 0`,
/// with `1 + (3-q)/2` evaluated literally as `(5-q)/2`.
fn gao_equation(q: f64) -> f64 {
    let e = q / (q - 1.0);
    2f64.powf(1.0 / (q - 1.0)) * ((q - 1.0).powf(e) - (q - 1.0)) - ((5.0 - q) / 2.0).powf(e)
}

/// The threshold `q0 ≈ 2.8855` above which `(q-1)^{1/q}` is the exact strong
/// upper constant, bisected on `[2.5, 3]` to half-width `1e-8`.
pub fn gao_q0() -> Result<CertifiedValue> {
    let (mid, hw) = roots::bisect(gao_equation, 2.5, 3.0, 1e-8)?;
    Ok(CertifiedValue::new(mid, hw * OUTWARD))
}

/// Residual of the threshold equation, exposed for verification.
pub fn gao_residual(q: f64) -> f64 {
    gao_equation(q)
}

/// The four comparison thresholds between the published bounds:
/// `q1 < q2` bracket where the `b_k = k(k+1)` bound beats Copson's,
/// `q3` is the minimizer of that bound, and `q4` is where it crosses the
/// Levin–Stechkin first branch.
#[derive(Debug, Clone, Copy)]
pub struct Crossovers {
    pub q1: CertifiedValue,
    pub q2: CertifiedValue,
    pub q3: CertifiedValue,
    pub q4: CertifiedValue,
}

pub fn crossovers() -> Result<Crossovers> {
    let sc = |q: f64| {
        let qp = q / (q - 1.0);
        2.0 * (2.0 * qp - 1.0).powf(-(q - 1.0) / q)
    };
    let cop = |q: f64| q.powf(1.0 / q);
    let hw = 1e-6;

    let (q1, e1) = roots::bisect(|q| sc(q) - cop(q), 1.1, 2.0, hw)?;
    let (q2, e2) = roots::bisect(|q| sc(q) - cop(q), 3.0, 6.0, hw)?;
    let (q3, e3) = roots::golden_min(sc, 1.1, 3.0, hw);
    let (q4, e4) = roots::bisect(|q| levin_stechkin_branch1(q) - sc(q), 1.1, 5.0 / 3.0, hw)?;

    Ok(Crossovers {
        q1: CertifiedValue::new(q1, e1 * OUTWARD),
        q2: CertifiedValue::new(q2, e2 * OUTWARD),
        q3: CertifiedValue::new(q3, e3 * OUTWARD),
        q4: CertifiedValue::new(q4, e4 * OUTWARD),
    })
}
