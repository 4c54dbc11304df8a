//! Bracketing root finder and golden-section minimizer used by the constant
//! catalog. Both return a midpoint together with the final bracket half-width.

use crate::error::{Error, Result};

/// Bisection on `[lo, hi]` down to `half_width`. Fails loudly when the
/// endpoints do not straddle a sign change.
pub(crate) fn bisect(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    half_width: f64,
) -> Result<(f64, f64)> {
    let mut flo = f(lo);
    let fhi = f(hi);
    if flo == 0.0 {
        return Ok((lo, 0.0));
    }
    if fhi == 0.0 {
        return Ok((hi, 0.0));
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::NoSignChange { lo, hi });
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if 0.5 * (hi - lo) <= half_width {
            return Ok((mid, 0.5 * (hi - lo)));
        }
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok((mid, 0.0));
        }
        if flo.signum() == fmid.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    Ok((0.5 * (lo + hi), 0.5 * (hi - lo)))
}

/// Golden-section search for a minimizer of a unimodal `f` on `[lo, hi]`.
pub(crate) fn golden_min(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    half_width: f64,
) -> (f64, f64) {
    let inv_phi = 0.618_033_988_749_894_8; // (sqrt(5) - 1) / 2
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..300 {
        if 0.5 * (hi - lo) <= half_width {
            break;
        }
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    (0.5 * (lo + hi), 0.5 * (hi - lo))
}
