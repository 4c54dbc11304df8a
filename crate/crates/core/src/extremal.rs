//! Extremal-sequence computations: the flat simplex vertices that drive the
//! strong lower constant toward `π/2` at `q = 2`, the harmonic and flat
//! extremals of the weak constants, and a brute-force vertex sweep.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::functionals::weak_gamma;
use crate::kahan::KahanSum;
use crate::sequence::MonotoneSequence;

/// `γ_q` evaluated at the flat vertex `(1/k0, …, 1/k0)` via the closed
/// summand `Σ_{n=1}^{k0} n^{-1/q} (k0 - n + 1)^{1/q} / k0`, summed smallest
/// terms first. Identical to `gamma` on the flat sequence, but O(k0) with no
/// table allocation.
pub fn vertex_sum(q: Exponent, k0: u64) -> Result<f64> {
    let qv = q.require_finite("vertex_sum")?;
    if k0 == 0 {
        return Err(Error::InvalidParameter(
            "vertex index k0 must be >= 1".into(),
        ));
    }
    let inv = 1.0 / qv;
    let k = k0 as f64;
    let mut acc = KahanSum::new();
    if qv == 2.0 {
        for n in (1..=k0).rev() {
            let nf = n as f64;
            acc.add(((k - nf + 1.0) / nf).sqrt() / k);
        }
    } else {
        for n in (1..=k0).rev() {
            let nf = n as f64;
            acc.add(nf.powf(-inv) * (k - nf + 1.0).powf(inv) / k);
        }
    }
    Ok(acc.value())
}

/// Closed-form integral brackets `f_{k0} ≤ vertex_sum(2, k0) ≤ h_{k0}` for
/// the `q = 2` vertex sum, from the antiderivative
/// `∫ t^{-1/2}(k0 - t + 1)^{1/2} dt
///   = t^{1/2}(k0-t+1)^{1/2} + (k0+1) arctan((t/(k0-t+1))^{1/2})`.
/// Both brackets increase to `π/2`.
pub fn integral_brackets(k0: u64) -> (f64, f64) {
    let k = k0 as f64;
    let f =
        ((k + 1.0) * std::f64::consts::FRAC_PI_2 - k.sqrt() - (k + 1.0) * k.sqrt().recip().atan())
            / k;
    let h = k.sqrt().recip() + (k.sqrt().atan() - k.sqrt().recip().atan()) * (k + 1.0) / k;
    (f, h)
}

/// Weak transform of the truncated harmonic extremal `(1/n)_{n ≤ k}`:
/// its supremum approaches `ζ(q)^{1/q}` and sits at `n = 1`.
pub fn weak_lower_extremal(q: Exponent, k: usize) -> Result<(f64, usize)> {
    let qv = q.require_finite("weak_lower_extremal")?;
    if qv < 1.0 + 1e-3 {
        return Err(Error::ExponentOutOfRange {
            op: "weak_lower_extremal",
            detail: format!("q too close to 1, got {qv}"),
        });
    }
    let a = MonotoneSequence::harmonic(k)?;
    let v = weak_gamma(&a, q)?;
    Ok((v.value, v.attained_at.unwrap_or(1)))
}

/// Weak transform of the flat sequence `(1/N, …, 1/N)`: the minimizer of the
/// weak transform under `sup n a_n = 1`, with maximum
/// `(N+1)/N (1/q)^{1/q} (1-1/q)^{1-1/q}` attained near `x = (N+1)(1-1/q)`.
/// The discrete maximizer is checked against that window.
pub fn weak_upper_extremal(q: Exponent, n: usize) -> Result<(f64, usize)> {
    let qv = q.require_finite("weak_upper_extremal")?;
    if n == 0 {
        return Err(Error::InvalidParameter("length must be >= 1".into()));
    }
    let a = MonotoneSequence::flat(n, 1.0 / n as f64)?;
    let v = weak_gamma(&a, q)?;
    let argmax = v.attained_at.unwrap_or(1);
    let x = (n as f64 + 1.0) * (1.0 - 1.0 / qv);
    let lo = (x.floor() as usize).clamp(1, n);
    let hi = (x.ceil() as usize).clamp(1, n);
    if argmax != lo && argmax != hi {
        return Err(Error::InvalidParameter(format!(
            "flat-sequence maximizer {argmax} fell outside the predicted window [{lo}, {hi}]"
        )));
    }
    Ok((v.value, argmax))
}

/// Supremum of `γ_q / ℓ1` over sequences supported on the first `n_max`
/// coordinates: a full sweep over the flat vertices of the simplex, where the
/// convex objective attains its maximum. Cost grows as `n_max^2 / 2`.
pub fn simplex_vertex_search(q: Exponent, n_max: u64) -> Result<(f64, u64)> {
    if n_max == 0 || n_max > 1_000_000 {
        return Err(Error::InvalidParameter(format!(
            "n_max must lie in 1..=10^6, got {n_max}"
        )));
    }
    let mut best = f64::NEG_INFINITY;
    let mut best_k0 = 1;
    for k0 in 1..=n_max {
        let v = vertex_sum(q, k0)?;
        if v > best {
            best = v;
            best_k0 = k0;
        }
    }
    Ok((best, best_k0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functionals::gamma;
    use std::f64::consts::FRAC_PI_2;

    fn q2() -> Exponent {
        Exponent::Finite(2.0)
    }

    #[test]
    fn vertex_sum_small_cases() {
        assert_eq!(vertex_sum(q2(), 1).unwrap(), 1.0);

        // cross-route oracle: gamma on the flat sequence
        for k0 in [2u64, 3, 7, 40] {
            let flat = MonotoneSequence::flat(k0 as usize, 1.0 / k0 as f64).unwrap();
            let via_gamma = gamma(&flat, q2()).unwrap().value;
            let via_vertex = vertex_sum(q2(), k0).unwrap();
            assert!(
                (via_gamma - via_vertex).abs() < 1e-13,
                "k0={k0}: {via_gamma} vs {via_vertex}"
            );
        }
        assert!((vertex_sum(q2(), 2).unwrap() - 1.0606601717798214).abs() < 1e-14);
        assert!((vertex_sum(q2(), 3).unwrap() - 1.1031336922528343).abs() < 1e-14);
    }

    #[test]
    fn vertex_sum_matches_gamma_for_general_q() {
        for qq in [1.5, 3.0, 5.0] {
            let q = Exponent::try_new(qq).unwrap();
            let flat = MonotoneSequence::flat(9, 1.0 / 9.0).unwrap();
            let via_gamma = gamma(&flat, q).unwrap().value;
            let via_vertex = vertex_sum(q, 9).unwrap();
            assert!((via_gamma - via_vertex).abs() < 1e-13);
        }
    }

    #[test]
    fn brackets_small_cases() {
        let (f1, h1) = integral_brackets(1);
        assert!((f1 - (FRAC_PI_2 - 1.0)).abs() < 1e-14);
        assert!((h1 - 1.0).abs() < 1e-14);

        for k0 in 1..=1000u64 {
            let (f, h) = integral_brackets(k0);
            let v = vertex_sum(q2(), k0).unwrap();
            assert!(f <= v + 1e-12 && v <= h + 1e-12, "k0={k0}");
        }
    }

    #[test]
    fn brackets_increase_and_converge() {
        let mut prev = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for k0 in 1..=2000u64 {
            let (f, h) = integral_brackets(k0);
            assert!(f > prev.0 && h > prev.1, "k0={k0}");
            prev = (f, h);
        }
        let (f, h) = integral_brackets(1_000_000);
        assert!((FRAC_PI_2 - f).abs() < 5e-3);
        assert!((FRAC_PI_2 - h).abs() < 5e-3);
    }

    #[test]
    fn weak_lower_extremal_cases() {
        let (v, n) = weak_lower_extremal(q2(), 1).unwrap();
        assert_eq!((v, n), (1.0, 1));

        let (v, n) = weak_lower_extremal(q2(), 100_000).unwrap();
        assert_eq!(n, 1);
        assert!((v - 1.282549830161864).abs() < 1e-4);

        // q = 3 truncation sits within 1e-4 of zeta(3)^{1/3}
        let q3 = Exponent::try_new(3.0).unwrap();
        let (v, n) = weak_lower_extremal(q3, 100_000).unwrap();
        let expect = crate::catalog::zeta(3.0, 1e-10)
            .unwrap()
            .value
            .powf(1.0 / 3.0);
        assert_eq!(n, 1);
        assert!((v - expect).abs() < 1e-4);
        assert!((expect - 1.0632653853163685).abs() < 1e-10);
    }

    #[test]
    fn weak_upper_extremal_cases() {
        let (v, n) = weak_upper_extremal(q2(), 4).unwrap();
        assert!((v - 6f64.sqrt() / 4.0).abs() < 1e-14);
        assert_eq!(n, 2); // continuous maximizer 2.5, tie broken low

        let (v, _) = weak_upper_extremal(q2(), 100_000).unwrap();
        assert!((v - 0.5).abs() < 2e-5);
        assert!((1.0 / v - 2.0).abs() < 1e-4);
    }

    #[test]
    fn vertex_search_small() {
        let (ratio, k0) = simplex_vertex_search(q2(), 3).unwrap();
        assert_eq!(k0, 3);
        let mut best = 0.0f64;
        for k in 1..=3 {
            best = best.max(vertex_sum(q2(), k).unwrap());
        }
        assert_eq!(ratio, best);
        assert!((ratio - 1.1031336922528343).abs() < 1e-14);
    }

    #[test]
    fn vertex_sums_stay_below_strong_lower() {
        // the sweep is increasing in k0, so its sup over k0 <= 1e5 is the
        // value at 1e5; check the prefix is increasing, then the endpoint
        for qq in [1.5, 2.0, 3.0, 5.0] {
            let q = Exponent::try_new(qq).unwrap();
            let c1 = crate::catalog::strong_lower(q).unwrap().value;
            let mut prev = 0.0;
            for k0 in [1u64, 10, 100, 1000, 10_000, 100_000] {
                let v = vertex_sum(q, k0).unwrap();
                assert!(v > prev, "q={qq} k0={k0}");
                assert!(v <= c1 + 1e-3, "q={qq} k0={k0}");
                prev = v;
            }
        }
    }

    #[test]
    fn search_rejects_oversized_sweep() {
        assert!(simplex_vertex_search(q2(), 0).is_err());
        assert!(simplex_vertex_search(q2(), 1_000_001).is_err());
    }
}
