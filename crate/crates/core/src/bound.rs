//! Upper bounds on the strong right-hand constant from auxiliary sequences:
//! for a strictly increasing `b` with `b_0 = 0` and `Σ b_n^{-q'} < ∞`,
//!
//! `Σ a_n ≤ C_b(q) Σ_n ((1/n) Σ_{k≥n} a_k^q)^{1/q}`
//!
//! with `C_b(q) = sup_n (n^{q'/q} (b_n - b_{n-1})^{q'} Σ_{k≥n} b_k^{-q'})^{1/q'}`.
//!
//! The family `b_k = (k(k+1))^p` admits a closed tail majorant and a
//! nonincreasing envelope, which turns the supremum over infinitely many `n`
//! into finitely many certified terms plus one envelope evaluation.

use crate::certified::{CertifiedValue, OUTWARD};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::kahan::KahanSum;

type Generator = Box<dyn Fn(u64) -> f64 + Send + Sync>;
/// `(q', m) ->` upper bound on `Σ_{k>m} b_k^{-q'}`.
type TailMajorant = Box<dyn Fn(f64, u64) -> f64 + Send + Sync>;
/// `(q', n) ->` upper bound on `A_k^{1/q'}` for every `k ≥ n`.
type SupEnvelope = Box<dyn Fn(f64, u64) -> f64 + Send + Sync>;

/// Auxiliary sequence `b` driving the bound. `poly(p)` is the
/// `b_k = (k(k+1))^p` family; `custom` requires the caller to certify its own
/// series tail and supremum envelope.
pub enum AuxSequence {
    Poly {
        p: f64,
    },
    Custom {
        gen: Generator,
        tail: TailMajorant,
        envelope: SupEnvelope,
    },
}

impl AuxSequence {
    /// The family `b_k = (k(k+1))^p` with `p ∈ (0, 1]`. Divergence of
    /// `Σ b_k^{-q'}` is a joint condition with `q` and is checked at use time.
    pub fn poly(p: f64) -> Result<Self> {
        if !(p > 0.0 && p <= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "family exponent must lie in (0, 1], got {p}"
            )));
        }
        Ok(AuxSequence::Poly { p })
    }

    /// A caller-supplied sequence with certified tail majorant and envelope.
    /// Validates `b_0 = 0` and strict growth on a spot-check prefix.
    pub fn custom(
        gen: impl Fn(u64) -> f64 + Send + Sync + 'static,
        tail: impl Fn(f64, u64) -> f64 + Send + Sync + 'static,
        envelope: impl Fn(f64, u64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        if gen(0) != 0.0 {
            return Err(Error::InvalidAuxSequence { index: 0 });
        }
        let mut prev = 0.0;
        for n in 1..=10_000u64 {
            let v = gen(n);
            if !v.is_finite() || v <= prev {
                return Err(Error::InvalidAuxSequence { index: n });
            }
            prev = v;
        }
        Ok(AuxSequence::Custom {
            gen: Box::new(gen),
            tail: Box::new(tail),
            envelope: Box::new(envelope),
        })
    }

    pub fn value(&self, n: u64) -> f64 {
        match self {
            AuxSequence::Poly { p } => {
                if n == 0 {
                    0.0
                } else {
                    let x = n as f64;
                    (x * (x + 1.0)).powf(*p)
                }
            }
            AuxSequence::Custom { gen, .. } => gen(n),
        }
    }

    fn inv_power(&self, k: u64, qp: f64) -> f64 {
        match self {
            AuxSequence::Poly { p } => {
                let x = k as f64;
                (x * (x + 1.0)).powf(-qp * p)
            }
            AuxSequence::Custom { gen, .. } => gen(k).powf(-qp),
        }
    }

    fn tail_majorant(&self, qp: f64, m: u64) -> f64 {
        match self {
            AuxSequence::Poly { p } => {
                // Σ_{k>m} (k(k+1))^{-q'p} ≤ ∫_m^∞ x^{-2q'p} dx evaluated from m+1
                let s = qp * p;
                ((m + 1) as f64).powf(1.0 - 2.0 * s) / (2.0 * s - 1.0)
            }
            AuxSequence::Custom { tail, .. } => tail(qp, m),
        }
    }

    fn sup_envelope(&self, qp: f64, n: u64) -> f64 {
        match self {
            AuxSequence::Poly { p } => a_prime(*p, n) * (2.0 * qp * p - 1.0).powf(-1.0 / qp),
            AuxSequence::Custom { envelope, .. } => envelope(qp, n),
        }
    }

    fn check_convergence(&self, qp: f64) -> Result<()> {
        if let AuxSequence::Poly { p } = self {
            let threshold = 1.0 / (2.0 * qp);
            if *p <= threshold {
                return Err(Error::DivergentSeries { p: *p, threshold });
            }
        }
        Ok(())
    }
}

/// `A'_n = ((n+1)^p - (n-1)^p) / n^{p-1}`, nonincreasing for `0 < p ≤ 1` with
/// limit `2p`; `A'_1 = 2^p`. The difference is evaluated cancellation-free as
/// `(n-1)^p expm1(p ln1p(2/(n-1)))`, so the tiny decrements at large `n` are
/// resolved instead of drowned in rounding.
pub fn a_prime(p: f64, n: u64) -> f64 {
    if p == 1.0 {
        return 2.0;
    }
    let x = n as f64;
    if n == 1 {
        return 2f64.powf(p);
    }
    (x - 1.0).powf(p) * (p * (2.0 / (x - 1.0)).ln_1p()).exp_m1() * x.powf(1.0 - p)
}

/// Report of a `C_b(q)` evaluation.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub q: Exponent,
    /// Certified `A_n^{1/q'}` for `n = 1..=n_terms`.
    pub terms: Vec<CertifiedValue>,
    /// `max` of the terms and the tail envelope; its radius is the radius of
    /// whichever entry attains the max.
    pub supremum: CertifiedValue,
    /// 1-based index of the maximizing term, `None` when the tail envelope
    /// dominates.
    pub sup_at: Option<usize>,
    /// Bound on `A_n^{1/q'}` over all `n > n_terms`.
    pub tail_majorant: CertifiedValue,
    /// Largest enclosure half-width among the reported terms caused by
    /// truncating the inner series at `m`; every reported value is within
    /// this distance of its untruncated counterpart.
    pub truncation_error: f64,
}

struct CertifiedTerm {
    term: CertifiedValue,
    half_width: f64,
}

fn certified_terms(
    q: Exponent,
    b: &AuxSequence,
    n_terms: usize,
    m: u64,
) -> Result<Vec<CertifiedTerm>> {
    let qv = q.require_finite("c_b")?;
    if n_terms == 0 {
        return Err(Error::InvalidParameter("need at least one term".into()));
    }
    if m < n_terms as u64 {
        return Err(Error::InvalidParameter(format!(
            "truncation point m = {m} must be >= n_terms = {n_terms}"
        )));
    }
    let qp = q.conjugate().value();
    b.check_convergence(qp)?;

    // one backward compensated pass records every suffix Σ_{k=n}^m b_k^{-q'}
    let mut suffix = vec![0.0f64; n_terms + 1];
    let mut acc = KahanSum::new();
    for k in (1..=m).rev() {
        acc.add(b.inv_power(k, qp));
        if k <= n_terms as u64 {
            suffix[k as usize] = acc.value();
        }
    }
    let tail = b.tail_majorant(qp, m);
    let root = 1.0 / qp;

    let mut out = Vec::with_capacity(n_terms);
    let mut prev_b = 0.0;
    for (n, &suf) in suffix.iter().enumerate().skip(1) {
        let bn = b.value(n as u64);
        let pref = (n as f64).powf(qp / qv) * (bn - prev_b).powf(qp);
        prev_b = bn;
        if !pref.is_finite() {
            return Err(Error::Overflow {
                what: "bound term prefactor",
            });
        }
        let lo = (pref * suf).powf(root);
        let hi = (pref * (suf + tail)).powf(root);
        out.push(CertifiedTerm {
            term: CertifiedValue::from_interval(lo, hi),
            half_width: 0.5 * (hi - lo) * OUTWARD,
        });
    }
    Ok(out)
}

/// Certified evaluation of `C_b(q)`: `n_terms` explicit terms with inner
/// series truncated at `m` and enclosed by the tail majorant, plus the
/// envelope bound covering every later index.
pub fn c_b(q: Exponent, b: &AuxSequence, n_terms: usize, m: u64) -> Result<BoundReport> {
    let terms = certified_terms(q, b, n_terms, m)?;
    let qp = q.conjugate().value();
    let envelope = CertifiedValue::exact(b.sup_envelope(qp, n_terms as u64 + 1));

    let mut supremum = envelope;
    let mut sup_at = None;
    let mut truncation_error = 0.0f64;
    for (i, t) in terms.iter().enumerate() {
        truncation_error = truncation_error.max(t.half_width);
        if t.term.value > supremum.value {
            supremum = t.term;
            sup_at = Some(i + 1);
        }
    }

    Ok(BoundReport {
        q,
        terms: terms.into_iter().map(|t| t.term).collect(),
        supremum,
        sup_at,
        tail_majorant: envelope,
        truncation_error,
    })
}

/// The raw terms `A_n` (before the `1/q'` root) for the `(k(k+1))^p` family,
/// with certified truncation tails; exposed for envelope comparisons.
pub fn a_n_terms(q: Exponent, p: f64, n_max: usize, m: u64) -> Result<Vec<CertifiedValue>> {
    let qv = q.require_finite("a_n_terms")?;
    let b = AuxSequence::poly(p)?;
    let qp = q.conjugate().value();
    b.check_convergence(qp)?;
    if n_max == 0 || m < n_max as u64 {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= n_max <= m, got n_max = {n_max}, m = {m}"
        )));
    }

    let mut suffix = vec![0.0f64; n_max + 1];
    let mut acc = KahanSum::new();
    for k in (1..=m).rev() {
        acc.add(b.inv_power(k, qp));
        if k <= n_max as u64 {
            suffix[k as usize] = acc.value();
        }
    }
    let tail = b.tail_majorant(qp, m);

    let mut out = Vec::with_capacity(n_max);
    let mut prev_b = 0.0;
    for (n, &suf) in suffix.iter().enumerate().skip(1) {
        let bn = b.value(n as u64);
        let pref = (n as f64).powf(qp / qv) * (bn - prev_b).powf(qp);
        prev_b = bn;
        out.push(CertifiedValue::from_interval(
            pref * suf,
            pref * (suf + tail),
        ));
    }
    Ok(out)
}

/// The minimizing family parameter `p* = λ*/q'` with `λ* = (2 + ln 2)/ln 4`,
/// and the resulting bound `2^{p*}/(2q'p* - 1)^{1/q'}`, which collapses to
/// `(e ln 2/√2)^{1/q'}`. Valid while `p* ≤ 1`, i.e. `q ≤ (2+ln2)/(2-ln2)`.
pub fn optimize_p(q: Exponent) -> Result<(f64, CertifiedValue)> {
    q.require_finite("optimize_p")?;
    let qp = q.conjugate().value();
    let lambda = (2.0 + std::f64::consts::LN_2) / (2.0 * std::f64::consts::LN_2);
    let mut p_star = lambda / qp;
    if p_star > 1.0 && p_star <= 1.0 + 1e-12 {
        p_star = 1.0;
    }
    if p_star > 1.0 {
        return Err(Error::ExponentOutOfRange {
            op: "optimize_p",
            detail: format!(
                "optimal family parameter {p_star} exceeds 1; requires q <= {}",
                crate::catalog::Q_IMPROVED_MAX
            ),
        });
    }
    let bound = 2f64.powf(p_star) / (2.0 * qp * p_star - 1.0).powf(1.0 / qp);
    Ok((p_star, CertifiedValue::exact(bound)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use std::f64::consts::PI;

    fn q(v: f64) -> Exponent {
        Exponent::try_new(v).unwrap()
    }

    #[test]
    fn a1_at_p_one_matches_closed_form() {
        // Σ 1/(k(k+1))^2 = π²/3 - 3, so A_1 = 2^{q'} (π²/3 - 3) = 4(π²/3 - 3)
        let terms = a_n_terms(q(2.0), 1.0, 1, 100_000).unwrap();
        let expect = 4.0 * (PI * PI / 3.0 - 3.0);
        assert!(terms[0].contains(expect), "{:?} vs {expect}", terms[0]);
        assert!((terms[0].value - expect).abs() < 1e-9);
        assert!((terms[0].value - 1.1594725347858113).abs() < 1e-9);
    }

    #[test]
    fn terms_stay_below_envelope() {
        let qp = 2.0;
        let p = 0.88;
        let terms = a_n_terms(q(2.0), p, 100, 50_000).unwrap();
        for (i, t) in terms.iter().enumerate() {
            let n = (i + 1) as u64;
            let env = a_prime(p, n).powf(qp) / (2.0 * qp * p - 1.0);
            assert!(t.upper() <= env * (1.0 + 1e-12), "n={n}");
        }
    }

    #[test]
    fn a_prime_monotone_and_endpoint() {
        for p in [0.6, 0.88, 1.0] {
            assert!(a_prime(p, 1) >= a_prime(p, 2) - 1e-15);
            assert!((a_prime(p, 1) - 2f64.powf(p)).abs() < 1e-15);
            assert!((a_prime(p, 2) - (3f64.powf(p) - 1.0) / 2f64.powf(p - 1.0)).abs() < 4e-15);
            let mut prev = f64::INFINITY;
            for n in 1..=10_000u64 {
                let v = a_prime(p, n);
                assert!(v <= prev * (1.0 + 1e-13), "p={p} n={n}");
                prev = v;
            }
        }
    }

    #[test]
    fn p_one_supremum_is_the_closed_form_bound() {
        for qq in [1.5, 2.0, 3.0] {
            let b = AuxSequence::poly(1.0).unwrap();
            let report = c_b(q(qq), &b, 50, 100_000).unwrap();
            let closed = catalog::stechkin_choice(q(qq)).unwrap().value;
            assert!(
                (report.supremum.value - closed).abs() < 1e-6,
                "q={qq}: {} vs {closed}",
                report.supremum.value
            );
            // the nonincreasing envelope dominates every explicit term
            assert_eq!(report.sup_at, None);
        }
    }

    #[test]
    fn reference_settings_bound() {
        let b = AuxSequence::poly(0.88).unwrap();
        let report = c_b(q(2.0), &b, 100, 200_000).unwrap();
        assert!(report.supremum.value <= 1.1086983);
        assert!(report.supremum.value >= 1.108);
        assert!(report.truncation_error <= 5e-9);
        assert_eq!(report.terms.len(), 100);
    }

    #[test]
    fn certificate_covers_refinement() {
        // quadrupling m moves every reported term by less than the certificate
        let b = AuxSequence::poly(0.88).unwrap();
        let coarse = c_b(q(2.0), &b, 50, 20_000).unwrap();
        let fine = c_b(q(2.0), &b, 50, 80_000).unwrap();
        for (c, f) in coarse.terms.iter().zip(fine.terms.iter()) {
            assert!((c.value - f.value).abs() <= coarse.truncation_error);
        }
    }

    #[test]
    fn divergent_p_rejected() {
        let b = AuxSequence::poly(0.2).unwrap();
        assert!(matches!(
            c_b(q(2.0), &b, 10, 100),
            Err(Error::DivergentSeries { .. })
        ));
        assert!(AuxSequence::poly(0.0).is_err());
        assert!(AuxSequence::poly(1.5).is_err());
    }

    #[test]
    fn custom_route_matches_poly_route() {
        // b_k = k(k+1) spelled out as a custom sequence with the same
        // certificates must reproduce the poly(1) report exactly.
        let custom = AuxSequence::custom(
            |n| {
                let x = n as f64;
                x * (x + 1.0)
            },
            |qp, m| ((m + 1) as f64).powf(1.0 - 2.0 * qp) / (2.0 * qp - 1.0),
            |qp, n| a_prime(1.0, n) * (2.0 * qp - 1.0).powf(-1.0 / qp),
        )
        .unwrap();
        let poly = AuxSequence::poly(1.0).unwrap();
        let a = c_b(q(2.0), &custom, 20, 5_000).unwrap();
        let b = c_b(q(2.0), &poly, 20, 5_000).unwrap();
        assert_eq!(a.supremum.value, b.supremum.value);
        for (x, y) in a.terms.iter().zip(b.terms.iter()) {
            assert_eq!(x.value, y.value);
        }
    }

    #[test]
    fn custom_rejects_non_increasing() {
        assert!(AuxSequence::custom(|n| (n % 5) as f64, |_, _| 0.0, |_, _| 0.0).is_err());
        assert!(AuxSequence::custom(|n| n as f64 + 1.0, |_, _| 0.0, |_, _| 0.0).is_err());
    }

    #[test]
    fn optimizer_examples() {
        let (p_star, bound) = optimize_p(q(2.0)).unwrap();
        assert!((p_star - 0.9713475204444818).abs() < 1e-12);
        assert!((bound.value - catalog::improved(q(2.0)).unwrap().value).abs() < 1e-12);

        // boundary: p* = 1 exactly at the validity endpoint
        let (p1, _) = optimize_p(q(catalog::Q_IMPROVED_MAX)).unwrap();
        assert!((p1 - 1.0).abs() < 1e-12);

        for qq in [1.2, 1.5, 2.0] {
            let (_, b) = optimize_p(q(qq)).unwrap();
            let im = catalog::improved(q(qq)).unwrap().value;
            assert!((b.value - im).abs() < 1e-12);
        }

        assert!(optimize_p(q(2.1)).is_err());
    }
}
