//! The four functionals appearing in the discrete inequalities: the plain
//! `ℓ1` sum, the strong transform `γ_q(a) = Σ_n ((1/n) Σ_{k≥n} a_k^q)^{1/q}`,
//! the weak-`ℓ1` functional `sup_n n·a_n`, and its transformed counterpart
//! `sup_n n ((1/n) Σ_{k≥n} a_k^q)^{1/q}`.
//!
//! For `q = ∞` the inner mean collapses to `a_n` (the tail supremum of a
//! nonincreasing sequence), so the transformed functionals agree exactly with
//! their plain counterparts.

use crate::error::Result;
use crate::exponent::Exponent;
use crate::kahan::KahanSum;
use crate::sequence::{MonotoneSequence, SuffixPowerTable};

/// A functional evaluation; `attained_at` is the smallest 1-based maximizer
/// for sup-type functionals and absent for sum-type ones.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalValue {
    pub value: f64,
    pub attained_at: Option<usize>,
}

/// `Σ_n a_n`.
pub fn ell1(a: &MonotoneSequence) -> FunctionalValue {
    FunctionalValue {
        value: KahanSum::sum_iter(a.entries().iter().rev().copied()),
        attained_at: None,
    }
}

/// `Σ_n ((1/n) Σ_{k=n}^N a_k^q)^{1/q}`; equals `ell1` for `q = ∞`.
pub fn gamma(a: &MonotoneSequence, q: Exponent) -> Result<FunctionalValue> {
    if q.is_infinite() {
        return Ok(ell1(a));
    }
    let table = SuffixPowerTable::new(a, q)?;
    let inv_q = q.recip();
    let mut acc = KahanSum::new();
    for n in (1..=a.len()).rev() {
        acc.add((table.value_at(n) / n as f64).powf(inv_q));
    }
    Ok(FunctionalValue {
        value: acc.value(),
        attained_at: None,
    })
}

/// `max_n n·a_n`, ties broken to the smallest index.
pub fn weak_ell1(a: &MonotoneSequence) -> FunctionalValue {
    let mut best = f64::NEG_INFINITY;
    let mut best_n = 1;
    for n in 1..=a.len() {
        let v = n as f64 * a.at(n);
        if v > best {
            best = v;
            best_n = n;
        }
    }
    FunctionalValue {
        value: best,
        attained_at: Some(best_n),
    }
}

/// `max_n n^{1-1/q} (Σ_{k=n}^N a_k^q)^{1/q}`; equals `weak_ell1` for `q = ∞`.
pub fn weak_gamma(a: &MonotoneSequence, q: Exponent) -> Result<FunctionalValue> {
    if q.is_infinite() {
        return Ok(weak_ell1(a));
    }
    let table = SuffixPowerTable::new(a, q)?;
    let inv_q = q.recip();
    let co = q.conj_recip(); // 1 - 1/q
    let mut best = f64::NEG_INFINITY;
    let mut best_n = 1;
    for n in 1..=a.len() {
        let v = (n as f64).powf(co) * table.value_at(n).powf(inv_q);
        if v > best {
            best = v;
            best_n = n;
        }
    }
    Ok(FunctionalValue {
        value: best,
        attained_at: Some(best_n),
    })
}
