//! Finite nonincreasing nonnegative sequences and their suffix power sums.

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::kahan::KahanSum;

/// A finite sequence `a_1 ≥ a_2 ≥ … ≥ a_N ≥ 0` with `N ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonotoneSequence {
    entries: Vec<f64>,
}

impl MonotoneSequence {
    pub fn try_new(entries: Vec<f64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        for (i, &v) in entries.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFiniteEntry { index: i });
            }
            if v < 0.0 {
                return Err(Error::NegativeEntry { index: i, value: v });
            }
            if i > 0 && entries[i - 1] < v {
                return Err(Error::NotNonincreasing { index: i });
            }
        }
        Ok(Self { entries })
    }

    /// The flat sequence `(v, …, v)` of length `len`.
    pub fn flat(len: usize, v: f64) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySequence);
        }
        Self::try_new(vec![v; len])
    }

    /// The harmonic prefix `(1, 1/2, …, 1/len)`.
    pub fn harmonic(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::EmptySequence);
        }
        Ok(Self {
            entries: (1..=len).map(|n| 1.0 / n as f64).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction enforces N >= 1
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// 1-based access, mirroring the index convention of the inequalities.
    pub fn at(&self, n: usize) -> f64 {
        self.entries[n - 1]
    }

    /// Entrywise scaling by `t ≥ 0`.
    pub fn scaled(&self, t: f64) -> Result<Self> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "scale factor must be finite and nonnegative, got {t}"
            )));
        }
        Ok(Self {
            entries: self.entries.iter().map(|&v| v * t).collect(),
        })
    }
}

/// Nonincreasing rearrangement: absolute values sorted in decreasing order.
pub fn rearrange(xs: &[f64]) -> Result<MonotoneSequence> {
    if xs.is_empty() {
        return Err(Error::EmptySequence);
    }
    for (i, &v) in xs.iter().enumerate() {
        if !v.is_finite() {
            return Err(Error::NonFiniteEntry { index: i });
        }
    }
    let mut abs: Vec<f64> = xs.iter().map(|v| v.abs()).collect();
    abs.sort_unstable_by(|a, b| b.total_cmp(a));
    Ok(MonotoneSequence { entries: abs })
}

/// Materialized suffix sums `values[n] = Σ_{k=n}^{N} a_k^q`, accumulated
/// backward (smallest terms first) with compensation. For `q = ∞` the table
/// degenerates to `values[n] = a_n`, the monotone supremum of the tail.
#[derive(Debug, Clone)]
pub struct SuffixPowerTable {
    values: Vec<f64>,
}

impl SuffixPowerTable {
    pub fn new(a: &MonotoneSequence, q: Exponent) -> Result<Self> {
        let n = a.len();
        let mut values = vec![0.0; n];
        if q.is_infinite() {
            values.copy_from_slice(a.entries());
            return Ok(Self { values });
        }
        let qv = q.value();
        let mut acc = KahanSum::new();
        for i in (0..n).rev() {
            let term = a.entries()[i].powf(qv);
            if !term.is_finite() {
                return Err(Error::Overflow {
                    what: "entry power a_k^q",
                });
            }
            acc.add(term);
            values[i] = acc.value();
        }
        Ok(Self { values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// 1-based suffix sum; `n = N + 1` returns 0 by convention.
    pub fn value_at(&self, n: usize) -> f64 {
        if n > self.values.len() {
            0.0
        } else {
            self.values[n - 1]
        }
    }

    /// The full power sum `Σ_k a_k^q`.
    pub fn total(&self) -> f64 {
        self.values[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_guards() {
        assert!(MonotoneSequence::try_new(vec![]).is_err());
        assert!(MonotoneSequence::try_new(vec![1.0, 2.0]).is_err());
        assert!(MonotoneSequence::try_new(vec![1.0, -0.5]).is_err());
        assert!(MonotoneSequence::try_new(vec![f64::NAN]).is_err());
        assert!(MonotoneSequence::try_new(vec![1.0, 1.0, 0.0]).is_ok());
    }

    #[test]
    fn rearrange_examples() {
        let r = rearrange(&[3.0, -4.0, 0.0]).unwrap();
        assert_eq!(r.entries(), &[4.0, 3.0, 0.0]);
        let r = rearrange(&[1.0, 1.0, 1.0]).unwrap();
        assert_eq!(r.entries(), &[1.0, 1.0, 1.0]);
        assert!(rearrange(&[]).is_err());
        let r = rearrange(&[5.0]).unwrap();
        assert_eq!(r.entries(), &[5.0]);
    }

    #[test]
    fn rearrange_idempotent_on_monotone() {
        let a = MonotoneSequence::try_new(vec![3.0, 2.0, 2.0, 0.5, 0.0]).unwrap();
        let r = rearrange(a.entries()).unwrap();
        assert_eq!(r.entries(), a.entries());
    }

    #[test]
    fn suffix_examples() {
        let a = MonotoneSequence::try_new(vec![1.0, 1.0]).unwrap();
        let t = SuffixPowerTable::new(&a, Exponent::Finite(2.0)).unwrap();
        assert_eq!(t.value_at(1), 2.0);
        assert_eq!(t.value_at(2), 1.0);
        assert_eq!(t.value_at(3), 0.0);

        let a = MonotoneSequence::try_new(vec![2.0, 1.0, 0.0]).unwrap();
        let t = SuffixPowerTable::new(&a, Exponent::One).unwrap();
        assert_eq!(t.value_at(1), 3.0);
        assert_eq!(t.value_at(2), 1.0);
        assert_eq!(t.value_at(3), 0.0);

        let a = MonotoneSequence::flat(3, 0.5).unwrap();
        let t = SuffixPowerTable::new(&a, Exponent::Finite(3.0)).unwrap();
        assert_eq!(t.value_at(1), 0.375);
        assert_eq!(t.value_at(2), 0.25);
        assert_eq!(t.value_at(3), 0.125);
    }

    #[test]
    fn suffix_degenerates_at_infinity() {
        let a = MonotoneSequence::try_new(vec![0.9, 0.3, 0.1]).unwrap();
        let t = SuffixPowerTable::new(&a, Exponent::Infinity).unwrap();
        assert_eq!(t.value_at(1), 0.9);
        assert_eq!(t.value_at(2), 0.3);
        assert_eq!(t.value_at(3), 0.1);
    }

    #[test]
    fn suffix_overflow_reported() {
        let a = MonotoneSequence::try_new(vec![1e300]).unwrap();
        assert!(SuffixPowerTable::new(&a, Exponent::Finite(2.0)).is_err());
    }

    #[test]
    fn suffix_matches_naive_forward_sum() {
        // Deterministic pseudo-random entries, compared against plain forward
        // summation at each suffix start.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut xs: Vec<f64> = (0..10_000)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 11) as f64 / (1u64 << 53) as f64
            })
            .collect();
        xs.sort_unstable_by(|a, b| b.total_cmp(a));
        let a = MonotoneSequence::try_new(xs).unwrap();
        for q in [1.5, 2.0, 3.0] {
            let t = SuffixPowerTable::new(&a, Exponent::try_new(q).unwrap()).unwrap();
            for n in [1usize, 7, 500, 5000, 9999, 10_000] {
                let naive: f64 = a.entries()[n - 1..].iter().map(|x| x.powf(q)).sum();
                let rel = (t.value_at(n) - naive).abs() / naive.max(1e-300);
                assert!(rel <= 1e-13, "q={q} n={n} rel={rel}");
            }
        }
    }
}
