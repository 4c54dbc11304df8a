//! Deterministic sample generators for the verification suites. A small
//! hand-rolled SplitMix64 keeps runs byte-reproducible from a seed alone,
//! with no dependence on external generator versions.

use crate::continuous::StepFunction;
use crate::sequence::MonotoneSequence;
use crate::sparse::CoeffVector;

#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self {
            state: seed.wrapping_add(0x9e3779b97f4a7c15),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    pub fn next_usize(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Standard normal via Box-Muller.
    pub fn next_gaussian(&mut self) -> f64 {
        let u = self.next_f64().max(f64::MIN_POSITIVE);
        let v = self.next_f64();
        (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
    }
}

/// Random nonincreasing nonnegative sequence with entries in `[0, 1]`;
/// occasionally zero-tailed to hit the boundary cases.
pub fn monotone_sequence(rng: &mut Rng, max_len: usize) -> MonotoneSequence {
    let len = 1 + rng.next_usize(max_len);
    let mut entries: Vec<f64> = (0..len).map(|_| rng.next_f64()).collect();
    entries.sort_unstable_by(|a, b| b.total_cmp(a));
    if len > 2 && rng.next_f64() < 0.2 {
        let cut = 1 + rng.next_usize(len - 1);
        for v in entries.iter_mut().skip(cut) {
            *v = 0.0;
        }
    }
    MonotoneSequence::try_new(entries).expect("sampler output is valid by construction")
}

/// Uniform point of the monotone simplex: spacings of sorted uniforms on
/// `[0, 1]`, rearranged nonincreasingly. Sums to 1 up to rounding.
pub fn simplex_point(rng: &mut Rng, n: usize) -> MonotoneSequence {
    assert!(n >= 1);
    let mut cuts: Vec<f64> = (0..n - 1).map(|_| rng.next_f64()).collect();
    cuts.sort_unstable_by(|a, b| a.total_cmp(b));
    let mut spacings = Vec::with_capacity(n);
    let mut prev = 0.0;
    for c in cuts {
        spacings.push(c - prev);
        prev = c;
    }
    spacings.push(1.0 - prev);
    spacings.sort_unstable_by(|a, b| b.total_cmp(a));
    MonotoneSequence::try_new(spacings).expect("sampler output is valid by construction")
}

/// Random nonincreasing step function with up to `max_panels` panels,
/// never identically zero.
pub fn step_function(rng: &mut Rng, max_panels: usize) -> StepFunction {
    let m = 1 + rng.next_usize(max_panels);
    let mut breakpoints: Vec<f64> = (0..m).map(|_| 0.05 + 4.0 * rng.next_f64()).collect();
    breakpoints.sort_unstable_by(|a, b| a.total_cmp(b));
    for i in 1..m {
        if breakpoints[i] <= breakpoints[i - 1] {
            breakpoints[i] = breakpoints[i - 1] + 1e-3;
        }
    }
    let mut levels: Vec<f64> = (0..m).map(|_| 0.01 + rng.next_f64()).collect();
    levels.sort_unstable_by(|a, b| b.total_cmp(a));
    StepFunction::try_new(breakpoints, levels).expect("sampler output is valid by construction")
}

/// Coefficient vector with Gaussian entries.
pub fn gaussian_coeffs(rng: &mut Rng, len: usize) -> CoeffVector {
    assert!(len >= 1);
    let mut coeffs: Vec<f64> = (0..len).map(|_| rng.next_gaussian()).collect();
    if coeffs.iter().all(|&v| v == 0.0) {
        coeffs[0] = 1.0;
    }
    CoeffVector::try_new(coeffs).expect("sampler output is valid by construction")
}
