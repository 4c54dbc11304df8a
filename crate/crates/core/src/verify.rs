//! Seeded property suites behind the `verify` command: every inequality and
//! identity the library promises, exercised on randomized inputs with
//! reproducible failure records.

use crate::bound::{a_prime, c_b, AuxSequence};
use crate::catalog;
use crate::continuous::{strong_sandwich, strong_transform, weak_reciprocal_value, weak_values};
use crate::error::Result;
use crate::exponent::Exponent;
use crate::extremal::{
    integral_brackets, simplex_vertex_search, vertex_sum, weak_lower_extremal, weak_upper_extremal,
};
use crate::functionals::{ell1, gamma, weak_ell1, weak_gamma};
use crate::sampling::{self, Rng};
use crate::sequence::MonotoneSequence;
use crate::sparse::{
    approx_space_norm, approximation_errors, equivalence_check, lorentz_norm, ApproxParams,
    CoeffVector, RMode,
};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Strong,
    Weak,
    Continuous,
    Sparse,
}

impl Suite {
    pub fn all() -> [Suite; 4] {
        [Suite::Strong, Suite::Weak, Suite::Continuous, Suite::Sparse]
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Strong => "strong",
            Suite::Weak => "weak",
            Suite::Continuous => "continuous",
            Suite::Sparse => "sparse",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub seed: u64,
    pub trials: usize,
    /// Test-only hook: flips the first randomized comparison so the failure
    /// path of the harness can be exercised end to end.
    pub inject_failure: bool,
}

#[derive(Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub trials: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failure_count(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }
}

const REL: f64 = 1e-12;

/// `lhs ≤ rhs` up to relative slack plus a tiny absolute floor.
fn leq(lhs: f64, rhs: f64) -> bool {
    lhs <= rhs + REL * rhs.abs() + 1e-12
}

fn check<F>(name: &'static str, trials: usize, mut body: F) -> CheckResult
where
    F: FnMut(usize, &mut Vec<String>),
{
    let mut failures = Vec::new();
    for i in 0..trials {
        body(i, &mut failures);
        if failures.len() > 8 {
            failures.push("... further failures suppressed".into());
            break;
        }
    }
    CheckResult {
        name,
        trials,
        failures,
    }
}

fn fixed_check<F>(name: &'static str, body: F) -> CheckResult
where
    F: FnOnce(&mut Vec<String>),
{
    let mut failures = Vec::new();
    body(&mut failures);
    CheckResult {
        name,
        trials: 1,
        failures,
    }
}

const SANDWICH_QS: [f64; 3] = [1.5, 2.0, 3.0];

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<SuiteReport> {
    let checks = match suite {
        Suite::Strong => strong_suite(opts)?,
        Suite::Weak => weak_suite(opts)?,
        Suite::Continuous => continuous_suite(opts)?,
        Suite::Sparse => sparse_suite(opts)?,
    };
    Ok(SuiteReport { suite, checks })
}

pub fn run_all(opts: &VerifyOptions) -> Result<Vec<SuiteReport>> {
    Suite::all().iter().map(|s| run_suite(*s, opts)).collect()
}

fn strong_suite(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let seed = opts.seed;

    let qs: Vec<(Exponent, f64, f64)> = SANDWICH_QS
        .iter()
        .map(|&qv| {
            let q = Exponent::try_new(qv).unwrap();
            let lower = catalog::strong_lower(q)?.value;
            let upper = catalog::strong_upper(q)?.upper();
            Ok((q, lower, upper))
        })
        .collect::<Result<_>>()?;

    let mut rng = Rng::new(seed);
    out.push(check("strong-sandwich", opts.trials, |i, failures| {
        let a = sampling::monotone_sequence(&mut rng, 200);
        for &(q, lower, upper) in &qs {
            let g = gamma(&a, q).unwrap().value;
            let s = ell1(&a).value;
            let mut ok = leq(g / lower, s) && leq(s, upper * g);
            if opts.inject_failure && i == 0 {
                ok = !ok;
            }
            if !ok {
                failures.push(format!(
                    "strong sandwich violated: seed={seed} trial={i} q={q} gamma={g} ell1={s}"
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x1);
    out.push(check("homogeneity", opts.trials, |i, failures| {
        let a = sampling::monotone_sequence(&mut rng, 60);
        let t = 4.0 * rng.next_f64();
        let scaled = a.scaled(t).unwrap();
        let q = Exponent::try_new(1.0 + 3.0 * rng.next_f64().max(1e-3)).unwrap();
        let pairs = [
            (ell1(&scaled).value, t * ell1(&a).value),
            (gamma(&scaled, q).unwrap().value, t * gamma(&a, q).unwrap().value),
            (weak_ell1(&scaled).value, t * weak_ell1(&a).value),
            (
                weak_gamma(&scaled, q).unwrap().value,
                t * weak_gamma(&a, q).unwrap().value,
            ),
        ];
        for (k, (got, expect)) in pairs.iter().enumerate() {
            if (got - expect).abs() > 1e-12 * expect.abs() + 1e-12 {
                failures.push(format!(
                    "homogeneity violated: seed={seed} trial={i} functional#{k} t={t} got={got} expect={expect}"
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x2);
    out.push(check("monotonicity", opts.trials, |i, failures| {
        let b = sampling::monotone_sequence(&mut rng, 60);
        let mut a_entries = Vec::with_capacity(b.len());
        let mut cap = f64::INFINITY;
        for &v in b.entries() {
            cap = cap.min(v * rng.next_f64());
            a_entries.push(cap);
        }
        let a = MonotoneSequence::try_new(a_entries).unwrap();
        let q = Exponent::try_new(2.0).unwrap();
        let checks = [
            (ell1(&a).value, ell1(&b).value),
            (gamma(&a, q).unwrap().value, gamma(&b, q).unwrap().value),
            (weak_ell1(&a).value, weak_ell1(&b).value),
            (
                weak_gamma(&a, q).unwrap().value,
                weak_gamma(&b, q).unwrap().value,
            ),
        ];
        for (k, (fa, fb)) in checks.iter().enumerate() {
            if !leq(*fa, *fb) {
                failures.push(format!(
                    "monotonicity violated: seed={seed} trial={i} functional#{k} {fa} > {fb}"
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x3);
    out.push(check("infinity-degenerate", opts.trials, |i, failures| {
        let a = sampling::monotone_sequence(&mut rng, 60);
        if gamma(&a, Exponent::Infinity).unwrap().value != ell1(&a).value
            || weak_gamma(&a, Exponent::Infinity).unwrap().value != weak_ell1(&a).value
        {
            failures.push(format!("q=inf degeneracy violated: seed={seed} trial={i}"));
        }
    }));

    let mut rng = Rng::new(seed ^ 0x4);
    out.push(check("q1-upper-side", opts.trials, |i, failures| {
        let a = sampling::monotone_sequence(&mut rng, 60);
        if !leq(ell1(&a).value, gamma(&a, Exponent::One).unwrap().value) {
            failures.push(format!(
                "q=1 strong upper side violated: seed={seed} trial={i}"
            ));
        }
        if !leq(
            weak_ell1(&a).value,
            weak_gamma(&a, Exponent::One).unwrap().value,
        ) {
            failures.push(format!(
                "q=1 weak upper side violated: seed={seed} trial={i}"
            ));
        }
    }));

    out.push(fixed_check("vertex-monotone-bracketed", |failures| {
        let q2 = Exponent::try_new(2.0).unwrap();
        let mut prev = 0.0;
        for k0 in 1..=1000u64 {
            let v = vertex_sum(q2, k0).unwrap();
            let (f, h) = integral_brackets(k0);
            if v <= prev {
                failures.push(format!("vertex sum not increasing at k0={k0}"));
                break;
            }
            if !(f <= v + 1e-12 && v <= h + 1e-12) {
                failures.push(format!("vertex sum escapes brackets at k0={k0}"));
                break;
            }
            prev = v;
        }
    }));

    // soundness of the auxiliary-sequence bound: its supremum certifies the
    // strong upper inequality on arbitrary monotone data
    let mut combos = Vec::new();
    for &qv in &[1.5, 2.0, 2.5] {
        for &p in &[0.88, 1.0] {
            let q = Exponent::try_new(qv).unwrap();
            let b = AuxSequence::poly(p)?;
            let sup = c_b(q, &b, 50, 20_000)?.supremum.upper();
            combos.push((q, sup));
        }
    }
    let mut rng = Rng::new(seed ^ 0x5);
    out.push(check(
        "aux-bound-soundness",
        opts.trials.min(500),
        |i, failures| {
            let a = sampling::monotone_sequence(&mut rng, 120);
            for &(q, sup) in &combos {
                let s = ell1(&a).value;
                let g = gamma(&a, q).unwrap().value;
                if !leq(s, sup * g) {
                    failures.push(format!(
                        "C_b soundness violated: seed={seed} trial={i} q={q} ell1={s} bound={}",
                        sup * g
                    ));
                }
            }
        },
    ));

    out.push(fixed_check("p1-closed-form", |failures| {
        for &qv in &[1.5, 2.0, 3.0] {
            let q = Exponent::try_new(qv).unwrap();
            let b = AuxSequence::poly(1.0).unwrap();
            let sup = c_b(q, &b, 50, 100_000).unwrap().supremum.value;
            let closed = catalog::stechkin_choice(q).unwrap().value;
            if (sup - closed).abs() > 1e-6 {
                failures.push(format!(
                    "p=1 supremum {sup} != closed form {closed} at q={qv}"
                ));
            }
        }
    }));

    out.push(fixed_check("aprime-monotone", |failures| {
        for &p in &[0.6, 0.88, 1.0] {
            let mut prev = f64::INFINITY;
            for n in 1..=2000u64 {
                let v = a_prime(p, n);
                if v > prev * (1.0 + 1e-13) {
                    failures.push(format!("A'_n increases at p={p} n={n}"));
                    break;
                }
                prev = v;
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x6);
    let vertex_best: Vec<(Exponent, f64)> = SANDWICH_QS
        .iter()
        .map(|&qv| {
            let q = Exponent::try_new(qv).unwrap();
            let best = simplex_vertex_search(q, 6)?.0;
            Ok((q, best))
        })
        .collect::<Result<_>>()?;
    out.push(check(
        "simplex-vertex-dominance",
        opts.trials,
        |i, failures| {
            let point = sampling::simplex_point(&mut rng, 6);
            for &(q, best) in &vertex_best {
                let g = gamma(&point, q).unwrap().value;
                if g > best + 1e-12 {
                    failures.push(format!(
                        "interior point beats vertices: seed={seed} trial={i} q={q} {g} > {best}"
                    ));
                }
            }
        },
    ));

    Ok(out)
}

fn weak_suite(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let seed = opts.seed;

    let qs: Vec<(Exponent, f64, f64)> = SANDWICH_QS
        .iter()
        .map(|&qv| {
            let q = Exponent::try_new(qv).unwrap();
            let lower = catalog::weak_lower(q)?.upper();
            let upper = catalog::weak_upper(q)?.value;
            Ok((q, lower, upper))
        })
        .collect::<Result<_>>()?;

    let mut rng = Rng::new(seed ^ 0x10);
    out.push(check("weak-sandwich", opts.trials, |i, failures| {
        let a = sampling::monotone_sequence(&mut rng, 200);
        for &(q, lower, upper) in &qs {
            let g = weak_gamma(&a, q).unwrap().value;
            let s = weak_ell1(&a).value;
            let mut ok = leq(g / lower, s) && leq(s, upper * g);
            if opts.inject_failure && i == 0 {
                ok = !ok;
            }
            if !ok {
                failures.push(format!(
                    "weak sandwich violated: seed={seed} trial={i} q={q} weak_gamma={g} weak_ell1={s}"
                ));
            }
        }
    }));

    out.push(fixed_check("weak-lower-argmax", |failures| {
        for &qv in &SANDWICH_QS {
            for &k in &[100usize, 10_000] {
                let q = Exponent::try_new(qv).unwrap();
                let (_, argmax) = weak_lower_extremal(q, k).unwrap();
                if argmax != 1 {
                    failures.push(format!(
                        "harmonic extremal maximizer at q={qv} k={k} is {argmax}, not 1"
                    ));
                }
            }
        }
    }));

    out.push(fixed_check("weak-upper-limit", |failures| {
        for &qv in &[2.0, 3.0] {
            let q = Exponent::try_new(qv).unwrap();
            let (v, _) = weak_upper_extremal(q, 100_000).unwrap();
            let upper = catalog::weak_upper(q).unwrap().value;
            if (1.0 / v - upper).abs() > 1e-4 {
                failures.push(format!(
                    "flat extremal misses the weak upper constant at q={qv}: 1/{v} vs {upper}"
                ));
            }
        }
    }));

    out.push(fixed_check("zeta-lower-estimate", |failures| {
        for k in 0..=89 {
            let qv = (11 + k) as f64 / 10.0;
            let z = catalog::zeta(qv, 1e-8).unwrap();
            if z.value - z.err <= 1.0 / (qv - 1.0) + 0.5 {
                failures.push(format!("zeta lower estimate fails at q={qv}"));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x11);
    let flat_floor: Vec<(Exponent, f64)> = SANDWICH_QS
        .iter()
        .map(|&qv| {
            let q = Exponent::try_new(qv).unwrap();
            let (v, _) = weak_upper_extremal(q, 40)?;
            Ok((q, v))
        })
        .collect::<Result<_>>()?;
    out.push(check("flat-minimizes-weak-transform", opts.trials, |i, failures| {
        // random feasible sequence: support <= 40, normalized to sup n a_n = 1
        let raw = sampling::monotone_sequence(&mut rng, 40);
        let sup = weak_ell1(&raw).value;
        if sup == 0.0 {
            return;
        }
        let a = raw.scaled(1.0 / sup).unwrap();
        for &(q, floor) in &flat_floor {
            let g = weak_gamma(&a, q).unwrap().value;
            if g < floor - 1e-12 {
                failures.push(format!(
                    "feasible sequence beats the flat minimizer: seed={seed} trial={i} q={q} {g} < {floor}"
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x12);
    out.push(check("holder-symmetry", opts.trials, |i, failures| {
        let qv = 1.01 + 49.0 * rng.next_f64();
        let q = Exponent::try_new(qv).unwrap();
        let a = catalog::weak_upper(q).unwrap().value;
        let b = catalog::weak_upper(q.conjugate()).unwrap().value;
        if (a - b).abs() > 1e-12 * a {
            failures.push(format!(
                "conjugation symmetry violated: seed={seed} trial={i} q={qv} {a} vs {b}"
            ));
        }
    }));

    Ok(out)
}

fn continuous_suite(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let seed = opts.seed;

    out.push(fixed_check("beta-model", |failures| {
        for &qv in &[1.5, 2.0, 3.0, 5.0] {
            let q = Exponent::try_new(qv).unwrap();
            let expect = PI / (qv * (PI / qv).sin());
            let mut values = Vec::new();
            for &t_end in &[0.5, 1.0, 7.0] {
                let f = crate::continuous::StepFunction::model(t_end).unwrap();
                let v = strong_transform(&f, q, 1e-11).unwrap().value;
                if (v - expect).abs() > 1e-8 {
                    failures.push(format!(
                        "beta evaluation off at q={qv} T={t_end}: {v} vs {expect}"
                    ));
                }
                values.push(v);
            }
            for w in values.windows(2) {
                if (w[0] - w[1]).abs() > 1e-10 {
                    failures.push(format!(
                        "T-dependence detected at q={qv}: {} vs {}",
                        w[0], w[1]
                    ));
                }
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x20);
    out.push(check("strong-sandwich-cont", opts.trials, |i, failures| {
        let f = sampling::step_function(&mut rng, 6);
        for &qv in &SANDWICH_QS {
            let q = Exponent::try_new(qv).unwrap();
            let s = strong_sandwich(&f, q).unwrap();
            let mut ok = s.lhs_ok && s.rhs_ok;
            if opts.inject_failure && i == 0 {
                ok = !ok;
            }
            if !ok {
                failures.push(format!(
                    "continuous strong sandwich violated: seed={seed} trial={i} q={qv} lhs_ratio={} rhs_ratio={}",
                    s.lhs_ratio, s.rhs_ratio
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x21);
    let weak_consts: Vec<(Exponent, f64, f64)> = SANDWICH_QS
        .iter()
        .map(|&qv| {
            let q = Exponent::try_new(qv).unwrap();
            let c = catalog::continuous(q)?;
            Ok((q, c.weak_lower.value, c.weak_upper.value))
        })
        .collect::<Result<_>>()?;
    out.push(check("weak-sandwich-cont", opts.trials, |i, failures| {
        let f = sampling::step_function(&mut rng, 6);
        for &(q, lower, upper) in &weak_consts {
            let w = weak_values(&f, q).unwrap();
            if !(leq(w.weak_lhs / lower, w.weak_rhs) && leq(w.weak_rhs, upper * w.weak_lhs)) {
                failures.push(format!(
                    "continuous weak sandwich violated: seed={seed} trial={i} q={q} lhs={} rhs={}",
                    w.weak_lhs, w.weak_rhs
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x22);
    out.push(check("strong-upper-side", opts.trials, |i, failures| {
        let f = sampling::step_function(&mut rng, 5);
        for &qv in &SANDWICH_QS {
            let q = Exponent::try_new(qv).unwrap();
            let t = strong_transform(&f, q, 1e-10).unwrap();
            let bound = (qv - 1.0).powf(1.0 / qv) * t.upper();
            if !leq(f.integral(), bound + 1e-8) {
                failures.push(format!(
                    "mass exceeds (q-1)^(1/q) transform: seed={seed} trial={i} q={qv}"
                ));
            }
        }
    }));

    out.push(fixed_check("weak-model-t-invariance", |failures| {
        for &qv in &[1.5, 2.0, 3.0] {
            let q = Exponent::try_new(qv).unwrap();
            let expect = (1.0 / qv).powf(1.0 / qv) * (1.0 - 1.0 / qv).powf(1.0 - 1.0 / qv);
            for &t_end in &[0.5, 1.0, 7.0] {
                let f = crate::continuous::StepFunction::model(t_end).unwrap();
                let w = weak_values(&f, q).unwrap();
                if (w.weak_lhs - expect).abs() > 1e-12 {
                    failures.push(format!("weak model value off at q={qv} T={t_end}"));
                }
            }
            let rec = weak_reciprocal_value(q).unwrap();
            if (rec - (qv - 1.0).powf(-1.0 / qv)).abs() > 1e-15 {
                failures.push(format!("reciprocal extremal value off at q={qv}"));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x23);
    out.push(check(
        "subadditivity",
        opts.trials.min(100),
        |i, failures| {
            let f = sampling::step_function(&mut rng, 4);
            let g = sampling::step_function(&mut rng, 4);
            let q = Exponent::try_new(2.0).unwrap();
            let sum = f.pointwise_sum(&g);
            let a = strong_transform(&sum, q, 1e-10).unwrap().value;
            let b = strong_transform(&f, q, 1e-10).unwrap().value;
            let c = strong_transform(&g, q, 1e-10).unwrap().value;
            if a > b + c + 1e-7 {
                failures.push(format!(
                    "triangle inequality violated: seed={seed} trial={i} {a} > {b} + {c}"
                ));
            }
        },
    ));

    Ok(out)
}

fn sparse_suite(opts: &VerifyOptions) -> Result<Vec<CheckResult>> {
    let mut out = Vec::new();
    let seed = opts.seed;

    let mut rng = Rng::new(seed ^ 0x30);
    out.push(check("equivalence", opts.trials, |i, failures| {
        let len = 1 + rng.next_usize(60);
        let c = sampling::gaussian_coeffs(&mut rng, len);
        for &(alpha, r) in &[(0.5, RMode::Tau), (0.5, RMode::Infinity), (1.5, RMode::Tau)] {
            let rep = equivalence_check(&c, alpha, r).unwrap();
            let mut ok = rep.holds();
            if opts.inject_failure && i == 0 {
                ok = !ok;
            }
            if !ok {
                failures.push(format!(
                    "norm equivalence violated: seed={seed} trial={i} alpha={alpha} r={r:?} lorentz={} approx={}",
                    rep.lorentz, rep.approx
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x31);
    out.push(check("substitution-identity", opts.trials, |i, failures| {
        let len = 2 + rng.next_usize(40);
        let c = sampling::gaussian_coeffs(&mut rng, len);
        for &alpha in &[0.5, 1.5] {
            let tau = 1.0 / (alpha + 0.5);
            let q = Exponent::try_new(2.0 * alpha + 1.0).unwrap();
            let p = ApproxParams::new(alpha, tau).unwrap();
            let lhs = approx_space_norm(&c, &p).powf(tau);
            let a: Vec<f64> = c.rearranged().entries().iter().map(|v| v.powf(tau)).collect();
            let rhs = gamma(&MonotoneSequence::try_new(a).unwrap(), q).unwrap().value;
            if (lhs - rhs).abs() > 1e-10 * rhs.max(1e-30) {
                failures.push(format!(
                    "substitution identity violated: seed={seed} trial={i} alpha={alpha} {lhs} vs {rhs}"
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x32);
    out.push(check("lorentz-tau-ell1", opts.trials, |i, failures| {
        let len = 2 + rng.next_usize(40);
        let c = sampling::gaussian_coeffs(&mut rng, len);
        for &alpha in &[0.5, 1.5] {
            let tau = 1.0 / (alpha + 0.5);
            let lhs = lorentz_norm(&c, tau, tau).unwrap().powf(tau);
            let a: Vec<f64> = c
                .rearranged()
                .entries()
                .iter()
                .map(|v| v.powf(tau))
                .collect();
            let rhs = ell1(&MonotoneSequence::try_new(a).unwrap()).value;
            if (lhs - rhs).abs() > 1e-12 * rhs.max(1e-30) {
                failures.push(format!(
                    "lorentz tau identity violated: seed={seed} trial={i} alpha={alpha}"
                ));
            }
        }
    }));

    let mut rng = Rng::new(seed ^ 0x33);
    out.push(check("l22-euclidean", opts.trials, |i, failures| {
        let len = 1 + rng.next_usize(50);
        let c = sampling::gaussian_coeffs(&mut rng, len);
        let l22 = lorentz_norm(&c, 2.0, 2.0).unwrap();
        let l2: f64 = c.coeffs().iter().map(|x| x * x).sum::<f64>().sqrt();
        if (l22 - l2).abs() > 1e-12 * l2.max(1e-30) {
            failures.push(format!(
                "l_{{2,2}} != l_2: seed={seed} trial={i} {l22} vs {l2}"
            ));
        }
    }));

    let mut rng = Rng::new(seed ^ 0x34);
    out.push(check(
        "quasi-norm-homogeneity",
        opts.trials,
        |i, failures| {
            let len = 1 + rng.next_usize(30);
            let c = sampling::gaussian_coeffs(&mut rng, len);
            let t = 0.1 + 5.0 * rng.next_f64();
            let scaled = CoeffVector::try_new(c.coeffs().iter().map(|v| t * v).collect()).unwrap();
            let p = ApproxParams::new(0.75, 1.3).unwrap();
            let pairs = [
                (
                    approx_space_norm(&scaled, &p),
                    t * approx_space_norm(&c, &p),
                ),
                (
                    lorentz_norm(&scaled, 0.8, 1.6).unwrap(),
                    t * lorentz_norm(&c, 0.8, 1.6).unwrap(),
                ),
            ];
            for (got, expect) in pairs {
                if (got - expect).abs() > 1e-11 * expect.abs() + 1e-12 {
                    failures.push(format!(
                        "degree-1 homogeneity violated: seed={seed} trial={i} {got} vs {expect}"
                    ));
                }
            }
        },
    ));

    let mut rng = Rng::new(seed ^ 0x35);
    out.push(check(
        "errors-monotone-invariant",
        opts.trials,
        |i, failures| {
            let len = 2 + rng.next_usize(30);
            let c = sampling::gaussian_coeffs(&mut rng, len);
            let errors = approximation_errors(&c);
            if errors.windows(2).any(|w| w[0] < w[1]) {
                failures.push(format!(
                    "approximation errors not nonincreasing: seed={seed} trial={i}"
                ));
            }
            // shuffle and flip signs: rearrangement wipes both out
            let mut permuted = c.coeffs().to_vec();
            for k in (1..permuted.len()).rev() {
                let j = rng.next_usize(k + 1);
                permuted.swap(k, j);
                if rng.next_f64() < 0.5 {
                    permuted[k] = -permuted[k];
                }
            }
            let shuffled = CoeffVector::try_new(permuted).unwrap();
            if approximation_errors(&shuffled) != errors {
                failures.push(format!(
                    "errors not invariant under permutation/sign: seed={seed} trial={i}"
                ));
            }
        },
    ));

    Ok(out)
}
