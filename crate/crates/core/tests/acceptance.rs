//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with `cargo test -p stechkin --test acceptance`
//! (add `-- --nocapture` to see the lines for passing criteria too).

use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Instant;

use stechkin::bound::{a_prime, c_b, AuxSequence};
use stechkin::catalog;
use stechkin::continuous::{strong_sandwich, strong_transform, weak_values, StepFunction};
use stechkin::extremal::{
    integral_brackets, simplex_vertex_search, vertex_sum, weak_upper_extremal,
};
use stechkin::functionals::{ell1, gamma, weak_ell1, weak_gamma};
use stechkin::sampling::{self, Rng};
use stechkin::sparse::{devore_constants, equivalence_check, RMode};
use stechkin::Exponent;

fn q(v: f64) -> Exponent {
    Exponent::try_new(v).unwrap()
}

fn report(criterion: &str, ok: bool, detail: &str) {
    println!(
        "criterion {criterion}: {} ({detail})",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed: {detail}");
}

#[test]
fn criterion_01_reference_bound() {
    let start = Instant::now();
    let b = AuxSequence::poly(0.88).unwrap();
    let rep = c_b(q(2.0), &b, 100, 200_000).unwrap();
    let elapsed = start.elapsed().as_secs_f64();

    let sup_ok = rep.supremum.value >= 1.108 && rep.supremum.value <= 1.1086983;
    let cert_ok = rep.truncation_error <= 5e-9;
    let time_ok = elapsed < 5.0;
    report(
        "01 bound-reproduction",
        sup_ok && cert_ok && time_ok,
        &format!(
            "supremum={:.10} certificate={:.3e} elapsed={elapsed:.2}s",
            rep.supremum.value, rep.truncation_error
        ),
    );
}

#[test]
fn criterion_02_vertex_pi_half() {
    let start = Instant::now();
    let q2 = q(2.0);

    let mut increasing = true;
    let mut bracketed = true;
    let mut prev = 0.0;
    for k0 in 1..=10_000u64 {
        let v = vertex_sum(q2, k0).unwrap();
        if v <= prev {
            increasing = false;
            break;
        }
        let (f, h) = integral_brackets(k0);
        if !(f <= v && v <= h) {
            bracketed = false;
            break;
        }
        prev = v;
    }

    let gap = FRAC_PI_2 - vertex_sum(q2, 1_000_000).unwrap();
    let gap_ok = gap > 0.0 && gap < 5e-3;
    let elapsed = start.elapsed().as_secs_f64();
    report(
        "02 vertex-pi-half",
        increasing && bracketed && gap_ok && elapsed < 10.0,
        &format!("increasing={increasing} bracketed={bracketed} gap_at_1e6={gap:.2e} elapsed={elapsed:.2}s"),
    );
}

#[test]
fn criterion_03_gao_root() {
    let q0 = catalog::gao_q0().unwrap();
    let resid = catalog::gao_residual(q0.value);
    report(
        "03 gao-root",
        (q0.value - 2.8855).abs() <= 5e-4 && resid.abs() <= 1e-7,
        &format!("q0={:.8} residual={resid:.2e}", q0.value),
    );
}

#[test]
fn criterion_04_crossovers() {
    let c = catalog::crossovers().unwrap();
    let checks = [
        (c.q1.value, 1.3229),
        (c.q2.value, 4.4124),
        (c.q3.value, 1.7718),
        (c.q4.value, 1.3725),
    ];
    let ok = checks
        .iter()
        .all(|(got, expect)| (got - expect).abs() <= 5e-4);
    report(
        "04 crossovers",
        ok,
        &format!(
            "q1={:.6} q2={:.6} q3={:.6} q4={:.6}",
            c.q1.value, c.q2.value, c.q3.value, c.q4.value
        ),
    );
}

#[test]
fn criterion_05_weak_constants() {
    let c = catalog::weak_lower(q(2.0)).unwrap();
    let zeta_ok = (c.value - 1.282549830161864).abs() <= 1e-9;

    let cu = catalog::weak_upper(q(2.0)).unwrap();
    let two_ok = (cu.value - 2.0).abs() <= 1e-12;

    let mut symmetric = true;
    for qq in [1.1, 1.5, 3.0, 10.0] {
        let a = catalog::weak_upper(q(qq)).unwrap().value;
        let b = catalog::weak_upper(q(qq).conjugate()).unwrap().value;
        if (a - b).abs() > 1e-12 * a.max(1.0) {
            symmetric = false;
        }
    }

    let (v, _) = weak_upper_extremal(q(2.0), 100_000).unwrap();
    let extremal_ok = (1.0 / v - 2.0).abs() <= 1e-4;

    report(
        "05 weak-constants",
        zeta_ok && two_ok && symmetric && extremal_ok,
        &format!(
            "c1w(2)={:.15} C1w(2)={} symmetric={symmetric} 1/flat(1e5)={:.6}",
            c.value,
            cu.value,
            1.0 / v
        ),
    );
}

#[test]
fn criterion_06_zeta_lower_estimate() {
    let mut ok = true;
    let mut worst_margin = f64::INFINITY;
    for k in 0..=89 {
        let qq = (11 + k) as f64 / 10.0;
        let z = catalog::zeta(qq, 1e-8).unwrap();
        let margin = (z.value - z.err) - (1.0 / (qq - 1.0) + 0.5);
        worst_margin = worst_margin.min(margin);
        if margin <= 0.0 {
            ok = false;
        }
    }
    report(
        "06 zeta-lower-estimate",
        ok,
        &format!("grid 1.1..=10.0 step 0.1, worst margin {worst_margin:.3e}"),
    );
}

#[test]
fn criterion_07_continuous_beta() {
    let mut ok = true;
    let mut worst_beta = 0.0f64;
    let mut worst_spread = 0.0f64;
    for qq in [1.5, 2.0, 3.0, 5.0] {
        let expect = PI / (qq * (PI / qq).sin());
        let mut values = Vec::new();
        for t_end in [0.5, 1.0, 7.0] {
            let f = StepFunction::model(t_end).unwrap();
            let v = strong_transform(&f, q(qq), 1e-11).unwrap().value;
            worst_beta = worst_beta.max((v - expect).abs());
            values.push(v);
        }
        for w in values.windows(2) {
            worst_spread = worst_spread.max((w[0] - w[1]).abs());
        }
        if worst_beta > 1e-8 || worst_spread > 1e-10 {
            ok = false;
        }
    }
    report(
        "07 continuous-beta",
        ok,
        &format!("max |quad - closed form| = {worst_beta:.2e}, max T-spread = {worst_spread:.2e}"),
    );
}

#[test]
fn criterion_08_sandwich_suites() {
    let start = Instant::now();
    let qs: Vec<(Exponent, f64, f64, f64, f64)> = [1.5, 2.0, 3.0]
        .iter()
        .map(|&qv| {
            let e = q(qv);
            (
                e,
                catalog::strong_lower(e).unwrap().value,
                catalog::strong_upper(e).unwrap().upper(),
                catalog::weak_lower(e).unwrap().upper(),
                catalog::weak_upper(e).unwrap().value,
            )
        })
        .collect();

    let leq = |a: f64, b: f64| a <= b + 1e-12 * b.abs() + 1e-12;

    let mut violations = 0usize;
    let mut rng = Rng::new(2024);
    for _ in 0..1000 {
        let a = sampling::monotone_sequence(&mut rng, 200);
        let s = ell1(&a).value;
        let ws = weak_ell1(&a).value;
        for &(e, sl, su, wl, wu) in &qs {
            let g = gamma(&a, e).unwrap().value;
            let wg = weak_gamma(&a, e).unwrap().value;
            if !(leq(g / sl, s) && leq(s, su * g)) {
                violations += 1;
            }
            if !(leq(wg / wl, ws) && leq(ws, wu * wg)) {
                violations += 1;
            }
        }
    }

    let mut cont_violations = 0usize;
    let mut rng = Rng::new(2025);
    for _ in 0..200 {
        let f = sampling::step_function(&mut rng, 6);
        for &(e, _, _, _, _) in &qs {
            let s = strong_sandwich(&f, e).unwrap();
            if !(s.lhs_ok && s.rhs_ok) {
                cont_violations += 1;
            }
            let c = catalog::continuous(e).unwrap();
            let w = weak_values(&f, e).unwrap();
            if !(leq(w.weak_lhs / c.weak_lower.value, w.weak_rhs)
                && leq(w.weak_rhs, c.weak_upper.value * w.weak_lhs))
            {
                cont_violations += 1;
            }
        }
    }

    let elapsed = start.elapsed().as_secs_f64();
    report(
        "08 sandwich-suites",
        violations == 0 && cont_violations == 0 && elapsed < 30.0,
        &format!(
            "discrete violations={violations}/6000, continuous violations={cont_violations}/1200, elapsed={elapsed:.2}s"
        ),
    );
}

#[test]
fn criterion_09_vertex_dominance() {
    let mut ok = true;
    let mut worst = f64::INFINITY;
    for qv in [1.5, 2.0, 3.0] {
        let e = q(qv);
        let (best, _) = simplex_vertex_search(e, 6).unwrap();
        let mut rng = Rng::new(99);
        for _ in 0..10_000 {
            let p = sampling::simplex_point(&mut rng, 6);
            let margin = best - gamma(&p, e).unwrap().value;
            worst = worst.min(margin);
            if margin < -1e-12 {
                ok = false;
            }
        }
    }
    report(
        "09 vertex-dominance",
        ok,
        &format!("10000 points of the 6-simplex per q, worst margin {worst:.3e}"),
    );
}

#[test]
fn criterion_10_devore_wiener() {
    let d = devore_constants(0.5, RMode::Tau).unwrap();
    let constants_ok = (d.lower.value - FRAC_PI_2).abs() <= 1e-15 && d.upper.value == 1.1064957714;

    let mut pass = 0usize;
    let mut total = 0usize;
    let mut rng = Rng::new(4242);
    for _ in 0..100 {
        let len = 1 + rng.next_usize(60);
        let c = sampling::gaussian_coeffs(&mut rng, len);
        for (alpha, r) in [(0.5, RMode::Tau), (0.5, RMode::Infinity), (1.5, RMode::Tau)] {
            total += 1;
            if equivalence_check(&c, alpha, r).unwrap().holds() {
                pass += 1;
            }
        }
    }
    report(
        "10 devore-wiener",
        constants_ok && pass == total,
        &format!(
            "constants=({:.10}, {:.10}), equivalence {pass}/{total}",
            d.lower.value, d.upper.value
        ),
    );
}

#[test]
fn criterion_11_improved_ordering() {
    let mut ordered = true;
    for i in 1..=100 {
        let qq = 1.0 + (catalog::Q_IMPROVED_MAX - 1.0) * i as f64 / 100.0;
        let im = catalog::improved(q(qq)).unwrap().value;
        let sc = catalog::stechkin_choice(q(qq)).unwrap().value;
        if im > sc * (1.0 + 1e-12) {
            ordered = false;
        }
    }
    let im2 = catalog::improved(q(2.0)).unwrap().value;
    let sc2 = catalog::stechkin_choice(q(2.0)).unwrap().value;
    let printed_ok = (im2 - 1.1542).abs() <= 1e-4 && (sc2 - 1.1547).abs() <= 1e-4;
    report(
        "11 improved-ordering",
        ordered && printed_ok,
        &format!("improved(2)={im2:.7} stechkin_choice(2)={sc2:.7} ordered={ordered}"),
    );
}

#[test]
fn criterion_12_aprime_monotone() {
    let mut ok = true;
    for p in [0.6, 0.88, 1.0] {
        if a_prime(p, 1) < a_prime(p, 2) {
            ok = false;
        }
        let mut prev = f64::INFINITY;
        for n in 1..=10_000u64 {
            let v = a_prime(p, n);
            if v > prev {
                ok = false;
                break;
            }
            prev = v;
        }
    }
    report(
        "12 aprime-monotone",
        ok,
        "p in {0.6, 0.88, 1.0}, n <= 10^4, endpoint included",
    );
}
