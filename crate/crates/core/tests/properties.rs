//! Property-based invariants on randomized inputs.

use proptest::prelude::*;
use stechkin::catalog;
use stechkin::functionals::{ell1, gamma, weak_ell1, weak_gamma};
use stechkin::sequence::{rearrange, MonotoneSequence, SuffixPowerTable};
use stechkin::Exponent;

#[test]
fn core_types_are_send_and_sync() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<MonotoneSequence>();
    assert_send_sync::<SuffixPowerTable>();
    assert_send_sync::<Exponent>();
    assert_send_sync::<stechkin::CertifiedValue>();
    assert_send_sync::<stechkin::continuous::StepFunction>();
    assert_send_sync::<stechkin::sparse::CoeffVector>();
    assert_send_sync::<stechkin::bound::AuxSequence>();
}

fn monotone(max_len: usize) -> impl Strategy<Value = MonotoneSequence> {
    prop::collection::vec(0.0..1.0f64, 1..max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.total_cmp(a));
        MonotoneSequence::try_new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn conjugate_involution_within_one_ulp(q in 1.01..100.0f64) {
        let e = Exponent::try_new(q).unwrap();
        let back = e.conjugate().conjugate().value();
        let ulps = (back.to_bits() as i64 - q.to_bits() as i64).abs();
        prop_assert!(ulps <= 1, "q={q} back={back} ulps={ulps}");
    }

    #[test]
    fn rearrange_idempotent_and_multiset_preserving(xs in prop::collection::vec(-10.0..10.0f64, 1..50)) {
        let r = rearrange(&xs).unwrap();
        let r2 = rearrange(r.entries()).unwrap();
        prop_assert_eq!(r.entries(), r2.entries());

        let mut expected: Vec<f64> = xs.iter().map(|v| v.abs()).collect();
        expected.sort_unstable_by(|a, b| b.total_cmp(a));
        prop_assert_eq!(r.entries(), &expected[..]);
    }

    #[test]
    fn suffix_table_matches_naive(a in monotone(200), qv in prop::sample::select(vec![1.5, 2.0, 3.0])) {
        let q = Exponent::try_new(qv).unwrap();
        let table = SuffixPowerTable::new(&a, q).unwrap();
        for n in 1..=a.len() {
            let naive: f64 = a.entries()[n - 1..].iter().map(|x| x.powf(qv)).sum();
            prop_assert!((table.value_at(n) - naive).abs() <= 1e-13 * naive.max(1e-300));
        }
    }

    #[test]
    fn functionals_positively_homogeneous(a in monotone(60), t in 0.0..10.0f64) {
        let q = Exponent::try_new(2.0).unwrap();
        let scaled = a.scaled(t).unwrap();
        let cases = [
            (ell1(&scaled).value, t * ell1(&a).value),
            (gamma(&scaled, q).unwrap().value, t * gamma(&a, q).unwrap().value),
            (weak_ell1(&scaled).value, t * weak_ell1(&a).value),
            (weak_gamma(&scaled, q).unwrap().value, t * weak_gamma(&a, q).unwrap().value),
        ];
        for (got, expect) in cases {
            prop_assert!((got - expect).abs() <= 1e-12 * expect.abs() + 1e-12);
        }
    }

    #[test]
    fn discrete_sandwiches(a in monotone(120), qv in prop::sample::select(vec![1.5, 2.0, 3.0])) {
        let q = Exponent::try_new(qv).unwrap();
        let lower = catalog::strong_lower(q).unwrap().value;
        let upper = catalog::strong_upper(q).unwrap().upper();
        let g = gamma(&a, q).unwrap().value;
        let s = ell1(&a).value;
        prop_assert!(g / lower <= s * (1.0 + 1e-12) + 1e-12);
        prop_assert!(s <= upper * g * (1.0 + 1e-12) + 1e-12);

        let wl = catalog::weak_lower(q).unwrap().upper();
        let wu = catalog::weak_upper(q).unwrap().value;
        let wg = weak_gamma(&a, q).unwrap().value;
        let ws = weak_ell1(&a).value;
        prop_assert!(wg / wl <= ws * (1.0 + 1e-12) + 1e-12);
        prop_assert!(ws <= wu * wg * (1.0 + 1e-12) + 1e-12);
    }

    #[test]
    fn degenerate_infinity_exact(a in monotone(60)) {
        prop_assert_eq!(gamma(&a, Exponent::Infinity).unwrap().value, ell1(&a).value);
        prop_assert_eq!(weak_gamma(&a, Exponent::Infinity).unwrap().value, weak_ell1(&a).value);
    }

    #[test]
    fn lorentz_22_is_euclidean(xs in prop::collection::vec(-5.0..5.0f64, 1..60)) {
        let c = stechkin::sparse::CoeffVector::try_new(xs.clone()).unwrap();
        let l22 = stechkin::sparse::lorentz_norm(&c, 2.0, 2.0).unwrap();
        let l2: f64 = xs.iter().map(|x| x * x).sum::<f64>().sqrt();
        prop_assert!((l22 - l2).abs() <= 1e-12 * l2.max(1e-30));
    }
}
