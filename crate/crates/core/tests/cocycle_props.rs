use mellin_gamma::cocycle::{
    coboundary_ratio, cocycle_residual, recurrence_check, transport_r, transport_t, CocycleKind, ShiftPair,
};
use mellin_gamma::Dimension;
use proptest::prelude::*;

/// Admissible `(x, r, s)`: `x > 0`, `x + 2r > 0`, `x + 2r + 2s > 0`.
fn triple() -> impl Strategy<Value = (f64, f64, f64)> {
    (0.05f64..40.0, 0.0f64..1.0, 0.0f64..1.0).prop_map(|(x, ur, us)| {
        let r = -x / 2.0 * 0.95 + ur * 10.0;
        let s = -(x + 2.0 * r) / 2.0 * 0.95 + us * 10.0;
        (x, r, s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cocycle_law_r(t in triple()) {
        prop_assert!(cocycle_residual(CocycleKind::R, t.0, t.1, t.2).unwrap() < 1e-12);
    }

    #[test]
    fn cocycle_law_t(t in triple()) {
        prop_assert!(cocycle_residual(CocycleKind::T, t.0, t.1, t.2).unwrap() < 1e-12);
    }

    #[test]
    fn cocycle_law_ta(t in triple(), a in 0.1f64..10.0) {
        prop_assert!(cocycle_residual(CocycleKind::Ta(a), t.0, t.1, t.2).unwrap() < 1e-12);
    }

    #[test]
    fn coboundary_separates_transports(t in triple()) {
        let p = ShiftPair::new(t.0, t.1).unwrap();
        let q = transport_r(&p).unwrap() / transport_t(&p).unwrap();
        let want = coboundary_ratio(&p);
        prop_assert!(((q - want) / want).abs() < 1e-13);
        prop_assert_eq!(want, (t.0 + 2.0 * t.1) / t.0);
    }

    #[test]
    fn normalization_at_zero_shift(x in 0.01f64..100.0) {
        let p = ShiftPair::new(x, 0.0).unwrap();
        prop_assert_eq!(transport_r(&p).unwrap(), 1.0);
        prop_assert_eq!(transport_t(&p).unwrap(), 1.0);
    }

    #[test]
    fn two_step_recurrence(x in 0.01f64..300.0) {
        prop_assert!(recurrence_check(Dimension::new(x).unwrap()) < 1e-12);
    }
}
