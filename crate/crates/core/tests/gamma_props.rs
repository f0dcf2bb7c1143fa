use mellin_gamma::bm::{log_convexity_check, GridFunction};
use mellin_gamma::gamma::{
    euler_limit_extrapolated, euler_limit_ratio, gamma, gamma_ratio, ln_gamma, GammaRatioQuery,
};
use proptest::prelude::*;

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn recurrence_on_grid() {
    let mut x = 0.05;
    while x <= 50.0 {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        assert!(((lhs - rhs) / lhs).abs() < 1e-12, "x = {x}");
        x += 0.05;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn recurrence_random(x in 1e-3f64..50.0) {
        let lhs = gamma(x + 1.0).unwrap();
        let rhs = x * gamma(x).unwrap();
        prop_assert!(((lhs - rhs) / lhs).abs() < 1e-12);
    }

    #[test]
    fn ratio_agrees_with_euler_oracle(x in 0.1f64..10.0, r in 0.0f64..1.0) {
        let production = gamma_ratio(GammaRatioQuery::new(x, r).unwrap()).unwrap();
        let oracle = euler_limit_extrapolated(x, r, 100_000).unwrap();
        prop_assert!(rel(production, oracle) < 1e-7);
    }

    #[test]
    fn ratio_shift_one_is_base(x in 1e-3f64..1e3) {
        let v = gamma_ratio(GammaRatioQuery::new(x, 1.0).unwrap()).unwrap();
        prop_assert!(rel(v, x) < 1e-14);
    }

    #[test]
    fn ln_gamma_is_log_convex(lo in 0.01f64..90.0, step in 0.001f64..0.1) {
        let lg: Vec<f64> = (0..100)
            .map(|k| lo + k as f64 * step)
            .filter(|&x| x <= 100.0)
            .map(|x| ln_gamma(x).unwrap())
            .collect();
        for w in lg.windows(3) {
            prop_assert!(w[0] - 2.0 * w[1] + w[2] >= -1e-10);
        }
    }

    #[test]
    fn gamma_grid_passes_convexity_check(a in 0.5f64..20.0) {
        let grid = GridFunction::uniform_grid(0.0, 5.0, 0.1).unwrap();
        let g = GridFunction::from_fn(grid, |r| gamma_ratio(GammaRatioQuery::new(a, r)?)).unwrap();
        prop_assert!(log_convexity_check(&g).unwrap().is_convex());
    }
}

#[test]
fn log_convexity_fixed_grid() {
    // second differences of ln Γ on (0, 100] with step 0.1
    let xs: Vec<f64> = (1..=1000).map(|k| k as f64 * 0.1).collect();
    let lg: Vec<f64> = xs.iter().map(|&x| ln_gamma(x).unwrap()).collect();
    let min = lg.windows(3).map(|w| w[0] - 2.0 * w[1] + w[2]).fold(f64::INFINITY, f64::min);
    assert!(min >= -1e-10, "{min}");
}

#[test]
fn euler_product_error_halves() {
    let exact = gamma_ratio(GammaRatioQuery::new(1.5, 0.5).unwrap()).unwrap();
    let mut prev = (euler_limit_ratio(1.5, 0.5, 1000).unwrap() - exact).abs();
    for n in [2000u64, 4000, 8000, 16000] {
        let err = (euler_limit_ratio(1.5, 0.5, n).unwrap() - exact).abs();
        let ratio = err / prev;
        assert!((0.4..=0.6).contains(&ratio), "n = {n}: {ratio}");
        prev = err;
    }
}

#[test]
fn euler_limit_examples() {
    let two_over_root_pi = 2.0 / std::f64::consts::PI.sqrt();
    assert!(rel(euler_limit_ratio(1.5, 0.5, 1_000_000).unwrap(), two_over_root_pi) < 1e-5);
    assert!(rel(euler_limit_extrapolated(1.5, 0.5, 10_000).unwrap(), two_over_root_pi) < 1e-7);
    let cross = gamma_ratio(GammaRatioQuery::new(2.5, 0.25).unwrap()).unwrap();
    assert!(rel(euler_limit_extrapolated(2.5, 0.25, 10_000).unwrap(), cross) < 1e-7);
    assert_eq!(euler_limit_ratio(3.0, 0.0, 17).unwrap(), 1.0);
}
