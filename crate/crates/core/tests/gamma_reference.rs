//! ln Γ against a 40-digit reference table.

use mellin_gamma::gamma::{gamma, ln_gamma};

#[path = "data/ln_gamma_table.rs"]
mod data;

use data::LN_GAMMA_REFERENCE;

#[test]
fn ln_gamma_matches_reference_table() {
    let mut worst = (0.0f64, 0.0f64);
    for &(x, want) in LN_GAMMA_REFERENCE {
        let got = ln_gamma(x).unwrap();
        let err = if want == 0.0 { got.abs() } else { ((got - want) / want).abs() };
        if err > worst.1 {
            worst = (x, err);
        }
    }
    assert!(worst.1 < 1e-13, "worst relative error {:e} at x = {}", worst.1, worst.0);
}

#[test]
fn table_covers_the_accuracy_range() {
    let lo = LN_GAMMA_REFERENCE.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let hi = LN_GAMMA_REFERENCE.iter().map(|p| p.0).fold(0.0, f64::max);
    assert!(lo <= 1e-3 && hi >= 1e3);
    assert!(LN_GAMMA_REFERENCE.len() >= 80);
}

#[test]
fn gamma_at_half_integers() {
    let root_pi = std::f64::consts::PI.sqrt();
    let mut want = root_pi;
    let mut x = 0.5;
    for _ in 0..20 {
        let got = gamma(x).unwrap();
        assert!(((got - want) / want).abs() < 5e-14, "x = {x}");
        want *= x;
        x += 1.0;
    }
}

#[test]
fn gamma_overflow_is_a_range_error() {
    assert!(gamma(171.0).is_ok());
    match gamma(172.0) {
        Err(mellin_gamma::Error::Range { ln_value }) => assert!(ln_value > 709.0),
        other => panic!("unexpected {other:?}"),
    }
}
