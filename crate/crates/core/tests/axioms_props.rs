use mellin_gamma::axioms::{
    evaluate_candidate, reconstruct, CandidateDensity, ClassifiedFunctional, DensityFunctional, ScaledFunctional,
    Verdict,
};
use mellin_gamma::radial::coefficient;
use mellin_gamma::{Dimension, Error, QuadratureConfig, TestFunction};

fn dim(x: f64) -> Dimension {
    Dimension::new(x).unwrap()
}

#[test]
fn classified_density_passes() {
    let cfg = QuadratureConfig::default();
    for x in [0.5, 1.0, 2.0, 3.0, 7.5] {
        let rep = evaluate_candidate(&CandidateDensity::classified(dim(x)), dim(x), 1e-6, &cfg).unwrap();
        assert_eq!(rep.verdict, Verdict::Passes, "{rep:?}");
        assert!(rep.scaling_residual < 1e-8 && rep.gaussian_residual < 1e-8);
        assert!(rep.haar_flatness < 1e-10);
    }
}

#[test]
fn negative_controls_fail() {
    let cfg = QuadratureConfig::default();
    let x = dim(3.0);
    let modulated = evaluate_candidate(&CandidateDensity::log_modulated(x, 0.5), x, 1e-6, &cfg).unwrap();
    assert_ne!(modulated.verdict, Verdict::Passes);
    assert!(modulated.scaling_residual.max(modulated.haar_flatness) > 0.05);

    let wrong_degree = CandidateDensity::power_law(coefficient(dim(4.0)), 2.0);
    let rep = evaluate_candidate(&wrong_degree, x, 1e-6, &cfg).unwrap();
    assert_ne!(rep.verdict, Verdict::Passes);
    assert!(rep.scaling_residual > 0.05);

    let scaled = evaluate_candidate(&CandidateDensity::classified(x).scaled(2.0), x, 1e-6, &cfg).unwrap();
    assert_eq!(scaled.verdict, Verdict::FailsNormalization);
}

#[test]
fn reconstruction_recovers_degree_and_constant() {
    let probe = TestFunction::log_bump(0.5, 3.0).unwrap();
    for x in [1.0, 2.5, 4.0, 9.0] {
        let f = ClassifiedFunctional {
            dim: dim(x),
            cfg: QuadratureConfig::default(),
        };
        let rec = reconstruct(&f, &probe, &[0.5, 1.0, 2.0, 4.0]).unwrap();
        assert!((rec.degree - x / 2.0).abs() < 1e-6, "x = {x}: {rec:?}");
        assert!(((rec.constant - coefficient(dim(x))) / coefficient(dim(x))).abs() < 1e-6);
    }
}

#[test]
fn reconstruction_of_scaled_functional() {
    let probe = TestFunction::log_bump(0.5, 3.0).unwrap();
    let inner = ClassifiedFunctional {
        dim: dim(3.0),
        cfg: QuadratureConfig::default(),
    };
    let rec = reconstruct(&ScaledFunctional { factor: 3.0, inner }, &probe, &[0.5, 2.0, 4.0]).unwrap();
    assert!((rec.constant / coefficient(dim(3.0)) - 3.0).abs() < 1e-6);
}

#[test]
fn reconstruction_rejects_non_covariant_functional() {
    let probe = TestFunction::log_bump(0.5, 3.0).unwrap();
    let f = DensityFunctional {
        density: CandidateDensity::log_modulated(dim(3.0), 0.5),
        cfg: QuadratureConfig::default(),
    };
    assert!(matches!(
        reconstruct(&f, &probe, &[0.5, 2.0, 4.0]),
        Err(Error::NotScalingCovariant { .. })
    ));
}
