//! Numerical tests of candidate radial measures against the two axioms.
//!
//! A candidate is a density `w` on `(0, ∞)`. Scaling covariance of degree
//! `x/2` is probed with dilated test functions, Gaussian normalization with
//! `∫ e^{-u} w(u) du = π^{x/2}`, and the Haar profile
//! `g(t) = e^{-(x/2)t} w(e^t) e^t` is flat exactly when `w` is a constant
//! multiple of `u^{x/2-1}`.
//!
//! Only finitely many dilations and probes can be tried, so a passing report
//! is evidence of compliance while a failing one is a certificate of failure.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use libm::{exp, log, pow, sin};

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::gamma;
use crate::math::LN_PI;
use crate::quadrature::{Quadrature, QuadratureConfig};
use crate::radial::{self, integrate_radial, TestFunction};

/// Cutoff of the truncated Gaussian probe used for normalization.
pub const GAUSSIAN_CUTOFF: f64 = 60.0;

/// Residual above which a reconstruction's log-linear fit is rejected.
pub const NONLINEARITY_TOLERANCE: f64 = 1e-6;

/// Residual threshold used to turn residuals into a [`Verdict`].
pub const DEFAULT_VERDICT_TOLERANCE: f64 = 1e-6;

/// Dilations used by [`evaluate_candidate`].
pub const DEFAULT_LAMBDAS: [f64; 4] = [0.5, 2.0, 3.0, 10.0];

/// A candidate density `w ≥ 0` on `(0, ∞)`.
#[derive(Clone)]
pub struct CandidateDensity {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    label: String,
}

impl core::fmt::Debug for CandidateDensity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("CandidateDensity").field("label", &self.label).finish()
    }
}

impl CandidateDensity {
    pub fn new<F>(label: impl Into<String>, eval: F) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        CandidateDensity {
            eval: Arc::new(eval),
            label: label.into(),
        }
    }

    /// The classified density `C(x) u^{x/2-1}`.
    pub fn classified(x: Dimension) -> Self {
        let ln_c = radial::ln_coefficient(x);
        let e = x.half() - 1.0;
        CandidateDensity::new(alloc::format!("classified(x={})", x.get()), move |u| exp(ln_c + e * log(u)))
    }

    /// `c · u^{a-1}`: scaling covariant of degree `a` for every `c > 0`.
    pub fn power_law(constant: f64, degree: f64) -> Self {
        CandidateDensity::new(alloc::format!("power_law(c={constant}, a={degree})"), move |u| {
            constant * pow(u, degree - 1.0)
        })
    }

    /// `u^{x/2-1} (1 + amplitude · sin(ln u))`: covariant only for `λ ∈ e^{2πℤ}`.
    pub fn log_modulated(x: Dimension, amplitude: f64) -> Self {
        let e = x.half() - 1.0;
        CandidateDensity::new(alloc::format!("log_modulated(x={}, amp={amplitude})", x.get()), move |u| {
            let t = log(u);
            exp(e * t) * (1.0 + amplitude * sin(t))
        })
    }

    pub fn exponential() -> Self {
        CandidateDensity::new("exponential", |u| exp(-u))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        let inner = Arc::clone(&self.eval);
        CandidateDensity {
            eval: Arc::new(move |u| factor * inner(u)),
            label: alloc::format!("{factor}*{}", self.label),
        }
    }

    #[inline]
    pub fn eval(&self, u: f64) -> f64 {
        (self.eval)(u)
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

/// `∫ φ(u) w(u) du` over the support of `φ`.
pub fn pair_with_density(w: &CandidateDensity, phi: &TestFunction, cfg: &QuadratureConfig) -> Result<Quadrature> {
    let (lo, hi) = phi.support();
    integrate_radial(
        |t| {
            let u = exp(t);
            phi.eval(u) * w.eval(u) * u
        },
        |u| phi.eval(u) * w.eval(u),
        lo,
        hi,
        phi.breakpoints(),
        cfg,
    )
}

/// Five log-tent probes whose supports together span `[0.1, 10]`.
pub fn default_probes() -> Vec<TestFunction> {
    [(0.1, 0.5), (0.25, 1.2), (0.6, 2.5), (1.5, 5.0), (2.5, 10.0)]
        .iter()
        .map(|&(lo, hi)| TestFunction::log_bump(lo, hi).expect("valid bump"))
        .collect()
}

/// Default Haar grid: 121 points on `[-6, 6]`.
pub fn default_haar_grid() -> Vec<f64> {
    (0..121).map(|k| -6.0 + 0.1 * k as f64).collect()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingCheck {
    /// `max |λ^{x/2} ∫φ(λu)w − ∫φw| / |∫φw|` over the tested pairs.
    pub residual: f64,
    /// Probes skipped because `∫ φ w = 0`.
    pub skipped_probes: usize,
}

/// Scaling-covariance residual of `w` for degree `x/2`.
pub fn check_scaling_covariance(
    w: &CandidateDensity,
    x: Dimension,
    lambdas: &[f64],
    probes: &[TestFunction],
    cfg: &QuadratureConfig,
) -> Result<ScalingCheck> {
    if lambdas.is_empty() || probes.is_empty() {
        return Err(Error::InvalidArgument("scaling check needs dilations and probes"));
    }
    if let Some(&bad) = lambdas.iter().find(|l| !(l.is_finite() && **l > 0.0)) {
        return Err(Error::domain("dilation factor", bad));
    }
    let mut residual: f64 = 0.0;
    let mut skipped = 0;
    for phi in probes {
        if !phi.support().1.is_finite() {
            return Err(Error::InvalidArgument("scaling probes must be compactly supported"));
        }
        let base = pair_with_density(w, phi, cfg)?.value;
        if base == 0.0 {
            skipped += 1;
            continue;
        }
        for &lambda in lambdas {
            let dilated = pair_with_density(w, &phi.dilate(lambda)?, cfg)?.value;
            let lhs = exp(x.half() * log(lambda)) * dilated;
            residual = residual.max(((lhs - base) / base).abs());
        }
    }
    Ok(ScalingCheck {
        residual,
        skipped_probes: skipped,
    })
}

/// `|∫ e^{-u} w(u) du − π^{x/2}| / π^{x/2}`.
pub fn check_gaussian_normalization(w: &CandidateDensity, x: Dimension, cfg: &QuadratureConfig) -> Result<f64> {
    let gaussian = TestFunction::exponential(f64::INFINITY)?;
    let mass = pair_with_density(w, &gaussian, cfg)?.value;
    let target = x.half() * LN_PI;
    Ok((mass * exp(-target) - 1.0).abs())
}

#[derive(Debug, Clone, PartialEq)]
pub struct HaarProfile {
    pub samples: Vec<(f64, f64)>,
    /// `max |g(t) − ḡ| / ḡ` over the grid.
    pub flatness: f64,
}

/// Samples of `g(t) = e^{-(x/2)t} w(e^t) e^t`, the density of the
/// translation-invariant measure in log coordinates.
pub fn haar_profile(w: &CandidateDensity, x: Dimension, t_grid: &[f64]) -> Result<HaarProfile> {
    if t_grid.is_empty() {
        return Err(Error::Degenerate("empty Haar grid"));
    }
    let samples: Vec<(f64, f64)> = t_grid
        .iter()
        .map(|&t| (t, exp((1.0 - x.half()) * t) * w.eval(exp(t))))
        .collect();
    if samples.iter().any(|s| !s.1.is_finite()) {
        return Err(Error::Degenerate("candidate density is not finite on the Haar grid"));
    }
    if samples.iter().all(|s| s.1 == 0.0) {
        return Err(Error::Degenerate("candidate density vanishes on the whole Haar grid"));
    }
    let mean = samples.iter().map(|s| s.1).sum::<f64>() / samples.len() as f64;
    let flatness = samples
        .iter()
        .map(|s| ((s.1 - mean) / mean).abs())
        .fold(0.0, f64::max);
    Ok(HaarProfile { samples, flatness })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Passes,
    FailsScaling,
    FailsNormalization,
    FailsBoth,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Passes => "passes",
            Verdict::FailsScaling => "fails_scaling",
            Verdict::FailsNormalization => "fails_normalization",
            Verdict::FailsBoth => "fails_both",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AxiomReport {
    pub label: String,
    pub x: f64,
    pub scaling_residual: f64,
    pub gaussian_residual: f64,
    pub haar_flatness: f64,
    pub skipped_probes: usize,
    pub verdict: Verdict,
}

/// Run all three diagnostics with default dilations, probes and grid.
///
/// Scaling fails when either the dilation residual or the Haar flatness
/// exceeds `tolerance`; normalization fails when the Gaussian residual does.
pub fn evaluate_candidate(
    w: &CandidateDensity,
    x: Dimension,
    tolerance: f64,
    cfg: &QuadratureConfig,
) -> Result<AxiomReport> {
    let scaling = check_scaling_covariance(w, x, &DEFAULT_LAMBDAS, &default_probes(), cfg)?;
    let gaussian_residual = check_gaussian_normalization(w, x, cfg)?;
    let haar = haar_profile(w, x, &default_haar_grid())?;
    let scaling_ok = scaling.residual <= tolerance && haar.flatness <= tolerance;
    let gauss_ok = gaussian_residual <= tolerance;
    let verdict = match (scaling_ok, gauss_ok) {
        (true, true) => Verdict::Passes,
        (false, true) => Verdict::FailsScaling,
        (true, false) => Verdict::FailsNormalization,
        (false, false) => Verdict::FailsBoth,
    };
    Ok(AxiomReport {
        label: w.label.clone(),
        x: x.get(),
        scaling_residual: scaling.residual,
        gaussian_residual,
        haar_flatness: haar.flatness,
        skipped_probes: scaling.skipped_probes,
        verdict,
    })
}

/// A positive linear functional on test functions.
pub trait RadialFunctional {
    fn apply(&self, phi: &TestFunction) -> Result<f64>;
}

/// `𝓘_x` itself.
#[derive(Debug, Clone, Copy)]
pub struct ClassifiedFunctional {
    pub dim: Dimension,
    pub cfg: QuadratureConfig,
}

impl RadialFunctional for ClassifiedFunctional {
    fn apply(&self, phi: &TestFunction) -> Result<f64> {
        Ok(radial::integrate_functional(self.dim, phi, &self.cfg)?.value)
    }
}

/// `φ ↦ ∫ φ w`.
#[derive(Debug, Clone)]
pub struct DensityFunctional {
    pub density: CandidateDensity,
    pub cfg: QuadratureConfig,
}

impl RadialFunctional for DensityFunctional {
    fn apply(&self, phi: &TestFunction) -> Result<f64> {
        Ok(pair_with_density(&self.density, phi, &self.cfg)?.value)
    }
}

/// `c · I`.
#[derive(Debug, Clone)]
pub struct ScaledFunctional<F> {
    pub factor: f64,
    pub inner: F,
}

impl<F: RadialFunctional> RadialFunctional for ScaledFunctional<F> {
    fn apply(&self, phi: &TestFunction) -> Result<f64> {
        Ok(self.factor * self.inner.apply(phi)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reconstruction {
    /// Estimated scaling degree `a`; `x/2` for `𝓘_x`.
    pub degree: f64,
    /// Estimated constant `C`; `C(x)` for `𝓘_x`.
    pub constant: f64,
    /// Largest deviation of the dilation response from the fitted line.
    pub fit_residual: f64,
}

/// Recover `(a, C)` from a black-box functional: `a` is the least-squares
/// slope of `−ln(I(φ(λ·))/I(φ))` against `ln λ`, and `C = I(e^{-u}) / Γ(a)`.
pub fn reconstruct<I: RadialFunctional + ?Sized>(
    functional: &I,
    probe: &TestFunction,
    lambdas: &[f64],
) -> Result<Reconstruction> {
    let mut logs: Vec<f64> = Vec::with_capacity(lambdas.len());
    for &l in lambdas {
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::domain("dilation factor", l));
        }
        if l != 1.0 && !logs.iter().any(|&q| q == log(l)) {
            logs.push(log(l));
        }
    }
    if logs.len() < 2 {
        return Err(Error::InvalidArgument("reconstruction needs at least two distinct dilations besides 1"));
    }
    let base = functional.apply(probe)?;
    if !(base > 0.0) {
        return Err(Error::Degenerate("probe has non-positive functional value"));
    }
    let mut responses = Vec::with_capacity(logs.len());
    for &ll in &logs {
        let v = functional.apply(&probe.dilate(exp(ll))?)?;
        if !(v > 0.0) {
            return Err(Error::Degenerate("dilated probe has non-positive functional value"));
        }
        responses.push(-(log(v) - log(base)));
    }
    // Fit through the origin: the response at λ = 1 is zero by construction.
    let sxx: f64 = logs.iter().map(|l| l * l).sum();
    let sxy: f64 = logs.iter().zip(&responses).map(|(l, y)| l * y).sum();
    let degree = sxy / sxx;
    let fit_residual = logs
        .iter()
        .zip(&responses)
        .map(|(l, y)| (y - degree * l).abs())
        .fold(0.0, f64::max);
    if fit_residual > NONLINEARITY_TOLERANCE {
        return Err(Error::NotScalingCovariant { residual: fit_residual });
    }
    if !(degree > 0.0) {
        return Err(Error::Domain {
            what: "reconstructed degree",
            value: degree,
        });
    }
    let gaussian = functional.apply(&TestFunction::exponential(GAUSSIAN_CUTOFF)?)?;
    let constant = gaussian / gamma::gamma(degree)?;
    Ok(Reconstruction {
        degree,
        constant,
        fit_residual,
    })
}

/// Density of the Gamma(x/2, 1) law, `u^{x/2-1} e^{-u} / Γ(x/2)`.
pub fn gamma_law_density(x: Dimension, u: f64) -> Result<f64> {
    if !(u.is_finite() && u > 0.0) {
        return Err(Error::domain("gamma law argument", u));
    }
    let lg = gamma::ln_gamma(x.half())?;
    Ok(exp((x.half() - 1.0) * log(u) - u - lg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn dim(x: f64) -> Dimension {
        Dimension::new(x).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn classified_density_is_scaling_covariant() {
        let x = dim(3.0);
        let w = CandidateDensity::classified(x);
        let s = check_scaling_covariance(&w, x, &[0.5, 2.0, 10.0], &default_probes(), &cfg()).unwrap();
        assert!(s.residual < 1e-8, "{}", s.residual);
        assert_eq!(s.skipped_probes, 0);
    }

    #[test]
    fn power_law_is_covariant_for_any_constant() {
        for c in [0.01, 1.0, 42.0] {
            let w = CandidateDensity::power_law(c, 1.0);
            let s = check_scaling_covariance(&w, dim(2.0), &[0.3, 7.0], &default_probes(), &cfg()).unwrap();
            assert!(s.residual < 1e-8);
        }
    }

    #[test]
    fn exponential_density_fails_scaling() {
        let w = CandidateDensity::exponential();
        let probe = [TestFunction::log_bump(0.5, 2.0).unwrap()];
        let s = check_scaling_covariance(&w, dim(2.0), &[2.0], &probe, &cfg()).unwrap();
        assert!(s.residual > 0.1, "{}", s.residual);
        let report = evaluate_candidate(&w, dim(2.0), DEFAULT_VERDICT_TOLERANCE, &cfg()).unwrap();
        assert!(matches!(report.verdict, Verdict::FailsScaling | Verdict::FailsBoth));
    }

    #[test]
    fn zero_probe_is_skipped() {
        let w = CandidateDensity::new("zero below 20", |u| if u > 20.0 { 1.0 } else { 0.0 });
        let s = check_scaling_covariance(&w, dim(2.0), &[2.0], &default_probes(), &cfg()).unwrap();
        assert_eq!(s.skipped_probes, 5);
    }

    #[test]
    fn gaussian_normalization_examples() {
        for x in [0.5, 1.0, 4.0, 9.0] {
            let w = CandidateDensity::classified(dim(x));
            assert!(check_gaussian_normalization(&w, dim(x), &cfg()).unwrap() < 1e-9);
            let doubled = w.scaled(2.0);
            let r = check_gaussian_normalization(&doubled, dim(x), &cfg()).unwrap();
            assert!((r - 1.0).abs() < 1e-9);
        }
        let x = dim(3.0);
        let bare = CandidateDensity::power_law(1.0, 1.5);
        let expected = ((gamma::gamma(1.5).unwrap() - pow(PI, 1.5)) / pow(PI, 1.5)).abs();
        let r = check_gaussian_normalization(&bare, x, &cfg()).unwrap();
        assert!((r - expected).abs() < 1e-9);
    }

    #[test]
    fn gaussian_normalization_diverges_for_heavy_candidates() {
        let w = CandidateDensity::new("exp growth", |u| exp(2.0 * u));
        assert!(check_gaussian_normalization(&w, dim(2.0), &cfg()).is_err());
    }

    #[test]
    fn haar_profile_examples() {
        let x = dim(2.6);
        let flat = haar_profile(&CandidateDensity::classified(x), x, &default_haar_grid()).unwrap();
        assert!(flat.flatness < 1e-12);
        let c = radial::coefficient(x);
        assert!(flat.samples.iter().all(|s| ((s.1 - c) / c).abs() < 1e-13));

        let grid: Vec<f64> = (0..=120).map(|k| -5.0 + k as f64 / 12.0).collect();
        let wavy = haar_profile(&CandidateDensity::log_modulated(x, 0.5), x, &grid).unwrap();
        for &(t, g) in &wavy.samples {
            assert!((g - (1.0 + 0.5 * sin(t))).abs() < 1e-12);
        }
        assert!((wavy.flatness - 0.5).abs() < 1e-3);

        let mismatch = haar_profile(&CandidateDensity::classified(dim(2.0)), dim(3.0), &grid).unwrap();
        for &(t, g) in &mismatch.samples {
            assert!((g - PI * exp(-t / 2.0)).abs() < 1e-12 * g.max(1.0));
        }
        assert!(mismatch.flatness > 1.0);
    }

    #[test]
    fn haar_flatness_is_scale_free() {
        let x = dim(1.7);
        let w = CandidateDensity::log_modulated(x, 0.2);
        let a = haar_profile(&w, x, &default_haar_grid()).unwrap().flatness;
        let b = haar_profile(&w.scaled(37.0), x, &default_haar_grid()).unwrap().flatness;
        assert!((a - b).abs() < 1e-13);
    }

    #[test]
    fn haar_profile_degenerate() {
        let zero = CandidateDensity::new("zero", |_| 0.0);
        assert!(matches!(
            haar_profile(&zero, dim(2.0), &default_haar_grid()),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn reconstruct_classified() {
        let probe = TestFunction::log_bump(0.5, 2.0).unwrap();
        let i3 = ClassifiedFunctional { dim: dim(3.0), cfg: cfg() };
        let r = reconstruct(&i3, &probe, &[0.5, 1.0, 2.0, 4.0]).unwrap();
        assert!((r.degree - 1.5).abs() < 1e-6);
        let c3 = radial::coefficient(dim(3.0));
        assert!(((r.constant - c3) / c3).abs() < 1e-6);

        let twice = ScaledFunctional {
            factor: 2.0,
            inner: ClassifiedFunctional { dim: dim(2.0), cfg: cfg() },
        };
        let r = reconstruct(&twice, &probe, &[0.5, 1.0, 2.0, 4.0]).unwrap();
        assert!((r.degree - 1.0).abs() < 1e-6);
        assert!(((r.constant - 2.0 * PI) / (2.0 * PI)).abs() < 1e-6);
    }

    #[test]
    fn reconstruct_rejects_non_covariant() {
        let probe = TestFunction::log_bump(0.5, 2.0).unwrap();
        let f = DensityFunctional {
            density: CandidateDensity::exponential(),
            cfg: cfg(),
        };
        assert!(matches!(
            reconstruct(&f, &probe, &[0.5, 1.0, 2.0, 4.0]),
            Err(Error::NotScalingCovariant { .. })
        ));
        assert!(reconstruct(&f, &probe, &[1.0, 2.0]).is_err());
    }

    #[test]
    fn gamma_law_examples() {
        for u in [0.1, 1.0, 3.3] {
            assert!((gamma_law_density(dim(2.0), u).unwrap() - exp(-u)).abs() < 1e-15);
            assert!((gamma_law_density(dim(4.0), u).unwrap() - u * exp(-u)).abs() < 1e-15);
        }
        assert!(gamma_law_density(dim(2.0), 0.0).is_err());
    }

    #[test]
    fn gamma_law_normalized() {
        for n in 1..=10 {
            let x = dim(n as f64);
            let w = CandidateDensity::new("gamma law", move |u| gamma_law_density(x, u).unwrap_or(0.0));
            let mass = pair_with_density(&w, &TestFunction::indicator(0.0, 60.0).unwrap(), &cfg())
                .unwrap()
                .value;
            assert!((mass - 1.0).abs() < 1e-9, "x = {n}: {mass}");
        }
    }
}
