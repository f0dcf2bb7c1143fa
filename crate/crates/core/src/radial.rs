//! The radial measure `dμ_x(u) = C(x) u^{x/2-1} du` and its observables.
//!
//! Closed forms are evaluated in log space and exponentiated last, so that
//! `ln_ball_volume` stays finite for very large dimensions even when the
//! value itself underflows.

use alloc::sync::Arc;
use alloc::vec::Vec;

use libm::{exp, log, pow};

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::gamma::{self, GammaRatioQuery, PositiveReal};
use crate::math::{LN_PI, PI};
use crate::quadrature::{self, Quadrature, QuadratureConfig};

/// How regular a test function is; a hint for reporting, not for correctness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Smoothness {
    Continuous,
    Piecewise,
    SingularAtZero,
}

/// A black-box test function on `(support_lo, support_hi) ⊂ (0, ∞)`.
///
/// Evaluates to zero outside its support. Evaluators must be safe to call
/// from several threads at once.
#[derive(Clone)]
pub struct TestFunction {
    eval: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    support_lo: f64,
    support_hi: f64,
    smoothness: Smoothness,
    breakpoints: Vec<f64>,
}

impl core::fmt::Debug for TestFunction {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("TestFunction")
            .field("support_lo", &self.support_lo)
            .field("support_hi", &self.support_hi)
            .field("smoothness", &self.smoothness)
            .field("breakpoints", &self.breakpoints)
            .finish()
    }
}

impl TestFunction {
    pub fn new<F>(eval: F, support_lo: f64, support_hi: f64, smoothness: Smoothness) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(support_lo >= 0.0 && support_lo.is_finite()) {
            return Err(Error::domain("support_lo", support_lo));
        }
        if support_hi.is_nan() || !(support_lo < support_hi) {
            return Err(Error::domain("support_hi", support_hi));
        }
        Ok(TestFunction {
            eval: Arc::new(eval),
            support_lo,
            support_hi,
            smoothness,
            breakpoints: Vec::new(),
        })
    }

    /// Points inside the support where the function has a kink or jump.
    pub fn with_breakpoints(mut self, mut breakpoints: Vec<f64>) -> Self {
        breakpoints.retain(|&p| p > self.support_lo && p < self.support_hi);
        breakpoints.sort_by(f64::total_cmp);
        breakpoints.dedup();
        self.breakpoints = breakpoints;
        self
    }

    /// `𝟙_{(lo, hi)}`.
    pub fn indicator(lo: f64, hi: f64) -> Result<Self> {
        TestFunction::new(|_| 1.0, lo, hi, Smoothness::Piecewise)
    }

    /// `u^power · 𝟙_{(lo, hi)}`.
    pub fn monomial(power: f64, lo: f64, hi: f64) -> Result<Self> {
        TestFunction::new(move |u| pow(u, power), lo, hi, Smoothness::Piecewise)
    }

    /// `e^{-u}` on `(0, cutoff)`; pass `f64::INFINITY` for no truncation.
    pub fn exponential(cutoff: f64) -> Result<Self> {
        TestFunction::new(|u| exp(-u), 0.0, cutoff, Smoothness::Continuous)
    }

    /// Tent in `ln u`: 1 at the geometric mean of `lo` and `hi`, 0 at the ends.
    pub fn log_bump(lo: f64, hi: f64) -> Result<Self> {
        if !(lo > 0.0) {
            return Err(Error::domain("log_bump lower end", lo));
        }
        let (a, b) = (log(lo), log(hi));
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        Ok(TestFunction::new(
            move |u| (1.0 - (log(u) - mid).abs() / half).max(0.0),
            lo,
            hi,
            Smoothness::Continuous,
        )?
        .with_breakpoints(alloc::vec![exp(mid)]))
    }

    /// Linear interpolation through `(u, φ(u))` knots, zero outside the knot range.
    pub fn piecewise_linear(knots: &[(f64, f64)]) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::InvalidArgument("piecewise-linear function needs at least two knots"));
        }
        for w in knots.windows(2) {
            if !(w[0].0 < w[1].0) {
                return Err(Error::InvalidArgument("knot abscissae must be strictly increasing"));
            }
        }
        if knots.iter().any(|&(u, v)| !u.is_finite() || !v.is_finite()) {
            return Err(Error::InvalidArgument("knots must be finite"));
        }
        let table: Arc<[(f64, f64)]> = knots.into();
        let lo = knots[0].0;
        let hi = knots[knots.len() - 1].0;
        let interior = knots[1..knots.len() - 1].iter().map(|k| k.0).collect();
        let eval_table = Arc::clone(&table);
        Ok(TestFunction::new(
            move |u| interpolate(&eval_table, u),
            lo,
            hi,
            Smoothness::Piecewise,
        )?
        .with_breakpoints(interior))
    }

    /// `u ↦ φ(λ u)`; support and breakpoints shrink by `λ`.
    pub fn dilate(&self, lambda: f64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::domain("dilation factor", lambda));
        }
        let inner = Arc::clone(&self.eval);
        Ok(TestFunction {
            eval: Arc::new(move |u| inner(lambda * u)),
            support_lo: self.support_lo / lambda,
            support_hi: self.support_hi / lambda,
            smoothness: self.smoothness,
            breakpoints: self.breakpoints.iter().map(|p| p / lambda).collect(),
        })
    }

    #[inline]
    pub fn eval(&self, u: f64) -> f64 {
        if u > self.support_lo && u < self.support_hi {
            (self.eval)(u)
        } else {
            0.0
        }
    }

    pub fn support(&self) -> (f64, f64) {
        (self.support_lo, self.support_hi)
    }

    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }

    pub fn breakpoints(&self) -> &[f64] {
        &self.breakpoints
    }
}

fn interpolate(knots: &[(f64, f64)], u: f64) -> f64 {
    let idx = knots.partition_point(|k| k.0 <= u);
    if idx == 0 || idx == knots.len() && u > knots[knots.len() - 1].0 {
        return 0.0;
    }
    if idx == knots.len() {
        return knots[knots.len() - 1].1;
    }
    let (u0, v0) = knots[idx - 1];
    let (u1, v1) = knots[idx];
    v0 + (v1 - v0) * (u - u0) / (u1 - u0)
}

/// `∫ w(u) du` over `(lo, hi)`, in `t = ln u` when `cfg.log_substitution`.
///
/// `log_integrand(t)` must return `w(e^t) · e^t`; `integrand(u)` returns `w(u)`.
pub(crate) fn integrate_radial<L, U>(
    log_integrand: L,
    integrand: U,
    lo: f64,
    hi: f64,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Quadrature>
where
    L: Fn(f64) -> f64,
    U: Fn(f64) -> f64,
{
    if cfg.log_substitution {
        let t_lo = if lo > 0.0 { log(lo) } else { f64::NEG_INFINITY };
        let t_hi = if hi.is_finite() { log(hi) } else { f64::INFINITY };
        let t_bps: Vec<f64> = breakpoints.iter().map(|&p| log(p)).collect();
        quadrature::integrate_line(log_integrand, t_lo, t_hi, &t_bps, cfg)
    } else {
        quadrature::integrate_line(integrand, lo, hi, breakpoints, cfg)
    }
}

/// `∫_0^∞ φ(u) u^{s-1} du` via the configured route.
fn moment_integral(phi: &TestFunction, s: f64, cfg: &QuadratureConfig) -> Result<Quadrature> {
    let (lo, hi) = phi.support();
    integrate_radial(
        |t| phi.eval(exp(t)) * exp(s * t),
        |u| phi.eval(u) * pow(u, s - 1.0),
        lo,
        hi,
        phi.breakpoints(),
        cfg,
    )
}

/// `ln C(x) = (x/2) ln π - ln Γ(x/2)`.
pub fn ln_coefficient(x: Dimension) -> f64 {
    x.half() * LN_PI - half_positive(x).ln_gamma()
}

fn half_positive(x: Dimension) -> PositiveReal {
    PositiveReal::new(x.half()).expect("dimension is positive")
}

/// Largest integer dimension evaluated by exact products.
const EXACT_INTEGER_LIMIT: f64 = 100.0;

/// Exact-product parts for small integer `x`, from `Γ(n+1) = n!` and
/// `Γ(n+1/2) = √π (2n-1)!!/2^n`: returns `(P, V_den, C_den)` with
/// `V(x) = P / V_den` and `C(x) = P / C_den`.
fn integer_dimension_parts(x: f64) -> Option<(f64, f64, f64)> {
    if !(x == libm::trunc(x) && x <= EXACT_INTEGER_LIMIT) {
        return None;
    }
    let m = x as u32;
    let n = m / 2;
    let pi_n = pow(PI, n as f64);
    if m.is_multiple_of(2) {
        let fact_prev: f64 = (1..n).map(f64::from).product();
        Some((pi_n, fact_prev * f64::from(n), fact_prev))
    } else {
        // V = 2^{n+1} π^n / (2n+1)!!, C = 2^n π^n / (2n-1)!!
        let odd_prev: f64 = (0..n).map(|k| f64::from(2 * k + 1)).product();
        let top = libm::ldexp(pi_n, n as i32 + 1);
        Some((top, odd_prev * f64::from(2 * n + 1), 2.0 * odd_prev))
    }
}

/// `C(x) = π^{x/2} / Γ(x/2)`.
pub fn coefficient(x: Dimension) -> f64 {
    if let Some((top, _, den)) = integer_dimension_parts(x.get()) {
        return top / den;
    }
    exp(ln_coefficient(x))
}

/// `ln V(x) = (x/2) ln π - ln Γ(x/2 + 1)`.
pub fn ln_ball_volume(x: Dimension) -> f64 {
    let top = PositiveReal::new(x.half() + 1.0).expect("positive");
    x.half() * LN_PI - top.ln_gamma()
}

/// Volume of the unit ball in continuous dimension, `π^{x/2} / Γ(x/2 + 1)`.
pub fn ball_volume(x: Dimension) -> f64 {
    if let Some((top, den, _)) = integer_dimension_parts(x.get()) {
        return top / den;
    }
    exp(ln_ball_volume(x))
}

/// Area of the unit sphere, `2 C(x)`.
pub fn sphere_area(x: Dimension) -> f64 {
    2.0 * coefficient(x)
}

/// Density `C(x) u^{x/2-1}` of `μ_x`.
pub fn density(x: Dimension, u: f64) -> Result<f64> {
    if !(u.is_finite() && u > 0.0) {
        return Err(Error::domain("density argument", u));
    }
    Ok(exp(ln_coefficient(x) + (x.half() - 1.0) * log(u)))
}

/// `μ_x((0, a)) = a^{x/2} V(x)`.
pub fn sublevel_mass(a: f64, x: Dimension) -> Result<f64> {
    if !(a.is_finite() && a > 0.0) {
        return Err(Error::domain("sublevel level", a));
    }
    Ok(exp(x.half() * log(a) + ln_ball_volume(x)))
}

/// `M_q(x) = ∫ u^q e^{-u} dμ_x = π^{x/2} Γ(x/2 + q) / Γ(x/2)`.
pub fn gaussian_moment(q: f64, x: Dimension) -> Result<f64> {
    let query = GammaRatioQuery::new(x.half(), q)?;
    gamma::exp_checked(x.half() * LN_PI + gamma::ln_gamma_ratio(query))
}

/// `𝓘_x(φ) = C(x) ∫ φ(u) u^{x/2-1} du`.
pub fn integrate_functional(x: Dimension, phi: &TestFunction, cfg: &QuadratureConfig) -> Result<Quadrature> {
    Ok(moment_integral(phi, x.half(), cfg)?.scaled(coefficient(x)))
}

/// Mellin transform `𝓜[φ](s) = ∫ φ(u) u^{s-1} du` for real `s`.
pub fn mellin_transform(phi: &TestFunction, s: f64, cfg: &QuadratureConfig) -> Result<Quadrature> {
    if !s.is_finite() {
        return Err(Error::domain("Mellin exponent", s));
    }
    moment_integral(phi, s, cfg)
}

/// The measure `μ_x` as a value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialMeasure {
    dim: Dimension,
    coeff: f64,
}

impl RadialMeasure {
    pub fn new(dim: Dimension) -> Self {
        RadialMeasure {
            dim,
            coeff: coefficient(dim),
        }
    }

    pub fn dimension(&self) -> Dimension {
        self.dim
    }

    pub fn coefficient(&self) -> f64 {
        self.coeff
    }

    pub fn density(&self, u: f64) -> Result<f64> {
        density(self.dim, u)
    }

    pub fn integrate(&self, phi: &TestFunction, cfg: &QuadratureConfig) -> Result<Quadrature> {
        integrate_functional(self.dim, phi, cfg)
    }
}

/// One row of the volume table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VolumeRow {
    pub x: f64,
    pub volume: f64,
    pub coefficient: f64,
    pub omega: f64,
}

/// Rows at `x_lo, x_lo + step, …, ≤ x_hi`.
pub fn volume_table(x_lo: f64, x_hi: f64, step: f64) -> Result<Vec<VolumeRow>> {
    Dimension::new(x_lo)?;
    if !(x_hi.is_finite() && x_hi >= x_lo) {
        return Err(Error::domain("table upper end", x_hi));
    }
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::domain("table step", step));
    }
    let count = libm::floor((x_hi - x_lo) / step + 1e-9) as usize + 1;
    (0..count)
        .map(|k| {
            let x = Dimension::new(x_lo + k as f64 * step)?;
            Ok(VolumeRow {
                x: x.get(),
                volume: ball_volume(x),
                coefficient: coefficient(x),
                omega: sphere_area(x),
            })
        })
        .collect()
}
