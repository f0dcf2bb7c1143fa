use alloc::vec;
use alloc::vec::Vec;

use libm::sqrt;

use super::gauge::{GaugeKind, HomogeneousGauge};
use super::rng::{Purpose, SampleStream};
use crate::error::{Error, Result};
use crate::gamma;
use crate::math::CompensatedSum;
use crate::quadrature::QuadratureConfig;
use crate::radial::{self, Smoothness, TestFunction};

/// Relative width of the shell next to the box faces counted as boundary hits.
const BOUNDARY_SHELL: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    /// Number of independent sample streams; fixed so results do not depend
    /// on the thread count.
    pub partitions: u64,
}

impl McConfig {
    pub fn new(samples: u64, seed: u64) -> Self {
        McConfig {
            samples,
            seed,
            partitions: 64,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidArgument("sample count must be positive"));
        }
        if self.partitions == 0 {
            return Err(Error::InvalidArgument("partition count must be positive"));
        }
        Ok(())
    }

    fn partition_size(&self, index: u64) -> u64 {
        let base = self.samples / self.partitions;
        base + u64::from(index < self.samples % self.partitions)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EstimateMethod {
    MonteCarlo,
    ClosedForm,
    /// Derived from other estimates by error propagation.
    Derived,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McDiagnostics {
    /// Inside-hits within a thin shell of the box faces.
    pub boundary_hits: u64,
    /// True if the box provably or empirically fails to contain the body.
    pub box_too_small: bool,
    /// Analytic bound on the mass outside the truncation box.
    pub tail_bound: f64,
    pub truncation_radius: f64,
}

impl Default for McDiagnostics {
    fn default() -> Self {
        McDiagnostics {
            boundary_hits: 0,
            box_too_small: false,
            tail_bound: 0.0,
            truncation_radius: 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub n_samples: u64,
    pub seed: u64,
    pub method: EstimateMethod,
    pub diagnostics: McDiagnostics,
}

#[derive(Debug, Clone, Copy, Default)]
struct Moments {
    sum: f64,
    sum_sq: f64,
    flagged: u64,
}

fn sample_partition<F>(half_widths: &[f64], cfg: &McConfig, purpose: Purpose, index: u64, f: &F) -> Moments
where
    F: Fn(&[f64]) -> (f64, bool),
{
    let mut stream = SampleStream::new(cfg.seed, purpose, index);
    let mut xi = vec![0.0; half_widths.len()];
    let mut sum = CompensatedSum::default();
    let mut sum_sq = CompensatedSum::default();
    let mut flagged = 0;
    for _ in 0..cfg.partition_size(index) {
        for (v, h) in xi.iter_mut().zip(half_widths) {
            *v = stream.symmetric(*h);
        }
        let (value, flag) = f(&xi);
        sum.add(value);
        sum_sq.add(value * value);
        flagged += u64::from(flag);
    }
    Moments {
        sum: sum.total(),
        sum_sq: sum_sq.total(),
        flagged,
    }
}

#[cfg(feature = "parallel")]
fn run_partitions<F>(half_widths: &[f64], cfg: &McConfig, purpose: Purpose, f: F) -> Vec<Moments>
where
    F: Fn(&[f64]) -> (f64, bool) + Sync,
{
    use rayon::prelude::*;
    (0..cfg.partitions)
        .into_par_iter()
        .map(|i| sample_partition(half_widths, cfg, purpose, i, &f))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn run_partitions<F>(half_widths: &[f64], cfg: &McConfig, purpose: Purpose, f: F) -> Vec<Moments>
where
    F: Fn(&[f64]) -> (f64, bool),
{
    (0..cfg.partitions)
        .map(|i| sample_partition(half_widths, cfg, purpose, i, &f))
        .collect()
}

/// Box-uniform sample mean of `f`, reduced over partitions in index order.
fn box_average<F>(half_widths: &[f64], cfg: &McConfig, purpose: Purpose, f: F) -> Moments
where
    F: Fn(&[f64]) -> (f64, bool) + Sync,
{
    let parts = run_partitions(half_widths, cfg, purpose, f);
    let mut sum = CompensatedSum::default();
    let mut sum_sq = CompensatedSum::default();
    let mut flagged = 0;
    for p in &parts {
        sum.add(p.sum);
        sum_sq.add(p.sum_sq);
        flagged += p.flagged;
    }
    Moments {
        sum: sum.total(),
        sum_sq: sum_sq.total(),
        flagged,
    }
}

fn check_box(gauge: &HomogeneousGauge, half_widths: &[f64]) -> Result<f64> {
    if half_widths.len() != gauge.dim() {
        return Err(Error::DimensionMismatch {
            expected: gauge.dim(),
            found: half_widths.len(),
        });
    }
    if let Some(&bad) = half_widths.iter().find(|h| !(h.is_finite() && **h > 0.0)) {
        return Err(Error::domain("box half-width", bad));
    }
    Ok(half_widths.iter().map(|h| 2.0 * h).product())
}

/// Box-uniform estimate of `∫_box g`, with sample-variance standard error.
fn box_integral<G>(gauge: &HomogeneousGauge, half_widths: &[f64], cfg: &McConfig, purpose: Purpose, g: G) -> Result<McEstimate>
where
    G: Fn(f64) -> f64 + Sync,
{
    cfg.validate()?;
    let volume = check_box(gauge, half_widths)?;
    let m = box_average(half_widths, cfg, purpose, |xi| (g(gauge.eval(xi)), false));
    let n = cfg.samples as f64;
    let mean = m.sum / n;
    let var = if cfg.samples > 1 {
        ((m.sum_sq - m.sum * mean) / (n - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(McEstimate {
        mean: volume * mean,
        std_error: volume * sqrt(var / n),
        n_samples: cfg.samples,
        seed: cfg.seed,
        method: EstimateMethod::MonteCarlo,
        diagnostics: McDiagnostics::default(),
    })
}

/// Hit-or-miss estimate of `m({P < 1})` from uniform samples in the box.
pub fn mc_ball_volume(gauge: &HomogeneousGauge, half_widths: &[f64], cfg: &McConfig) -> Result<McEstimate> {
    cfg.validate()?;
    let volume = check_box(gauge, half_widths)?;
    let near_face: Vec<f64> = half_widths.iter().map(|h| h * (1.0 - BOUNDARY_SHELL)).collect();
    let m = box_average(half_widths, cfg, Purpose::Volume, |xi| {
        if gauge.eval(xi) < 1.0 {
            let on_face = xi.iter().zip(&near_face).any(|(v, t)| v.abs() > *t);
            (1.0, on_face)
        } else {
            (0.0, false)
        }
    });
    let n = cfg.samples as f64;
    let p = m.sum / n;
    let boundary_min = gauge.boundary_min(half_widths);
    Ok(McEstimate {
        mean: volume * p,
        std_error: volume * sqrt(p * (1.0 - p) / n),
        n_samples: cfg.samples,
        seed: cfg.seed,
        method: EstimateMethod::MonteCarlo,
        diagnostics: McDiagnostics {
            boundary_hits: m.flagged,
            box_too_small: m.flagged > 0 || boundary_min < 1.0,
            ..McDiagnostics::default()
        },
    })
}

/// Options for [`mc_gauge_exponential`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentialOptions {
    /// Half-width of the truncation cube; chosen automatically when `None`.
    pub truncation_radius: Option<f64>,
    /// Admissible tail bound relative to the estimate.
    pub tail_rel_tol: f64,
    /// Use `∏ 2Γ(1 + 1/b_i)` for diagonal power gauges.
    pub closed_form: bool,
}

impl Default for ExponentialOptions {
    fn default() -> Self {
        ExponentialOptions {
            truncation_radius: None,
            tail_rel_tol: 1e-6,
            closed_form: true,
        }
    }
}

fn tail_quadrature() -> QuadratureConfig {
    QuadratureConfig {
        rel_tol: 1e-8,
        abs_tol: f64::MIN_POSITIVE,
        ..QuadratureConfig::default()
    }
}

/// `Γ(μ, m) / γ(μ, m)`: outside the sublevel `{P < m}` the gauge-exponential
/// integral carries at most this fraction of what lies inside.
///
/// Since `P ≥ m` off the cube whenever `m` is the minimum of `P` on the cube's
/// boundary (sublevels are star-shaped along dilation orbits), this ratio
/// times the in-cube estimate bounds the truncated mass.
pub fn tail_ratio(mu: f64, m: f64) -> Result<f64> {
    if !(mu > 0.0) {
        return Err(Error::domain("homogeneous order", mu));
    }
    if !(m > 0.0) {
        return Ok(f64::INFINITY);
    }
    if !m.is_finite() {
        return Ok(0.0);
    }
    let cfg = tail_quadrature();
    let upper_fn = TestFunction::new(|u| libm::exp(-u), m, f64::INFINITY, Smoothness::Continuous)?;
    let lower_fn = TestFunction::new(|u| libm::exp(-u), 0.0, m, Smoothness::Continuous)?;
    let upper = radial::mellin_transform(&upper_fn, mu, &cfg)?.value;
    let lower = radial::mellin_transform(&lower_fn, mu, &cfg)?.value;
    Ok(upper.max(0.0) / lower)
}

fn cube(d: usize, radius: f64) -> Vec<f64> {
    vec![radius; d]
}

/// Smallest cube half-width whose boundary minimum of `P` makes the tail
/// ratio at most `rel_tol`.
pub fn auto_truncation_radius(gauge: &HomogeneousGauge, rel_tol: f64) -> Result<f64> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::domain("tail tolerance", rel_tol));
    }
    let d = gauge.dim();
    let mu = gauge.mu();
    let ok = |r: f64| -> Result<bool> { Ok(tail_ratio(mu, gauge.boundary_min(&cube(d, r)))? <= rel_tol) };
    let mut hi = 1.0;
    let mut doublings = 0;
    while !ok(hi)? {
        hi *= 2.0;
        doublings += 1;
        if doublings > 60 {
            return Err(Error::Divergent {
                what: "gauge does not grow on expanding cubes",
            });
        }
    }
    let mut lo = hi / 2.0;
    if doublings == 0 {
        lo = 0.0;
    }
    for _ in 0..30 {
        let mid = 0.5 * (lo + hi);
        if mid > 0.0 && ok(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// `∫ e^{-P(ξ)} dξ` over `ℝ^d`.
///
/// Diagonal power gauges take the exact product path (`std_error = 0`) unless
/// `closed_form` is off; everything else is a truncated-cube Monte Carlo
/// estimate with an analytic tail bound in the diagnostics.
pub fn mc_gauge_exponential(gauge: &HomogeneousGauge, opts: &ExponentialOptions, cfg: &McConfig) -> Result<McEstimate> {
    cfg.validate()?;
    if opts.closed_form {
        if let (GaugeKind::DiagonalPower(_), Some(exact)) = (gauge.kind(), gauge.reference_exponential()) {
            return Ok(McEstimate {
                mean: exact,
                std_error: 0.0,
                n_samples: 1,
                seed: cfg.seed,
                method: EstimateMethod::ClosedForm,
                diagnostics: McDiagnostics::default(),
            });
        }
    }
    let radius = match opts.truncation_radius {
        Some(r) if !(r.is_finite() && r > 0.0) => return Err(Error::domain("truncation radius", r)),
        Some(r) => r,
        None => auto_truncation_radius(gauge, opts.tail_rel_tol)?,
    };
    let half_widths = cube(gauge.dim(), radius);
    let mut est = box_integral(gauge, &half_widths, cfg, Purpose::Exponential, |p| libm::exp(-p))?;
    let ratio = tail_ratio(gauge.mu(), gauge.boundary_min(&half_widths))?;
    let tail_bound = est.mean * ratio;
    if !(ratio <= opts.tail_rel_tol) {
        return Err(Error::Truncation {
            tail_bound,
            suggested_radius: auto_truncation_radius(gauge, opts.tail_rel_tol)?,
        });
    }
    est.diagnostics.tail_bound = tail_bound;
    est.diagnostics.truncation_radius = radius;
    Ok(est)
}

/// `σ_P(S_P) = ∫ e^{-P} / Γ(μ_P)`.
pub fn surface_mass(gauge: &HomogeneousGauge, opts: &ExponentialOptions, cfg: &McConfig) -> Result<McEstimate> {
    let exp_est = mc_gauge_exponential(gauge, opts, cfg)?;
    let g = gamma::gamma(gauge.mu())?;
    Ok(McEstimate {
        mean: exp_est.mean / g,
        std_error: exp_est.std_error / g,
        diagnostics: McDiagnostics {
            tail_bound: exp_est.diagnostics.tail_bound / g,
            ..exp_est.diagnostics
        },
        ..exp_est
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaIdentityReport {
    pub mu: f64,
    pub volume: McEstimate,
    pub exponential: McEstimate,
    /// `Ê / Γ(μ + 1)`, the volume predicted from the exponential integral.
    pub predicted_volume: f64,
    pub predicted_std_error: f64,
    /// `|m̂ − Ê/Γ(μ+1)|` over the combined standard error.
    pub z_score: f64,
    /// Same comparison through `σ̂_P(S_P) / μ`.
    pub z_score_surface: f64,
}

fn z_score(diff: f64, se: f64) -> f64 {
    if se > 0.0 {
        diff.abs() / se
    } else if diff == 0.0 {
        0.0
    } else {
        f64::INFINITY
    }
}

/// Compare the sublevel volume with the exponential integral through
/// `m(B_P) = Γ(μ_P + 1)^{-1} ∫ e^{-P}`.
pub fn gamma_identity_check(gauge: &HomogeneousGauge, opts: &ExponentialOptions, cfg: &McConfig) -> Result<GammaIdentityReport> {
    let vbox = gauge
        .volume_box()
        .ok_or(Error::InvalidArgument("gauge has no known bounding box for its unit sublevel"))?;
    let volume = mc_ball_volume(gauge, &vbox, cfg)?;
    let exponential = mc_gauge_exponential(gauge, opts, cfg)?;
    let mu = gauge.mu();
    let g1 = gamma::gamma(mu + 1.0)?;
    let predicted_volume = exponential.mean / g1;
    let predicted_std_error = exponential.std_error / g1;
    let combined = sqrt(volume.std_error * volume.std_error + predicted_std_error * predicted_std_error);
    let z = z_score(volume.mean - predicted_volume, combined);

    let g = gamma::gamma(mu)?;
    let via_surface = exponential.mean / g / mu;
    let via_surface_se = exponential.std_error / g / mu;
    let combined_s = sqrt(volume.std_error * volume.std_error + via_surface_se * via_surface_se);
    let z_s = z_score(volume.mean - via_surface, combined_s);
    Ok(GammaIdentityReport {
        mu,
        volume,
        exponential,
        predicted_volume,
        predicted_std_error,
        z_score: z,
        z_score_surface: z_s,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialReduction {
    pub lhs: McEstimate,
    pub rhs: f64,
    pub rhs_std_error: f64,
    pub z_score: f64,
}

/// Both sides of `∫ Φ(P(ξ)) dξ = σ_P(S_P) ∫ Φ(r) r^{μ_P − 1} dr`.
///
/// `Φ` must have bounded support so the ambient integral lives in a box.
pub fn radial_reduction(
    gauge: &HomogeneousGauge,
    phi: &TestFunction,
    quad: &QuadratureConfig,
    opts: &ExponentialOptions,
    cfg: &McConfig,
) -> Result<RadialReduction> {
    let (_, hi) = phi.support();
    if !hi.is_finite() {
        return Err(Error::InvalidArgument("radial profile must have bounded support"));
    }
    let half_widths = gauge
        .sublevel_box(hi)
        .ok_or(Error::InvalidArgument("gauge has no known bounding box for its sublevels"))?;
    let lhs = box_integral(gauge, &half_widths, cfg, Purpose::Reduction, |p| phi.eval(p))?;
    let (sigma, sigma_se) = match gauge.reference_exponential() {
        Some(exact) => (exact / gamma::gamma(gauge.mu())?, 0.0),
        None => {
            let s = surface_mass(gauge, opts, cfg)?;
            (s.mean, s.std_error)
        }
    };
    let radial_part = radial::mellin_transform(phi, gauge.mu(), quad)?.value;
    let rhs = sigma * radial_part;
    let rhs_std_error = sigma_se * radial_part.abs();
    let combined = sqrt(lhs.std_error * lhs.std_error + rhs_std_error * rhs_std_error);
    Ok(RadialReduction {
        lhs,
        rhs,
        rhs_std_error,
        z_score: z_score(lhs.mean - rhs, combined),
    })
}
