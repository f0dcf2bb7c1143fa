use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use libm::{pow, sqrt};

use super::generator::{trace_order, DilationGenerator};
use super::rng::{Purpose, SampleStream};
use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::gamma;
use crate::radial;

/// Relative tolerance of the homogeneity spot-check run at construction.
pub const HOMOGENEITY_TOLERANCE: f64 = 1e-9;

type Evaluator = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

const CONSTRUCTION_CHECKS: usize = 100;
const CONSTRUCTION_SEED: u64 = 0x05ee_d0f9_a06e;

/// Points sampled per box face when estimating the minimum of a custom gauge.
const FACE_SAMPLES: usize = 4096;

#[derive(Debug, Clone, PartialEq)]
pub enum GaugeKind {
    /// `P(ξ) = |ξ|`, `E = I`.
    Euclidean,
    /// `P(ξ) = Σ |ξ_i|^{b_i}`, `E = diag(1/b_i)`.
    DiagonalPower(Vec<f64>),
    Custom,
}

/// A degree-1 `E`-homogeneous gauge `P(r^E ξ) = r P(ξ)`.
#[derive(Clone)]
pub struct HomogeneousGauge {
    evaluator: Evaluator,
    generator: DilationGenerator,
    label: String,
    kind: GaugeKind,
    unit_box: Option<Vec<f64>>,
}

impl core::fmt::Debug for HomogeneousGauge {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("HomogeneousGauge")
            .field("label", &self.label)
            .field("kind", &self.kind)
            .field("dim", &self.dim())
            .finish()
    }
}

impl HomogeneousGauge {
    /// A caller-supplied gauge. Positivity and homogeneity are spot-checked on
    /// random pairs; regularity of the unit level set is taken on trust.
    pub fn custom<F>(label: impl Into<String>, generator: DilationGenerator, evaluator: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::build(label.into(), generator, Arc::new(evaluator), GaugeKind::Custom)
    }

    /// The Euclidean norm on `ℝ^d`.
    pub fn euclidean(d: usize) -> Result<Self> {
        let generator = DilationGenerator::identity(d)?;
        Self::build(
            alloc::format!("euclidean:{d}"),
            generator,
            Arc::new(|xi: &[f64]| sqrt(xi.iter().map(|v| v * v).sum())),
            GaugeKind::Euclidean,
        )
    }

    /// `P(ξ) = Σ |ξ_i|^{b_i}` with every `b_i ≥ 1`.
    pub fn diagonal_power(exponents: &[f64]) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidArgument("diagonal power gauge needs at least one exponent"));
        }
        if let Some(&bad) = exponents.iter().find(|b| !(b.is_finite() && **b >= 1.0)) {
            return Err(Error::domain("gauge exponent (need b >= 1)", bad));
        }
        let inverse: Vec<f64> = exponents.iter().map(|b| 1.0 / b).collect();
        let generator = DilationGenerator::diagonal(&inverse)?;
        let b: Arc<[f64]> = exponents.into();
        let eval_b = Arc::clone(&b);
        let label = alloc::format!(
            "diagpow:{}",
            exponents.iter().map(|v| alloc::format!("{v}")).collect::<Vec<_>>().join(",")
        );
        Self::build(
            label,
            generator,
            Arc::new(move |xi: &[f64]| xi.iter().zip(eval_b.iter()).map(|(v, e)| pow(v.abs(), *e)).sum()),
            GaugeKind::DiagonalPower(exponents.to_vec()),
        )
    }

    fn build(
        label: String,
        generator: DilationGenerator,
        evaluator: Evaluator,
        kind: GaugeKind,
    ) -> Result<Self> {
        let unit_box = match &kind {
            GaugeKind::Euclidean | GaugeKind::DiagonalPower(_) => Some(vec![1.0; generator.dim()]),
            GaugeKind::Custom => None,
        };
        let gauge = HomogeneousGauge {
            evaluator,
            generator,
            label,
            kind,
            unit_box,
        };
        let residual = gauge.homogeneity_residual(CONSTRUCTION_CHECKS, CONSTRUCTION_SEED)?;
        if !(residual < HOMOGENEITY_TOLERANCE) {
            return Err(Error::NotHomogeneous { residual });
        }
        Ok(gauge)
    }

    /// Declare half-widths of a box containing `B_P = {P < 1}` (custom gauges).
    pub fn with_unit_box(mut self, half_widths: Vec<f64>) -> Result<Self> {
        if half_widths.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: half_widths.len(),
            });
        }
        if let Some(&bad) = half_widths.iter().find(|h| !(h.is_finite() && **h > 0.0)) {
            return Err(Error::domain("box half-width", bad));
        }
        self.unit_box = Some(half_widths);
        Ok(self)
    }

    #[inline]
    pub fn eval(&self, xi: &[f64]) -> f64 {
        (self.evaluator)(xi)
    }

    pub fn dim(&self) -> usize {
        self.generator.dim()
    }

    /// `μ_P = tr(E)`.
    pub fn mu(&self) -> f64 {
        trace_order(&self.generator)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> &GaugeKind {
        &self.kind
    }

    pub fn generator(&self) -> &DilationGenerator {
        &self.generator
    }

    /// `max |P(r^E ξ) − r P(ξ)| / (r P(ξ))` over `samples` random pairs with
    /// `r` log-uniform on `[0.01, 100]` and `ξ` uniform in `[-1, 1]^d`.
    ///
    /// Also fails if `P` is negative or non-finite at a sampled point.
    pub fn homogeneity_residual(&self, samples: usize, seed: u64) -> Result<f64> {
        let d = self.dim();
        let mut stream = SampleStream::new(seed, Purpose::Homogeneity, 0);
        let mut xi = vec![0.0; d];
        let mut worst: f64 = 0.0;
        for _ in 0..samples {
            for v in xi.iter_mut() {
                *v = stream.symmetric(1.0);
            }
            let r = stream.log_uniform(0.01, 100.0);
            let p = self.eval(&xi);
            if !(p.is_finite() && p > 0.0) {
                return Err(Error::NotHomogeneous { residual: f64::INFINITY });
            }
            let moved = self.generator.dilate(r, &xi)?;
            let lhs = self.eval(&moved);
            worst = worst.max(((lhs - r * p) / (r * p)).abs());
        }
        Ok(worst)
    }

    /// Half-widths of a box containing `{P < level}`, when known.
    pub fn sublevel_box(&self, level: f64) -> Option<Vec<f64>> {
        if !(level.is_finite() && level > 0.0) {
            return None;
        }
        match &self.kind {
            GaugeKind::Euclidean => Some(vec![level; self.dim()]),
            GaugeKind::DiagonalPower(b) => Some(b.iter().map(|e| pow(level, 1.0 / e)).collect()),
            GaugeKind::Custom => {
                let unit = self.unit_box.as_ref()?;
                if level == 1.0 {
                    return Some(unit.clone());
                }
                let diag = self.generator.diagonal_entries()?;
                Some(unit.iter().zip(diag).map(|(h, e)| h * pow(level, *e)).collect())
            }
        }
    }

    /// Box used for volume estimation: the unit-sublevel box enlarged by 10%.
    pub fn volume_box(&self) -> Option<Vec<f64>> {
        self.sublevel_box(1.0)
            .map(|b| b.into_iter().map(|h| 1.1 * h).collect())
    }

    /// Minimum of `P` over the boundary of `∏[-h_i, h_i]`.
    ///
    /// Exact for the shipped gauges; for custom gauges a sampled estimate
    /// over each face, which can only over-estimate the true minimum.
    pub fn boundary_min(&self, half_widths: &[f64]) -> f64 {
        match &self.kind {
            GaugeKind::Euclidean => half_widths.iter().copied().fold(f64::INFINITY, f64::min),
            GaugeKind::DiagonalPower(b) => half_widths
                .iter()
                .zip(b)
                .map(|(h, e)| pow(*h, *e))
                .fold(f64::INFINITY, f64::min),
            GaugeKind::Custom => self.scan_faces(half_widths),
        }
    }

    fn scan_faces(&self, half_widths: &[f64]) -> f64 {
        let d = half_widths.len();
        let mut stream = SampleStream::new(CONSTRUCTION_SEED, Purpose::BoundaryScan, 0);
        let mut xi = vec![0.0; d];
        let mut best = f64::INFINITY;
        for face in 0..d {
            for sign in [-1.0, 1.0] {
                for _ in 0..FACE_SAMPLES {
                    for (i, v) in xi.iter_mut().enumerate() {
                        *v = if i == face {
                            sign * half_widths[i]
                        } else {
                            stream.symmetric(half_widths[i])
                        };
                    }
                    best = best.min(self.eval(&xi));
                }
            }
        }
        best
    }

    /// Exact `m(B_P)` for the shipped gauges.
    pub fn reference_volume(&self) -> Option<f64> {
        match &self.kind {
            GaugeKind::Euclidean => Some(radial::ball_volume(Dimension::new(self.dim() as f64).ok()?)),
            GaugeKind::DiagonalPower(b) => {
                let ln = b.iter().map(|e| gamma::ln_gamma(1.0 + 1.0 / e).ok()).sum::<Option<f64>>()?
                    + self.dim() as f64 * libm::log(2.0)
                    - gamma::ln_gamma(1.0 + self.mu()).ok()?;
                Some(libm::exp(ln))
            }
            GaugeKind::Custom => None,
        }
    }

    /// Exact `∫ e^{-P}` for the shipped gauges: `ω_{d-1} Γ(d)` for the
    /// Euclidean norm, `∏ 2Γ(1 + 1/b_i)` for diagonal powers.
    pub fn reference_exponential(&self) -> Option<f64> {
        match &self.kind {
            GaugeKind::Euclidean => {
                let d = self.dim() as f64;
                Some(radial::sphere_area(Dimension::new(d).ok()?) * gamma::gamma(d).ok()?)
            }
            GaugeKind::DiagonalPower(b) => b
                .iter()
                .map(|e| gamma::gamma(1.0 + 1.0 / e).ok().map(|g| 2.0 * g))
                .product(),
            GaugeKind::Custom => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;
    use nalgebra::DMatrix;

    #[test]
    fn euclidean_values() {
        assert_eq!(HomogeneousGauge::euclidean(1).unwrap().eval(&[-3.0]), 3.0);
        assert_eq!(HomogeneousGauge::euclidean(2).unwrap().eval(&[3.0, 4.0]), 5.0);
        let g3 = HomogeneousGauge::euclidean(3).unwrap();
        assert!((g3.eval(&[1.0, 2.0, 2.0]) - 3.0).abs() < 1e-15);
        assert_eq!(g3.mu(), 3.0);
    }

    #[test]
    fn diagonal_power_orders() {
        let g = HomogeneousGauge::diagonal_power(&[1.0]).unwrap();
        assert_eq!(g.eval(&[-2.0]), 2.0);
        assert_eq!(g.mu(), 1.0);
        let g = HomogeneousGauge::diagonal_power(&[2.0, 2.0]).unwrap();
        assert!((g.eval(&[3.0, 4.0]) - 25.0).abs() < 1e-12);
        assert_eq!(g.mu(), 1.0);
        assert_eq!(HomogeneousGauge::diagonal_power(&[2.0, 4.0]).unwrap().mu(), 0.75);
        assert!(HomogeneousGauge::diagonal_power(&[0.5]).is_err());
        assert!(HomogeneousGauge::diagonal_power(&[]).is_err());
    }

    #[test]
    fn shipped_gauges_are_homogeneous() {
        let gauges = [
            HomogeneousGauge::euclidean(1).unwrap(),
            HomogeneousGauge::euclidean(3).unwrap(),
            HomogeneousGauge::diagonal_power(&[2.0, 4.0]).unwrap(),
            HomogeneousGauge::diagonal_power(&[3.0, 3.0]).unwrap(),
            HomogeneousGauge::diagonal_power(&[1.0, 2.0, 4.0]).unwrap(),
        ];
        for g in &gauges {
            let r = g.homogeneity_residual(1000, 99).unwrap();
            assert!(r < 1e-9, "{}: {r}", g.label());
        }
    }

    #[test]
    fn non_homogeneous_custom_gauge_rejected() {
        let gen = DilationGenerator::identity(2).unwrap();
        let err = HomogeneousGauge::custom("squared norm with E=I", gen, |xi: &[f64]| xi[0] * xi[0] + xi[1] * xi[1])
            .unwrap_err();
        assert!(matches!(err, Error::NotHomogeneous { .. }));
    }

    #[test]
    fn custom_gauge_with_general_generator() {
        // P(ξ) = |A^{-1} ξ| is homogeneous for E = I in any linear frame.
        let gen = DilationGenerator::new(DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 1.0])).unwrap();
        let g = HomogeneousGauge::custom("skew norm", gen, |xi: &[f64]| {
            let (a, b) = (xi[0] - 0.5 * xi[1], xi[1]);
            sqrt(a * a + b * b)
        })
        .unwrap();
        assert!(g.sublevel_box(1.0).is_none());
        let g = g.with_unit_box(vec![1.2, 1.0]).unwrap();
        assert_eq!(g.sublevel_box(1.0).unwrap(), vec![1.2, 1.0]);
        let b = g.sublevel_box(3.0).unwrap();
        assert!((b[0] - 3.6).abs() < 1e-14 && (b[1] - 3.0).abs() < 1e-14);
        assert!(g.boundary_min(&[2.0, 2.0]) > 1.0);
    }

    #[test]
    fn references() {
        let g = HomogeneousGauge::euclidean(2).unwrap();
        assert!((g.reference_volume().unwrap() - PI).abs() < 1e-14);
        assert!((g.reference_exponential().unwrap() - 2.0 * PI).abs() < 1e-14);
        let g = HomogeneousGauge::diagonal_power(&[2.0, 4.0]).unwrap();
        let exact = 4.0 * gamma::gamma(1.5).unwrap() * gamma::gamma(1.25).unwrap();
        assert!((g.reference_exponential().unwrap() - exact).abs() < 1e-14);
        let vol = exact / gamma::gamma(1.75).unwrap();
        assert!((g.reference_volume().unwrap() - vol).abs() < 1e-13);
    }

    #[test]
    fn boxes() {
        let g = HomogeneousGauge::diagonal_power(&[2.0, 4.0]).unwrap();
        let b = g.sublevel_box(16.0).unwrap();
        assert!((b[0] - 4.0).abs() < 1e-15 && (b[1] - 2.0).abs() < 1e-15);
        assert_eq!(g.boundary_min(&[3.0, 2.0]), 9.0f64.min(16.0));
        assert_eq!(HomogeneousGauge::euclidean(3).unwrap().boundary_min(&[5.0, 4.0, 6.0]), 4.0);
    }
}
