//! Adaptive Gauss-Kronrod (7/15) quadrature.
//!
//! Finite intervals are refined globally: the panel with the largest error
//! estimate is bisected until the total estimate meets the tolerance.
//! Infinite endpoints are handled by appending panels of doubling width
//! until two consecutive panels fall below the tolerance; the size of the
//! last panel is reported as `tail` and never silently dropped.

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// Maximum number of tail panels appended at an infinite endpoint.
const MAX_TAIL_PANELS: usize = 96;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    /// Integrate radial integrals in `t = ln u` instead of `u`.
    pub log_substitution: bool,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
            log_substitution: true,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(Error::InvalidArgument("quadrature tolerances must be positive"));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::InvalidArgument("max_subdivisions must be positive"));
        }
        Ok(())
    }

    pub fn with_log_substitution(mut self, on: bool) -> Self {
        self.log_substitution = on;
        self
    }

    fn target(&self, value: f64) -> f64 {
        self.abs_tol.max(self.rel_tol * value.abs())
    }
}

/// Outcome of a quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Estimated absolute error of the finite part.
    pub error: f64,
    /// Magnitude of the last panel added at an infinite endpoint (0 if none).
    pub tail: f64,
    pub subdivisions: usize,
}

impl Quadrature {
    /// Error estimate including the reported tail.
    pub fn total_error(&self) -> f64 {
        self.error + self.tail
    }

    pub(crate) fn scaled(self, factor: f64) -> Quadrature {
        Quadrature {
            value: self.value * factor,
            error: self.error * factor.abs(),
            tail: self.tail * factor.abs(),
            subdivisions: self.subdivisions,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    /// Rounding-error floor `50 ε ∫|f|` on this panel.
    floor: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = fc.abs() * WGK[7];
    let mut values = [(0.0f64, 0.0f64); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[j] = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    if !(kronrod.is_finite() && gauss.is_finite()) {
        return Err(Error::Divergent {
            what: "integrand is not finite on the integration range",
        });
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((values[j].0 - mean).abs() + (values[j].1 - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        let scale = libm::pow(200.0 * error / res_asc, 1.5);
        error = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(floor);
    }
    Ok(Panel {
        a,
        b,
        value,
        error,
        floor,
    })
}

/// Integrate `f` over the finite interval `[a, b]`, splitting first at every
/// breakpoint strictly inside it.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Quadrature> {
    integrate_with_target(&f, a, b, breakpoints, cfg, None)
}

fn integrate_with_target<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
    abs_floor: Option<f64>,
) -> Result<Quadrature> {
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidArgument("finite quadrature needs finite limits"));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            error: 0.0,
            tail: 0.0,
            subdivisions: 0,
        });
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };

    let mut cuts: Vec<f64> = breakpoints
        .iter()
        .copied()
        .filter(|&p| p > lo && p < hi)
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();

    let mut heap = BinaryHeap::new();
    let mut left = lo;
    for right in cuts.into_iter().chain(core::iter::once(hi)) {
        heap.push(gauss_kronrod(f, left, right)?);
        left = right;
    }

    let target = |value: f64| {
        let t = cfg.target(value);
        match abs_floor {
            Some(floor) => t.max(floor),
            None => t,
        }
    };

    let mut subdivisions = heap.len();
    loop {
        let (value, error, floor) = totals(&heap);
        // once every panel sits at its rounding floor, splitting cannot help
        if error <= target(value).max(floor) {
            return Ok(Quadrature {
                value: sign * value,
                error,
                tail: 0.0,
                subdivisions,
            });
        }
        if subdivisions >= cfg.max_subdivisions {
            return Err(Error::NoConvergence {
                estimate: sign * value,
                error_bound: error,
                subdivisions,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if !(mid > worst.a && mid < worst.b) {
            // Panel at floating-point resolution; its error cannot shrink further.
            return Err(Error::NoConvergence {
                estimate: sign * value,
                error_bound: error,
                subdivisions,
            });
        }
        heap.push(gauss_kronrod(f, worst.a, mid)?);
        heap.push(gauss_kronrod(f, mid, worst.b)?);
        subdivisions += 1;
    }
}

fn totals(heap: &BinaryHeap<Panel>) -> (f64, f64, f64) {
    let mut value = crate::math::CompensatedSum::default();
    let mut error = 0.0;
    let mut floor = 0.0;
    for p in heap.iter() {
        value.add(p.value);
        error += p.error;
        floor += p.floor;
    }
    (value.total(), error, floor)
}

/// Integrate over `[a, b]` where either end may be infinite.
///
/// The finite core spans the finite limits and breakpoints (a unit window
/// when there are none); tail panels then double in width outward.
pub fn integrate_line<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    breakpoints: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Quadrature> {
    if a.is_nan() || b.is_nan() || !(a < b) {
        return Err(Error::InvalidArgument("integration limits must satisfy a < b"));
    }
    if a.is_finite() && b.is_finite() {
        return integrate(f, a, b, breakpoints, cfg);
    }
    let finite_bps: Vec<f64> = breakpoints.iter().copied().filter(|p| p.is_finite()).collect();

    // Core segment: between the finite limits/breakpoints, or a unit window.
    let core_lo = if a.is_finite() {
        a
    } else {
        finite_bps
            .iter()
            .copied()
            .fold(if b.is_finite() { b - 1.0 } else { -1.0 }, f64::min)
    };
    let core_hi = if b.is_finite() {
        b
    } else {
        finite_bps
            .iter()
            .copied()
            .fold(if a.is_finite() { a + 1.0 } else { 1.0 }, f64::max)
    };
    let core_hi = if core_hi > core_lo { core_hi } else { core_lo + 1.0 };

    let core = integrate_with_target(&f, core_lo, core_hi, breakpoints, cfg, None)?;
    let mut value = core.value;
    let mut error = core.error;
    let mut subdivisions = core.subdivisions;
    let mut tail = 0.0f64;
    let width0 = (core_hi - core_lo).max(1.0);

    for direction in [1.0f64, -1.0] {
        let unbounded = if direction > 0.0 { !b.is_finite() } else { !a.is_finite() };
        if !unbounded {
            continue;
        }
        let mut edge = if direction > 0.0 { core_hi } else { core_lo };
        let mut width = width0;
        let mut quiet = 0;
        let mut converged = false;
        for _ in 0..MAX_TAIL_PANELS {
            let next = edge + direction * width;
            if !next.is_finite() {
                break;
            }
            let floor = 0.1 * cfg.target(value);
            let panel = integrate_with_target(&f, edge, next, breakpoints, cfg, Some(floor))?;
            let contribution = direction * panel.value;
            value += contribution;
            error += panel.error;
            subdivisions += panel.subdivisions;
            edge = next;
            width *= 2.0;
            if contribution.abs() + panel.error <= 0.1 * cfg.target(value) {
                quiet += 1;
                if quiet >= 2 {
                    tail = tail.max(contribution.abs());
                    converged = true;
                    break;
                }
            } else {
                quiet = 0;
            }
        }
        if !converged {
            return Err(Error::Divergent {
                what: "integrand does not decay at an infinite endpoint",
            });
        }
    }

    Ok(Quadrature {
        value,
        error,
        tail,
        subdivisions,
    })
}
