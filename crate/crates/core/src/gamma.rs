//! Gamma function engine.
//!
//! `ln_gamma` is the production evaluator: a Lanczos approximation
//! (g = 7, 9 terms) away from the zeros of `ln Γ`, and the Taylor series of
//! `ln Γ(1 + ε)` near `x = 1` and `x = 2` so that the result keeps full
//! relative accuracy where `ln Γ` vanishes. Arguments below 1/2 are lifted
//! with `Γ(x) = Γ(x + 1) / x`; no reflection formula is used and the domain
//! is `x > 0`.
//!
//! `euler_limit_ratio` is an independent oracle for `Γ(a + r) / Γ(a)` built
//! from the Euler product alone.

use libm::{exp, log, log1p};

use crate::error::{Error, Result};
use crate::math::CompensatedSum;

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_8;
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `(-1)^k ζ(k) / k` for k = 2..=30.
const LN_GAMMA_1P_SERIES: [f64; 29] = [
    0.822_467_033_424_113_2,
    -0.400_685_634_386_531_4,
    0.270_580_808_427_784_55,
    -0.207_385_551_028_673_98,
    0.169_557_176_997_408_2,
    -0.144_049_896_768_846_1,
    0.125_509_669_524_743_05,
    -0.111_334_265_869_564_69,
    0.100_099_457_512_781_81,
    -0.090_954_017_145_829_04,
    0.083_353_840_546_109,
    -0.076_932_516_411_352_19,
    0.071_432_946_295_361_34,
    -0.066_668_705_882_420_47,
    0.062_500_955_141_213_04,
    -0.058_823_978_658_684_58,
    0.055_555_767_627_403_61,
    -0.052_631_679_379_616_66,
    0.050_000_047_698_101_69,
    -0.047_619_070_330_142_23,
    0.045_454_556_293_204_67,
    -0.043_478_266_053_040_26,
    0.041_666_669_150_341_21,
    -0.040_000_001_192_140_14,
    0.038_461_539_034_675_19,
    -0.037_037_037_312_989_33,
    0.035_714_285_847_333_36,
    -0.034_482_758_684_919_3,
    0.033_333_333_364_377_58,
];

/// Half-width of the windows around 1 and 2 where the series is used.
const SERIES_RADIUS: f64 = 0.25;

/// Largest `|shift|` handled by the exact recurrence in [`gamma_ratio`].
const SMALL_INTEGER_SHIFT: f64 = 32.0;

/// A strictly positive, finite real argument.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PositiveReal(f64);

impl PositiveReal {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(PositiveReal(value))
        } else {
            Err(Error::domain("gamma argument", value))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// `ln Γ(self)`; infallible because the argument is already validated.
    pub fn ln_gamma(self) -> f64 {
        ln_gamma_positive(self.0)
    }
}

impl TryFrom<f64> for PositiveReal {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        PositiveReal::new(value)
    }
}

/// A query for `Γ(base + shift) / Γ(base)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaRatioQuery {
    base: PositiveReal,
    shift: f64,
}

impl GammaRatioQuery {
    pub fn new(base: f64, shift: f64) -> Result<Self> {
        let base = PositiveReal::new(base)?;
        if !shift.is_finite() {
            return Err(Error::domain("gamma ratio shift", shift));
        }
        let top = base.get() + shift;
        if !(top > 0.0) {
            return Err(Error::domain("gamma ratio base + shift", top));
        }
        Ok(GammaRatioQuery { base, shift })
    }

    pub fn base(&self) -> f64 {
        self.base.get()
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }
}

fn ln_gamma_1p_series(eps: f64) -> f64 {
    let mut acc = 0.0;
    for &c in LN_GAMMA_1P_SERIES.iter().rev() {
        acc = acc * eps + c;
    }
    eps * (-EULER_GAMMA + eps * acc)
}

fn ln_gamma_lanczos(x: f64) -> f64 {
    let z = x - 1.0;
    let mut sum = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        sum += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_TWO_PI + (z + 0.5) * log(t) - t + log(sum)
}

fn ln_gamma_positive(x: f64) -> f64 {
    if x < 0.5 {
        return ln_gamma_positive(x + 1.0) - log(x);
    }
    let near_one = x - 1.0;
    if near_one.abs() <= SERIES_RADIUS {
        return ln_gamma_1p_series(near_one);
    }
    let near_two = x - 2.0;
    if near_two.abs() <= SERIES_RADIUS {
        return log1p(near_two) + ln_gamma_1p_series(near_two);
    }
    ln_gamma_lanczos(x)
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    Ok(PositiveReal::new(x)?.ln_gamma())
}

/// `Γ(x)` for `x > 0`; fails with [`Error::Range`] when the value overflows.
pub fn gamma(x: f64) -> Result<f64> {
    let lg = ln_gamma(x)?;
    exp_checked(lg)
}

pub(crate) fn exp_checked(ln_value: f64) -> Result<f64> {
    let v = exp(ln_value);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range { ln_value })
    }
}

fn small_integer_shift(shift: f64) -> Option<i32> {
    if shift.abs() <= SMALL_INTEGER_SHIFT && shift == libm::trunc(shift) {
        Some(shift as i32)
    } else {
        None
    }
}

/// `ln(Γ(base + shift) / Γ(base))`.
pub fn ln_gamma_ratio(q: GammaRatioQuery) -> f64 {
    let base = q.base();
    match small_integer_shift(q.shift) {
        Some(n) => log(rising_product(base, n)),
        None => ln_gamma_positive(base + q.shift) - ln_gamma_positive(base),
    }
}

/// Exact `Γ(base + n) / Γ(base)` for a small integer `n`.
fn rising_product(base: f64, n: i32) -> f64 {
    if n >= 0 {
        (0..n).fold(1.0, |acc, k| acc * (base + k as f64))
    } else {
        1.0 / (1..=-n).fold(1.0, |acc, k| acc * (base - k as f64))
    }
}

/// `Γ(base + shift) / Γ(base)`, evaluated in log space.
pub fn gamma_ratio(q: GammaRatioQuery) -> Result<f64> {
    if let Some(n) = small_integer_shift(q.shift) {
        let v = rising_product(q.base(), n);
        return if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::Range {
                ln_value: ln_gamma_ratio(q),
            })
        };
    }
    exp_checked(ln_gamma_ratio(q))
}

fn validate_euler(a: f64, r: f64, n: u64) -> Result<()> {
    PositiveReal::new(a)?;
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::domain("euler limit shift", r));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("euler limit needs n >= 1"));
    }
    Ok(())
}

fn euler_log_product(a: f64, r: f64, n: u64) -> f64 {
    // r ln n + Σ_{k=0}^{n} ln((a+k)/(a+r+k)), smallest terms first
    let mut sum = CompensatedSum::default();
    for k in (0..=n).rev() {
        sum.add(-log1p(r / (a + k as f64)));
    }
    sum.add(r * log(n as f64));
    sum.total()
}

/// Euler-product approximation `n^r ∏_{k=0}^{n} (a+k)/(a+r+k)` of
/// `Γ(a + r)/Γ(a)`, with error `O(1/n)`. Uses no Gamma evaluation.
pub fn euler_limit_ratio(a: f64, r: f64, n: u64) -> Result<f64> {
    validate_euler(a, r, n)?;
    if r == 0.0 {
        return Ok(1.0);
    }
    exp_checked(euler_log_product(a, r, n))
}

/// One Richardson step on [`euler_limit_ratio`]: `2 E(2n) - E(n)`, error `O(1/n²)`.
pub fn euler_limit_extrapolated(a: f64, r: f64, n: u64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument("extrapolated euler limit needs n >= 2"));
    }
    let coarse = euler_limit_ratio(a, r, n)?;
    let fine = euler_limit_ratio(a, r, 2 * n)?;
    Ok(2.0 * fine - coarse)
}
