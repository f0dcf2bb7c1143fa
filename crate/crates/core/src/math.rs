//! Small numeric helpers shared across modules.

use libm::{floor, sin};

pub(crate) const PI: f64 = core::f64::consts::PI;
pub(crate) const LN_PI: f64 = 1.144_729_885_849_400_2;

/// `sin(π z)` with exact zeros at the integers.
///
/// The argument is reduced modulo 2 before multiplying by π, so
/// `sin_pi(n) == 0.0` for every integer `n` representable in f64.
pub fn sin_pi(z: f64) -> f64 {
    if !z.is_finite() {
        return f64::NAN;
    }
    let reduced = z - 2.0 * floor(0.5 * z);
    // reduced in [0, 2)
    if reduced == 0.0 || reduced == 1.0 {
        return 0.0;
    }
    if reduced == 0.5 {
        return 1.0;
    }
    if reduced == 1.5 {
        return -1.0;
    }
    if reduced < 1.0 {
        sin(PI * if reduced > 0.5 { 1.0 - reduced } else { reduced })
    } else {
        let s = reduced - 1.0;
        -sin(PI * if s > 0.5 { 1.0 - s } else { s })
    }
}

/// Neumaier compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub(crate) fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.carry += (self.sum - t) + value;
        } else {
            self.carry += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.carry
    }
}
