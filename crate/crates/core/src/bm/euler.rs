use libm::{exp, floor, log, log1p};

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::math::{CompensatedSum, LN_PI};

/// Default number of Euler-product terms.
pub const DEFAULT_TERMS: u64 = 10_000;

/// `(x, a)` with `a = x/2 + 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BmProblem {
    x: Dimension,
    a: f64,
}

impl BmProblem {
    pub fn new(x: Dimension) -> Self {
        BmProblem {
            x,
            a: x.half() + 1.0,
        }
    }

    pub fn dimension(&self) -> Dimension {
        self.x
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    /// `ln H_a(r)` where `H_a(r) = G_x(r)`: exact recurrence on the integer
    /// part of `r`, extrapolated Euler product on the fractional part.
    fn ln_g(&self, r: f64, n: u64) -> f64 {
        let whole = floor(r);
        let frac = r - whole;
        let mut sum = CompensatedSum::default();
        let mut base = self.a;
        for _ in 0..whole as u64 {
            sum.add(log(base));
            base += 1.0;
        }
        if frac > 0.0 {
            sum.add(log(extrapolated_product(base, frac, n)));
        }
        sum.total()
    }
}

/// `n^r ∏_{k=0}^{n} (a+k)/(a+r+k)` as a running log-sum.
fn log_product(a: f64, r: f64, n: u64) -> f64 {
    let mut sum = CompensatedSum::default();
    for k in (0..=n).rev() {
        sum.add(-log1p(r / (a + k as f64)));
    }
    sum.add(r * log(n as f64));
    sum.total()
}

fn extrapolated_product(a: f64, r: f64, n: u64) -> f64 {
    2.0 * exp(log_product(a, r, 2 * n)) - exp(log_product(a, r, n))
}

fn validate(r: f64, n: u64) -> Result<()> {
    if !(r.is_finite() && r >= 0.0) {
        return Err(Error::domain("transport shift r", r));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("Euler product needs n >= 2"));
    }
    Ok(())
}

/// `T(x, r) = π^r / G_x(r)` with `G_x` built from `G(0) = 1`, the recurrence
/// and the Euler limit. Error `O(1/n²)` for fractional `r`, exact for integer `r`.
pub fn bm_transport(x: Dimension, r: f64, n: u64) -> Result<f64> {
    validate(r, n)?;
    let problem = BmProblem::new(x);
    let v = exp(r * LN_PI - problem.ln_g(r, n));
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Range {
            ln_value: r * LN_PI - problem.ln_g(r, n),
        })
    }
}

/// `|G(r+1) - (a+r) G(r)| / G(r+1)` with `G = π^r / bm_transport`.
pub fn bm_recurrence_residual(x: Dimension, r: f64, n: u64) -> Result<f64> {
    validate(r, n)?;
    let a = BmProblem::new(x).a();
    let g0 = exp(r * LN_PI) / bm_transport(x, r, n)?;
    let g1 = exp((r + 1.0) * LN_PI) / bm_transport(x, r + 1.0, n)?;
    Ok(((g1 - (a + r) * g0) / g1).abs())
}
