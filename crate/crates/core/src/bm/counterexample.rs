use libm::exp;

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::math::{sin_pi, LN_PI};
use crate::radial::ball_volume;

use super::convexity::GridFunction;

/// `V(z) + ε sin(π z)`: agrees with the ball volume at every positive integer.
pub fn interpolation_counterexample(z: f64, epsilon: f64) -> Result<f64> {
    let dim = Dimension::new(z)?;
    if !epsilon.is_finite() {
        return Err(Error::domain("perturbation amplitude", epsilon));
    }
    Ok(ball_volume(dim) + epsilon * sin_pi(z))
}

/// `G(r) = π^r Ṽ(x) / Ṽ(x + 2r)` for the perturbed volume `Ṽ`, sampled on
/// a uniform grid over `[r_lo, r_hi]`.
pub fn counterexample_grid(x: Dimension, epsilon: f64, r_lo: f64, r_hi: f64, step: f64) -> Result<GridFunction> {
    let base = interpolation_counterexample(x.get(), epsilon)?;
    let grid = GridFunction::uniform_grid(r_lo, r_hi, step)?;
    GridFunction::from_fn(grid, |r| {
        let shifted = interpolation_counterexample(x.get() + 2.0 * r, epsilon)?;
        if !(shifted > 0.0 && base > 0.0) {
            return Err(Error::Degenerate("perturbed volume is not positive on the grid"));
        }
        Ok(exp(r * LN_PI) * base / shifted)
    })
}
