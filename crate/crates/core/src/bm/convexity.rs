use alloc::vec::Vec;

use libm::log;

use crate::error::{Error, Result};

/// Slack allowed below zero for floating-point noise in second differences.
pub const CONVEXITY_TOLERANCE: f64 = -1e-10;

/// Positive samples on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl GridFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                found: values.len(),
            });
        }
        if grid.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::InvalidArgument("grid must be strictly increasing"));
        }
        if let Some(&bad) = values.iter().find(|v| !(v.is_finite() && **v > 0.0)) {
            return Err(Error::domain("grid function value", bad));
        }
        Ok(GridFunction { grid, values })
    }

    pub fn from_fn<F>(grid: Vec<f64>, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64>,
    {
        let values = grid.iter().map(|&r| f(r)).collect::<Result<Vec<_>>>()?;
        GridFunction::new(grid, values)
    }

    /// `lo, lo + step, …` up to and including `hi` (within rounding).
    pub fn uniform_grid(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
        if !(step > 0.0 && hi > lo && lo.is_finite() && hi.is_finite()) {
            return Err(Error::InvalidArgument("uniform grid needs lo < hi and step > 0"));
        }
        let count = libm::floor((hi - lo) / step + 1e-9) as usize + 1;
        Ok((0..count).map(|k| lo + k as f64 * step).collect())
    }

    pub fn grid(&self) -> &[f64] {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvexityReport {
    /// Smallest second divided difference of `ln G` (centered difference / step²
    /// on uniform grids).
    pub min_second_difference: f64,
    /// Grid point where the minimum occurs.
    pub location: f64,
}

impl ConvexityReport {
    pub fn is_convex(&self) -> bool {
        self.min_second_difference >= CONVEXITY_TOLERANCE
    }
}

/// Discrete log-convexity test of a positive grid function.
pub fn log_convexity_check(g: &GridFunction) -> Result<ConvexityReport> {
    if g.grid.len() < 3 {
        return Err(Error::Degenerate("log-convexity needs at least three grid points"));
    }
    let logs: Vec<f64> = g.values.iter().map(|&v| log(v)).collect();
    let mut report = ConvexityReport {
        min_second_difference: f64::INFINITY,
        location: f64::NAN,
    };
    for i in 1..g.grid.len() - 1 {
        let h1 = g.grid[i] - g.grid[i - 1];
        let h2 = g.grid[i + 1] - g.grid[i];
        let right = (logs[i + 1] - logs[i]) / h2;
        let left = (logs[i] - logs[i - 1]) / h1;
        let dd = 2.0 * (right - left) / (h1 + h2);
        if dd < report.min_second_difference {
            report = ConvexityReport {
                min_second_difference: dd,
                location: g.grid[i],
            };
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gamma::{gamma_ratio, GammaRatioQuery};
    use libm::exp;

    #[test]
    fn shifted_gamma_is_log_convex() {
        let grid = GridFunction::uniform_grid(0.0, 5.0, 0.1).unwrap();
        let g = GridFunction::from_fn(grid, |r| gamma_ratio(GammaRatioQuery::new(1.5, r)?)).unwrap();
        let report = log_convexity_check(&g).unwrap();
        assert!(report.min_second_difference >= CONVEXITY_TOLERANCE);
        assert!(report.is_convex());
    }

    #[test]
    fn gaussian_has_second_difference_two() {
        let grid = GridFunction::uniform_grid(-2.0, 2.0, 0.05).unwrap();
        let g = GridFunction::from_fn(grid, |r| Ok(exp(r * r))).unwrap();
        let report = log_convexity_check(&g).unwrap();
        assert!((report.min_second_difference - 2.0).abs() < 1e-9);
    }

    #[test]
    fn non_uniform_grid_uses_divided_differences() {
        let grid = alloc::vec![0.0, 0.1, 0.35, 0.4, 1.0, 1.7];
        let g = GridFunction::from_fn(grid, |r| Ok(exp(r * r))).unwrap();
        let report = log_convexity_check(&g).unwrap();
        assert!((report.min_second_difference - 2.0).abs() < 1e-9);
    }

    #[test]
    fn invalid_grids() {
        assert!(GridFunction::new(alloc::vec![0.0, 1.0], alloc::vec![1.0]).is_err());
        assert!(GridFunction::new(alloc::vec![0.0, 0.0, 1.0], alloc::vec![1.0; 3]).is_err());
        assert!(GridFunction::new(alloc::vec![0.0, 1.0, 2.0], alloc::vec![1.0, -1.0, 1.0]).is_err());
        let short = GridFunction::new(alloc::vec![0.0, 1.0], alloc::vec![1.0, 2.0]).unwrap();
        assert!(matches!(log_convexity_check(&short), Err(Error::Degenerate(_))));
    }
}
