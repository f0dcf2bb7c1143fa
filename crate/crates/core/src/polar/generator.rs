use alloc::vec::Vec;

use libm::{exp, log};
use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

/// Largest ambient dimension accepted by [`DilationGenerator::new`].
pub const DEFAULT_MAX_DIM: usize = 10;

/// Eigenvalues must have real part above this threshold.
const SPECTRUM_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone)]
enum Structure {
    Diagonal(Vec<f64>),
    Symmetric {
        eigenvalues: Vec<f64>,
        eigenvectors: DMatrix<f64>,
    },
    General,
}

/// Generator `E` of the dilation group `r^E = exp(E ln r)` on `ℝ^d`.
#[derive(Debug, Clone)]
pub struct DilationGenerator {
    matrix: DMatrix<f64>,
    structure: Structure,
}

impl DilationGenerator {
    /// Validate `E` (square, finite, spectrum in the open right half-plane,
    /// `d ≤ 10`) and pick the cheapest exact evaluation path for `r^E`.
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        Self::with_dim_limit(matrix, DEFAULT_MAX_DIM)
    }

    pub fn with_dim_limit(matrix: DMatrix<f64>, max_dim: usize) -> Result<Self> {
        let d = matrix.nrows();
        if d == 0 || matrix.ncols() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: matrix.ncols(),
            });
        }
        if d > max_dim {
            return Err(Error::InvalidArgument("ambient dimension exceeds the configured limit"));
        }
        if matrix.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("generator entries must be finite"));
        }
        let is_diagonal = (0..d).all(|i| (0..d).all(|j| i == j || matrix[(i, j)] == 0.0));
        let is_symmetric = (0..d).all(|i| (0..i).all(|j| matrix[(i, j)] == matrix[(j, i)]));

        let (structure, min_real) = if is_diagonal {
            let diag: Vec<f64> = (0..d).map(|i| matrix[(i, i)]).collect();
            let min = diag.iter().copied().fold(f64::INFINITY, f64::min);
            (Structure::Diagonal(diag), min)
        } else if is_symmetric {
            let eig = SymmetricEigen::new(matrix.clone());
            let eigenvalues: Vec<f64> = eig.eigenvalues.iter().copied().collect();
            let min = eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
            (
                Structure::Symmetric {
                    eigenvalues,
                    eigenvectors: eig.eigenvectors,
                },
                min,
            )
        } else {
            let min = matrix
                .clone()
                .complex_eigenvalues()
                .iter()
                .map(|z| z.re)
                .fold(f64::INFINITY, f64::min);
            (Structure::General, min)
        };
        if !(min_real > SPECTRUM_FLOOR) {
            return Err(Error::NonPositiveSpectrum { min_real_part: min_real });
        }
        if !(matrix.trace() > 0.0) {
            return Err(Error::NonPositiveSpectrum {
                min_real_part: matrix.trace(),
            });
        }
        Ok(DilationGenerator { matrix, structure })
    }

    pub fn identity(d: usize) -> Result<Self> {
        Self::new(DMatrix::identity(d, d))
    }

    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        Self::new(DMatrix::from_diagonal(&DVector::from_column_slice(entries)))
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Diagonal entries when `E` is diagonal.
    pub fn diagonal_entries(&self) -> Option<&[f64]> {
        match &self.structure {
            Structure::Diagonal(d) => Some(d),
            _ => None,
        }
    }

    /// `r^E` as a matrix.
    pub fn power(&self, r: f64) -> Result<DMatrix<f64>> {
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::domain("dilation radius", r));
        }
        let lr = log(r);
        Ok(match &self.structure {
            Structure::Diagonal(diag) => {
                DMatrix::from_diagonal(&DVector::from_iterator(diag.len(), diag.iter().map(|e| exp(e * lr))))
            }
            Structure::Symmetric {
                eigenvalues,
                eigenvectors,
            } => {
                let scale = DVector::from_iterator(eigenvalues.len(), eigenvalues.iter().map(|e| exp(e * lr)));
                eigenvectors * DMatrix::from_diagonal(&scale) * eigenvectors.transpose()
            }
            Structure::General => expm(&(&self.matrix * lr))?,
        })
    }

    /// `r^E ξ`.
    pub fn dilate(&self, r: f64, xi: &[f64]) -> Result<Vec<f64>> {
        if xi.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: xi.len(),
            });
        }
        if let Structure::Diagonal(diag) = &self.structure {
            if !(r.is_finite() && r > 0.0) {
                return Err(Error::domain("dilation radius", r));
            }
            let lr = log(r);
            return Ok(diag.iter().zip(xi).map(|(e, v)| exp(e * lr) * v).collect());
        }
        let m = self.power(r)?;
        Ok((m * DVector::from_column_slice(xi)).iter().copied().collect())
    }
}

/// Matrix exponential by scaling and squaring with a diagonal [6/6] Padé
/// approximant, accurate to a few ulps once `‖A‖₁ ≤ 1/2`.
fn expm(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let n = a.nrows();
    let norm = (0..n)
        .map(|j| (0..n).map(|i| a[(i, j)].abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.5 {
        scale *= 0.5;
        squarings += 1;
    }
    let x = a * scale;
    // c_k = (12 - k)! 6! / (12! k! (6 - k)!)
    let mut c = [1.0; 7];
    for k in 1..7 {
        c[k] = c[k - 1] * (7 - k) as f64 / (k as f64 * (13 - k) as f64);
    }
    let id = DMatrix::<f64>::identity(n, n);
    let mut power = id.clone();
    let mut num = id.clone() * c[0];
    let mut den = id.clone() * c[0];
    for (k, ck) in c.iter().enumerate().skip(1) {
        power = &power * &x;
        num += &power * *ck;
        if k % 2 == 0 {
            den += &power * *ck;
        } else {
            den -= &power * *ck;
        }
    }
    let mut result = den
        .lu()
        .solve(&num)
        .ok_or(Error::InvalidArgument("singular Pade denominator in matrix exponential"))?;
    for _ in 0..squarings {
        result = &result * &result;
    }
    Ok(result)
}

/// Homogeneous order `μ_P = tr(E)`.
pub fn trace_order(g: &DilationGenerator) -> f64 {
    g.matrix.trace()
}
