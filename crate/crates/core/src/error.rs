use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} out of domain: {value}")]
    Domain { what: &'static str, value: f64 },

    #[error("result overflows f64 (log value {ln_value})")]
    Range { ln_value: f64 },

    #[error("inadmissible shift pair {pair}: x = {x}, r = {r} (need x > 0 and x + 2r > 0)")]
    Inadmissible { pair: &'static str, x: f64, r: f64 },

    #[error("quadrature did not converge after {subdivisions} subdivisions: estimate {estimate}, error bound {error_bound}")]
    NoConvergence {
        estimate: f64,
        error_bound: f64,
        subdivisions: usize,
    },

    #[error("integral diverges or does not decay: {what}")]
    Divergent { what: &'static str },

    #[error("degenerate input: {0}")]
    Degenerate(&'static str),

    #[error("functional is not scaling covariant (log-linear fit residual {residual})")]
    NotScalingCovariant { residual: f64 },

    #[error("truncation tail bound {tail_bound} exceeds tolerance; try radius {suggested_radius}")]
    Truncation { tail_bound: f64, suggested_radius: f64 },

    #[error("gauge is not homogeneous for its generator (relative residual {residual})")]
    NotHomogeneous { residual: f64 },

    #[error("dilation generator has an eigenvalue with real part {min_real_part} <= 0")]
    NonPositiveSpectrum { min_real_part: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
}

impl Error {
    pub(crate) fn domain(what: &'static str, value: f64) -> Self {
        Error::Domain { what, value }
    }

    /// Short machine-readable tag, stable across releases.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::Range { .. } => "range",
            Error::Inadmissible { .. } => "inadmissible",
            Error::NoConvergence { .. } => "no_convergence",
            Error::Divergent { .. } => "divergent",
            Error::Degenerate(_) => "degenerate",
            Error::NotScalingCovariant { .. } => "not_scaling_covariant",
            Error::Truncation { .. } => "truncation",
            Error::NotHomogeneous { .. } => "not_homogeneous",
            Error::NonPositiveSpectrum { .. } => "non_positive_spectrum",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidArgument(_) => "invalid_argument",
        }
    }
}
