//! Matrix dilation groups, homogeneous gauges and Monte Carlo checks of
//! `m({P < 1}) = Γ(μ_P + 1)^{-1} ∫ e^{-P}`.

mod gauge;
mod generator;
mod mc;
mod rng;

pub use gauge::{GaugeKind, HomogeneousGauge, HOMOGENEITY_TOLERANCE};
pub use generator::{trace_order, DilationGenerator, DEFAULT_MAX_DIM};
pub use mc::{
    auto_truncation_radius, gamma_identity_check, mc_ball_volume, mc_gauge_exponential, radial_reduction,
    surface_mass, tail_ratio, EstimateMethod, ExponentialOptions, GammaIdentityReport, McConfig, McDiagnostics,
    McEstimate, RadialReduction,
};
