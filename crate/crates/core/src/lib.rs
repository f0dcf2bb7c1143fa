//! Continuous-dimension radial integration.
//!
//! The crate evaluates the Mellin-Gamma measure family
//! `dμ_x(u) = π^{x/2}/Γ(x/2) · u^{x/2-1} du` on `(0, ∞)`, its scalar
//! observables (ball volume, sphere area, sublevel masses, Gaussian moments),
//! the two dimension-shift cocycles `R` and `T`, a Gamma-free Euler-limit route
//! to `T`, and Monte Carlo checks of the homogeneous polar-coordinate Gamma
//! identity `m(B_P) = Γ(μ_P + 1)^{-1} ∫ e^{-P}`.
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled. The `parallel` feature runs Monte Carlo partitions on rayon;
//! results are bitwise identical with or without it.

#![cfg_attr(not(feature = "std"), no_std)]
// NaN must fail validation, so `!(v > 0.0)` is intended.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

extern crate alloc;

pub mod axioms;
pub mod bm;
pub mod cocycle;
mod dimension;
mod error;
pub mod gamma;
mod math;
pub mod polar;
pub mod quadrature;
pub mod radial;

pub use dimension::Dimension;
pub use error::{Error, Result};
pub use math::sin_pi;
pub use quadrature::{Quadrature, QuadratureConfig};
pub use radial::{RadialMeasure, Smoothness, TestFunction};
