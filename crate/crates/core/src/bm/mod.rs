//! The Bohr-Mollerup route to the ball-volume transport.
//!
//! [`bm_transport`] recovers `T(x, r)` from the recurrence
//! `G(r + 1) = (a + r) G(r)` and the Euler-product limit alone; the
//! `euler` submodule does not depend on [`crate::gamma`], which makes
//! agreement with the closed form in [`crate::cocycle`] a genuine cross-check.

mod convexity;
mod counterexample;
mod euler;

pub use convexity::{log_convexity_check, ConvexityReport, GridFunction, CONVEXITY_TOLERANCE};
pub use counterexample::{counterexample_grid, interpolation_counterexample};
pub use euler::{bm_recurrence_residual, bm_transport, BmProblem, DEFAULT_TERMS};

#[cfg(test)]
mod tests {
    #[test]
    fn euler_route_is_gamma_free() {
        let src = include_str!("euler.rs");
        let code = src.split("#[cfg(test)]").next().unwrap();
        for forbidden in ["gamma::", "crate::gamma", "radial::", "cocycle::", "ln_gamma"] {
            assert!(!code.contains(forbidden), "euler.rs must not use `{forbidden}`");
        }
    }
}
