//! Dimension-shift transports on `x ↦ x + 2r`.
//!
//! `R(x, r) = C(x+2r)/C(x)` transports the radial coefficient and
//! `T(x, r) = V(x+2r)/V(x)` the ball volume. Both are evaluated from
//! log-Gamma differences rather than as quotients of `C` or `V`, so large
//! dimensions stay representable.

use libm::{exp, log};

use crate::dimension::Dimension;
use crate::error::{Error, Result};
use crate::gamma::{self, GammaRatioQuery};
use crate::math::{LN_PI, PI};
use crate::radial;

/// An admissible shift: `x > 0` and `x + 2r > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftPair {
    x: Dimension,
    r: f64,
}

impl ShiftPair {
    pub fn new(x: f64, r: f64) -> Result<Self> {
        Self::named("(x, r)", x, r)
    }

    fn named(pair: &'static str, x: f64, r: f64) -> Result<Self> {
        let dim = Dimension::new(x).map_err(|_| Error::Inadmissible { pair, x, r })?;
        if !(r.is_finite() && x + 2.0 * r > 0.0) {
            return Err(Error::Inadmissible { pair, x, r });
        }
        Ok(ShiftPair { x: dim, r })
    }

    pub fn x(&self) -> f64 {
        self.x.get()
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// The shifted dimension `x + 2r`.
    pub fn target(&self) -> f64 {
        self.x.get() + 2.0 * self.r
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CocycleKind {
    /// Radial-integration transport.
    R,
    /// Ball-volume transport.
    T,
    /// Sublevel transport `a^r T(x, r)`.
    Ta(f64),
}

impl CocycleKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CocycleKind::Ta(a) if !(a.is_finite() && a > 0.0) => Err(Error::domain("sublevel level a", a)),
            _ => Ok(()),
        }
    }

    pub fn ln_value(&self, p: &ShiftPair) -> Result<f64> {
        self.validate()?;
        Ok(match *self {
            CocycleKind::R => ln_transport_r(p),
            CocycleKind::T => ln_transport_t(p),
            CocycleKind::Ta(a) => p.r * log(a) + ln_transport_t(p),
        })
    }

    pub fn value(&self, p: &ShiftPair) -> Result<f64> {
        gamma::exp_checked(self.ln_value(p)?)
    }
}

fn ratio_query(base: f64, shift: f64) -> GammaRatioQuery {
    GammaRatioQuery::new(base, shift).expect("admissible pair gives positive Gamma arguments")
}

fn ln_transport_r(p: &ShiftPair) -> f64 {
    // π^r Γ(x/2) / Γ(x/2 + r)
    p.r * LN_PI - gamma::ln_gamma_ratio(ratio_query(p.x.half(), p.r))
}

fn ln_transport_t(p: &ShiftPair) -> f64 {
    // π^r Γ(x/2 + 1) / Γ(x/2 + r + 1)
    p.r * LN_PI - gamma::ln_gamma_ratio(ratio_query(p.x.half() + 1.0, p.r))
}

/// `R(x, r) = π^r Γ(x/2) / Γ(x/2 + r)`.
pub fn transport_r(p: &ShiftPair) -> Result<f64> {
    CocycleKind::R.value(p)
}

/// `T(x, r) = π^r Γ(x/2 + 1) / Γ(x/2 + r + 1)`.
pub fn transport_t(p: &ShiftPair) -> Result<f64> {
    CocycleKind::T.value(p)
}

/// `T_a(x, r) = a^r T(x, r)`.
pub fn transport_ta(a: f64, p: &ShiftPair) -> Result<f64> {
    CocycleKind::Ta(a).value(p)
}

/// Relative defect of `F(x, r+s) = F(x+2r, s) F(x, r)`.
pub fn cocycle_residual(kind: CocycleKind, x: f64, r: f64, s: f64) -> Result<f64> {
    let first = ShiftPair::named("(x, r)", x, r)?;
    let second = ShiftPair::named("(x + 2r, s)", x + 2.0 * r, s)?;
    let whole = ShiftPair::named("(x, r + s)", x, r + s)?;
    let direct = kind.ln_value(&whole)?;
    let chained = kind.ln_value(&second)? + kind.ln_value(&first)?;
    // |e^a - e^b| / e^a computed without forming either exponential
    Ok((libm::expm1(chained - direct)).abs())
}

/// The coboundary `β(x+2r)/β(x)` of `β(x) = x`, i.e. `(x + 2r)/x = R/T`.
pub fn coboundary_ratio(p: &ShiftPair) -> f64 {
    p.target() / p.x()
}

/// Relative defect of `V(x+2) = 2π/(x+2) V(x)`.
pub fn recurrence_check(x: Dimension) -> f64 {
    let shifted = Dimension::new(x.get() + 2.0).expect("positive");
    let lhs = radial::ball_volume(shifted);
    let rhs = 2.0 * PI / (x.get() + 2.0) * radial::ball_volume(x);
    if lhs == 0.0 {
        // both underflow for huge x; compare in log space
        let d = radial::ln_ball_volume(shifted) - (log(2.0 * PI / (x.get() + 2.0)) + radial::ln_ball_volume(x));
        return exp(d.abs()) - 1.0;
    }
    ((lhs - rhs) / lhs).abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(x: f64, r: f64) -> ShiftPair {
        ShiftPair::new(x, r).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn admissibility() {
        assert!(ShiftPair::new(1.0, -0.5).is_err());
        assert!(ShiftPair::new(1.0, -0.49).is_ok());
        assert!(ShiftPair::new(0.0, 1.0).is_err());
        assert!(ShiftPair::new(1.0, f64::NAN).is_err());
    }

    #[test]
    fn transport_r_examples() {
        assert_eq!(transport_r(&pair(3.3, 0.0)).unwrap(), 1.0);
        assert!(rel(transport_r(&pair(2.0, 1.0)).unwrap(), PI) < 1e-15);
        assert!(rel(transport_r(&pair(1.0, 1.0)).unwrap(), 2.0 * PI) < 1e-15);
    }

    #[test]
    fn transport_t_examples() {
        for x in [0.3, 1.0, 4.5, 11.0] {
            assert!(rel(transport_t(&pair(x, 1.0)).unwrap(), 2.0 * PI / (x + 2.0)) < 1e-15);
            assert_eq!(transport_t(&pair(x, 0.0)).unwrap(), 1.0);
        }
        assert!(rel(transport_t(&pair(1.0, 1.0)).unwrap(), 2.0 * PI / 3.0) < 1e-15);
    }

    #[test]
    fn transport_ta_examples() {
        let p = pair(2.7, 0.6);
        assert!(rel(transport_ta(1.0, &p).unwrap(), transport_t(&p).unwrap()) < 1e-15);
        assert!(rel(transport_ta(4.0, &pair(2.0, 1.0)).unwrap(), 2.0 * PI) < 1e-15);
        assert_eq!(transport_ta(3.0, &pair(2.0, 0.0)).unwrap(), 1.0);
        assert!(transport_ta(0.0, &p).is_err());
    }

    #[test]
    fn cocycle_residual_examples() {
        for kind in [CocycleKind::R, CocycleKind::T, CocycleKind::Ta(2.5)] {
            assert!(cocycle_residual(kind, 2.2, 0.7, 0.0).unwrap() < 1e-15);
        }
        assert!(cocycle_residual(CocycleKind::T, 1.0, 1.0, 1.0).unwrap() < 1e-13);
        assert!(cocycle_residual(CocycleKind::R, 3.0, 0.7, -0.2).unwrap() < 1e-13);
    }

    #[test]
    fn cocycle_residual_names_inadmissible_pair() {
        match cocycle_residual(CocycleKind::R, 1.0, 1.0, -2.0) {
            Err(Error::Inadmissible { pair, .. }) => assert_eq!(pair, "(x + 2r, s)"),
            other => panic!("unexpected {other:?}"),
        }
        match cocycle_residual(CocycleKind::R, 1.0, -0.6, 1.0) {
            Err(Error::Inadmissible { pair, .. }) => assert_eq!(pair, "(x, r)"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn coboundary_examples() {
        assert_eq!(coboundary_ratio(&pair(4.2, 0.0)), 1.0);
        assert_eq!(coboundary_ratio(&pair(1.0, 1.0)), 3.0);
        assert_eq!(coboundary_ratio(&pair(2.0, -0.5)), 0.5);
        let p = pair(1.0, 1.0);
        let q = transport_r(&p).unwrap() / transport_t(&p).unwrap();
        assert!(rel(q, 3.0) < 1e-13);
    }

    #[test]
    fn recurrence_examples() {
        assert!(recurrence_check(Dimension::new(1.0).unwrap()) < 1e-14);
        assert!(recurrence_check(Dimension::new(2.0).unwrap()) < 1e-14);
        assert!(recurrence_check(Dimension::new(0.5).unwrap()) < 1e-13);
        assert!(recurrence_check(Dimension::new(900.0).unwrap()) < 1e-12);
    }
}
