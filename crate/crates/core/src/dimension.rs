use crate::error::{Error, Result};

/// A continuous dimension `x > 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Dimension(f64);

impl Dimension {
    pub fn new(x: f64) -> Result<Self> {
        if x.is_finite() && x > 0.0 {
            Ok(Dimension(x))
        } else {
            Err(Error::domain("dimension", x))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    /// The Mellin exponent `x/2` attached to this dimension.
    #[inline]
    pub fn half(self) -> f64 {
        0.5 * self.0
    }
}

impl TryFrom<f64> for Dimension {
    type Error = Error;

    fn try_from(x: f64) -> Result<Self> {
        Dimension::new(x)
    }
}

impl From<Dimension> for f64 {
    fn from(d: Dimension) -> f64 {
        d.0
    }
}
