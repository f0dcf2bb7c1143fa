//! Counter-based sample streams.
//!
//! Each stream is ChaCha8 keyed by the user seed with the 64-bit stream id
//! selecting an independent keystream, so the k-th draw of a stream is a
//! pure function of `(seed, stream, k)` regardless of which thread draws it.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Stream-id namespaces so that different estimators never share draws.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub(crate) enum Purpose {
    Volume = 1,
    Exponential = 2,
    Reduction = 3,
    Homogeneity = 4,
    BoundaryScan = 5,
}

pub(crate) struct SampleStream {
    rng: ChaCha8Rng,
}

impl SampleStream {
    pub(crate) fn new(seed: u64, purpose: Purpose, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(((purpose as u64) << 48) | index);
        SampleStream { rng }
    }

    /// Uniform on `[0, 1)` with 53 random bits.
    #[inline]
    pub(crate) fn next_unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on `[-h, h)`.
    #[inline]
    pub(crate) fn symmetric(&mut self, half_width: f64) -> f64 {
        half_width * (2.0 * self.next_unit() - 1.0)
    }

    /// Log-uniform on `[lo, hi)`.
    pub(crate) fn log_uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let (a, b) = (libm::log(lo), libm::log(hi));
        libm::exp(a + (b - a) * self.next_unit())
    }
}
