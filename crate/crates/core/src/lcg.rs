//! Deterministic test-signal generator.
//!
//! A plain 64-bit linear congruential generator, fixed here so that any
//! reimplementation produces identical signals:
//!
//! ```text
//! state <- state * 6364136223846793005 + 1442695040888963407   (mod 2^64)
//! sample = ((state >> 11) as f64) / 2^53 * 2 - 1                in [-1, 1)
//! ```
//!
//! The generator is stepped once per sample; a signal of length L
//! consumes L consecutive steps.

use crate::error::Result;
use crate::signal::Signal;

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

/// The linear congruential generator described in the module docs.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// Next sample in [-1, 1).
    pub fn next_sample(&mut self) -> f64 {
        let bits = self.next_u64() >> 11; // top 53 bits
        bits as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }

    /// A signal of `len` consecutive samples.
    pub fn signal(&mut self, len: usize) -> Result<Signal> {
        Signal::new((0..len).map(|_| self.next_sample()).collect())
    }
}

/// The fixed test signal used throughout the suites: signal `index`
/// (1-based) of length `len` is drawn from a fresh generator seeded
/// with `index`.
pub fn test_signal(index: u64, len: usize) -> Signal {
    Lcg::new(index).signal(len).expect("len > 0")
}
