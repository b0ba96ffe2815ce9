//! Shared fixtures for the criterion benches.

use dtt_core::lcg::Lcg;

/// Deterministic benchmark signal of length `len`.
pub fn bench_signal(len: usize) -> Vec<f64> {
    Lcg::new(0xBE7C)
        .signal(len)
        .expect("len > 0")
        .values()
        .to_vec()
}
