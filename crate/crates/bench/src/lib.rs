//! Shared fixtures for the criterion benchmarks.

use polariton_core::cavity::{self, CavityConfig};
use polariton_core::MediumParams;

pub const LAMBDA: f64 = 7.822;

/// Tuned cavity around a loss-less medium with Rabi coupling `rabi / omega_t`.
pub fn tuned_cavity(rabi: f64) -> CavityConfig {
    let medium = MediumParams::from_rabi(1.0, rabi)
        .expect("valid rabi")
        .lossless();
    let length = cavity::tuned_length(LAMBDA, &medium).expect("valid mirror");
    CavityConfig::new(length, LAMBDA, medium).expect("valid cavity")
}

/// `count` evenly spaced points in `[start, stop]`.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    let step = (stop - start) / (count - 1) as f64;
    (0..count).map(|i| start + step * i as f64).collect()
}
