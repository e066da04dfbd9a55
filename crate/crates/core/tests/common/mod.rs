//! Independent reference computations shared by the integration tests.

#![allow(dead_code)]

use std::time::{Duration, Instant};

use nalgebra::{Complex, Matrix4};
use polariton_core::hopfield::{bogoliubov_matrix, BogoliubovProblem};
use polariton_core::C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One positive-frequency eigenpair from the dense solver.
#[derive(Debug, Clone, Copy)]
pub struct DenseMode {
    pub omega: f64,
    pub vector: [C64; 4],
}

fn to_nalgebra(m: [[C64; 4]; 4]) -> Matrix4<Complex<f64>> {
    Matrix4::from_fn(|r, c| Complex::new(m[r][c].re, m[r][c].im))
}

/// All four eigenvalues of the Bogoliubov matrix from a complex Schur decomposition.
pub fn dense_eigenvalues(prob: &BogoliubovProblem) -> Vec<C64> {
    let schur = to_nalgebra(bogoliubov_matrix(prob)).schur();
    let vals = schur
        .eigenvalues()
        .expect("complex Schur form is triangular");
    let mut out: Vec<C64> = vals.iter().map(|z| C64::new(z.re, z.im)).collect();
    out.sort_by(|a, b| a.re.total_cmp(&b.re));
    out
}

/// Positive-frequency modes, bosonically normalized and rotated so the
/// photon amplitude is real and positive, sorted by frequency.
pub fn dense_modes(prob: &BogoliubovProblem) -> [DenseMode; 2] {
    let m = to_nalgebra(bogoliubov_matrix(prob));
    let eig = dense_eigenvalues(prob);
    let positive: Vec<f64> = eig.iter().filter(|z| z.re > 0.0).map(|z| z.re).collect();
    assert_eq!(positive.len(), 2, "spectrum {eig:?}");
    let mode = |omega: f64| {
        let shifted = m - Matrix4::identity() * Complex::new(omega, 0.0);
        let svd = shifted.svd(false, true);
        let v_t = svd.v_t.expect("requested V^T");
        let (k, _) = svd
            .singular_values
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .expect("four singular values");
        let raw: Vec<C64> = (0..4)
            .map(|c| {
                let z = v_t[(k, c)].conj();
                C64::new(z.re, z.im)
            })
            .collect();
        let norm = raw[0].norm_sqr() + raw[1].norm_sqr() - raw[2].norm_sqr() - raw[3].norm_sqr();
        assert!(norm > 0.0, "positive-frequency mode with negative norm");
        let phase = C64::from_polar(1.0, -raw[0].arg());
        let scale = phase / norm.sqrt();
        DenseMode {
            omega,
            vector: [
                raw[0] * scale,
                raw[1] * scale,
                raw[2] * scale,
                raw[3] * scale,
            ],
        }
    };
    [mode(positive[0]), mode(positive[1])]
}

/// Runs `f`, returning its value and the elapsed wall time.
pub fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// `count` evenly spaced points in `[start, stop]`.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    let step = (stop - start) / (count - 1) as f64;
    (0..count).map(|i| start + step * i as f64).collect()
}

/// Least-squares slope of `y` against `x`.
pub fn slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx).powi(2)).sum();
    sxy / sxx
}
