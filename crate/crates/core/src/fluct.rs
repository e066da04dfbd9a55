//! Vacuum fluctuations of the electromagnetic field inside a dielectric.
//!
//! For a loss-less medium the equal-time commutator of each field mode at
//! wavenumber `q` differs from its vacuum value by a power of the index
//! `n(W_q)`, where `W_q n(W_q) = q`:
//!
//! | field | weight (natural units) | vacuum ratio |
//! |-------|------------------------|--------------|
//! | A     | `1 / (2 q n)`          | `n^-1`       |
//! | E     | `q / (2 n^3)`          | `n^-3`       |
//! | B     | `q / (2 n)`            | `n^-1`       |
//! | D     | `q n / 2`              | `n`          |
//!
//! With absorption the forward/backward propagating fields at different
//! positions stop commuting only over the decay length `1 / Im k`. Forward
//! and backward fields commute with each other for `z < z'` identically, so
//! no function is provided for that pair.

use std::f64::consts::PI;

use crate::cavity::bisect;
use crate::dielectric::{self, MediumParams};
use crate::error::{ensure, PolaritonError, Result};
use crate::{Branch, C64};

/// Equal-time commutator weights of one field mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldCommutators {
    pub omega_q: f64,
    pub index: f64,
    pub a_comm: f64,
    pub e_comm: f64,
    pub b_comm: f64,
    pub d_comm: f64,
}

/// Frequency `W_q` on `branch` with `n(W_q) W_q = q` (loss-less index).
///
/// In a non-empty medium both branches exist for every `q > 0`. In vacuum
/// the single solution `W_q = q` counts as `Lower` below `omega_t` and
/// `Upper` above it; `Bare` accepts it anywhere.
pub fn mode_frequency(q: f64, p: &MediumParams, branch: Branch) -> Result<f64> {
    ensure(q.is_finite() && q > 0.0, "q", q, "must be > 0")?;
    let wt = p.omega_t();
    let no_mode = || PolaritonError::NoModeOnBranch {
        branch,
        quantity: "q",
        value: q,
    };
    if p.is_empty() {
        return match branch {
            Branch::Bare => Ok(q),
            Branch::Lower if q < wt => Ok(q),
            Branch::Upper if q > wt => Ok(q),
            _ => Err(no_mode()),
        };
    }
    let lossless = p.lossless();
    let k = |w: f64| dielectric::refractive_index(C64::new(w, 0.0), &lossless).re * w - q;
    let tol = 1e-15 * wt;
    match branch {
        Branch::Lower => Ok(bisect(0.0, wt, tol, k)),
        Branch::Upper => {
            let lo = p.omega_l();
            let mut hi = 2.0 * lo.max(q);
            while k(hi) < 0.0 {
                hi *= 2.0;
            }
            Ok(bisect(lo, hi, tol * hi / wt, k))
        }
        Branch::Bare => Err(no_mode()),
    }
}

pub fn mode_commutators(q: f64, p: &MediumParams, branch: Branch) -> Result<FieldCommutators> {
    let omega_q = mode_frequency(q, p, branch)?;
    let n = dielectric::lossless_index(omega_q, p)?;
    Ok(FieldCommutators {
        omega_q,
        index: n,
        a_comm: 1.0 / (2.0 * q * n),
        e_comm: q / (2.0 * n.powi(3)),
        b_comm: q / (2.0 * n),
        d_comm: q * n / 2.0,
    })
}

fn kernel(omega: f64, p: &MediumParams, separation: f64, direction: f64) -> C64 {
    let w = C64::new(omega, 0.0);
    let n = dielectric::refractive_index(w, p);
    let k = n * omega;
    let weight = n.re / n.norm_sqr() / (4.0 * PI * omega);
    weight * C64::new(-k.im * separation.abs(), direction * k.re * separation).exp()
}

/// `[A_>^+(z, w), A_>^-(z', w)]` for the forward-propagating field.
pub fn forward_commutator_decay(z: f64, zprime: f64, omega: f64, p: &MediumParams) -> C64 {
    kernel(omega, p, z - zprime, 1.0)
}

/// `[A_<^+(z, w), A_<^-(z', w)]`; the complex conjugate of the forward kernel.
pub fn backward_commutator_decay(z: f64, zprime: f64, omega: f64, p: &MediumParams) -> C64 {
    kernel(omega, p, z - zprime, -1.0)
}

/// `1 / Im k(w)`, infinite without absorption.
pub fn decay_length(omega: f64, p: &MediumParams) -> f64 {
    let k = dielectric::wavenumber(C64::new(omega, 0.0), p);
    k.im.recip()
}
