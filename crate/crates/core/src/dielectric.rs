//! Lorentz-oscillator dielectric function of the polariton medium.
//!
//! ```text
//! eps(w) = 1 + b * wT^2 / (wT^2 - (w + i*gamma)^2),     b = 4*pi*beta
//! ```
//!
//! The infinitesimal damping of the loss-less model is an explicit `gamma`.
//! Functions that need the loss-less limit (group velocity, resonance search)
//! evaluate with `gamma = 0` regardless of the medium's setting and say so.

use crate::error::{ensure, PolaritonError, Result};
use crate::C64;

/// Default numerical damping, in units of `omega_t`.
pub const DEFAULT_GAMMA: f64 = 1e-9;

/// The polariton medium: transverse frequency, coupling `4*pi*beta` and damping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumParams {
    omega_t: f64,
    beta4pi: f64,
    gamma: f64,
}

impl MediumParams {
    /// Medium with the default damping [`DEFAULT_GAMMA`]` * omega_t`.
    pub fn new(omega_t: f64, beta4pi: f64) -> Result<Self> {
        Self::with_gamma(omega_t, beta4pi, DEFAULT_GAMMA * omega_t)
    }

    pub fn with_gamma(omega_t: f64, beta4pi: f64, gamma: f64) -> Result<Self> {
        ensure(
            omega_t.is_finite() && omega_t > 0.0,
            "omega_t",
            omega_t,
            "must be > 0",
        )?;
        ensure(
            beta4pi.is_finite() && beta4pi >= 0.0,
            "beta4pi",
            beta4pi,
            "must be >= 0",
        )?;
        ensure(
            gamma.is_finite() && gamma >= 0.0,
            "gamma",
            gamma,
            "must be >= 0",
        )?;
        Ok(Self {
            omega_t,
            beta4pi,
            gamma,
        })
    }

    /// Medium whose Rabi coupling at `c|k| = omega_t` equals `rabi`,
    /// i.e. `4*pi*beta = 4 * rabi^2 / omega_t^2`.
    pub fn from_rabi(omega_t: f64, rabi: f64) -> Result<Self> {
        ensure(
            rabi.is_finite() && rabi >= 0.0,
            "rabi",
            rabi,
            "must be >= 0",
        )?;
        Self::new(omega_t, 4.0 * rabi * rabi / (omega_t * omega_t))
    }

    /// Empty medium (`eps = 1`) with unit transverse frequency.
    pub fn vacuum() -> Self {
        Self {
            omega_t: 1.0,
            beta4pi: 0.0,
            gamma: 0.0,
        }
    }

    pub fn omega_t(&self) -> f64 {
        self.omega_t
    }

    pub fn beta4pi(&self) -> f64 {
        self.beta4pi
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Copy of this medium with `gamma = 0`.
    pub fn lossless(&self) -> Self {
        Self {
            gamma: 0.0,
            ..*self
        }
    }

    /// Longitudinal frequency `omega_t * sqrt(1 + 4*pi*beta)`, the zero of `eps`.
    pub fn omega_l(&self) -> f64 {
        self.omega_t * (1.0 + self.beta4pi).sqrt()
    }

    /// Rabi coupling `omega_t * sqrt(4*pi*beta) / 2`.
    pub fn rabi(&self) -> f64 {
        self.omega_t * self.beta4pi.sqrt() / 2.0
    }

    pub fn is_empty(&self) -> bool {
        self.beta4pi == 0.0
    }

    /// True inside the closed stop band `[omega_t, omega_l]` (never for an empty medium).
    pub fn in_stop_band(&self, omega: f64) -> bool {
        !self.is_empty() && omega >= self.omega_t && omega <= self.omega_l()
    }

    pub(crate) fn check_propagating(&self, omega: f64) -> Result<()> {
        ensure(
            omega.is_finite() && omega > 0.0,
            "omega",
            omega,
            "must be > 0",
        )?;
        if self.in_stop_band(omega) {
            return Err(PolaritonError::StopBand {
                omega,
                omega_t: self.omega_t,
                omega_l: self.omega_l(),
            });
        }
        Ok(())
    }
}

/// Dielectric function at a complex frequency.
///
/// Hitting the pole exactly (`gamma = 0`, `omega = omega_t`) returns
/// `+inf + 0i`; callers treat that value as "infinite index".
pub fn epsilon(omega: C64, p: &MediumParams) -> C64 {
    if p.is_empty() {
        return C64::new(1.0, 0.0);
    }
    let shifted = omega + C64::new(0.0, p.gamma);
    let wt2 = p.omega_t * p.omega_t;
    let denom = C64::new(wt2, 0.0) - shifted * shifted;
    if denom.re == 0.0 && denom.im == 0.0 {
        return C64::new(f64::INFINITY, 0.0);
    }
    1.0 + p.beta4pi * wt2 / denom
}

/// Refractive index `sqrt(eps)` on the causal branch: `Im n >= 0`, and
/// `Re n >= 0` when `Im n = 0`.
pub fn refractive_index(omega: C64, p: &MediumParams) -> C64 {
    let eps = epsilon(omega, p);
    if eps.re.is_infinite() {
        return eps;
    }
    causal_sqrt(eps)
}

pub(crate) fn causal_sqrt(z: C64) -> C64 {
    let r = z.sqrt();
    if r.im < 0.0 || (r.im == 0.0 && r.re < 0.0) {
        -r
    } else {
        r
    }
}

/// Wavenumber `n(w) * w / c` inside the medium.
pub fn wavenumber(omega: C64, p: &MediumParams) -> C64 {
    let n = refractive_index(omega, p);
    if n.re.is_infinite() {
        return n;
    }
    n * omega
}

/// Loss-less (`gamma = 0`) real refractive index in a transparency window.
pub fn lossless_index(omega: f64, p: &MediumParams) -> Result<f64> {
    p.check_propagating(omega)?;
    Ok(refractive_index(C64::new(omega, 0.0), &p.lossless()).re)
}

/// Group velocity `d omega / d k` along the loss-less dispersion.
///
/// Uses the closed form
/// `v_g = c^2 k / w * (w^2/wT^2 - 1)^2 / ((w^2/wT^2 - 1)^2 + 4*pi*beta)`;
/// fails inside the stop band.
pub fn group_velocity(omega: f64, p: &MediumParams) -> Result<f64> {
    let n = lossless_index(omega, p)?;
    if p.is_empty() {
        return Ok(1.0);
    }
    let x = (omega / p.omega_t).powi(2);
    let d = (x - 1.0).powi(2);
    Ok(n * d / (d + p.beta4pi))
}

/// Group velocity of a branch point `(k, omega)` given directly.
///
/// Unlike [`group_velocity`] this does not reconstruct `k` from `n(omega)`,
/// so the flat excitation branch of an empty medium (`omega = omega_t`) gets
/// `0` instead of `c`.
pub fn branch_group_velocity(k: f64, omega: f64, p: &MediumParams) -> f64 {
    let x = (omega / p.omega_t).powi(2);
    let d = (x - 1.0).powi(2);
    let denom = d + p.beta4pi;
    if denom == 0.0 {
        return 0.0;
    }
    k / omega * d / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    fn medium(b: f64) -> MediumParams {
        MediumParams::with_gamma(1.0, b, 0.0).unwrap()
    }

    #[test]
    fn vacuum_limit() {
        let p = medium(0.0);
        for w in [0.1, 1.0, 3.7] {
            assert_eq!(epsilon(C64::new(w, 0.0), &p), C64::new(1.0, 0.0));
            assert_eq!(refractive_index(C64::new(w, 0.0), &p), C64::new(1.0, 0.0));
            assert_eq!(group_velocity(w, &p).unwrap(), 1.0);
        }
        let k = wavenumber(C64::new(1.0, 0.0), &p);
        assert!((k - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn static_limit_and_longitudinal_zero() {
        let p = medium(4.0);
        let eps0 = epsilon(C64::new(0.0, 0.0), &p);
        assert!((eps0.re - 5.0).abs() < 1e-15 && eps0.im == 0.0);
        assert!((eps0.re - (p.omega_l() / p.omega_t()).powi(2)).abs() < 1e-14);
        let n0 = refractive_index(C64::new(0.0, 0.0), &p);
        assert!((n0.re - 5f64.sqrt()).abs() < 1e-15);
        let at_l = epsilon(C64::new(p.omega_l(), 0.0), &p);
        assert!(at_l.norm() < 1e-14, "{at_l}");
    }

    #[test]
    fn pole_sentinel() {
        let p = medium(1.0);
        let e = epsilon(C64::new(1.0, 0.0), &p);
        assert!(e.re.is_infinite());
        assert!(refractive_index(C64::new(1.0, 0.0), &p).re.is_infinite());
    }

    #[test]
    fn index_branch_rules() {
        let p = medium(4.0);
        // transparency windows: real, non-negative
        for w in [0.3, 0.99, 2.3, 4.0] {
            let n = refractive_index(C64::new(w, 0.0), &p);
            assert!(n.im == 0.0 && n.re >= 0.0, "w={w} n={n}");
        }
        // stop band: purely imaginary, decaying
        for w in [1.01, 1.5, 2.2] {
            let n = refractive_index(C64::new(w, 0.0), &p);
            assert!(n.re.abs() < 1e-15 && n.im > 0.0, "w={w} n={n}");
            let k = wavenumber(C64::new(w, 0.0), &p);
            assert!(k.re.abs() < 1e-15 && k.im > 0.0);
        }
        // the off-grid example point: n^2 = eps
        let w = C64::new(2f64.sqrt() * 1.2, 0.0);
        let n = refractive_index(w, &p);
        assert!((n * n - epsilon(w, &p)).norm() < 1e-14);
    }

    #[test]
    fn damping_gives_absorption() {
        let p = MediumParams::with_gamma(1.0, 2.0, 1e-3).unwrap();
        for w in [0.05, 0.5, 0.999, 1.0, 1.5, 3.0] {
            let e = epsilon(C64::new(w, 0.0), &p);
            assert!(e.im > 0.0, "w={w} eps={e}");
            let n = refractive_index(C64::new(w, 0.0), &p);
            assert!(n.im > 0.0);
        }
    }

    #[test]
    fn wavenumber_defining_identity() {
        let p = medium(4.0);
        for w in [0.2, 0.7, 2.5, 3.1] {
            let k = wavenumber(C64::new(w, 0.0), &p);
            let lhs = k * k / (w * w);
            assert!((lhs - epsilon(C64::new(w, 0.0), &p)).norm() < 1e-14);
        }
    }

    #[test]
    fn group_velocity_limits() {
        let p = medium(4.0);
        let v0 = group_velocity(1e-6, &p).unwrap();
        assert!((v0 - 1.0 / 5f64.sqrt()).abs() < 1e-9);
        let v_edge = group_velocity(1.0 - 1e-6, &p).unwrap();
        assert!(v_edge < 1e-5);
        assert!(matches!(
            group_velocity(1.5, &p),
            Err(PolaritonError::StopBand { .. })
        ));
        assert!(matches!(
            group_velocity(1.0, &p),
            Err(PolaritonError::StopBand { .. })
        ));
        assert!(matches!(
            group_velocity(p.omega_l(), &p),
            Err(PolaritonError::StopBand { .. })
        ));
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(MediumParams::new(0.0, 1.0).is_err());
        assert!(MediumParams::new(1.0, -1.0).is_err());
        assert!(MediumParams::with_gamma(1.0, 1.0, -1e-3).is_err());
        assert!(MediumParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn rabi_accessor_round_trip() {
        let p = MediumParams::from_rabi(2.0, 0.3).unwrap();
        assert!((p.rabi() - 0.3).abs() < 1e-15);
        assert!(p.omega_l() >= p.omega_t());
    }

    #[test]
    fn flat_branch_velocity_in_empty_medium() {
        let p = medium(0.0);
        assert_eq!(branch_group_velocity(0.5, 1.0, &p), 0.0);
        assert!((branch_group_velocity(0.5, 0.5, &p) - 1.0).abs() < 1e-15);
    }
}
