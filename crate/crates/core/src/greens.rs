//! Scalar Green's function of the mirror-medium-mirror structure.
//!
//! `G(z, z', w)` solves
//!
//! ```text
//! -( d^2/dz^2 + w^2 eps(z, w) ) G = delta(z - z')
//! ```
//!
//! with `eps = eta(w) delta(z)` outside (`z <= 0`, region 1), the polariton
//! medium inside (`0 < z < L`, region 2) and `G = 0` at the perfect mirror
//! `z = L`. It is built from its own reflection and transmission
//! coefficients, which makes it an independent check on [`crate::cavity`].

use crate::cavity::CavityConfig;
use crate::dielectric;
use crate::error::{ensure, PolaritonError, Result};
use crate::C64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GreenCoefficients {
    /// reflection back into region 1
    pub g_r21: C64,
    /// transmission from region 1 into region 2
    pub g_t21: C64,
    /// transmission from region 2 into region 1
    pub g_t12: C64,
}

struct Terms {
    k0: C64,
    kp: C64,
    n: C64,
    lambda: C64,
    denom: C64,
    length: f64,
}

fn terms(omega: C64, cfg: &CavityConfig) -> Terms {
    let n = dielectric::refractive_index(omega, cfg.medium());
    let lambda = cfg.mirror().transparency(omega);
    let length = cfg.length();
    let kp = n * omega;
    let i = C64::i();
    let phi = kp * length;
    let denom = (1.0 - i * lambda) * phi.sin() + i * n * phi.cos();
    Terms {
        k0: omega,
        kp,
        n,
        lambda,
        denom,
        length,
    }
}

pub fn green_coefficients(omega: C64, cfg: &CavityConfig) -> GreenCoefficients {
    let t = terms(omega, cfg);
    let i = C64::i();
    let phi = t.kp * t.length;
    GreenCoefficients {
        g_r21: ((1.0 + i * t.lambda) * phi.sin() - i * t.n * phi.cos()) / t.denom,
        g_t21: 2.0 / t.denom,
        g_t12: 2.0 * t.n / t.denom,
    }
}

/// `G(z, z', w)` for `z, z' <= L`.
pub fn green_function(z: f64, zprime: f64, omega: C64, cfg: &CavityConfig) -> Result<C64> {
    let length = cfg.length();
    for p in [z, zprime] {
        if !(p.is_finite() && p <= length) {
            return Err(PolaritonError::OutOfDomain { z: p, length });
        }
    }
    let t = terms(omega, cfg);
    let coef = green_coefficients(omega, cfg);
    let i = C64::i();
    let (k0, kp) = (t.k0, t.kp);
    let standing = |x: f64| (kp * (length - x)).sin();

    let g = match (z <= 0.0, zprime <= 0.0) {
        (true, true) => {
            let direct = (i * k0 * (z - zprime).abs()).exp();
            let reflected = (-i * k0 * z).exp() * coef.g_r21 * (-i * k0 * zprime).exp();
            -(direct + reflected) / (2.0 * i * k0)
        }
        (false, true) => -standing(z) * coef.g_t21 * (-i * k0 * zprime).exp() / (2.0 * i * k0),
        (true, false) => -(-i * k0 * z).exp() * coef.g_t12 * standing(zprime) / (2.0 * i * kp),
        (false, false) => {
            let direct = (i * kp * (z - zprime).abs()).exp();
            let image = (-i * kp * (z - length)).exp() * (-i * kp * (zprime - length)).exp();
            let cavity = 2.0 * i * (i * kp * length).exp() * (1.0 - i * t.lambda - t.n) / t.denom
                * standing(z)
                * standing(zprime);
            -(direct - image + cavity) / (2.0 * i * kp)
        }
    };
    Ok(g)
}

/// Jump `dG/dz(z0+) - dG/dz(z0-)` from second-order one-sided differences.
///
/// Across the source (`z0 = z'`) the jump is `-1`; across the input mirror
/// (`z0 = 0`) it is `-w Lambda G(0, z')`.
pub fn derivative_jump(
    z0: f64,
    zprime: f64,
    omega: f64,
    cfg: &CavityConfig,
    h: f64,
) -> Result<C64> {
    ensure(h.is_finite() && h > 0.0, "h", h, "must be > 0")?;
    let w = C64::new(omega, 0.0);
    let g = |z: f64| green_function(z, zprime, w, cfg);
    let right = (-3.0 * g(z0)? + 4.0 * g(z0 + h)? - g(z0 + 2.0 * h)?) / (2.0 * h);
    let left = (3.0 * g(z0)? - 4.0 * g(z0 - h)? + g(z0 - 2.0 * h)?) / (2.0 * h);
    Ok(right - left)
}

/// Relative finite-difference residual of the defining wave equation.
///
/// Evaluates `G'' + w^2 eps G` by central differences on a grid of step `h`
/// over `[-2L, L]`, skipping points within `3h` of the source and of both
/// mirrors, and returns `max|G'' + w^2 eps G| / max|w^2 eps G|`.
pub fn ode_residual(zprime: f64, omega: f64, cfg: &CavityConfig, h: f64) -> Result<f64> {
    let length = cfg.length();
    ensure(
        omega.is_finite() && omega > 0.0,
        "omega",
        omega,
        "must be > 0",
    )?;
    ensure(h.is_finite() && h > 0.0, "h", h, "must be > 0")?;
    let w = C64::new(omega, 0.0);
    let eps_in = dielectric::epsilon(w, cfg.medium());
    let kp = dielectric::wavenumber(w, cfg.medium()).norm();
    let hk = h * kp.max(omega);
    if h > 1e-4 * length || hk > 0.1 {
        return Err(PolaritonError::StepTooLarge { step: h, hk });
    }
    let lo = -2.0 * length;
    let margin = 10.0 * h;
    if !(zprime > lo + margin && zprime < length - margin && zprime.abs() >= margin) {
        return Err(PolaritonError::InvalidParameter {
            name: "zprime",
            value: zprime,
            reason: "source must stay 10 steps away from the mirrors and the grid edge",
        });
    }

    let steps = ((length - lo) / h).floor() as usize;
    let values = (0..=steps)
        .map(|j| green_function(lo + h * j as f64, zprime, w, cfg))
        .collect::<Result<Vec<_>>>()?;
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for j in 1..steps {
        let z = lo + h * j as f64;
        if (z - zprime).abs() < 3.0 * h || z.abs() < 3.0 * h || (z - length).abs() < 3.0 * h {
            continue;
        }
        let center = values[j];
        let second = (values[j + 1] - 2.0 * center + values[j - 1]) / (h * h);
        let eps = if z <= 0.0 { C64::new(1.0, 0.0) } else { eps_in };
        let source = omega * omega * eps * center;
        worst = worst.max((second + source).norm());
        scale = scale.max(source.norm());
    }
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dielectric::MediumParams;
    use std::f64::consts::FRAC_PI_2;

    fn cfg(b: f64, lambda: f64) -> CavityConfig {
        CavityConfig::new(3.26875, lambda, MediumParams::new(1.0, b).unwrap()).unwrap()
    }

    #[test]
    fn open_mirror_quarter_wave() {
        // Lambda = 0, n = 1, kL = pi/2
        let c = CavityConfig::new(FRAC_PI_2, 0.0, MediumParams::vacuum()).unwrap();
        let g = green_coefficients(C64::new(1.0, 0.0), &c);
        assert!((g.g_r21 - C64::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn transmission_ratio_is_index() {
        let c = cfg(4.0, 7.822);
        for w in [0.3, 0.9, 1.5, 2.4] {
            let omega = C64::new(w, 0.0);
            let g = green_coefficients(omega, &c);
            let n = dielectric::refractive_index(omega, c.medium());
            assert!((g.g_t12 / g.g_t21 - n).norm() < 1e-14 * n.norm());
        }
    }

    #[test]
    fn vanishes_at_back_mirror() {
        let c = cfg(4.0, 7.822);
        let w = C64::new(0.7, 0.0);
        for zp in [-2.0, 0.5, 2.0] {
            assert!(green_function(c.length(), zp, w, &c).unwrap().norm() < 1e-14);
        }
        assert!(matches!(
            green_function(c.length() + 0.1, 0.3, w, &c),
            Err(PolaritonError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn continuous_at_input_mirror() {
        let c = cfg(2.0, 7.822);
        let w = C64::new(0.8, 0.0);
        for zp in [-1.3, 1.7] {
            let inside = green_function(1e-12, zp, w, &c).unwrap();
            let outside = green_function(0.0, zp, w, &c).unwrap();
            assert!((inside - outside).norm() < 1e-9 * outside.norm().max(1.0));
        }
    }

    #[test]
    fn alternative_inner_form_agrees() {
        let c = cfg(4.0, 7.822);
        let w = C64::new(2.6, 0.0);
        let t = terms(w, &c);
        let i = C64::i();
        let l = c.length();
        for &(z, zp) in &[(0.4, 2.1), (2.9, 0.2), (1.0, 1.0)] {
            let kp = t.kp;
            let alt = -((i * kp * f64::abs(z - zp)).exp()
                - (i * kp * z).exp() * (1.0 - i * t.lambda - t.n) * (kp * (l - zp)).sin()
                    / t.denom
                - (-i * kp * (z - l)).exp()
                    * ((1.0 - i * t.lambda) * (kp * zp).sin() + i * t.n * (kp * zp).cos())
                    / t.denom)
                / (2.0 * i * kp);
            let g = green_function(z, zp, w, &c).unwrap();
            assert!((g - alt).norm() < 1e-12 * g.norm(), "{g} vs {alt}");
        }
    }

    #[test]
    fn jumps() {
        let c = cfg(1.0, 7.822);
        let h = 1e-5;
        for zp in [-1.0, 1.2] {
            let jump = derivative_jump(zp, zp, 0.6, &c, h).unwrap();
            assert!((jump + 1.0).norm() < 1e-5, "{jump}");
        }
        let g0 = green_function(0.0, 1.2, C64::new(0.6, 0.0), &c).unwrap();
        let jump = derivative_jump(0.0, 1.2, 0.6, &c, h).unwrap();
        let expect = -0.6 * 7.822 * g0;
        assert!((jump - expect).norm() < 1e-5 * expect.norm().max(1.0));
    }

    #[test]
    fn residual_small_in_vacuum() {
        let c = cfg(0.0, 7.822);
        let r = ode_residual(1.1, 0.9, &c, 1e-5 * c.length()).unwrap();
        assert!(r < 1e-5, "{r}");
    }

    #[test]
    fn residual_step_checks() {
        let c = cfg(0.0, 7.822);
        assert!(matches!(
            ode_residual(1.1, 0.9, &c, 1e-3),
            Err(PolaritonError::StepTooLarge { .. })
        ));
        assert!(ode_residual(1e-6, 0.9, &c, 1e-5).is_err());
        assert!(ode_residual(c.length(), 0.9, &c, 1e-5).is_err());
    }
}
