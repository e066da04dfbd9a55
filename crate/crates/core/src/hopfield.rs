//! Bogoliubov diagonalization of the polariton Hamiltonian.
//!
//! One photon mode of frequency `photon_freq` (either `c|k|` of a bulk plane
//! wave or a discrete cavity mode) couples to a dispersionless excitation at
//! `omega_t` with strength `rabi` and diamagnetic term `rabi^2 / omega_t`.
//! The polariton operator `p = w a + x b + y a^dag + z b^dag` follows from a
//! 4x4 non-Hermitian eigenproblem whose positive eigenvalues are the lower
//! and upper polariton frequencies.
//!
//! The dimensionless coupling is `4*pi*beta = 4 * photon_freq * rabi^2 / omega_t^3`,
//! which keeps the bulk dielectric function independent of `k` when
//! `rabi^2 ~ 1 / |k|`.

use crate::dielectric::MediumParams;
use crate::error::{ensure, Result};
use crate::{Branch, C64};

/// One polariton eigenstate with its Hopfield coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HopfieldMode {
    pub branch: Branch,
    pub omega: f64,
    /// photon
    pub w: C64,
    /// excitation
    pub x: C64,
    /// anti-photon
    pub y: C64,
    /// anti-excitation
    pub z: C64,
}

impl HopfieldMode {
    pub fn vector(&self) -> [C64; 4] {
        [self.w, self.x, self.y, self.z]
    }

    /// `|w|^2 + |x|^2 - |y|^2 - |z|^2`, equal to one for a bosonic mode.
    pub fn bosonic_norm(&self) -> f64 {
        self.w.norm_sqr() + self.x.norm_sqr() - self.y.norm_sqr() - self.z.norm_sqr()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BogoliubovProblem {
    photon_freq: f64,
    omega_t: f64,
    rabi: f64,
    diamagnetic: f64,
}

impl BogoliubovProblem {
    pub fn new(photon_freq: f64, omega_t: f64, rabi: f64) -> Result<Self> {
        ensure(
            photon_freq.is_finite() && photon_freq > 0.0,
            "photon_freq",
            photon_freq,
            "must be > 0",
        )?;
        ensure(
            omega_t.is_finite() && omega_t > 0.0,
            "omega_t",
            omega_t,
            "must be > 0",
        )?;
        ensure(
            rabi.is_finite() && rabi >= 0.0,
            "rabi",
            rabi,
            "must be >= 0",
        )?;
        Ok(Self {
            photon_freq,
            omega_t,
            rabi,
            diamagnetic: rabi * rabi / omega_t,
        })
    }

    /// Bulk plane wave of wavenumber `k` in `medium`; the Rabi coupling is
    /// chosen so the problem's `4*pi*beta` equals the medium's.
    pub fn bulk(k: f64, medium: &MediumParams) -> Result<Self> {
        let ck = k.abs();
        ensure(ck > 0.0, "k", k, "must be nonzero")?;
        let wt = medium.omega_t();
        let rabi = (medium.beta4pi() * wt.powi(3) / (4.0 * ck)).sqrt();
        Self::new(ck, wt, rabi)
    }

    pub fn photon_freq(&self) -> f64 {
        self.photon_freq
    }

    pub fn omega_t(&self) -> f64 {
        self.omega_t
    }

    pub fn rabi(&self) -> f64 {
        self.rabi
    }

    pub fn diamagnetic(&self) -> f64 {
        self.diamagnetic
    }

    /// `4*pi*beta = 4 * photon_freq * rabi^2 / omega_t^3`.
    pub fn beta4pi(&self) -> f64 {
        4.0 * self.photon_freq * self.rabi * self.rabi / self.omega_t.powi(3)
    }
}

/// The 4x4 matrix acting on `(w, x, y, z)`; its spectrum is `{+-omega_L, +-omega_U}`.
pub fn bogoliubov_matrix(prob: &BogoliubovProblem) -> [[C64; 4]; 4] {
    let c = |re: f64| C64::new(re, 0.0);
    let i = |im: f64| C64::new(0.0, im);
    let wc = prob.photon_freq;
    let wt = prob.omega_t;
    let r = prob.rabi;
    let a2 = 2.0 * prob.diamagnetic;
    [
        [c(wc + a2), i(-r), c(-a2), i(-r)],
        [i(r), c(wt), i(-r), c(0.0)],
        [c(a2), i(-r), c(-wc - a2), i(-r)],
        [i(-r), c(0.0), i(r), c(-wt)],
    ]
}

/// `1 - omega^2/omega_t^2` for the lower and upper roots.
///
/// The squared frequencies solve `x^2 - (1 + b + c^2) x + c^2 = 0`; shifting
/// to `u = 1 - x` gives `u^2 + (b + c^2 - 1) u - b = 0`, whose roots are
/// computed without cancellation so the excitation-like branch keeps full
/// relative precision at weak coupling.
fn detunings(prob: &BogoliubovProblem) -> (f64, f64) {
    let c2 = (prob.photon_freq / prob.omega_t).powi(2);
    let b = prob.beta4pi();
    let q = b + c2 - 1.0;
    let root = q.hypot(2.0 * b.sqrt());
    if q >= 0.0 {
        let u_upper = -(q + root) / 2.0;
        let u_lower = if u_upper == 0.0 { 0.0 } else { -b / u_upper };
        (u_lower, u_upper)
    } else {
        let u_lower = (root - q) / 2.0;
        (u_lower, -b / u_lower)
    }
}

/// Lower and upper polariton frequencies from the closed form.
pub fn eigenfrequencies(prob: &BogoliubovProblem) -> (f64, f64) {
    let (u_l, u_u) = detunings(prob);
    let wt = prob.omega_t;
    (wt * (1.0 - u_l).sqrt(), wt * (1.0 - u_u).sqrt())
}

/// Lower and upper polariton modes with Hopfield's phase convention: the
/// photon amplitude `w` is real and positive on both branches, `x` of the
/// lower branch is along `-i`.
///
/// At `rabi = 0` the modes are bare photon and bare excitation; when they are
/// degenerate (`photon_freq = omega_t`) the photon is labelled `Lower`.
pub fn diagonalize(prob: &BogoliubovProblem) -> (HopfieldMode, HopfieldMode) {
    let (omega_l, omega_u) = eigenfrequencies(prob);
    if prob.rabi == 0.0 {
        return decoupled(prob, omega_l, omega_u);
    }
    let (u_l, u_u) = detunings(prob);
    (
        closed_form_mode(prob, Branch::Lower, omega_l, u_l),
        closed_form_mode(prob, Branch::Upper, omega_u, u_u),
    )
}

fn closed_form_mode(
    prob: &BogoliubovProblem,
    branch: Branch,
    omega: f64,
    detuning: f64,
) -> HopfieldMode {
    let wt = prob.omega_t;
    let wc = prob.photon_freq;
    let b = prob.beta4pi();
    let ratio = omega / wt;
    let norm = (ratio * (detuning * detuning + b)).sqrt().recip();
    let photon_scale = (wt / wc).sqrt() * norm / (2.0 * wt);
    let sqrt_pi_beta = b.sqrt() / 2.0;
    let sign = match branch {
        Branch::Upper => -1.0,
        _ => 1.0,
    };
    HopfieldMode {
        branch,
        omega,
        w: C64::new(sign * detuning * (omega + wc) * photon_scale, 0.0),
        x: C64::new(0.0, -sign * sqrt_pi_beta * (1.0 + ratio) * norm),
        y: C64::new(sign * detuning * (omega - wc) * photon_scale, 0.0),
        z: C64::new(0.0, -sign * sqrt_pi_beta * (1.0 - ratio) * norm),
    }
}

fn decoupled(prob: &BogoliubovProblem, omega_l: f64, omega_u: f64) -> (HopfieldMode, HopfieldMode) {
    let zero = C64::new(0.0, 0.0);
    let photon = |branch, omega| HopfieldMode {
        branch,
        omega,
        w: C64::new(1.0, 0.0),
        x: zero,
        y: zero,
        z: zero,
    };
    // excitation phase is the weak-coupling limit of the closed form
    let excitation = |branch, omega| {
        let x = if branch == Branch::Lower {
            C64::new(0.0, -1.0)
        } else {
            C64::new(0.0, 1.0)
        };
        HopfieldMode {
            branch,
            omega,
            w: zero,
            x,
            y: zero,
            z: zero,
        }
    };
    if prob.photon_freq <= prob.omega_t {
        (
            photon(Branch::Lower, omega_l),
            excitation(Branch::Upper, omega_u),
        )
    } else {
        (
            excitation(Branch::Lower, omega_l),
            photon(Branch::Upper, omega_u),
        )
    }
}

/// Photon weight `|w|^2` of a mode.
pub fn photon_weight(mode: &HopfieldMode) -> f64 {
    mode.w.norm_sqr()
}

/// Max-norm of `M v - omega v`.
pub fn eigen_residual(prob: &BogoliubovProblem, mode: &HopfieldMode) -> f64 {
    let m = bogoliubov_matrix(prob);
    let v = mode.vector();
    (0..4)
        .map(|r| {
            let mv: C64 = (0..4).map(|c| m[r][c] * v[c]).sum();
            (mv - mode.omega * v[r]).norm()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn discrete(photon: f64, rabi: f64) -> BogoliubovProblem {
        BogoliubovProblem::new(photon, 1.0, rabi).unwrap()
    }

    #[test]
    fn matrix_is_diagonal_without_coupling() {
        let m = bogoliubov_matrix(&discrete(0.7, 0.0));
        let diag = [0.7, 1.0, -0.7, -1.0];
        for (r, row) in m.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                let expect = if r == c { diag[r] } else { 0.0 };
                assert_eq!(v, C64::new(expect, 0.0));
            }
        }
    }

    #[test]
    fn decoupled_frequencies() {
        assert_eq!(eigenfrequencies(&discrete(0.5, 0.0)), (0.5, 1.0));
        assert_eq!(eigenfrequencies(&discrete(2.0, 0.0)), (1.0, 2.0));
        assert_eq!(eigenfrequencies(&discrete(1.0, 0.0)), (1.0, 1.0));
    }

    #[test]
    fn ultrastrong_resonant_frequencies() {
        // 4*pi*beta = 4 at photon_freq = omega_t: omega = sqrt(2) -+ 1
        let (l, u) = eigenfrequencies(&discrete(1.0, 1.0));
        assert!((l - (2f64.sqrt() - 1.0)).abs() < 1e-14);
        assert!((u - (2f64.sqrt() + 1.0)).abs() < 1e-14);
        assert!((l - 0.41421).abs() < 1e-5 && (u - 2.41421).abs() < 1e-5);
    }

    #[test]
    fn weak_coupling_splitting() {
        let rabi = 1e-3;
        let (l, u) = eigenfrequencies(&discrete(1.0, rabi));
        assert!((l - (1.0 - rabi)).abs() < 2.0 * rabi * rabi);
        assert!((u - (1.0 + rabi)).abs() < 2.0 * rabi * rabi);
    }

    #[test]
    fn decoupled_modes() {
        let (l, u) = diagonalize(&discrete(0.5, 0.0));
        assert_eq!(photon_weight(&l), 1.0);
        assert_eq!(l.x.norm() + l.y.norm() + l.z.norm(), 0.0);
        assert_eq!(photon_weight(&u), 0.0);
        assert_eq!(u.x.norm(), 1.0);

        let (l, u) = diagonalize(&discrete(1.7, 0.0));
        assert_eq!(photon_weight(&l), 0.0);
        assert_eq!(photon_weight(&u), 1.0);

        // degenerate tie-break: photon is Lower
        let (l, u) = diagonalize(&discrete(1.0, 0.0));
        assert_eq!(photon_weight(&l), 1.0);
        assert_eq!(photon_weight(&u), 0.0);
    }

    #[test]
    fn printed_phase_convention() {
        let (l, u) = diagonalize(&discrete(1.0, 1.0));
        assert!(l.w.im == 0.0 && l.w.re > 0.0);
        assert!(u.w.im == 0.0 && u.w.re > 0.0);
        assert!(l.x.re == 0.0 && l.x.im < 0.0);
        assert!(u.x.re == 0.0 && u.x.im > 0.0);
    }

    #[test]
    fn eigen_relation_and_norm() {
        for &(wc, wt, rabi) in &[
            (1.0, 1.0, 1.0),
            (0.3, 1.0, 0.2),
            (2.5, 1.0, 0.9),
            (1.3, 2.0, 0.05),
            (1.0, 1.0, 1e-7),
        ] {
            let prob = BogoliubovProblem::new(wc, wt, rabi).unwrap();
            let (l, u) = diagonalize(&prob);
            for mode in [l, u] {
                assert!((mode.bosonic_norm() - 1.0).abs() < 1e-12, "{prob:?}");
                assert!(
                    eigen_residual(&prob, &mode) < 1e-10,
                    "{prob:?} {}",
                    eigen_residual(&prob, &mode)
                );
            }
            assert!(l.omega <= u.omega);
        }
    }

    #[test]
    fn photon_sum_rule_at_ultrastrong_coupling() {
        let (l, u) = diagonalize(&discrete(1.0, 1.0));
        let photon = l.w.norm_sqr() - l.y.norm_sqr() + u.w.norm_sqr() - u.y.norm_sqr();
        let matter = l.x.norm_sqr() - l.z.norm_sqr() + u.x.norm_sqr() - u.z.norm_sqr();
        assert!((photon - 1.0).abs() < 1e-12);
        assert!((matter - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bulk_problem_keeps_beta() {
        let medium = MediumParams::new(1.0, 4.0).unwrap();
        for k in [0.2, 1.0, 3.0] {
            let prob = BogoliubovProblem::bulk(k, &medium).unwrap();
            assert!((prob.beta4pi() - 4.0).abs() < 1e-13);
            assert!((prob.diamagnetic() - prob.rabi().powi(2)).abs() < 1e-15);
        }
        assert!(BogoliubovProblem::bulk(0.0, &medium).is_err());
    }

    #[test]
    fn gap_brackets_stop_band() {
        let medium = MediumParams::new(1.0, 3.0).unwrap();
        let (l, u) = eigenfrequencies(&BogoliubovProblem::bulk(1.0, &medium).unwrap());
        assert!(l < medium.omega_t());
        assert!(medium.omega_t() < medium.omega_l());
        assert!(medium.omega_l() < u);
    }
}
