//! One-sided open cavity filled with the polariton medium.
//!
//! A delta-function mirror of transparency `Lambda` sits at `z = 0`, the medium
//! fills `0 < z < L`, and a perfect mirror closes the cavity at `z = L`.
//! Matching the fields at both mirrors gives the intracavity amplitude
//!
//! ```text
//! T(w) = 2 / ( (1 - i*Lambda) sin(k L) + i n cos(k L) ),     k = n(w) w
//! ```
//!
//! and the reflection `r = T sin(k L) - 1`. Resonances solve
//! `tan(n W L) = n / Lambda`; each has the boundary-derived width
//! `kappa = 2 n v_g / (Lambda^2 L)`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::ops::Range;

use crate::dielectric::{self, MediumParams};
use crate::error::{ensure, PolaritonError, Result};
use crate::{Branch, C64};

/// Transparency model of the input mirror.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Mirror {
    /// Frequency-independent `Lambda`.
    Constant(f64),
    /// Delta-layer of strength `eta`, giving `Lambda(w) = eta * w`.
    Delta { eta: f64 },
}

impl Mirror {
    pub fn transparency(&self, omega: C64) -> C64 {
        match *self {
            Mirror::Constant(lambda) => C64::new(lambda, 0.0),
            Mirror::Delta { eta } => eta * omega,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Mirror::Constant(lambda) => ensure(
                lambda.is_finite() && lambda >= 0.0,
                "lambda_mirror",
                lambda,
                "must be >= 0",
            ),
            Mirror::Delta { eta } => {
                ensure(eta.is_finite() && eta >= 0.0, "eta", eta, "must be >= 0")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityConfig {
    length: f64,
    mirror: Mirror,
    medium: MediumParams,
}

impl CavityConfig {
    pub fn new(length: f64, lambda_mirror: f64, medium: MediumParams) -> Result<Self> {
        Self::with_mirror(length, Mirror::Constant(lambda_mirror), medium)
    }

    pub fn with_mirror(length: f64, mirror: Mirror, medium: MediumParams) -> Result<Self> {
        ensure(
            length.is_finite() && length > 0.0,
            "length",
            length,
            "must be > 0",
        )?;
        mirror.validate()?;
        Ok(Self {
            length,
            mirror,
            medium,
        })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn mirror(&self) -> Mirror {
        self.mirror
    }

    pub fn medium(&self) -> &MediumParams {
        &self.medium
    }

    /// Same cavity around a different medium.
    pub fn with_medium(&self, medium: MediumParams) -> Self {
        Self { medium, ..*self }
    }

    /// `Lambda` at a real frequency.
    pub fn lambda_at(&self, omega: f64) -> f64 {
        self.mirror.transparency(C64::new(omega, 0.0)).re
    }

    /// `Lambda / n(w)`; the good-cavity regime needs this to be large.
    pub fn good_cavity_ratio(&self, omega: f64) -> Result<f64> {
        let n = dielectric::lossless_index(omega, &self.medium)?;
        Ok(self.lambda_at(omega) / n)
    }
}

/// `(n, sin(kL), cos(kL), Lambda)` at a real frequency, or `None` at an
/// exact pole of the index.
fn phase_terms(omega: f64, cfg: &CavityConfig) -> Option<(C64, C64, C64, C64)> {
    let w = C64::new(omega, 0.0);
    let n = dielectric::refractive_index(w, &cfg.medium);
    if n.re.is_infinite() {
        return None;
    }
    let phi = n * w * cfg.length;
    Some((n, phi.sin(), phi.cos(), cfg.mirror.transparency(w)))
}

/// Intracavity amplitude `T(w)`, the ratio of the forward field just inside
/// the mirror to the incoming field. Returns `0` at an exact index pole.
pub fn intracavity_transfer(omega: f64, cfg: &CavityConfig) -> C64 {
    match phase_terms(omega, cfg) {
        Some((n, s, c, lambda)) => {
            let i = C64::i();
            2.0 / ((1.0 - i * lambda) * s + i * n * c)
        }
        None => C64::new(0.0, 0.0),
    }
}

/// Reflection amplitude `T sin(kL) - 1` seen from outside.
pub fn reflection(omega: f64, cfg: &CavityConfig) -> C64 {
    match phase_terms(omega, cfg) {
        Some((_, s, _, _)) => intracavity_transfer(omega, cfg) * s - 1.0,
        None => C64::new(-1.0, 0.0),
    }
}

/// Boundary-derived dissipation rate `2 n v_g / (Lambda^2 L)` (loss-less `n`, `v_g`).
pub fn kappa_mbc(omega: f64, cfg: &CavityConfig) -> Result<f64> {
    let n = dielectric::lossless_index(omega, &cfg.medium)?;
    let vg = dielectric::group_velocity(omega, &cfg.medium)?;
    let lambda = cfg.lambda_at(omega);
    ensure(
        lambda > 0.0,
        "lambda_mirror",
        lambda,
        "a closed-mirror limit has no finite rate",
    )?;
    Ok(2.0 * n * vg / (lambda * lambda * cfg.length))
}

/// Empty-cavity rate `2 / (Lambda^2 L)`.
pub fn bare_kappa(lambda_mirror: f64, length: f64) -> f64 {
    2.0 / (lambda_mirror * lambda_mirror * length)
}

/// Length `(pi + atan(1/Lambda)) / omega_t` that puts the `m = 1` bare-cavity
/// resonance at `omega_t`.
pub fn tuned_length(lambda_mirror: f64, medium: &MediumParams) -> Result<f64> {
    ensure(
        lambda_mirror.is_finite() && lambda_mirror >= 0.0,
        "lambda_mirror",
        lambda_mirror,
        "must be >= 0",
    )?;
    Ok((PI + lambda_mirror.recip().atan()) / medium.omega_t())
}

/// `|tan(n W L) - n / Lambda|` at a candidate resonance.
pub fn resonance_residual(omega: f64, cfg: &CavityConfig) -> Result<f64> {
    let n = dielectric::lossless_index(omega, &cfg.medium)?;
    Ok(((n * omega * cfg.length).tan() - n / cfg.lambda_at(omega)).abs())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Resonance {
    pub omega: f64,
    pub kappa: f64,
    pub branch: Branch,
    pub mode_index: u32,
}

/// Uniform sign-change scan followed by bisection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceSearch {
    /// Scan cells per transparency window.
    pub subintervals: usize,
    /// Gap kept around the stop band, in units of `omega_t`.
    pub stop_band_margin: f64,
    /// Bisection stops below this width, in units of `omega_t`.
    pub tolerance: f64,
}

impl Default for ResonanceSearch {
    fn default() -> Self {
        Self {
            subintervals: 2000,
            stop_band_margin: 1e-3,
            tolerance: 1e-12,
        }
    }
}

/// Loss-less phase `n w L` and `h = n cos(nwL) - Lambda sin(nwL)`, which
/// vanishes exactly at the resonances and, unlike the tangent form, has no poles.
fn phase_and_h(omega: f64, cfg: &CavityConfig) -> (f64, f64) {
    let n = dielectric::refractive_index(C64::new(omega, 0.0), &cfg.medium.lossless()).re;
    let phi = n * omega * cfg.length;
    (phi, n * phi.cos() - cfg.lambda_at(omega) * phi.sin())
}

fn branch_of(omega: f64, medium: &MediumParams) -> Branch {
    if medium.is_empty() {
        Branch::Bare
    } else if omega < medium.omega_t() {
        Branch::Lower
    } else {
        Branch::Upper
    }
}

pub(crate) fn bisect(mut lo: f64, mut hi: f64, tol: f64, f: impl Fn(f64) -> f64) -> f64 {
    let mut f_lo = f(lo);
    if f_lo == 0.0 {
        return lo;
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return mid;
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

impl ResonanceSearch {
    /// All `m >= 1` resonances in `range`, sorted by frequency and truncated to
    /// `max_count`. The stop band (plus margin) is skipped automatically.
    pub fn find(
        &self,
        cfg: &CavityConfig,
        range: Range<f64>,
        max_count: usize,
    ) -> Result<Vec<Resonance>> {
        let Range { start: lo, end: hi } = range;
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo < hi) {
            return Err(PolaritonError::EmptyRange { lo, hi });
        }
        ensure(
            self.subintervals >= 2,
            "subintervals",
            self.subintervals as f64,
            "must be >= 2",
        )?;
        let medium = &cfg.medium;
        let wt = medium.omega_t();

        let mut windows = Vec::new();
        if medium.is_empty() {
            windows.push((lo, hi));
        } else {
            let below = wt * (1.0 - self.stop_band_margin);
            let above = medium.omega_l() + self.stop_band_margin * wt;
            if lo < below {
                windows.push((lo, hi.min(below)));
            }
            if hi > above {
                windows.push((lo.max(above), hi));
            }
        }
        if windows.is_empty() {
            return Err(PolaritonError::EmptyRange { lo, hi });
        }

        let mut found = Vec::new();
        for (a, b) in windows {
            self.scan_window(cfg, a, b, &mut found)?;
        }
        found.sort_by(|x, y| x.omega.total_cmp(&y.omega));
        found.truncate(max_count);
        Ok(found)
    }

    fn scan_window(
        &self,
        cfg: &CavityConfig,
        a: f64,
        b: f64,
        out: &mut Vec<Resonance>,
    ) -> Result<()> {
        let cells = self.subintervals;
        let step = (b - a) / cells as f64;
        let tol = self.tolerance * cfg.medium.omega_t();
        let grid = |i: usize| if i == cells { b } else { a + step * i as f64 };

        let mut prev_w = grid(0);
        let (mut prev_phi, mut prev_h) = phase_and_h(prev_w, cfg);
        if prev_h == 0.0 {
            self.accept(cfg, prev_w, out)?;
        }
        for i in 1..=cells {
            let w = grid(i);
            let (phi, h) = phase_and_h(w, cfg);
            let advance = (phi - prev_phi).abs();
            if advance >= FRAC_PI_2 {
                return Err(PolaritonError::InsufficientResolution {
                    lo: prev_w,
                    hi: w,
                    phase_step: advance,
                });
            }
            if h == 0.0 {
                self.accept(cfg, w, out)?;
            } else if prev_h != 0.0 && (h < 0.0) != (prev_h < 0.0) {
                let root = bisect(prev_w, w, tol, |x| phase_and_h(x, cfg).1);
                self.accept(cfg, root, out)?;
            }
            prev_w = w;
            prev_phi = phi;
            prev_h = h;
        }
        Ok(())
    }

    fn accept(&self, cfg: &CavityConfig, omega: f64, out: &mut Vec<Resonance>) -> Result<()> {
        let (phi, _) = phase_and_h(omega, cfg);
        let m = (phi / PI).floor();
        // the phi < pi root sits near w ~ 1/(Lambda L), below any cavity mode
        if m < 1.0 {
            return Ok(());
        }
        out.push(Resonance {
            omega,
            kappa: kappa_mbc(omega, cfg)?,
            branch: branch_of(omega, &cfg.medium),
            mode_index: m as u32,
        });
        Ok(())
    }
}

/// [`ResonanceSearch::find`] with default settings.
pub fn find_resonances(
    cfg: &CavityConfig,
    range: Range<f64>,
    max_count: usize,
) -> Result<Vec<Resonance>> {
    ResonanceSearch::default().find(cfg, range, max_count)
}

/// The `m`-th resonance on one branch.
///
/// On each transparency branch the loss-less phase `n w L` grows
/// monotonically from zero, so the `m`-th root is bracketed by the
/// frequencies where the phase equals `m pi` and `m pi + pi/2`. This finds
/// modes piled up against the stop band that a uniform scan cannot resolve.
pub fn find_mode(cfg: &CavityConfig, branch: Branch, m: u32) -> Result<Resonance> {
    ensure(m >= 1, "mode_index", m as f64, "must be >= 1")?;
    let medium = &cfg.medium;
    let no_mode = || PolaritonError::NoModeOnBranch {
        branch,
        quantity: "mode_index",
        value: m as f64,
    };
    let wt = medium.omega_t();
    let tol = 1e-12 * wt;

    let (lo, mut hi) = match (branch, medium.is_empty()) {
        (Branch::Bare, true) => (0.0, 2.0 * wt),
        (Branch::Lower, false) => (0.0, wt),
        (Branch::Upper, false) => (medium.omega_l(), 2.0 * medium.omega_l()),
        _ => return Err(no_mode()),
    };
    let phase = |w: f64| phase_and_h(w, cfg).0;
    let target_hi = m as f64 * PI + FRAC_PI_2;
    if branch != Branch::Lower {
        let mut grow = 0;
        while phase(hi) < target_hi {
            hi *= 2.0;
            grow += 1;
            if grow > 200 {
                return Err(no_mode());
            }
        }
    }
    let invert = |target: f64| {
        bisect(lo, hi, tol * 1e-3, |w| {
            if w <= lo {
                -target
            } else {
                phase(w) - target
            }
        })
    };
    let w_a = invert(m as f64 * PI);
    let w_b = invert(target_hi);
    let omega = bisect(w_a, w_b, tol, |w| phase_and_h(w, cfg).1);
    if !(omega > lo && omega < hi) || medium.in_stop_band(omega) {
        return Err(no_mode());
    }
    Ok(Resonance {
        omega,
        kappa: kappa_mbc(omega, cfg)?,
        branch,
        mode_index: m,
    })
}

/// Mode-function prefactor `sqrt(2 v_g / (n L))` that relates the intracavity
/// field to the polariton amplitude near a resonance.
pub fn lorentzian_prefactor(omega: f64, cfg: &CavityConfig) -> Result<f64> {
    let n = dielectric::lossless_index(omega, &cfg.medium)?;
    let vg = dielectric::group_velocity(omega, &cfg.medium)?;
    Ok((2.0 * vg / (n * cfg.length)).sqrt())
}

/// Single-mode approximation of [`intracavity_transfer`] around `res`:
/// `(-1)^m sqrt(2 v_g/(n L)) * i sqrt(kappa) / (w - W + i kappa/2)`.
pub fn lorentzian_transfer(omega: f64, res: &Resonance, cfg: &CavityConfig) -> Result<C64> {
    let pref = lorentzian_prefactor(res.omega, cfg)?;
    let sign = if res.mode_index.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    };
    let response = C64::i() * res.kappa.sqrt() / C64::new(omega - res.omega, res.kappa / 2.0);
    Ok(sign * pref * response)
}

/// Center and full width at half maximum of an isolated peak.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzianFit {
    pub center: f64,
    pub kappa: f64,
    pub peak: f64,
}

/// Quadratic through three points, returned as `(a, b, c)` of `a t^2 + b t + c`
/// with `t = x - x1`.
fn quadratic(x: [f64; 3], y: [f64; 3]) -> (f64, f64, f64) {
    let (t0, t2) = (x[0] - x[1], x[2] - x[1]);
    let d0 = (y[0] - y[1]) / t0;
    let d2 = (y[2] - y[1]) / t2;
    let a = (d2 - d0) / (t2 - t0);
    let b = d0 - a * t0;
    (a, b, y[1])
}

/// Extract `(center, FWHM)` from samples of a single peak.
///
/// The reciprocal of a Lorentzian is a parabola, so the center and the two
/// half-maximum crossings come from quadratic interpolation of `1/P`; the
/// result is exact for Lorentzian data.
pub fn lorentzian_extract(omega: &[f64], power: &[f64]) -> Result<LorentzianFit> {
    if omega.len() != power.len() {
        return Err(PolaritonError::LineShape(
            "frequency and power lengths differ",
        ));
    }
    if omega.len() < 50 {
        return Err(PolaritonError::LineShape("need at least 50 samples"));
    }
    if omega.windows(2).any(|w| w[1] <= w[0]) || power.iter().any(|p| !(p.is_finite() && *p > 0.0))
    {
        return Err(PolaritonError::LineShape(
            "need increasing frequencies and positive power",
        ));
    }
    let imax = (0..power.len())
        .max_by(|&a, &b| power[a].total_cmp(&power[b]))
        .unwrap_or(0);
    if imax == 0 || imax == power.len() - 1 {
        return Err(PolaritonError::LineShape("peak touches the grid boundary"));
    }
    let inv = |i: usize| power[i].recip();
    let pick = |i: usize| {
        (
            [omega[i - 1], omega[i], omega[i + 1]],
            [inv(i - 1), inv(i), inv(i + 1)],
        )
    };

    let (x, y) = pick(imax);
    let (a, b, c) = quadratic(x, y);
    let (center, inv_peak) = if a > 0.0 {
        let t = -b / (2.0 * a);
        (x[1] + t, c - b * b / (4.0 * a))
    } else {
        (x[1], c)
    };
    let peak = inv_peak.recip();
    let target = 2.0 * inv_peak;

    let crossing = |outer: usize, inner: usize| -> f64 {
        let mid = outer.max(inner).clamp(1, omega.len() - 2);
        let (x, y) = pick(mid);
        let (a, b, c) = quadratic(x, y);
        let (lo, hi) = (omega[outer.min(inner)], omega[outer.max(inner)]);
        let disc = b * b - 4.0 * a * (c - target);
        let roots = if a.abs() > 0.0 && disc >= 0.0 {
            let s = disc.sqrt();
            [x[1] + (-b - s) / (2.0 * a), x[1] + (-b + s) / (2.0 * a)]
        } else {
            let t = (target - c) / b;
            [x[1] + t, x[1] + t]
        };
        roots
            .into_iter()
            .find(|r| *r >= lo && *r <= hi)
            .unwrap_or_else(|| {
                let (yo, yi) = (inv(outer), inv(inner));
                omega[inner] + (target - yi) / (yo - yi) * (omega[outer] - omega[inner])
            })
    };

    let left = (1..=imax)
        .rev()
        .find(|&i| inv(i - 1) >= target)
        .map(|i| crossing(i - 1, i));
    let right = (imax..power.len() - 1)
        .find(|&i| inv(i + 1) >= target)
        .map(|i| crossing(i + 1, i));
    match (left, right) {
        (Some(l), Some(r)) => Ok(LorentzianFit {
            center,
            kappa: r - l,
            peak,
        }),
        _ => Err(PolaritonError::LineShape(
            "half-maximum crossings not bracketed",
        )),
    }
}
