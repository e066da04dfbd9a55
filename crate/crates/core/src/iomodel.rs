//! Input-output layer and the two competing polariton dissipation rates.
//!
//! Near an isolated resonance the polariton obeys a quantum Langevin equation
//! whose response to the incoming field is `i sqrt(kappa) / (w - W + i kappa/2)`,
//! and the outgoing field is `a_out = sum_j sqrt(kappa_j) p_j - a_in`.
//!
//! The rate `kappa` can come from the boundary conditions
//! ([`crate::cavity::kappa_mbc`]) or from rescaling the bare-cavity rate by
//! the photon weight of a discrete-mode polariton, `|w|^2 kappa_0`.
//! [`figure2_sweep`] compares the two as the coupling grows.

use crate::cavity::{self, CavityConfig, Resonance};
use crate::dielectric::MediumParams;
use crate::error::{ensure, PolaritonError, Result};
use crate::hopfield::{self, BogoliubovProblem, HopfieldMode};
use crate::table::SweepTable;
use crate::{Branch, C64};

/// How the cavity couples to the outside field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingModel {
    /// Derived from the boundary conditions of the full structure.
    MaxwellBoundary,
    /// Bare-cavity coupling rewritten in the polariton basis.
    Standard,
    /// [`CouplingModel::Standard`] without its counter-rotating terms.
    StandardRwa,
}

impl CouplingModel {
    /// Whether the system-environment coupling contains terms such as
    /// `p alpha` that excite polaritons out of the vacuum.
    pub fn has_counter_rotating_terms(self) -> bool {
        matches!(self, CouplingModel::Standard)
    }
}

/// `p(w) / a_in(w) = i sqrt(kappa) / (w - W + i kappa/2)`.
pub fn polariton_response(omega: f64, res: &Resonance) -> C64 {
    C64::i() * res.kappa.sqrt() / C64::new(omega - res.omega, res.kappa / 2.0)
}

/// `a_out / a_in` for a set of well-separated resonances.
pub fn output_amplitude(omega: f64, resonances: &[Resonance]) -> C64 {
    let driven: C64 = resonances
        .iter()
        .map(|r| r.kappa.sqrt() * polariton_response(omega, r))
        .sum();
    driven - 1.0
}

/// Photon-weight rate `|w|^2 kappa_0`.
pub fn kappa_rwa(mode: &HopfieldMode, kappa0: f64) -> f64 {
    hopfield::photon_weight(mode) * kappa0
}

/// Good-cavity estimate `kappa_0 / (1 + (W/omega_t)^2)` of the boundary rate
/// for a polariton whose index satisfies `n(W) = omega_t / W`.
pub fn kappa_good_cavity_estimate(omega: f64, kappa0: f64, omega_t: f64) -> f64 {
    kappa0 / (1.0 + (omega / omega_t).powi(2))
}

/// Column names of [`figure2_sweep`], in order.
pub const FIGURE2_COLUMNS: [&str; 9] = [
    "rabi_over_wt",
    "omega_L_mbc",
    "omega_U_mbc",
    "omega_L_disc",
    "omega_U_disc",
    "kappa_L_mbc",
    "kappa_U_mbc",
    "kappa_L_rwa",
    "kappa_U_rwa",
];

/// Both routes at a single coupling, in units of `omega_t = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub rabi: f64,
    pub lower_mbc: Resonance,
    pub upper_mbc: Resonance,
    pub lower_disc: HopfieldMode,
    pub upper_disc: HopfieldMode,
    pub kappa_l_rwa: f64,
    pub kappa_u_rwa: f64,
}

/// The lowest (`m = 1`) polaritons of a cavity tuned so the empty-cavity mode
/// sits at `omega_t`, computed from the boundary conditions and from the
/// discrete-mode Hamiltonian.
pub fn sweep_point(rabi: f64, lambda_mirror: f64, kappa0: f64) -> Result<SweepPoint> {
    ensure(rabi.is_finite() && rabi > 0.0, "rabi", rabi, "must be > 0")?;
    ensure(
        kappa0.is_finite() && kappa0 > 0.0,
        "kappa0",
        kappa0,
        "must be > 0",
    )?;
    let medium = MediumParams::from_rabi(1.0, rabi)?.lossless();
    let length = cavity::tuned_length(lambda_mirror, &medium)?;
    let cfg = CavityConfig::new(length, lambda_mirror, medium)?;
    let lower_mbc = cavity::find_mode(&cfg, Branch::Lower, 1)?;
    let upper_mbc = cavity::find_mode(&cfg, Branch::Upper, 1)?;

    let prob = BogoliubovProblem::new(medium.omega_t(), medium.omega_t(), rabi)?;
    let (lower_disc, upper_disc) = hopfield::diagonalize(&prob);
    Ok(SweepPoint {
        rabi,
        lower_mbc,
        upper_mbc,
        lower_disc,
        upper_disc,
        kappa_l_rwa: kappa_rwa(&lower_disc, kappa0),
        kappa_u_rwa: kappa_rwa(&upper_disc, kappa0),
    })
}

/// [`sweep_point`] over an increasing grid of `rabi / omega_t`, collected
/// into the nine [`FIGURE2_COLUMNS`].
pub fn figure2_sweep(rabi_grid: &[f64], lambda_mirror: f64, kappa0: f64) -> Result<SweepTable> {
    ensure(
        lambda_mirror.is_finite() && lambda_mirror >= 5.0,
        "lambda_mirror",
        lambda_mirror,
        "must be >= 5",
    )?;
    let mut table = SweepTable::new(FIGURE2_COLUMNS[0], rabi_grid.to_vec())?;
    let points = rabi_grid
        .iter()
        .map(|&rabi| {
            sweep_point(rabi, lambda_mirror, kappa0).map_err(|e| PolaritonError::SweepPoint {
                rabi,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let extract: [fn(&SweepPoint) -> f64; 8] = [
        |p| p.lower_mbc.omega,
        |p| p.upper_mbc.omega,
        |p| p.lower_disc.omega,
        |p| p.upper_disc.omega,
        |p| p.lower_mbc.kappa,
        |p| p.upper_mbc.kappa,
        |p| p.kappa_l_rwa,
        |p| p.kappa_u_rwa,
    ];
    for (name, f) in FIGURE2_COLUMNS[1..].iter().zip(extract) {
        table.push_column(name, points.iter().map(f).collect())?;
    }
    table.check_positive(&FIGURE2_COLUMNS[5..])?;
    Ok(table)
}
