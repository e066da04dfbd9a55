//! Open-cavity polariton physics from weak to ultrastrong light-matter coupling.
//!
//! The crate covers a one-dimensional cavity (a delta-function mirror at
//! `z = 0`, a perfect mirror at `z = L`) filled with a single-resonance
//! Lorentz medium:
//!
//! - [`dielectric`]: dielectric function, refractive index, group velocity.
//! - [`hopfield`]: Bogoliubov (Hopfield) diagonalization of the bulk and the
//!   discrete-mode polariton Hamiltonians.
//! - [`cavity`]: boundary-condition transfer amplitudes, resonance search and
//!   the boundary-derived dissipation rate.
//! - [`greens`]: the piecewise Green's function of the same structure, used as
//!   an independent check on [`cavity`].
//! - [`iomodel`]: Langevin/input-output responses, the photon-weight rate and
//!   the coupling-strength sweep comparing both rates.
//! - [`fluct`]: field-commutator scalings inside a dielectric.
//!
//! All quantities are in natural units: `c = hbar = eps0 = 1`, unit area, and
//! frequencies usually expressed in units of the transverse frequency.

pub mod cavity;
pub mod dielectric;
pub mod error;
pub mod fluct;
pub mod greens;
pub mod hopfield;
pub mod iomodel;
pub mod table;

pub use num_complex::Complex64 as C64;

pub use cavity::{CavityConfig, Mirror, Resonance, ResonanceSearch};
pub use dielectric::MediumParams;
pub use error::{PolaritonError, Result};
pub use fluct::FieldCommutators;
pub use greens::GreenCoefficients;
pub use hopfield::{BogoliubovProblem, HopfieldMode};
pub use iomodel::CouplingModel;
pub use table::{SweepTable, Trend};

/// Polariton branch label.
///
/// `Bare` marks resonances of an empty cavity, where there is no stop band
/// and no lower/upper distinction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Lower,
    Upper,
    Bare,
}

impl Branch {
    pub fn label(self) -> &'static str {
        match self {
            Branch::Lower => "L",
            Branch::Upper => "U",
            Branch::Bare => "bare",
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}
