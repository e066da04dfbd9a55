use crate::Branch;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolaritonError {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    /// A propagating-only quantity was requested inside `[omega_t, omega_l]`.
    #[error("frequency {omega} lies in the stop band [{omega_t}, {omega_l}]: no propagating mode")]
    StopBand {
        omega: f64,
        omega_t: f64,
        omega_l: f64,
    },

    #[error("empty search range [{lo}, {hi}]")]
    EmptyRange { lo: f64, hi: f64 },

    /// Two roots could hide in one scan cell; refine the grid or narrow the range.
    #[error(
        "scan resolution insufficient between {lo} and {hi} (phase advance {phase_step:.3} rad)"
    )]
    InsufficientResolution { lo: f64, hi: f64, phase_step: f64 },

    #[error("no mode on the {branch:?} branch for {quantity} = {value}")]
    NoModeOnBranch {
        branch: Branch,
        quantity: &'static str,
        value: f64,
    },

    #[error("line shape: {0}")]
    LineShape(&'static str),

    #[error("position {z} outside the cavity domain (z <= {length})")]
    OutOfDomain { z: f64, length: f64 },

    #[error("finite-difference step {step} too coarse (h*k = {hk:.3e})")]
    StepTooLarge { step: f64, hk: f64 },

    #[error("column `{name}` has {got} rows, expected {expected}")]
    ColumnLength {
        name: String,
        got: usize,
        expected: usize,
    },

    #[error("column `{name}`: {reason}")]
    InvalidColumn { name: String, reason: &'static str },

    #[error("sweep point rabi/omega_t = {rabi}: {source}")]
    SweepPoint {
        rabi: f64,
        #[source]
        source: Box<PolaritonError>,
    },
}

pub type Result<T, E = PolaritonError> = std::result::Result<T, E>;

pub(crate) fn ensure(
    cond: bool,
    name: &'static str,
    value: f64,
    reason: &'static str,
) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(PolaritonError::InvalidParameter {
            name,
            value,
            reason,
        })
    }
}
