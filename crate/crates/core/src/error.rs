use thiserror::Error;

/// Failure modes of the Hansen coefficient pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HansenError {
    #[error("eccentricity {0} is outside [0, 1)")]
    InvalidEccentricity(f64),

    #[error("sample count {0} is too small (need at least {1})")]
    InvalidSampleCount(usize, usize),

    #[error("tolerance `{name}` must be positive and finite, got {value}")]
    InvalidTolerance { name: &'static str, value: f64 },

    #[error("order {order} exceeds the maximum {max} supported by {samples} samples")]
    OrderTooHigh {
        order: usize,
        max: usize,
        samples: usize,
    },

    #[error("order must be at least 1, got {0}")]
    OrderTooLow(usize),

    #[error(
        "Kepler iteration did not converge for M = {mean_anomaly}, e = {eccentricity} \
         after {iterations} iterations"
    )]
    NonConvergence {
        mean_anomaly: f64,
        eccentricity: f64,
        iterations: usize,
    },

    #[error("fit with order {order} has no residual degrees of freedom on {samples} samples")]
    DegenerateFit { order: usize, samples: usize },

    #[error("residual sum {direct:e} disagrees with its closed form {closed_form:e}")]
    ParsevalMismatch { direct: f64, closed_form: f64 },
}

impl HansenError {
    /// True when the error stems from the caller's parameters rather than from
    /// the numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            HansenError::InvalidEccentricity(_)
                | HansenError::InvalidSampleCount(..)
                | HansenError::InvalidTolerance { .. }
                | HansenError::OrderTooHigh { .. }
                | HansenError::OrderTooLow(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, HansenError>;

pub(crate) fn check_eccentricity(e: f64) -> Result<()> {
    if (0.0..1.0).contains(&e) {
        Ok(())
    } else {
        Err(HansenError::InvalidEccentricity(e))
    }
}

pub(crate) fn check_tolerance(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(HansenError::InvalidTolerance { name, value })
    }
}
