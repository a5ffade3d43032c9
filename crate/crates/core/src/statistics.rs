//! Precision criteria of a fitted harmonic series.
//!
//! With `L = 2s + 1` fitted parameters on `l` samples:
//!
//! ```text
//! δ²       = Σ (u_k − model(x_k))²
//! σ²       = δ² / (l − L)
//! PE       = 0.6745 σ
//! σ_coeff  = σ √(2/l)
//! PE_coeff = 0.6745 σ_coeff
//! Q        = (2s/l) σ²
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{HansenError, Result};
use crate::extended;
use crate::harmonic::HarmonicSeries;

/// Ratio of the probable error to the standard deviation of a normal variate.
pub const PROBABLE_ERROR_FACTOR: f64 = 0.6745;

/// Allowed relative disagreement between the direct residual sum and its
/// closed form.
pub const PARSEVAL_TOLERANCE: f64 = 1e-10;

/// The closed form is only compared when `δ²` exceeds this fraction of `Σ u²`.
pub const PARSEVAL_FLOOR: f64 = 1e-18;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitStatistics {
    pub delta_sq: f64,
    pub sigma_sq: f64,
    pub pe_fit: f64,
    pub sigma_coeff: f64,
    pub pe_coeff: f64,
    pub q_dist: f64,
    pub order: usize,
    pub samples: usize,
    /// `2s + 1`
    pub parameters: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProbableErrors {
    pub pe_fit: f64,
    pub sigma_coeff: f64,
    pub pe_coeff: f64,
}

pub fn energy(u: &[f64]) -> f64 {
    u.iter().map(|v| v * v).sum()
}

/// `Σ u² − (l/2)[2a_0² + Σ (a_j² + b_j²)]`, the residual sum implied by grid
/// orthogonality.
pub fn parseval_residual_sum(u: &[f64], series: &HarmonicSeries) -> f64 {
    let harmonics: f64 = series.cosine[1..]
        .iter()
        .chain(&series.sine)
        .map(|c| c * c)
        .sum();
    let a0 = series.cosine[0];
    energy(u) - u.len() as f64 / 2.0 * (2.0 * a0 * a0 + harmonics)
}

/// Both residual forms of the order-`s` fit of a signal, from an
/// extended-precision refit (see [`parseval_check`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParsevalCheck {
    pub direct: f64,
    pub closed_form: f64,
    /// `Σ u²`
    pub energy: f64,
}

impl ParsevalCheck {
    pub fn relative_mismatch(&self) -> f64 {
        let gap = (self.direct - self.closed_form).abs();
        if gap == 0.0 {
            0.0
        } else {
            gap / self.direct
        }
    }

    /// Whether `δ²` is large enough, relative to `Σ u²`, to be compared.
    pub fn is_resolved(&self) -> bool {
        self.direct > PARSEVAL_FLOOR * self.energy
    }

    pub fn passes(&self) -> bool {
        !self.is_resolved() || self.relative_mismatch() <= PARSEVAL_TOLERANCE
    }
}

/// Refits `u` at `order` in double-double arithmetic and returns the direct
/// and closed-form residual sums of that fit.
///
/// In working precision the closed form cancels about `log10(Σu²/δ²)` digits,
/// and the rounding of each coefficient `c` shifts it by `l·c·δc` at first
/// order, so the two forms of a converged table cannot agree to
/// [`PARSEVAL_TOLERANCE`] relative to `δ²` in `f64`.
pub fn parseval_check(u: &[f64], order: usize) -> ParsevalCheck {
    let (direct, closed_form, energy) = extended::residual_forms(u, order);
    ParsevalCheck {
        direct,
        closed_form,
        energy,
    }
}

/// Sum of squared residuals of `series` against `u`, evaluated point by point.
///
/// Two checks guard the result. In working precision, the closed form from
/// the coefficients of `series` must agree with the direct sum to
/// [`PARSEVAL_TOLERANCE`] relative to `max(δ², Σ u²)`; a larger gap means the
/// coefficients do not belong to `u`. The extended-precision refit of
/// [`parseval_check`] must agree to [`PARSEVAL_TOLERANCE`] relative to `δ²`.
pub fn residual_sum(u: &[f64], series: &HarmonicSeries) -> Result<f64> {
    assert_eq!(u.len(), series.samples, "series fitted on a different grid");
    let direct: f64 = u
        .iter()
        .zip(series.evaluate_on_grid())
        .map(|(value, model)| (value - model).powi(2))
        .sum();
    let closed_form = parseval_residual_sum(u, series);
    let scale = direct.max(energy(u));
    if (direct - closed_form).abs() > PARSEVAL_TOLERANCE * scale {
        return Err(HansenError::ParsevalMismatch {
            direct,
            closed_form,
        });
    }
    let check = parseval_check(u, series.order());
    if !check.passes() {
        return Err(HansenError::ParsevalMismatch {
            direct: check.direct,
            closed_form: check.closed_form,
        });
    }
    Ok(direct)
}

pub fn fit_variance(delta_sq: f64, samples: usize, order: usize) -> Result<f64> {
    let parameters = 2 * order + 1;
    if samples <= parameters {
        return Err(HansenError::DegenerateFit { order, samples });
    }
    Ok(delta_sq / (samples - parameters) as f64)
}

pub fn probable_errors(sigma_sq: f64, samples: usize) -> ProbableErrors {
    let sigma = sigma_sq.sqrt();
    let sigma_coeff = sigma * (2.0 / samples as f64).sqrt();
    ProbableErrors {
        pe_fit: PROBABLE_ERROR_FACTOR * sigma,
        sigma_coeff,
        pe_coeff: PROBABLE_ERROR_FACTOR * sigma_coeff,
    }
}

/// Expected squared distance between the true and fitted coefficient vectors.
pub fn avg_squared_distance(sigma_sq: f64, order: usize, samples: usize) -> f64 {
    2.0 * order as f64 / samples as f64 * sigma_sq
}

impl FitStatistics {
    pub fn from_residual_sum(delta_sq: f64, samples: usize, order: usize) -> Result<Self> {
        let sigma_sq = fit_variance(delta_sq, samples, order)?;
        let errors = probable_errors(sigma_sq, samples);
        Ok(Self {
            delta_sq,
            sigma_sq,
            pe_fit: errors.pe_fit,
            sigma_coeff: errors.sigma_coeff,
            pe_coeff: errors.pe_coeff,
            q_dist: avg_squared_distance(sigma_sq, order, samples),
            order,
            samples,
            parameters: 2 * order + 1,
        })
    }

    pub fn compute(u: &[f64], series: &HarmonicSeries) -> Result<Self> {
        let delta_sq = residual_sum(u, series)?;
        Self::from_residual_sum(delta_sq, series.samples, series.order())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harmonic::analyze;
    use std::f64::consts::TAU;

    #[test]
    fn exact_interpolation_leaves_no_residual() {
        let u: Vec<f64> = (0..40)
            .map(|k| {
                let x = TAU * k as f64 / 40.0;
                1.0 + 0.5 * (2.0 * x).cos() - 2.0 * (4.0 * x).sin()
            })
            .collect();
        let series = analyze(&u, 4).unwrap();
        assert!(residual_sum(&u, &series).unwrap() <= 1e-20 * energy(&u));
        let zero = vec![0.0; 40];
        assert_eq!(
            residual_sum(&zero, &analyze(&zero, 4).unwrap()).unwrap(),
            0.0
        );
    }

    #[test]
    fn variance_formula() {
        assert_eq!(fit_variance(0.0, 100, 5).unwrap(), 0.0);
        assert_eq!(fit_variance(77.0, 100, 11).unwrap(), 1.0);
        assert_eq!(
            fit_variance(1.0, 23, 11),
            Err(HansenError::DegenerateFit {
                order: 11,
                samples: 23
            })
        );
    }

    #[test]
    fn probable_error_values() {
        let zero = probable_errors(0.0, 100);
        assert_eq!(
            (zero.pe_fit, zero.sigma_coeff, zero.pe_coeff),
            (0.0, 0.0, 0.0)
        );
        assert_eq!(probable_errors(1.0, 2).sigma_coeff, 1.0);
        let unit = probable_errors(1.0, 100);
        assert_eq!(unit.pe_fit, 0.6745);
        assert!((unit.sigma_coeff - 0.02f64.sqrt()).abs() < 1e-17);
        assert!((unit.pe_coeff - 0.6745 * 0.02f64.sqrt()).abs() < 1e-17);
    }

    #[test]
    fn distance_values() {
        assert_eq!(avg_squared_distance(0.0, 4, 100), 0.0);
        assert_eq!(avg_squared_distance(3.0, 50, 100), 3.0);
    }

    #[test]
    fn mismatched_coefficients_are_rejected() {
        let u: Vec<f64> = (0..30).map(|k| (TAU * k as f64 / 30.0).cos()).collect();
        let mut series = analyze(&u, 3).unwrap();
        series.cosine[1] += 1e-3;
        assert!(matches!(
            residual_sum(&u, &series),
            Err(HansenError::ParsevalMismatch { .. })
        ));
    }

    #[test]
    fn extended_forms_agree_where_working_precision_cannot() {
        let u: Vec<f64> = (0..100)
            .map(|k| 50.0 * (1.0 - 0.5 * (TAU * k as f64 / 100.0).cos()).powi(-4))
            .collect();
        let series = analyze(&u, 16).unwrap();
        let direct = residual_sum(&u, &series).unwrap();
        let working = parseval_residual_sum(&u, &series);
        assert!((direct - working).abs() > 1e-10 * direct);
        let check = parseval_check(&u, 16);
        assert!(check.is_resolved());
        assert!(check.relative_mismatch() <= PARSEVAL_TOLERANCE);
        assert!((check.direct - direct).abs() <= 1e-6 * direct);
    }

    #[test]
    fn statistics_are_consistent() {
        let u: Vec<f64> = (0..64)
            .map(|k| ((TAU * k as f64 / 64.0).cos() * 0.8).exp())
            .collect();
        let series = analyze(&u, 5).unwrap();
        let stats = FitStatistics::compute(&u, &series).unwrap();
        assert_eq!(stats.parameters, 11);
        assert_eq!(stats.pe_fit, PROBABLE_ERROR_FACTOR * stats.sigma_sq.sqrt());
        assert_eq!(stats.q_dist, 2.0 * 5.0 / 64.0 * stats.sigma_sq);
        assert!(stats.delta_sq > 0.0);
    }
}
