//! Newton-Raphson solution of Kepler's equation `M = E - e sin E` for
//! elliptic orbits.
//!
//! Iteration starts from Battin's starter and terminates on a two-part test:
//! the step size `eps2` must fall below `eps1` (relative when `|E| > 1`,
//! absolute otherwise) and the equation residual must satisfy
//! `|E - e sin E - M| <= 100 eps1`.

use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{check_eccentricity, check_tolerance, HansenError, Result};

/// Hard cap on Newton iterations; hitting it is reported as non-convergence.
pub const MAX_ITERATIONS: usize = 50;

/// Multiple of `eps1` allowed for the final equation residual.
pub const RESIDUAL_FACTOR: f64 = 100.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KeplerSolution {
    /// Eccentric anomaly in radians, in the same `2π` branch as the input mean anomaly.
    pub eccentric_anomaly: f64,
    pub iterations: usize,
    /// `|E - e sin E - M|` in radians.
    pub residual: f64,
}

/// Battin's starting value `M + e sin M / (1 - sin(M + e) + sin M)`.
///
/// The denominator equals `1 - 2 sin(e/2) cos(M + e/2)`, which stays positive
/// for every `e < 1`.
pub fn battin_initial_guess(mean_anomaly: f64, e: f64) -> f64 {
    let sin_m = mean_anomaly.sin();
    mean_anomaly + e * sin_m / (1.0 - (mean_anomaly + e).sin() + sin_m)
}

#[inline]
fn kepler_residual(eccentric_anomaly: f64, mean_anomaly: f64, e: f64) -> f64 {
    eccentric_anomaly - e * eccentric_anomaly.sin() - mean_anomaly
}

#[inline]
fn step_size(next: f64, previous: f64) -> f64 {
    if next.abs() > 1.0 {
        ((next - previous) / next).abs()
    } else {
        (next - previous).abs()
    }
}

/// Solves Kepler's equation for the eccentric anomaly.
///
/// `mean_anomaly` is reduced into `[0, 2π)` before iterating and the result is
/// shifted back by the same multiple of `2π`. Mean anomalies in `(π, 2π)` are
/// solved at `2π - M` and reflected, since the starter is only accurate on
/// `[0, π]`.
pub fn solve_kepler(mean_anomaly: f64, e: f64, eps1: f64) -> Result<KeplerSolution> {
    check_eccentricity(e)?;
    check_tolerance("eps1", eps1)?;
    if !mean_anomaly.is_finite() {
        return Err(HansenError::NonConvergence {
            mean_anomaly,
            eccentricity: e,
            iterations: 0,
        });
    }

    let reduced = mean_anomaly.rem_euclid(TAU);
    let branch = mean_anomaly - reduced;
    let reflected = reduced > PI;
    let target = if reflected { TAU - reduced } else { reduced };

    let mut current = battin_initial_guess(target, e);
    for iteration in 1..=MAX_ITERATIONS {
        let derivative = 1.0 - e * current.cos();
        let next = current - kepler_residual(current, target, e) / derivative;
        let residual = kepler_residual(next, target, e).abs();
        if step_size(next, current) <= eps1 && residual <= RESIDUAL_FACTOR * eps1 {
            let principal = if reflected { TAU - next } else { next };
            return Ok(KeplerSolution {
                eccentric_anomaly: principal + branch,
                iterations: iteration,
                residual,
            });
        }
        current = next;
    }

    Err(HansenError::NonConvergence {
        mean_anomaly,
        eccentricity: e,
        iterations: MAX_ITERATIONS,
    })
}
