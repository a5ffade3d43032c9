//! Eccentric-to-true anomaly conversion and the radius ratio.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::kepler::solve_kepler;

/// One point of elliptic motion, all angles in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AnomalySample {
    pub mean_anomaly: f64,
    pub eccentric_anomaly: f64,
    pub true_anomaly: f64,
    /// `r / a`
    pub radius_ratio: f64,
}

impl AnomalySample {
    /// Solves Kepler's equation at `mean_anomaly` and derives `v` and `r/a`.
    pub fn at(mean_anomaly: f64, e: f64, eps1: f64) -> Result<Self> {
        let eccentric_anomaly = solve_kepler(mean_anomaly, e, eps1)?.eccentric_anomaly;
        Ok(Self {
            mean_anomaly,
            eccentric_anomaly,
            true_anomaly: true_anomaly(eccentric_anomaly, e),
            radius_ratio: radius_ratio(eccentric_anomaly, e),
        })
    }
}

/// `β = e / (1 + √(1 - e²))`, the cancellation-free form of `(1 - √(1 - e²)) / e`.
#[inline]
pub fn beta(e: f64) -> f64 {
    e / (1.0 + (1.0 - e * e).sqrt())
}

/// True anomaly from `tan((v - E)/2) = β sin E / (1 - β cos E)`.
///
/// `atan2` keeps `v - E` in `(-π, π)`; the denominator is at least `1 - β > 0`,
/// so no argument is singular. At `e = 0`, `β = 0` and `v = E` exactly.
#[inline]
pub fn true_anomaly(eccentric_anomaly: f64, e: f64) -> f64 {
    let b = beta(e);
    let (sin_e, cos_e) = eccentric_anomaly.sin_cos();
    eccentric_anomaly + 2.0 * (b * sin_e).atan2(1.0 - b * cos_e)
}

#[inline]
pub fn radius_ratio(eccentric_anomaly: f64, e: f64) -> f64 {
    1.0 - e * eccentric_anomaly.cos()
}
