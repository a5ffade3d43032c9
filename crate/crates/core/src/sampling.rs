//! Uniform mean-anomaly grid and the two sampled signals
//! `(r/a)^n cos(m v)` and `(r/a)^n sin(m v)`.

use std::f64::consts::TAU;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::anomaly::AnomalySample;
use crate::error::{check_eccentricity, check_tolerance, HansenError, Result};

/// Smallest grid that still has a distinct point besides `M = 0`.
pub const MIN_SAMPLES: usize = 2;

/// `M_i = 2πi/l` for `i = 0..l`.
pub fn mean_anomaly_grid(samples: usize) -> Result<Vec<f64>> {
    if samples < MIN_SAMPLES {
        return Err(HansenError::InvalidSampleCount(samples, MIN_SAMPLES));
    }
    let l = samples as f64;
    Ok((0..samples).map(|i| TAU * i as f64 / l).collect())
}

/// `base^exponent` by binary exponentiation; negative exponents take the
/// reciprocal of the positive power.
pub fn integer_power(base: f64, exponent: i32) -> f64 {
    let mut remaining = exponent.unsigned_abs();
    let mut factor = base;
    let mut result = 1.0;
    while remaining > 0 {
        if remaining & 1 == 1 {
            result *= factor;
        }
        factor *= factor;
        remaining >>= 1;
    }
    if exponent < 0 {
        1.0 / result
    } else {
        result
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SignalGrid {
    pub samples: Vec<AnomalySample>,
    /// `(r/a)^n cos(m v)` at each grid point.
    pub cosine: Vec<f64>,
    /// `(r/a)^n sin(m v)` at each grid point.
    pub sine: Vec<f64>,
}

impl SignalGrid {
    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Writes `i,M,E,v,r_over_a,u_cos,u_sin` rows preceded by a header.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "i,M,E,v,r_over_a,u_cos,u_sin")?;
        for (i, ((sample, c), s)) in self
            .samples
            .iter()
            .zip(&self.cosine)
            .zip(&self.sine)
            .enumerate()
        {
            writeln!(
                out,
                "{i},{:e},{:e},{:e},{:e},{:e},{:e}",
                sample.mean_anomaly,
                sample.eccentric_anomaly,
                sample.true_anomaly,
                sample.radius_ratio,
                c,
                s
            )?;
        }
        Ok(())
    }
}

/// Samples both signals for exponent `n` and multiple `m` on an `l`-point grid.
pub fn evaluate_signals(e: f64, n: i32, m: u32, samples: usize, eps1: f64) -> Result<SignalGrid> {
    check_eccentricity(e)?;
    check_tolerance("eps1", eps1)?;
    let grid = mean_anomaly_grid(samples)?;

    let mut anomalies = Vec::with_capacity(samples);
    let mut cosine = Vec::with_capacity(samples);
    let mut sine = Vec::with_capacity(samples);
    let multiple = m as f64;
    for mean_anomaly in grid {
        let sample = AnomalySample::at(mean_anomaly, e, eps1)?;
        let amplitude = integer_power(sample.radius_ratio, n);
        let (s, c) = (multiple * sample.true_anomaly).sin_cos();
        cosine.push(amplitude * c);
        sine.push(amplitude * s);
        anomalies.push(sample);
    }

    Ok(SignalGrid {
        samples: anomalies,
        cosine,
        sine,
    })
}
