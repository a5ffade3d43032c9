//! Hansen coefficients `A_k^{n,m}(e)` and `B_k^{n,m}(e)` of
//!
//! ```text
//! (r/a)^n cos(m v) = Σ_{k>=0} A_k cos(k M)
//! (r/a)^n sin(m v) = Σ_{k>=1} B_k sin(k M)
//! ```
//!
//! obtained by harmonic analysis of both signals on a uniform mean-anomaly
//! grid, with the truncation order chosen from the residuals.

use serde::{Deserialize, Serialize};

use crate::error::{check_eccentricity, check_tolerance, HansenError, Result};
use crate::harmonic::{analyze, max_order, UnitCircle};
use crate::sampling::{evaluate_signals, SignalGrid};
use crate::statistics::FitStatistics;

pub const DEFAULT_SAMPLES: usize = 100;
pub const DEFAULT_TOLERANCE: f64 = 1e-6;
pub const DEFAULT_KEPLER_TOLERANCE: f64 = 1e-8;
pub const MIN_REQUEST_SAMPLES: usize = 4;

/// A table whose order runs past `k = m` is flagged when its last coefficient
/// still exceeds this fraction of the largest one.
pub const ALIASING_RATIO: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HansenRequest {
    pub eccentricity: f64,
    /// Exponent of `r/a`.
    pub n: i32,
    /// Multiple of the true anomaly.
    pub m: u32,
    pub samples: usize,
    /// Target standard error of a retained coefficient.
    pub tol: f64,
    /// Kepler solver tolerance.
    pub eps1: f64,
    /// Upper bound on the selected order; defaults to `(l - 1) / 2`.
    pub max_order: Option<usize>,
}

impl HansenRequest {
    pub fn new(eccentricity: f64, n: i32, m: u32) -> Self {
        Self {
            eccentricity,
            n,
            m,
            samples: DEFAULT_SAMPLES,
            tol: DEFAULT_TOLERANCE,
            eps1: DEFAULT_KEPLER_TOLERANCE,
            max_order: None,
        }
    }

    pub fn with_samples(mut self, samples: usize) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_eps1(mut self, eps1: f64) -> Self {
        self.eps1 = eps1;
        self
    }

    pub fn with_max_order(mut self, max_order: usize) -> Self {
        self.max_order = Some(max_order);
        self
    }

    /// Order cap after applying the default.
    pub fn order_cap(&self) -> usize {
        self.max_order.unwrap_or_else(|| max_order(self.samples))
    }

    pub fn validate(&self) -> Result<()> {
        check_eccentricity(self.eccentricity)?;
        if self.samples < MIN_REQUEST_SAMPLES {
            return Err(HansenError::InvalidSampleCount(
                self.samples,
                MIN_REQUEST_SAMPLES,
            ));
        }
        check_tolerance("tol", self.tol)?;
        check_tolerance("eps1", self.eps1)?;
        check_cap(self.order_cap(), self.samples)
    }
}

fn check_cap(cap: usize, samples: usize) -> Result<()> {
    let max = max_order(samples);
    if cap == 0 {
        Err(HansenError::OrderTooLow(cap))
    } else if cap > max {
        Err(HansenError::OrderTooHigh {
            order: cap,
            max,
            samples,
        })
    } else {
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HansenTable {
    pub request: HansenRequest,
    /// Shared truncation order `s`.
    pub order: usize,
    /// `A_0..=A_s`
    pub a: Vec<f64>,
    /// `B_1..=B_s`
    pub b: Vec<f64>,
    pub stats_a: FitStatistics,
    pub stats_b: FitStatistics,
    /// The series had not visibly decayed at the truncation order.
    pub aliasing_risk: bool,
}

impl HansenTable {
    /// `B_k`, absent for `k = 0`.
    pub fn b_at(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.b.get(i).copied())
    }
}

/// Standard error of a coefficient in a single-parity series of order `s`,
/// which carries `s + 1` fitted coefficients.
pub fn selection_standard_error(delta_sq: f64, samples: usize, order: usize) -> f64 {
    let l = samples as f64;
    (2.0 * delta_sq / (l * (l - order as f64 - 1.0))).sqrt()
}

/// Smallest order `s >= 1` whose coefficient standard error
/// [`selection_standard_error`] is at most `tol`, or `max_order` if none is.
///
/// Residual sums for every candidate order come from one analysis at
/// `max_order`, stripping one harmonic at a time from the residual vector.
pub fn select_order(u: &[f64], tol: f64, max_order: usize) -> Result<usize> {
    check_tolerance("tol", tol)?;
    check_cap(max_order, u.len())?;
    let series = analyze(u, max_order)?;
    let table = UnitCircle::new(u.len());

    let mut residual: Vec<f64> = u.iter().map(|v| v - series.a(0)).collect();
    for order in 1..=max_order {
        let (a, b) = (series.a(order), series.b(order));
        for (k, r) in residual.iter_mut().enumerate() {
            let (c, s) = table.at(order * k);
            *r -= a * c + b * s;
        }
        let delta_sq: f64 = residual.iter().map(|r| r * r).sum();
        if selection_standard_error(delta_sq, u.len(), order) <= tol {
            return Ok(order);
        }
    }
    Ok(max_order)
}

pub fn compute_hansen_table(request: &HansenRequest) -> Result<HansenTable> {
    request.validate()?;
    let grid = evaluate_signals(
        request.eccentricity,
        request.n,
        request.m,
        request.samples,
        request.eps1,
    )?;
    compute_from_grid(request, &grid)
}

/// Builds the table from signals already sampled for `request`.
pub fn compute_from_grid(request: &HansenRequest, grid: &SignalGrid) -> Result<HansenTable> {
    request.validate()?;
    assert_eq!(grid.len(), request.samples, "grid does not match request");

    let cap = request.order_cap();
    let order = select_order(&grid.cosine, request.tol, cap)?.max(select_order(
        &grid.sine,
        request.tol,
        cap,
    )?);

    let cosine_fit = analyze(&grid.cosine, order)?;
    let sine_fit = analyze(&grid.sine, order)?;
    let stats_a = FitStatistics::compute(&grid.cosine, &cosine_fit)?;
    let stats_b = FitStatistics::compute(&grid.sine, &sine_fit)?;

    let a = cosine_fit.cosine;
    let peak = a.iter().fold(0.0f64, |acc, c| acc.max(c.abs()));
    let aliasing_risk = order > request.m as usize && a[order].abs() > ALIASING_RATIO * peak;
    if aliasing_risk {
        log::warn!(
            "series for e = {}, n = {}, m = {} has not decayed at order {} (|A_s| = {:e}); \
             consider more samples",
            request.eccentricity,
            request.n,
            request.m,
            order,
            a[order].abs()
        );
    }

    Ok(HansenTable {
        request: *request,
        order,
        a,
        b: sine_fit.sine,
        stats_a,
        stats_b,
        aliasing_risk,
    })
}
