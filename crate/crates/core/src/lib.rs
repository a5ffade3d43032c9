//! Hansen coefficients of elliptic motion by recursive harmonic analysis.
//!
//! The pipeline samples `(r/a)^n cos(m v)` and `(r/a)^n sin(m v)` on a uniform
//! mean-anomaly grid ([`sampling`]), fits both with diagonal trigonometric
//! least squares evaluated by a three-term recursion ([`harmonic`]), selects
//! a truncation order and reports the fit statistics ([`statistics`],
//! [`series`]).
//!
//! ```
//! use hansen_core::{compute_hansen_table, HansenRequest};
//!
//! let table = compute_hansen_table(&HansenRequest::new(0.0, 3, 2)).unwrap();
//! assert!((table.a[2] - 1.0).abs() < 1e-12);
//! ```

pub mod anomaly;
pub mod error;
mod extended;
pub mod harmonic;
pub mod kepler;
pub mod sampling;
pub mod series;
pub mod statistics;

pub use anomaly::{beta, radius_ratio, true_anomaly, AnomalySample};
pub use error::{HansenError, Result};
pub use harmonic::{
    analyze, coefficient_a, coefficient_b, direct_coefficients, goertzel_pass, max_order,
    orthogonality_sums, HarmonicSeries, OrthogonalityReport,
};
pub use kepler::{battin_initial_guess, solve_kepler, KeplerSolution};
pub use sampling::{evaluate_signals, mean_anomaly_grid, SignalGrid};
pub use series::{
    compute_from_grid, compute_hansen_table, select_order, HansenRequest, HansenTable,
};
pub use statistics::{
    avg_squared_distance, fit_variance, parseval_check, probable_errors, residual_sum,
    FitStatistics, ParsevalCheck, ProbableErrors,
};
