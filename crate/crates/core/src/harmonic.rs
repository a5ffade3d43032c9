//! Harmonic analysis of a periodic signal sampled at `x_k = 2πk/l`.
//!
//! On this grid the normal equations of the trigonometric least-squares fit
//! are diagonal, so every coefficient is a single weighted sum. The sums are
//! evaluated with the backward three-term recursion
//!
//! ```text
//! F_k = u_k + 2 cos(x_j) F_{k+1} - F_{k+2},   F_l = F_{l+1} = 0,   k = l-1 .. 1
//! a_j = (μ/l) (u_0 + F_1 cos x_j - F_2),      μ = 1 for j = 0, else 2
//! b_j = (2/l) F_1 sin x_j
//! ```
//!
//! [`direct_coefficients`] evaluates the same sums term by term and serves as
//! the reference for the recursion.

use std::f64::consts::TAU;

use serde::{Deserialize, Serialize};

use crate::error::{HansenError, Result};
use crate::sampling::MIN_SAMPLES;

/// Largest order `s` with `2s + 1 <= l`.
pub fn max_order(samples: usize) -> usize {
    samples.saturating_sub(1) / 2
}

/// Trigonometric series `a_0 + Σ a_j cos jx + Σ b_j sin jx`, `j = 1..=s`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HarmonicSeries {
    /// `a_0..=a_s`
    pub cosine: Vec<f64>,
    /// `b_1..=b_s`
    pub sine: Vec<f64>,
    /// Number of grid points the series was fitted on.
    pub samples: usize,
}

impl HarmonicSeries {
    pub fn order(&self) -> usize {
        self.sine.len()
    }

    pub fn a(&self, j: usize) -> f64 {
        self.cosine[j]
    }

    /// `b_q` for `q >= 1`.
    pub fn b(&self, q: usize) -> f64 {
        assert!(q >= 1, "sine coefficients start at q = 1");
        self.sine[q - 1]
    }

    /// Keeps harmonics `0..=order` only.
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Self {
            cosine: self.cosine[..=order].to_vec(),
            sine: self.sine[..order].to_vec(),
            samples: self.samples,
        }
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let mut value = self.cosine[0];
        for j in 1..=self.order() {
            let (s, c) = (j as f64 * x).sin_cos();
            value += self.cosine[j] * c + self.sine[j - 1] * s;
        }
        value
    }

    /// Model values on the `l`-point grid the series was fitted on.
    pub fn evaluate_on_grid(&self) -> Vec<f64> {
        let table = UnitCircle::new(self.samples);
        (0..self.samples)
            .map(|k| {
                let mut value = self.cosine[0];
                for j in 1..=self.order() {
                    let (c, s) = table.at(j * k);
                    value += self.cosine[j] * c + self.sine[j - 1] * s;
                }
                value
            })
            .collect()
    }
}

/// `cos` and `sin` of `2πi/l`, indexed modulo `l`.
pub(crate) struct UnitCircle {
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl UnitCircle {
    pub(crate) fn new(samples: usize) -> Self {
        let l = samples as f64;
        let (sin, cos) = (0..samples).map(|i| (TAU * i as f64 / l).sin_cos()).unzip();
        Self { cos, sin }
    }

    #[inline]
    pub(crate) fn at(&self, index: usize) -> (f64, f64) {
        let i = index % self.cos.len();
        (self.cos[i], self.sin[i])
    }
}

fn check_order(samples: usize, order: usize) -> Result<()> {
    if samples < MIN_SAMPLES {
        return Err(HansenError::InvalidSampleCount(samples, MIN_SAMPLES));
    }
    let max = max_order(samples);
    if order > max {
        return Err(HansenError::OrderTooHigh {
            order,
            max,
            samples,
        });
    }
    Ok(())
}

/// Runs the backward recursion for harmonic `j` and returns `(F_1, F_2)`.
///
/// `u_0` never enters the recursion.
pub fn goertzel_pass(u: &[f64], j: usize) -> (f64, f64) {
    let l = u.len();
    let twice_cos = 2.0 * (TAU * j as f64 / l as f64).cos();
    let (mut f1, mut f2) = (0.0, 0.0);
    for &value in u.iter().skip(1).rev() {
        let f0 = value + twice_cos * f1 - f2;
        f2 = f1;
        f1 = f0;
    }
    (f1, f2)
}

/// `(Σ u_k cos(k x_j), Σ u_k sin(k x_j))` through the recursion, in the
/// difference form of Reinsch.
///
/// The plain recursion loses about `l²ε` near `x_j = 0` and `x_j = π`, where
/// `2 cos x_j` is close to `±2`. Carrying `D_k = F_k ∓ F_{k+1}` together with
/// `λ = 2 cos x_j ∓ 2`, computed from `sin²(x_j/2)` or `cos²(x_j/2)`, keeps
/// the error near `lε` for every harmonic. The sequence `F_k` is the same one
/// [`goertzel_pass`] produces.
fn recursion_sums(u: &[f64], j: usize) -> (f64, f64) {
    let half = std::f64::consts::PI * j as f64 / u.len() as f64;
    let (sin_x, cos_x) = (2.0 * half).sin_cos();
    let (mut f1, mut d1) = (0.0, 0.0);
    let cosine_sum = if cos_x >= 0.0 {
        let lambda = -4.0 * half.sin().powi(2);
        for &value in u.iter().skip(1).rev() {
            d1 += value + lambda * f1;
            f1 += d1;
        }
        // u_0 + F_1 cos x - F_2 with F_2 = F_1 - D_1
        u[0] + d1 + 0.5 * lambda * f1
    } else {
        let lambda = 4.0 * half.cos().powi(2);
        for &value in u.iter().skip(1).rev() {
            d1 = value + lambda * f1 - d1;
            f1 = d1 - f1;
        }
        // u_0 + F_1 cos x - F_2 with F_2 = D_1 - F_1
        u[0] - d1 + 0.5 * lambda * f1
    };
    (cosine_sum, f1 * sin_x)
}

/// Cosine coefficient `a_j` through the recursion.
pub fn coefficient_a(u: &[f64], j: usize) -> f64 {
    let weight = if j == 0 { 1.0 } else { 2.0 };
    weight / u.len() as f64 * recursion_sums(u, j).0
}

/// Sine coefficient `b_q` through the recursion.
pub fn coefficient_b(u: &[f64], q: usize) -> f64 {
    2.0 / u.len() as f64 * recursion_sums(u, q).1
}

/// Fits a series of order `s` to `u` with the recursive evaluation.
pub fn analyze(u: &[f64], order: usize) -> Result<HarmonicSeries> {
    check_order(u.len(), order)?;
    let scale = 2.0 / u.len() as f64;
    let (mut cosine, mut sine) = (Vec::with_capacity(order + 1), Vec::with_capacity(order));
    cosine.push(recursion_sums(u, 0).0 / u.len() as f64);
    for j in 1..=order {
        let (c, s) = recursion_sums(u, j);
        cosine.push(scale * c);
        sine.push(scale * s);
    }
    Ok(HarmonicSeries {
        cosine,
        sine,
        samples: u.len(),
    })
}

/// Fits a series of order `s` by summing `u_k cos(j x_k)` and
/// `u_k sin(q x_k)` term by term.
pub fn direct_coefficients(u: &[f64], order: usize) -> Result<HarmonicSeries> {
    check_order(u.len(), order)?;
    let l = u.len();
    let table = UnitCircle::new(l);
    let scale = 2.0 / l as f64;

    let mut cosine = Vec::with_capacity(order + 1);
    let mut sine = Vec::with_capacity(order);
    for j in 0..=order {
        let (mut c_sum, mut s_sum) = (0.0, 0.0);
        for (k, &value) in u.iter().enumerate() {
            let (c, s) = table.at(j * k);
            c_sum += value * c;
            s_sum += value * s;
        }
        if j == 0 {
            cosine.push(c_sum / l as f64);
        } else {
            cosine.push(scale * c_sum);
            sine.push(scale * s_sum);
        }
    }
    Ok(HarmonicSeries {
        cosine,
        sine,
        samples: l,
    })
}

/// Deviation of the grid's normal-equation matrix from `diag(l, l/2, ..., l/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalityReport {
    /// max `|Σ cos(i x) cos(j x)|` over `i != j`
    pub cos_cos_off_diagonal: f64,
    /// max `|Σ cos(j x) sin(q x)|` over all pairs
    pub cos_sin: f64,
    /// max `|Σ sin(q x) sin(j x)|` over `q != j`
    pub sin_sin_off_diagonal: f64,
    /// max `|Σ cos² − l/2|` and `|Σ sin² − l/2|` over `j >= 1`
    pub diagonal_deviation: f64,
    /// `Σ cos(0 x)`, equal to `l`
    pub constant_sum: f64,
}

/// Evaluates the normal-equation sums of an order-`s` fit on the `l`-point grid.
pub fn orthogonality_sums(samples: usize, order: usize) -> Result<OrthogonalityReport> {
    check_order(samples, order)?;
    let l = samples as f64;
    let grid: Vec<f64> = (0..samples).map(|k| TAU * k as f64 / l).collect();
    let sum = |f: &dyn Fn(f64) -> f64| grid.iter().map(|&x| f(x)).sum::<f64>();

    let mut report = OrthogonalityReport {
        cos_cos_off_diagonal: 0.0,
        cos_sin: 0.0,
        sin_sin_off_diagonal: 0.0,
        diagonal_deviation: 0.0,
        constant_sum: sum(&|_| 1.0),
    };
    for i in 0..=order {
        let fi = i as f64;
        for j in 0..=order {
            let fj = j as f64;
            let cc = sum(&|x| (fi * x).cos() * (fj * x).cos());
            let cs = sum(&|x| (fj * x).cos() * (fi * x).sin());
            let ss = sum(&|x| (fi * x).sin() * (fj * x).sin());
            report.cos_sin = report.cos_sin.max(cs.abs());
            if i == j {
                if i >= 1 {
                    let deviation = (cc - l / 2.0).abs().max((ss - l / 2.0).abs());
                    report.diagonal_deviation = report.diagonal_deviation.max(deviation);
                }
            } else {
                report.cos_cos_off_diagonal = report.cos_cos_off_diagonal.max(cc.abs());
                if i >= 1 && j >= 1 {
                    report.sin_sin_off_diagonal = report.sin_sin_off_diagonal.max(ss.abs());
                }
            }
        }
    }
    Ok(report)
}
