//! Double-double re-evaluation of a fit, used to verify the closed-form
//! residual sum.
//!
//! In working precision the closed form `Σu² − (l/2)Σc²` cancels about
//! `log10(Σu²/δ²)` digits, often fourteen or more for converged tables, and
//! the rounding of every coefficient enters it at first order. Repeating the
//! fit with ~32-digit arithmetic, on a unit-circle table reduced exactly in
//! integers, leaves both forms accurate far below `1e-10 δ²`.

use twofloat::{consts::PI, TwoFloat};

/// `cos` and `sin` of `2πi/l`, `i = 0..l`, in double-double precision.
pub(crate) struct ExtendedCircle {
    cos: Vec<TwoFloat>,
    sin: Vec<TwoFloat>,
}

/// Taylor series for `|t| <= π/4`; the last term used is below `1e-34`.
fn sin_cos_reduced(t: TwoFloat) -> (TwoFloat, TwoFloat) {
    let t2 = t * t;
    let (mut sin, mut cos) = (t, TwoFloat::from(1.0));
    let (mut sin_term, mut cos_term) = (t, TwoFloat::from(1.0));
    let mut k = 1.0;
    while cos_term.hi().abs() > 1e-34 || sin_term.hi().abs() > 1e-34 {
        cos_term = -cos_term * t2 / ((2.0 * k - 1.0) * (2.0 * k));
        sin_term = -sin_term * t2 / ((2.0 * k) * (2.0 * k + 1.0));
        cos += cos_term;
        sin += sin_term;
        k += 1.0;
    }
    (sin, cos)
}

impl ExtendedCircle {
    pub(crate) fn new(samples: usize) -> Self {
        let l = samples as i64;
        let (cos, sin) = (0..l)
            .map(|i| {
                // 2πi/l = qπ/2 + t with t = π(4i − ql)/(2l), |t| <= π/4.
                let quadrant = (8 * i + l) / (2 * l);
                let numerator = 4 * i - quadrant * l;
                let t = PI * numerator as f64 / (2 * l) as f64;
                let (s, c) = sin_cos_reduced(t);
                match quadrant % 4 {
                    0 => (c, s),
                    1 => (-s, c),
                    2 => (-c, -s),
                    _ => (s, -c),
                }
            })
            .unzip();
        Self { cos, sin }
    }

    #[inline]
    fn at(&self, index: usize) -> (TwoFloat, TwoFloat) {
        let i = index % self.cos.len();
        (self.cos[i], self.sin[i])
    }
}

/// Direct and closed-form residual sums of the order-`order` fit of `u`,
/// plus `Σ u²`, all evaluated in double-double and rounded at the end.
pub(crate) fn residual_forms(u: &[f64], order: usize) -> (f64, f64, f64) {
    let l = u.len();
    let table = ExtendedCircle::new(l);
    let scale = TwoFloat::from(2.0) / l as f64;

    let energy = u
        .iter()
        .fold(TwoFloat::from(0.0), |acc, &v| acc + TwoFloat::from(v) * v);
    let mut cosine = Vec::with_capacity(order + 1);
    let mut sine = Vec::with_capacity(order + 1);
    for j in 0..=order {
        let (mut c_sum, mut s_sum) = (TwoFloat::from(0.0), TwoFloat::from(0.0));
        for (k, &value) in u.iter().enumerate() {
            let (c, s) = table.at(j * k);
            c_sum += c * value;
            s_sum += s * value;
        }
        if j == 0 {
            cosine.push(c_sum / l as f64);
            sine.push(TwoFloat::from(0.0));
        } else {
            cosine.push(c_sum * scale);
            sine.push(s_sum * scale);
        }
    }

    let mut direct = TwoFloat::from(0.0);
    for (k, &value) in u.iter().enumerate() {
        let mut residual = TwoFloat::from(value) - cosine[0];
        for j in 1..=order {
            let (c, s) = table.at(j * k);
            residual -= cosine[j] * c + sine[j] * s;
        }
        direct += residual * residual;
    }

    let mut harmonics = cosine[0] * cosine[0] * 2.0;
    for j in 1..=order {
        harmonics += cosine[j] * cosine[j] + sine[j] * sine[j];
    }
    let closed = energy - harmonics * (l as f64 / 2.0);
    (direct.into(), closed.into(), energy.into())
}
