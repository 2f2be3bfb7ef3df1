//! Digamma at rational arguments via Gauss's theorem, plus an independent
//! asymptotic-series oracle used for cross-checks.

use num_rational::Ratio;
use num_traits::ToPrimitive;

use super::{bernoulli::bernoulli_number, EULER_GAMMA};
use crate::error::{Error, Result};

/// psi(a) for rational a in (0, 1], by Gauss's digamma theorem.
pub fn digamma_rational(a: Ratio<i64>) -> Result<f64> {
    if a <= Ratio::new(0, 1) || a > Ratio::new(1, 1) {
        return Err(Error::Domain(format!(
            "digamma_rational needs 0 < a <= 1, got {a}"
        )));
    }
    if a == Ratio::new(1, 1) {
        return Ok(-EULER_GAMMA);
    }
    let p = *a.numer() as f64;
    let q = *a.denom() as f64;
    let pi = std::f64::consts::PI;
    let mut v = -EULER_GAMMA - (2.0 * q).ln() - 0.5 * pi * (pi * p / q).tan().recip();
    let half = (*a.denom() - 1) / 2;
    for l in 1..=half {
        let lf = l as f64;
        v += 2.0 * (2.0 * pi * lf * p / q).cos() * (pi * lf / q).sin().ln();
    }
    Ok(v)
}

/// Independent oracle: recurrence shift to x >= 24, then the asymptotic
/// series psi(x) ~ ln x - 1/(2x) - sum_v B_{2v} / (2v x^{2v}).
pub fn digamma_series_oracle(x: f64) -> f64 {
    assert!(x > 0.0);
    let mut shift = 0.0;
    let mut y = x;
    while y < 24.0 {
        shift -= 1.0 / y;
        y += 1.0;
    }
    let mut v = y.ln() - 0.5 / y;
    let y2 = y * y;
    let mut ypow = y2;
    for vtx in 1..=25usize {
        let b = bernoulli_number(2 * vtx).to_f64().unwrap();
        v -= b / (2.0 * vtx as f64 * ypow);
        ypow *= y2;
    }
    v + shift
}
