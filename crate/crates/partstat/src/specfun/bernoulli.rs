//! Bernoulli numbers and polynomials, exact and floating-point.
//!
//! Convention: B_1 = B_1(0) = -1/2, forced by the generating identity
//! t e^{tx}/(e^t - 1) = sum_l B_l(x) t^l / l!.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, ToPrimitive, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};

/// Largest index kept exactly; enough for every a_{R,r,l} with l <= 64.
pub const MAX_EXACT_INDEX: usize = 64;

static CACHE: Lazy<Mutex<Vec<BigRational>>> = Lazy::new(|| Mutex::new(vec![BigRational::one()]));

fn big_binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact Bernoulli number B_j.
pub fn bernoulli_number(j: usize) -> BigRational {
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= j {
        let m = cache.len();
        // sum_{i=0}^{m} C(m+1, i) B_i = 0 for m >= 1
        let mut acc = BigRational::zero();
        for (i, b) in cache.iter().enumerate() {
            acc += BigRational::from(big_binomial(m + 1, i)) * b;
        }
        let bm = -acc / BigRational::from(BigInt::from(m as i64 + 1));
        cache.push(bm);
    }
    cache[j].clone()
}

/// B_l(x) evaluated in double precision from exact coefficients.
pub fn bernoulli_poly(l: usize, x: f64) -> f64 {
    let mut acc = 0.0;
    let mut xpow = 1.0;
    // sum_{j=0}^{l} C(l, j) B_j x^{l-j}, accumulated from j = l downward
    for j in (0..=l).rev() {
        let c = big_binomial(l, j).to_f64().unwrap() * bernoulli_number(j).to_f64().unwrap();
        acc += c * xpow;
        xpow *= x;
    }
    acc
}

/// Periodized variant B~_l(x) = B_l(x - floor(x)).
pub fn bernoulli_poly_periodized(l: usize, x: f64) -> f64 {
    bernoulli_poly(l, x - x.floor())
}

/// Exact B_l(x) at a rational point.
pub fn bernoulli_poly_rational(l: usize, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    let mut xpow = BigRational::one();
    for j in (0..=l).rev() {
        acc += BigRational::from(big_binomial(l, j)) * bernoulli_number(j) * &xpow;
        xpow *= x;
    }
    acc
}

/// Exact B_l(x) for small rationals, returned as a machine rational.
pub fn bernoulli_poly_ratio(l: usize, x: Ratio<i64>) -> Result<Ratio<i64>> {
    let big = bernoulli_poly_rational(
        l,
        &BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom())),
    );
    let n = big
        .numer()
        .to_i64()
        .ok_or_else(|| Error::Domain("bernoulli overflow".into()))?;
    let d = big
        .denom()
        .to_i64()
        .ok_or_else(|| Error::Domain("bernoulli overflow".into()))?;
    Ok(Ratio::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn br(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn first_values() {
        assert_eq!(bernoulli_number(0), br(1, 1));
        assert_eq!(bernoulli_number(1), br(-1, 2));
        assert_eq!(bernoulli_number(2), br(1, 6));
        assert_eq!(bernoulli_number(3), br(0, 1));
        assert_eq!(bernoulli_number(4), br(-1, 30));
        assert_eq!(bernoulli_number(12), br(-691, 2730));
    }

    #[test]
    fn odd_vanish() {
        for j in (5..=63).step_by(2) {
            assert!(bernoulli_number(j).is_zero(), "B_{j} should vanish");
        }
    }

    #[test]
    fn poly_values() {
        // B_1(x) = x - 1/2
        assert!((bernoulli_poly(1, 0.7) - 0.2).abs() < 1e-15);
        // B_2(0) = B_2 = 1/6
        assert!((bernoulli_poly(2, 0.0) - 1.0 / 6.0).abs() < 1e-15);
        // B_2(x) = x^2 - x + 1/6
        assert!((bernoulli_poly(2, 0.3) - (0.09 - 0.3 + 1.0 / 6.0)).abs() < 1e-15);
    }

    #[test]
    fn reflection_property() {
        // B_l(1-x) = (-1)^l B_l(x)
        for l in 0..=8 {
            for i in 0..25 {
                let x = 0.04 * i as f64;
                let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                let lhs = bernoulli_poly(l, 1.0 - x);
                let rhs = sign * bernoulli_poly(l, x);
                assert!((lhs - rhs).abs() < 1e-12 * (1.0 + rhs.abs()), "l={l} x={x}");
            }
        }
    }

    #[test]
    fn fourier_identity_b2() {
        // B_l(x) = -l! sum_{m>=1} 2 cos(2 pi m x - pi l / 2) / (2 pi m)^l
        // at l = 2, x = 0.3, truncated at 1e5 terms.
        let x = 0.3f64;
        let mut sum = 0.0;
        for m in 1..=100_000 {
            let mf = m as f64;
            sum += 2.0 * (2.0 * std::f64::consts::PI * mf * x - std::f64::consts::PI).cos()
                / (2.0 * std::f64::consts::PI * mf).powi(2);
        }
        let fourier = -2.0 * sum;
        assert!((fourier - bernoulli_poly(2, x)).abs() < 1e-8);
    }

    #[test]
    fn exact_rational_poly() {
        // B_2(1/3) = 1/9 - 1/3 + 1/6 = -1/18
        let v = bernoulli_poly_rational(2, &br(1, 3));
        assert_eq!(v, br(-1, 18));
    }
}
