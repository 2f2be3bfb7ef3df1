//! Shifted Euler-Maclaurin formula, as a numerical both-sides checker.
//!
//! For a in [0,1], integers M1 < M2 and f with L continuous derivatives:
//!
//!   sum_{m=M1}^{M2-1} f(m+a) = int_{M1}^{M2} f(x) dx
//!     - sum_{m=0}^{L-1} B_{m+1}(a)/(m+1)! (f^{(m)}(M1) - f^{(m)}(M2))
//!     + (-1)^{L+1}/L! int_{M1}^{M2} B~_L(x-a) f^{(L)}(x) dx.
//!
//! A complex variant sums f((m+a)z) for holomorphic, decaying f along a
//! rotated ray z and compares against the limit form with integrals over
//! [0, infinity).

use num_complex::Complex64;
use num_traits::ToPrimitive;

use super::bernoulli::{bernoulli_poly, bernoulli_poly_periodized};
use crate::error::{Error, Result};
use crate::numerics::quad;

/// Real-valued function with derivatives up to `max_order`.
pub trait SmoothFn {
    /// d^order f / dx^order at x.
    fn eval(&self, order: usize, x: f64) -> f64;
    fn max_order(&self) -> usize;
}

/// Holomorphic function with derivatives up to `max_order`.
pub trait ComplexSmoothFn {
    fn eval(&self, order: usize, w: Complex64) -> Complex64;
    fn max_order(&self) -> usize;
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// |LHS - RHS| of the shifted Euler-Maclaurin formula.
pub fn euler_maclaurin_residual(
    f: &dyn SmoothFn,
    a: f64,
    m1: i64,
    m2: i64,
    big_l: usize,
) -> Result<f64> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain(format!("shift a must lie in [0,1], got {a}")));
    }
    if m2 < m1 {
        return Err(Error::Domain(format!("need M2 >= M1, got {m1}, {m2}")));
    }
    if big_l < 1 || big_l > f.max_order() {
        return Err(Error::Contract(format!(
            "derivative order L = {big_l} outside the supplied range 1..={}",
            f.max_order()
        )));
    }
    if m1 == m2 {
        return Ok(0.0);
    }

    let lhs: f64 = (m1..m2).map(|m| f.eval(0, m as f64 + a)).sum();

    let mut int_f = 0.0;
    let mut int_rem = 0.0;
    for m in m1..m2 {
        let lo = m as f64;
        int_f += quad::composite(lo, lo + 1.0, 4, 16, |x| f.eval(0, x));
        // B~_L(x - a) is smooth except at x = m + a; split there
        let split = lo + a;
        let mut g = |x: f64| bernoulli_poly_periodized(big_l, x - a) * f.eval(big_l, x);
        if a > 0.0 && a < 1.0 {
            int_rem += quad::composite(lo, split, 2, 16, &mut g);
            int_rem += quad::composite(split, lo + 1.0, 2, 16, &mut g);
        } else {
            int_rem += quad::composite(lo, lo + 1.0, 4, 16, &mut g);
        }
    }

    let mut boundary = 0.0;
    for m in 0..big_l {
        boundary += bernoulli_poly(m + 1, a) / factorial(m + 1)
            * (f.eval(m, m1 as f64) - f.eval(m, m2 as f64));
    }

    let sign = if big_l % 2 == 0 { -1.0 } else { 1.0 };
    let rhs = int_f - boundary + sign / factorial(big_l) * int_rem;
    Ok((lhs - rhs).abs())
}

/// |LHS - RHS| of the rotated-ray variant for holomorphic f:
///
///   sum_{m>=0} f((m+a)z) = (1/z) int_0^inf f(x) dx
///     - sum_{m=0}^{L-1} B_{m+1}(a)/(m+1)! f^{(m)}(0) z^m
///     + (-1)^{L+1} z^L / L! int_0^inf B~_L(x-a) f^{(L)}(xz) dx.
///
/// `x_cut` truncates the integrals and the sum; the caller guarantees f and
/// its derivatives are negligible beyond |w| = x_cut.
pub fn euler_maclaurin_complex_residual(
    f: &dyn ComplexSmoothFn,
    a: f64,
    big_l: usize,
    z: Complex64,
    x_cut: f64,
) -> Result<f64> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::Domain(format!("shift a must lie in [0,1], got {a}")));
    }
    if big_l < 1 || big_l > f.max_order() {
        return Err(Error::Contract(
            "derivative order outside supplied range".into(),
        ));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("z must be nonzero".into()));
    }

    let mut lhs = Complex64::new(0.0, 0.0);
    let mut m = 0usize;
    loop {
        let w = z * (m as f64 + a);
        if w.norm() > x_cut {
            break;
        }
        lhs += f.eval(0, w);
        m += 1;
        if m > 4_000_000 {
            return Err(Error::Domain("ray sum failed to decay before x_cut".into()));
        }
    }

    let units = x_cut.ceil() as i64;
    let mut int_f = Complex64::new(0.0, 0.0);
    let mut int_rem = Complex64::new(0.0, 0.0);
    for u in 0..units {
        let lo = u as f64;
        int_f +=
            quad::composite_complex(lo, lo + 1.0, 4, 16, |x| f.eval(0, Complex64::new(x, 0.0)));
        let mut g = |x: f64| bernoulli_poly_periodized(big_l, x - a) * f.eval(big_l, z * x);
        let split = lo + a;
        if a > 0.0 && a < 1.0 {
            int_rem += quad::composite_complex(lo, split, 2, 16, &mut g);
            int_rem += quad::composite_complex(split, lo + 1.0, 2, 16, &mut g);
        } else {
            int_rem += quad::composite_complex(lo, lo + 1.0, 4, 16, &mut g);
        }
    }

    let mut boundary = Complex64::new(0.0, 0.0);
    let mut zpow = Complex64::new(1.0, 0.0);
    for m in 0..big_l {
        boundary += f.eval(m, Complex64::new(0.0, 0.0)) * bernoulli_poly(m + 1, a)
            / factorial(m + 1)
            * zpow;
        zpow *= z;
    }

    let sign = if big_l % 2 == 0 { -1.0 } else { 1.0 };
    let z_l = z.powi(big_l.to_i32().unwrap());
    let rhs = int_f / z - boundary + z_l * int_rem * sign / factorial(big_l);
    Ok((lhs - rhs).norm())
}
