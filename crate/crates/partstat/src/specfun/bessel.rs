//! Half-integer modified Bessel functions and the order derivative at 1/2.
//!
//! I_{1/2}(x) = sqrt(2/(pi x)) sinh x,
//! I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh x / x),
//! dI/dkappa at kappa = 1/2:
//!   II_{1/2}(x) = -(E(2x) e^x + F(2x) e^{-x}) / sqrt(2 pi x),
//! with E, F the scaled exponential integrals. Each has an e^{-x}-scaled
//! companion for use inside exponentially large sums, and a general-order
//! power series kept only as a cross-check oracle.

use num_complex::Complex64;

use super::expint::{e1_scaled_complex, ei_scaled_complex};
use super::gamma::gamma;
use crate::error::{Error, Result};

fn check_positive(x: f64, what: &str) -> Result<()> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("{what} needs x > 0, got {x}")));
    }
    Ok(())
}

/// I_{1/2}(x) for x > 0.
pub fn bessel_i_half(x: f64) -> Result<f64> {
    check_positive(x, "bessel_i_half")?;
    Ok((2.0 / (std::f64::consts::PI * x)).sqrt() * x.sinh())
}

/// I_{3/2}(x) for x > 0.
pub fn bessel_i_3half(x: f64) -> Result<f64> {
    check_positive(x, "bessel_i_3half")?;
    Ok((2.0 / (std::f64::consts::PI * x)).sqrt() * (x.cosh() - x.sinh() / x))
}

/// e^{-x} I_{1/2}(x): overflow-safe for any x > 0.
pub fn bessel_i_half_scaled(x: f64) -> f64 {
    (1.0 - (-2.0 * x).exp()) / (2.0 * std::f64::consts::PI * x).sqrt()
}

/// e^{-x} I_{3/2}(x).
pub fn bessel_i_3half_scaled(x: f64) -> f64 {
    let em = (-2.0 * x).exp();
    ((1.0 + em) - (1.0 - em) / x) / (2.0 * std::f64::consts::PI * x).sqrt()
}

/// Order derivative II_{1/2}(x) = d I_kappa(x)/d kappa at kappa = 1/2.
pub fn bessel_i_order_derivative_half(x: f64) -> Result<f64> {
    check_positive(x, "bessel_i_order_derivative_half")?;
    Ok(bessel_i_order_derivative_half_scaled(x) * x.exp())
}

/// e^{-x} II_{1/2}(x).
pub fn bessel_i_order_derivative_half_scaled(x: f64) -> f64 {
    let e = ei_scaled_complex(Complex64::new(2.0 * x, 0.0)).re;
    let f = e1_scaled_complex(Complex64::new(2.0 * x, 0.0)).re;
    -(e + f * (-2.0 * x).exp()) / (2.0 * std::f64::consts::PI * x).sqrt()
}

/// Power-series oracle I_kappa(x) = sum_m (x/2)^{2m+kappa} / (m! Gamma(m+kappa+1)).
///
/// Truncates when a term drops below 1e-18 of the partial sum; intended for
/// cross-checks at moderate x, not for production evaluation.
pub fn bessel_i_series(kappa: f64, x: f64) -> f64 {
    let half = x / 2.0;
    let mut term = half.powf(kappa) / gamma(kappa + 1.0);
    let mut sum = term;
    for m in 1..500 {
        let mf = m as f64;
        term *= half * half / (mf * (mf + kappa));
        sum += term;
        if term.abs() < 1e-18 * sum.abs() {
            break;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_half_at_one() {
        let v = bessel_i_half(1.0).unwrap();
        assert!((v - 0.937_674_888_245_488_6).abs() < 1e-12, "{v}");
    }

    #[test]
    fn elementary_forms_vs_series_oracle() {
        for i in 0..60 {
            let x = 0.1 + 0.5 * i as f64;
            if x > 30.0 {
                break;
            }
            let a = bessel_i_half(x).unwrap();
            let b = bessel_i_series(0.5, x);
            assert!((a - b).abs() <= 1e-12 * b.abs(), "x={x}: {a} vs {b}");
            let a = bessel_i_3half(x).unwrap();
            let b = bessel_i_series(1.5, x);
            assert!((a - b).abs() <= 1e-12 * b.abs(), "x={x}: {a} vs {b}");
        }
    }

    #[test]
    fn ratio_tends_to_one() {
        let x = 50.0;
        let r = bessel_i_3half(x).unwrap() / bessel_i_half(x).unwrap();
        assert!((r - 1.0).abs() < 0.03);
    }

    #[test]
    fn scaled_consistency() {
        for &x in &[0.3, 2.0, 10.0, 80.0] {
            let a = bessel_i_half(x).unwrap() * (-x).exp();
            assert!((a - bessel_i_half_scaled(x)).abs() < 1e-14 * a.abs());
            let a = bessel_i_3half(x).unwrap() * (-x).exp();
            assert!((a - bessel_i_3half_scaled(x)).abs() < 1e-13 * a.abs().max(1e-3));
        }
    }

    #[test]
    fn order_derivative_vs_finite_difference() {
        // (I_{1/2+e} - I_{1/2-e})/(2e) with the series oracle
        let x = 3.0;
        let eps = 1e-5;
        let fd = (bessel_i_series(0.5 + eps, x) - bessel_i_series(0.5 - eps, x)) / (2.0 * eps);
        let v = bessel_i_order_derivative_half(x).unwrap();
        assert!((v - fd).abs() < 1e-6, "{v} vs {fd}");
    }

    #[test]
    fn order_derivative_negative() {
        for &x in &[0.2, 1.0, 5.0, 25.0, 100.0] {
            assert!(bessel_i_order_derivative_half_scaled(x) < 0.0, "x={x}");
        }
    }

    #[test]
    fn order_derivative_large_x_asymptotic() {
        // -sqrt(2 pi x) e^{-x} II_{1/2}(x) -> E(2x) ~ 1/(2x)
        let x = 100.0;
        let lhs =
            -(2.0 * std::f64::consts::PI * x).sqrt() * bessel_i_order_derivative_half_scaled(x);
        assert!((lhs - 1.0 / (2.0 * x)).abs() < 0.02 / (2.0 * x), "{lhs}");
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_i_half(0.0).is_err());
        assert!(bessel_i_3half(-1.0).is_err());
        assert!(bessel_i_order_derivative_half(0.0).is_err());
    }
}
