//! Special functions consumed by the asymptotic formulas: Bernoulli numbers
//! and polynomials, the sawtooth ((x)), digamma at rational arguments,
//! half-integer Bessel I and its order derivative, scaled exponential
//! integrals, and a shifted Euler-Maclaurin checker.

pub mod bernoulli;
pub mod bessel;
pub mod digamma;
pub mod euler_maclaurin;
pub mod expint;
pub mod gamma;

pub use bernoulli::{
    bernoulli_number, bernoulli_poly, bernoulli_poly_periodized, bernoulli_poly_rational,
};
pub use bessel::{
    bessel_i_3half, bessel_i_3half_scaled, bessel_i_half, bessel_i_half_scaled,
    bessel_i_order_derivative_half, bessel_i_order_derivative_half_scaled, bessel_i_series,
};
pub use digamma::{digamma_rational, digamma_series_oracle};
pub use euler_maclaurin::{euler_maclaurin_residual, ComplexSmoothFn, SmoothFn};
pub use expint::{e1_scaled_complex, ei_scaled_complex, exp_integrals, ExpIntegrals};

use num_rational::Ratio;
use num_traits::Zero;

/// Euler-Mascheroni constant, gamma = -psi(1).
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// The sawtooth ((x)): x - floor(x) - 1/2 off the integers, 0 on them.
pub fn sawtooth(x: f64) -> f64 {
    let f = x - x.floor();
    if f == 0.0 {
        0.0
    } else {
        f - 0.5
    }
}

/// Exact-rational sawtooth.
pub fn sawtooth_rational(x: Ratio<i64>) -> Ratio<i64> {
    let f = x - x.floor();
    if f.is_zero() {
        Ratio::zero()
    } else {
        f - Ratio::new(1, 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sawtooth_values() {
        assert_eq!(sawtooth(0.0), 0.0);
        assert_eq!(sawtooth(3.0), 0.0);
        assert!((sawtooth(0.25) + 0.25).abs() < 1e-16);
        assert!((sawtooth(-0.25) - 0.25).abs() < 1e-16);
    }

    #[test]
    fn sawtooth_exact() {
        assert_eq!(sawtooth_rational(Ratio::new(1, 4)), Ratio::new(-1, 4));
        assert_eq!(sawtooth_rational(Ratio::new(-1, 4)), Ratio::new(1, 4));
        assert_eq!(sawtooth_rational(Ratio::new(7, 1)), Ratio::new(0, 1));
    }

    #[test]
    fn sawtooth_periodicity_and_oddness() {
        for i in 0..200 {
            let x = -3.0 + 0.031 * i as f64;
            assert!((sawtooth(x + 1.0) - sawtooth(x)).abs() < 1e-12);
            if (x - x.round()).abs() > 1e-9 {
                assert!((sawtooth(-x) + sawtooth(x)).abs() < 1e-12);
            }
        }
    }
}
