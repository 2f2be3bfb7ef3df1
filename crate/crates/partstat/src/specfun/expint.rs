//! Exponential integrals Ei, E1 and their overflow-safe scaled forms
//! E(x) = Ei(x) e^{-x} and F(x) = E1(x) e^{x}, on the positive axis and on
//! the right complex half-plane (where the Mordell-integral closed forms
//! need them).
//!
//! Algorithm: power series for moderate |z|, continued fraction (E1) or
//! optimally truncated asymptotic series (Ei) beyond. The scaled forms never
//! overflow; the unscaled ones saturate to inf where e^x does.

use num_complex::Complex64;

use super::EULER_GAMMA;
use crate::error::{Error, Result};

/// Ei, E1 and the scaled pair at a positive real point.
#[derive(Clone, Copy, Debug)]
pub struct ExpIntegrals {
    pub ei: f64,
    pub e1: f64,
    /// E(x) = Ei(x) e^{-x}
    pub ei_scaled: f64,
    /// F(x) = E1(x) e^{x}
    pub e1_scaled: f64,
}

/// All four exponential-integral values at x > 0.
pub fn exp_integrals(x: f64) -> Result<ExpIntegrals> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("exp_integrals needs x > 0, got {x}")));
    }
    let z = Complex64::new(x, 0.0);
    let ei_s = ei_scaled_complex(z).re;
    let e1_s = e1_scaled_complex(z).re;
    Ok(ExpIntegrals {
        ei: ei_s * x.exp(),
        e1: e1_s * (-x).exp(),
        ei_scaled: ei_s,
        e1_scaled: e1_s,
    })
}

/// F(z) = e^z E1(z) for Re z > 0.
pub fn e1_scaled_complex(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "e1_scaled_complex needs Re z > 0");
    if z.norm() <= 4.0 {
        // E1(z) = -gamma - Log z + sum_{k>=1} (-1)^{k+1} z^k / (k k!)
        let mut sum = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for k in 1..=60 {
            term *= -z / k as f64;
            let add = -term / k as f64;
            sum += add;
            if add.norm() < 1e-18 * (1.0 + sum.norm()) {
                break;
            }
        }
        (sum - EULER_GAMMA - z.ln()) * z.exp()
    } else {
        // continued fraction F(z) = 1/(z+1- 1/(z+3- 4/(z+5- 9/(...)))),
        // evaluated with the modified Lentz scheme
        let tiny = 1e-300;
        let mut f = z + 1.0;
        if f.norm() == 0.0 {
            f = Complex64::new(tiny, 0.0);
        }
        let mut c = f;
        let mut d = Complex64::new(0.0, 0.0);
        for n in 1..300 {
            let a = -((n * n) as f64);
            let b = z + (2 * n + 1) as f64;
            d = b + a * d;
            if d.norm() == 0.0 {
                d = Complex64::new(tiny, 0.0);
            }
            c = b + a / c;
            if c.norm() == 0.0 {
                c = Complex64::new(tiny, 0.0);
            }
            d = d.inv();
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).norm() < 1e-16 {
                break;
            }
        }
        f.inv()
    }
}

/// E(z) = e^{-z} Ei(z) for Re z > 0.
pub fn ei_scaled_complex(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "ei_scaled_complex needs Re z > 0");
    if z.norm() <= 32.0 {
        // Ei(z) = gamma + Log z + sum_{k>=1} z^k / (k k!)
        let mut sum = Complex64::new(0.0, 0.0);
        let mut term = Complex64::new(1.0, 0.0);
        for k in 1..=160 {
            term *= z / k as f64;
            let add = term / k as f64;
            sum += add;
            if add.norm() < 1e-18 * sum.norm() && k > 4 {
                break;
            }
        }
        (sum + EULER_GAMMA + z.ln()) * (-z).exp()
    } else {
        // asymptotic: E(z) ~ sum_m m!/z^{m+1}, truncated at the smallest term
        let mut sum = Complex64::new(0.0, 0.0);
        let mut term = z.inv();
        let mut best = term.norm();
        for m in 1..=90 {
            sum += term;
            let next = term * (m as f64) / z;
            if next.norm() >= best {
                break;
            }
            best = next.norm();
            term = next;
        }
        sum
    }
}
