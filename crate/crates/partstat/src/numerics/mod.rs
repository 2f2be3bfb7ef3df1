//! Shared numerical infrastructure: quadrature, log-scaled magnitudes,
//! exact root-of-unity phases, and 1-D Lerch/Hurwitz lattice sums used to
//! accelerate the slowly convergent 2-D lattice tails.

pub mod lattice;
pub mod phase;
pub mod quad;
pub mod scaled;

use num_complex::Complex64;

/// Laurent coefficients: cot y - 1/y = -(y/3 + y^3/45 + 2 y^5/945 + ...),
/// i.e. 2^{2n} |B_{2n}| / (2n)!.
pub const COT_SERIES: [f64; 8] = [
    1.0 / 3.0,
    1.0 / 45.0,
    2.0 / 945.0,
    1.0 / 4725.0,
    2.0 / 93555.0,
    1382.0 / 638512875.0,
    4.0 / 18243225.0,
    3617.0 / 162820783125.0,
];

/// cot(y) - 1/y, stable near y = 0 (vanishes there).
pub fn cot_minus_inv(y: f64) -> f64 {
    if y == 0.0 {
        return 0.0;
    }
    if y.abs() < 0.35 {
        let y2 = y * y;
        let mut acc = 0.0;
        let mut pow = y;
        for c in COT_SERIES {
            acc -= c * pow;
            pow *= y2;
        }
        acc
    } else {
        1.0 / y.tan() - 1.0 / y
    }
}

/// Complex variant of [`cot_minus_inv`].
pub fn cot_minus_inv_complex(y: Complex64) -> Complex64 {
    if y.norm() == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if y.norm() < 0.35 {
        let y2 = y * y;
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pow = y;
        for c in COT_SERIES {
            acc -= pow * c;
            pow *= y2;
        }
        acc
    } else {
        y.cos() / y.sin() - y.inv()
    }
}
