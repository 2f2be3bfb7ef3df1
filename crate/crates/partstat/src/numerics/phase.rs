//! Exact root-of-unity phases.
//!
//! Every phase in the Kloosterman-type sums is a rational number of turns.
//! Reducing the numerator mod the denominator in integer arithmetic before
//! any trigonometry keeps phases exact for denominators in the thousands,
//! where accumulated floating-point angle reduction would drift.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;

/// e^{2 pi i num/den}, with num reduced mod den exactly first.
pub fn unit_mod(num: i64, den: i64) -> Complex64 {
    debug_assert!(den > 0);
    let r = num.rem_euclid(den);
    let angle = 2.0 * std::f64::consts::PI * (r as f64) / (den as f64);
    Complex64::new(angle.cos(), angle.sin())
}

/// e^{2 pi i t} for a rational number of turns.
pub fn unit(turns: Ratio<i64>) -> Complex64 {
    let f = frac(turns);
    unit_mod(*f.numer(), *f.denom())
}

/// Fractional part in [0, 1) of a rational.
pub fn frac(r: Ratio<i64>) -> Ratio<i64> {
    let f = r - r.floor();
    debug_assert!(!f.is_zero() || f == Ratio::zero());
    f
}

/// Table of the N-th roots of unity, e^{2 pi i j / N} for j in [0, N).
pub struct RootTable {
    pub n: i64,
    roots: Vec<Complex64>,
}

impl RootTable {
    pub fn new(n: i64) -> Self {
        assert!(n > 0);
        let roots = (0..n)
            .map(|j| {
                let angle = 2.0 * std::f64::consts::PI * (j as f64) / (n as f64);
                Complex64::new(angle.cos(), angle.sin())
            })
            .collect();
        RootTable { n, roots }
    }

    /// e^{2 pi i j / N} with j reduced mod N.
    #[inline]
    pub fn root(&self, j: i64) -> Complex64 {
        self.roots[j.rem_euclid(self.n) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_reduction() {
        // huge multiple of the denominator plus 1 stays exactly one step
        let z = unit_mod(24_000_000_001, 24);
        let w = unit_mod(1, 24);
        assert!((z - w).norm() < 1e-15);
    }

    #[test]
    fn table_matches_direct() {
        let t = RootTable::new(7);
        for j in -15..15 {
            assert!((t.root(j) - unit_mod(j, 7)).norm() < 1e-15);
        }
    }
}
