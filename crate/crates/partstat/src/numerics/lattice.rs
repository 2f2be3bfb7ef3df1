//! One-dimensional Lerch/Hurwitz lattice sums.
//!
//! The 2-D shifted-lattice sums in this crate (Mordell integrals, kernel
//! functions, Psi) converge only like 1/radius when truncated to a box, far
//! too slow for the target tolerances. The cure everywhere is the same:
//! sum a box exactly and append the asymptotic tail, whose coefficients are
//! complete 1-D sums of the form
//!
//!   Lambda_j(theta, c) = sum_{m in Z, m+c != 0} e^{2 pi i theta m} / (m+c)^j
//!
//! with rational theta, c and j >= 2. This module evaluates those to near
//! machine precision: direct summation over a window, then Euler-Maclaurin
//! (theta = 0) or iterated Abel summation (theta != 0) for the remainder.

use std::collections::HashMap;
use std::sync::Mutex;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use once_cell::sync::Lazy;

use super::phase::{frac, RootTable};

/// Direct window length before switching to the analytic remainder.
const DIRECT: i64 = 8192;
/// Abel summation depth.
const ABEL_DEPTH: usize = 6;

/// Hurwitz zeta tail: sum_{i >= 0} (x0 + i)^{-p} for x0 > 0, p >= 2.
pub fn hurwitz_tail(p: u32, x0: f64) -> f64 {
    assert!(p >= 2 && x0 > 0.0);
    let mut acc = 0.0;
    let k = 64usize;
    for i in 0..k {
        acc += (x0 + i as f64).powi(-(p as i32));
    }
    let a = x0 + k as f64;
    let pf = p as f64;
    // Euler-Maclaurin remainder from a, with B2..B8 corrections.
    let mut em = a.powf(1.0 - pf) / (pf - 1.0) + 0.5 * a.powf(-pf);
    let bern = [1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0];
    let mut rising = pf; // (p)_{2v-1}
    let mut fact = 2.0; // (2v)!
    let mut apow = a.powf(-pf - 1.0);
    for (v, b) in bern.iter().enumerate() {
        em += b / fact * rising * apow;
        if v + 1 < bern.len() {
            rising *= (pf + 2.0 * v as f64 + 1.0) * (pf + 2.0 * v as f64 + 2.0);
            fact *= (2.0 * v as f64 + 3.0) * (2.0 * v as f64 + 4.0);
            apow *= 1.0 / (a * a);
        }
    }
    acc + em
}

/// One-sided phased tail: sum_{m > m_start} e^{2 pi i theta m} / (m + c)^j.
///
/// `theta` is taken mod 1. Accurate independently of `m_start` (the direct
/// window is extended internally before the Abel remainder kicks in).
pub fn one_sided_tail(theta: Ratio<i64>, c: Ratio<i64>, j: u32, m_start: i64) -> Complex64 {
    assert!(j >= 2);
    let th = frac(theta);
    let cf = c.to_f64().unwrap();
    if th.is_zero() {
        return Complex64::new(hurwitz_tail(j, (m_start + 1) as f64 + cf), 0.0);
    }
    let p = *th.numer();
    let q = *th.denom();
    let table = RootTable::new(q);
    let jm = -(j as i32);
    let mut acc = Complex64::new(0.0, 0.0);
    for m in (m_start + 1)..=(m_start + DIRECT) {
        acc += table.root(m.wrapping_mul(p)) * (m as f64 + cf).powi(jm);
    }
    // Abel remainder from M = m_start + DIRECT.
    let m_big = m_start + DIRECT;
    let z = table.root(p);
    let zr = z / (Complex64::new(1.0, 0.0) - z);
    // forward differences of g(m) = (m+c)^{-j} at m = M+1
    let mut g: Vec<f64> = (0..=ABEL_DEPTH)
        .map(|d| ((m_big + 1 + d as i64) as f64 + cf).powi(jm))
        .collect();
    let z_m1 = table.root((m_big + 1).wrapping_mul(p));
    let mut zr_pow = Complex64::new(1.0, 0.0);
    let base = z_m1 / (Complex64::new(1.0, 0.0) - z);
    for _d in 0..ABEL_DEPTH {
        acc += zr_pow * base * g[0];
        zr_pow *= zr;
        for i in 0..(g.len() - 1) {
            g[i] = g[i + 1] - g[i];
        }
        g.pop();
    }
    acc
}

/// Two-sided Lerch pair: sum_{m in Z, m+c != 0} e^{2 pi i theta m} / (m+c)^j
/// for c in [0, 1). Cached on (theta, c, j).
pub fn lerch_pair(theta: Ratio<i64>, c: Ratio<i64>, j: u32) -> Complex64 {
    static CACHE: Lazy<Mutex<HashMap<(i64, i64, i64, i64, u32), Complex64>>> =
        Lazy::new(|| Mutex::new(HashMap::new()));
    let th = frac(theta);
    let cr = frac(c);
    let key = (*th.numer(), *th.denom(), *cr.numer(), *cr.denom(), j);
    if let Some(v) = CACHE.lock().unwrap().get(&key) {
        return *v;
    }
    let v = lerch_pair_uncached(th, cr, j);
    CACHE.lock().unwrap().insert(key, v);
    v
}

fn lerch_pair_uncached(theta: Ratio<i64>, c: Ratio<i64>, j: u32) -> Complex64 {
    let cf = c.to_f64().unwrap();
    let mut acc = Complex64::new(0.0, 0.0);
    if !c.is_zero() {
        acc += Complex64::new(cf.powi(-(j as i32)), 0.0);
    }
    // m >= 1 side
    acc += one_sided_tail(theta, c, j, 0);
    // m <= -1 side: m = -m', term = (-1)^j conj(z)^{m'} / (m' - c)^j
    let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
    acc += one_sided_tail(-theta, -c, j, 0) * sign;
    acc
}
