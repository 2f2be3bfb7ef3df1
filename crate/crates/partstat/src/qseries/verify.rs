//! Numerical verification of the modular transformation of F_{R,r}
//! (both sides evaluated independently) and of the Euler-Maclaurin/Mordell
//! summation identity for sum_m 1/(zeta_k^{-nu} e^{(m+alpha)t} - 1).

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::lattice::lerch_pair;
use crate::numerics::phase::{frac, unit_mod};
use crate::params::TruncationParams;
use crate::specfun::{digamma_rational, sawtooth_rational};
use crate::transform::{constants_abc, weil_multiplier, TransformFrame};

use super::mordell::{g_pole, mordell_i};
use super::{eisenstein_f1, indef_theta_f, LatticeShift, UpperHalfPoint};

const PI: f64 = std::f64::consts::PI;

/// Both sides of the transformation of F_{R,r}(h/k + iz/k^2).
#[derive(Clone, Copy, Debug)]
pub struct CuspTransformationCheck {
    pub lhs: Complex64,
    pub rhs: Complex64,
}

impl CuspTransformationCheck {
    pub fn residual(&self) -> f64 {
        (self.lhs - self.rhs).norm()
    }
}

/// Guard: the Lambert series on the left-hand side converges too slowly
/// when Im(h/k + iz/k^2) is small; test points must keep it >= 0.05.
const MIN_IM_TAU: f64 = 0.05;

/// Evaluate both sides of
///
///   F_{R,r}(h/k + iz/k^2) = -C Log(z)/z + A/z + B
///     + (ik/z) sum_{alpha mod R} psi(alpha) ( f_{R,alpha}(h'/k + i/z)
///                                           + I_{R,alpha,h'/k}(h'/k + i/z) ).
pub fn verify_cusp_transformation(
    modulus: u32,
    residue: u32,
    h: i64,
    k: i64,
    z: Complex64,
    tp: &TruncationParams,
) -> Result<CuspTransformationCheck> {
    let frame = TransformFrame::new(h, k)?;
    if !(z.re > 0.0) {
        return Err(Error::Domain(format!("need Re(z) > 0, got {z}")));
    }
    let tau_lhs =
        Complex64::new(h as f64 / k as f64, 0.0) + Complex64::new(0.0, 1.0) * z / ((k * k) as f64);
    if tau_lhs.im < MIN_IM_TAU {
        return Err(Error::Domain(format!(
            "Im(h/k + iz/k^2) = {} is below the {MIN_IM_TAU} guard",
            tau_lhs.im
        )));
    }
    let lhs = eisenstein_f1(modulus, residue, &UpperHalfPoint::new(tau_lhs)?, tp)?;

    let consts = constants_abc(modulus, residue, &frame)?;
    let rho = Ratio::new(frame.h_prime, k);
    let tau_rhs = UpperHalfPoint::new(
        Complex64::new(frame.h_prime as f64 / k as f64, 0.0) + Complex64::new(0.0, 1.0) / z,
    )?;

    let mut cusp_sum = Complex64::zero();
    for a1 in 0..modulus as i64 {
        for a2 in 0..modulus as i64 {
            let shift = LatticeShift::new(modulus, (a1, a2))?;
            let psi = weil_multiplier(modulus, residue, &frame, (a1, a2));
            let f_part = indef_theta_f(&shift, &tau_rhs, tp);
            let i_part = mordell_i(&shift, rho, &tau_rhs, tp)?;
            cusp_sum += psi * (f_part + i_part);
        }
    }

    let rhs = -consts.c * z.ln() / z
        + consts.a / z
        + consts.b
        + Complex64::new(0.0, k as f64) / z * cusp_sum;
    Ok(CuspTransformationCheck { lhs, rhs })
}

/// The antisymmetric combination F_{R,r} - F_{R,R-r}: the Mordell terms
/// cancel, so the right-hand side uses the indefinite theta parts only.
pub fn verify_cusp_transformation_antisymmetric(
    modulus: u32,
    residue: u32,
    h: i64,
    k: i64,
    z: Complex64,
    tp: &TruncationParams,
) -> Result<CuspTransformationCheck> {
    if residue == 0 || residue >= modulus {
        return Err(Error::Domain("need 1 <= r <= R-1".into()));
    }
    let frame = TransformFrame::new(h, k)?;
    if !(z.re > 0.0) {
        return Err(Error::Domain(format!("need Re(z) > 0, got {z}")));
    }
    let co_res = modulus - residue;
    let tau_lhs =
        Complex64::new(h as f64 / k as f64, 0.0) + Complex64::new(0.0, 1.0) * z / ((k * k) as f64);
    if tau_lhs.im < MIN_IM_TAU {
        return Err(Error::Domain("Im tau below guard".into()));
    }
    let uh = UpperHalfPoint::new(tau_lhs)?;
    let lhs = eisenstein_f1(modulus, residue, &uh, tp)? - eisenstein_f1(modulus, co_res, &uh, tp)?;

    let c_r = constants_abc(modulus, residue, &frame)?;
    let c_c = constants_abc(modulus, co_res, &frame)?;
    let tau_rhs = UpperHalfPoint::new(
        Complex64::new(frame.h_prime as f64 / k as f64, 0.0) + Complex64::new(0.0, 1.0) / z,
    )?;
    let mut cusp_sum = Complex64::zero();
    for a1 in 0..modulus as i64 {
        for a2 in 0..modulus as i64 {
            let shift = LatticeShift::new(modulus, (a1, a2))?;
            let dpsi = weil_multiplier(modulus, residue, &frame, (a1, a2))
                - weil_multiplier(modulus, co_res, &frame, (a1, a2));
            cusp_sum += dpsi * indef_theta_f(&shift, &tau_rhs, tp);
        }
    }
    let rhs = -(c_r.c - c_c.c) * z.ln() / z
        + (c_r.a - c_c.a) / z
        + (c_r.b - c_c.b)
        + Complex64::new(0.0, k as f64) / z * cusp_sum;
    Ok(CuspTransformationCheck { lhs, rhs })
}

/// Residual of the summation identity for
/// S = sum_{m >= 0} 1/(zeta_k^{-nu} e^{(m+alpha) t} - 1), t > 0:
///
///   S = -d_{k !| nu}/t (pi i ((nu/k)) + (1/2) log(4 sin^2(pi nu/k)))
///       - d_{k | nu}/t (log t + psi(alpha))
///       + (1/2)(alpha - 1/2)(1 - i d_{k !| nu} cot(pi nu/k))
///       + (1/t) sum_{n in Z^2 + (0, nu/k), n1 n2 != 0} e^{-2 pi i alpha n1}
///           ( PV int_0^inf x e^{-4 pi^2 x / t}/(x - n1 n2) dx / (n1 n2)
///             + (pi i/2)(sgn n1 + sgn n2) e^{-4 pi^2 n1 n2 / t} ).
pub fn twisted_sum_identity_check(
    k: u32,
    nu: i64,
    alpha: Ratio<i64>,
    t: f64,
    tp: &TruncationParams,
) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("k must be positive".into()));
    }
    if !(t > 0.0) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    if alpha <= Ratio::zero() || alpha > Ratio::new(1, 1) {
        return Err(Error::Domain(format!(
            "alpha must lie in (0, 1], got {alpha}"
        )));
    }
    let ki = k as i64;
    let divisible = nu.rem_euclid(ki) == 0;
    if !divisible && alpha == Ratio::new(1, 1) {
        return Err(Error::Domain(
            "alpha = 1 is excluded when k does not divide nu".into(),
        ));
    }

    let alpha_f = *alpha.numer() as f64 / *alpha.denom() as f64;

    // left side: geometric decay e^{-(m+alpha)t}
    let zbar = unit_mod(-nu, ki);
    let mut lhs = Complex64::zero();
    let mut m = 0u64;
    loop {
        let s = (m as f64 + alpha_f) * t;
        if s > 45.0 {
            break;
        }
        lhs += (zbar * s.exp() - 1.0).inv();
        m += 1;
    }

    // constant terms
    let mut rhs = Complex64::zero();
    if divisible {
        rhs -= (t.ln() + digamma_rational(alpha)?) / t;
    } else {
        let st = sawtooth_rational(Ratio::new(nu, ki));
        let ang = PI * (nu.rem_euclid(ki) as f64) / k as f64;
        rhs -= (Complex64::new(0.0, PI * *st.numer() as f64 / *st.denom() as f64)
            + 0.5 * (4.0 * ang.sin() * ang.sin()).ln())
            / t;
    }
    let mut linear = Complex64::new(1.0, 0.0);
    if !divisible {
        let ang = PI * (nu.rem_euclid(ki) as f64) / k as f64;
        linear -= Complex64::new(0.0, ang.cos() / ang.sin());
    }
    rhs += 0.5 * (alpha_f - 0.5) * linear;

    // lattice part: n1 in Z, n2 in Z + nu/k, w = 2 pi / t
    let w = Complex64::new(2.0 * PI / t, 0.0);
    let two_pi_w = w * (2.0 * PI);
    let c2 = frac(Ratio::new(nu, ki));
    let c2f = *c2.numer() as f64 / *c2.denom() as f64;
    let (pa, qa) = (*alpha.numer(), *alpha.denom());
    let m_rad = tp.lattice_radius;

    let orders: Vec<u32> = (2..=8).collect();
    let mut main = Complex64::zero();
    let mut box_pow = vec![Complex64::zero(); orders.len()];
    for m1 in -m_rad..=m_rad {
        if m1 == 0 {
            continue;
        }
        let phase = unit_mod(-pa * m1, qa);
        for m2 in -m_rad..=m_rad {
            let v = m2 as f64 + c2f;
            if c2.is_zero() && m2 == 0 {
                continue;
            }
            let a = m1 as f64 * v;
            // PV term
            main += phase * (1.0 / (two_pi_w * a) + g_pole(w, a));
            // sgn term: only same-sign pairs contribute
            let sgn_sum = (m1 as f64).signum() + v.signum();
            if sgn_sum != 0.0 {
                main += phase * Complex64::new(0.0, 0.5 * PI * sgn_sum) * (-two_pi_w * a).exp();
            }
            let ainv = 1.0 / a;
            let mut apow = ainv * ainv;
            for slot in box_pow.iter_mut() {
                *slot += phase * apow;
                apow *= ainv;
            }
        }
    }
    // analytic tail of the PV part; the sgn part decays exponentially and
    // is already exhausted by the box
    let mut tail = Complex64::zero();
    for (idx, &j) in orders.iter().enumerate() {
        let mut fact = 1.0;
        for i in 1..j {
            fact *= i as f64;
        }
        let cj = -fact / two_pi_w.powu(j);
        let lj =
            lerch_pair(Ratio::new(-pa, qa), Ratio::zero(), j) * lerch_pair(Ratio::zero(), c2, j);
        tail += cj * (lj - box_pow[idx]);
    }
    rhs += (main + tail) / t;

    Ok((lhs - rhs).norm())
}
