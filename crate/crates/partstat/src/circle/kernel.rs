//! The meromorphic integral kernel
//!
//!   Phi_{R,k,lambda}(w) = sum_{n in Z^2 + lambda/(Rk), n1 n2 != 0}
//!                           w / (R k^2 n1 n2 (w - R k^2 n1 n2)),
//!
//! its exact pole bookkeeping on [0, 1/24], and the principal-value kernel
//! integral of the fifth circle-method component.
//!
//! Evaluation collapses the n2 sum into cotangents:
//! with a = R k^2 n1 and b2 = lambda2/(Rk),
//!
//!   sum_{n2} = (pi/a)(cot(pi b2) - cot(pi(b2 - w/a)))    (b2 not integer)
//!            = (pi/a)(cot(pi w/a) - a/(pi w))            (b2 integer),
//!
//! and the remaining n1 sum is a handful of direct rows plus a Taylor tail
//! in w/a whose row aggregates are Hurwitz tails. A truncated 2-D box would
//! converge like 1/radius; this form reaches ~1e-15 almost for free.

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::numerics::lattice::hurwitz_tail;
use crate::numerics::quad;
use crate::numerics::scaled::LogScaled;
use crate::numerics::{cot_minus_inv, cot_minus_inv_complex, COT_SERIES};
use crate::params::TruncationParams;

const PI: f64 = std::f64::consts::PI;
/// Direct |n1| window of the collapsed sum.
const N0: i64 = 8;
/// Tail orders in the w/a expansion.
const JMAX: usize = 10;

/// Pole data of Phi_{R,k,lambda} on the interval (0, 1/24).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelPole {
    pub exists: bool,
    /// The unique value of R k^2 n1 n2 in (0, 1/24), when it exists.
    pub t_val: Option<Ratio<i64>>,
    /// The lattice pair (u, v) = (R k n1, R k n2) realizing it.
    pub pair: Option<(i64, i64)>,
}

/// Exact search for the unique kernel pole in (0, 1/24): the candidates are
/// t = P/R with integer P in [1, R/24) factorable as u v with
/// u = lambda1, v = lambda2 (mod Rk). Requires 24 !| R.
pub fn locate_pole(modulus: u32, k: i64, lambda: (i64, i64)) -> Result<KernelPole> {
    if modulus % 24 == 0 {
        return Err(Error::Unsupported(format!(
            "R = {modulus} divisible by 24 puts the kernel pole on the boundary"
        )));
    }
    if k < 1 {
        return Err(Error::Domain("k must be >= 1".into()));
    }
    let r = modulus as i64;
    let rk = r * k;
    let l1 = lambda.0.rem_euclid(rk);
    let l2 = lambda.1.rem_euclid(rk);
    let mut found: Option<(Ratio<i64>, (i64, i64))> = None;
    let p_max = (r - 1) / 24;
    for p in 1..=p_max {
        for u in 1..=p {
            if p % u != 0 {
                continue;
            }
            let v = p / u;
            for (su, sv) in [(u, v), (-u, -v)] {
                if su.rem_euclid(rk) == l1 && sv.rem_euclid(rk) == l2 {
                    let t = Ratio::new(p, r);
                    match &found {
                        None => found = Some((t, (su, sv))),
                        Some((t0, _)) => {
                            // the paper guarantees uniqueness of the value
                            debug_assert_eq!(*t0, t, "second pole value found");
                        }
                    }
                }
            }
        }
    }
    Ok(match found {
        Some((t, pair)) => KernelPole {
            exists: true,
            t_val: Some(t),
            pair: Some(pair),
        },
        None => KernelPole {
            exists: false,
            t_val: None,
            pair: None,
        },
    })
}

/// Collapsed evaluator for Phi_{R,k,lambda} with precomputed row tables.
pub(crate) struct PhiEvaluator {
    a_mult: f64, // R k^2
    beta1: f64,
    beta2: f64,
    beta2_integer: bool,
    m_lo: i64,
    m_hi: i64,
    /// Taylor coefficients d_j of cot(pi b2 - e) (non-integer b2 case).
    dj: Vec<f64>,
    /// T_p = sum_{rows outside the window} n1^{-p}, p = 2..=JMAX+1.
    tails: Vec<f64>,
    /// In-(0,1/24) pole: (row index m1, integer shift j*, t_pole, n1 value).
    pole: Option<PoleRow>,
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct PoleRow {
    m1: i64,
    j_star: i64,
    pub t_pole: f64,
}

impl PhiEvaluator {
    pub fn new(modulus: u32, k: i64, lambda: (i64, i64)) -> Result<Self> {
        if k < 1 {
            return Err(Error::Domain("k must be >= 1".into()));
        }
        let r = modulus as i64;
        let rk = r * k;
        let l1 = lambda.0.rem_euclid(rk);
        let l2 = lambda.1.rem_euclid(rk);
        let beta1 = l1 as f64 / rk as f64;
        let beta2 = l2 as f64 / rk as f64;
        let beta2_integer = l2 == 0;
        let a_mult = (r * k * k) as f64;

        // direct rows: integers m with |m + beta1| <= N0 (n1 = 0 excluded)
        let m_lo = (-(N0 as f64) - beta1).ceil() as i64;
        let m_hi = (N0 as f64 - beta1).floor() as i64;

        let dj = if beta2_integer {
            Vec::new()
        } else {
            // cot(pi b2 - e) = sum_j d_j e^j; f' = 1 + f^2 gives the recurrence
            let mut d = vec![0.0; JMAX + 1];
            d[0] = 1.0 / (PI * beta2).tan();
            for j in 0..JMAX {
                let mut conv = if j == 0 { 1.0 } else { 0.0 };
                for i in 0..=j {
                    conv += d[i] * d[j - i];
                }
                d[j + 1] = conv / (j + 1) as f64;
            }
            d
        };

        let tails = (2..=(JMAX as u32 + 1))
            .map(|p| {
                let upper = hurwitz_tail(p, (m_hi + 1) as f64 + beta1);
                let lower_x0 = -((m_lo - 1) as f64 + beta1);
                let sign = if p % 2 == 0 { 1.0 } else { -1.0 };
                upper + sign * hurwitz_tail(p, lower_x0)
            })
            .collect();

        let pole = if modulus % 24 != 0 {
            let info = locate_pole(modulus, k, (l1, l2))?;
            info.pair.map(|(u, _v)| {
                let t_pole = info.t_val.unwrap().to_f64().unwrap();
                // u = Rk n1 => n1 = u/(Rk), row index m1 = (u - l1)/(Rk)
                let m1 = (u - l1) / rk;
                let n1 = u as f64 / rk as f64;
                // t_pole = a(b2 - j*) with a = R k^2 n1
                let a = a_mult * n1;
                let j_star = (beta2 - t_pole / a).round() as i64;
                PoleRow { m1, j_star, t_pole }
            })
        } else {
            None
        };

        Ok(PhiEvaluator {
            a_mult,
            beta1,
            beta2,
            beta2_integer,
            m_lo,
            m_hi,
            dj,
            tails,
            pole,
        })
    }

    pub fn pole(&self) -> Option<PoleRow> {
        self.pole
    }

    fn row_value(&self, m: i64, t: f64) -> f64 {
        let n1 = m as f64 + self.beta1;
        let a = self.a_mult * n1;
        if self.beta2_integer {
            PI / a * cot_minus_inv(PI * t / a)
        } else {
            let arg = PI * (self.beta2 - t / a);
            PI / a * (self.dj[0] - 1.0 / arg.tan())
        }
    }

    /// Row value with the pole pair's exact term 1/(t - t_p) + 1/t_p removed,
    /// stable arbitrarily close to t_p.
    fn row_value_deflated(&self, m: i64, t: f64, pole: &PoleRow) -> f64 {
        let n1 = m as f64 + self.beta1;
        let a = self.a_mult * n1;
        let u = PI * (self.beta2 - t / a - pole.j_star as f64);
        PI / a * (self.dj[0] - cot_minus_inv(u)) - 1.0 / pole.t_pole
    }

    fn tail_value(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        if self.beta2_integer {
            // sum_p -c_p pi^{2p} t^{2p-1} (R k^2)^{-2p} T_{2p}
            let mut tpow = t;
            for (p, c) in COT_SERIES.iter().take(JMAX / 2).enumerate() {
                let order = 2 * (p + 1); // power of 1/a
                acc -= c * PI.powi(order as i32) * tpow * self.tails[order - 2]
                    / self.a_mult.powi(order as i32);
                tpow *= t * t;
            }
        } else {
            // sum_j -d_j pi^{j+1} t^j (R k^2)^{-(j+1)} T_{j+1}
            let mut tpow = t;
            for j in 1..=JMAX {
                acc -= self.dj[j] * PI.powi(j as i32 + 1) * tpow * self.tails[j - 1]
                    / self.a_mult.powi(j as i32 + 1);
                tpow *= t;
            }
        }
        acc
    }

    /// Phi(t) for real t away from poles.
    pub fn eval(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for m in self.m_lo..=self.m_hi {
            if m as f64 + self.beta1 == 0.0 {
                continue;
            }
            acc += self.row_value(m, t);
        }
        acc + self.tail_value(t)
    }

    /// Phi*(t) = Phi(t) minus the pole term t/(t_p (t - t_p)); equals eval
    /// when no pole exists.
    pub fn eval_deflated(&self, t: f64) -> f64 {
        let pole = match &self.pole {
            None => return self.eval(t),
            Some(p) => p,
        };
        let mut acc = 0.0;
        for m in self.m_lo..=self.m_hi {
            if m as f64 + self.beta1 == 0.0 {
                continue;
            }
            if m == pole.m1 {
                acc += self.row_value_deflated(m, t, pole);
            } else {
                acc += self.row_value(m, t);
            }
        }
        acc + self.tail_value(t)
    }

    /// Phi(w) for complex w off the pole set.
    pub fn eval_complex(&self, w: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for m in self.m_lo..=self.m_hi {
            let n1 = m as f64 + self.beta1;
            if n1 == 0.0 {
                continue;
            }
            let a = self.a_mult * n1;
            if self.beta2_integer {
                acc += cot_minus_inv_complex(w * (PI / a)) * (PI / a);
            } else {
                let arg = (w / a - self.beta2) * PI; // = -(pi (b2 - w/a))
                let cot = -arg.cos() / arg.sin();
                acc += (Complex64::new(self.dj[0], 0.0) - cot) * (PI / a);
            }
        }
        // tail in powers of w/a
        if self.beta2_integer {
            let mut wpow = w;
            for (p, c) in COT_SERIES.iter().take(JMAX / 2).enumerate() {
                let order = 2 * (p + 1);
                acc -= wpow
                    * (c * PI.powi(order as i32) * self.tails[order - 2]
                        / self.a_mult.powi(order as i32));
                wpow *= w * w;
            }
        } else {
            let mut wpow = w;
            for j in 1..=JMAX {
                acc -= wpow
                    * (self.dj[j] * PI.powi(j as i32 + 1) * self.tails[j - 1]
                        / self.a_mult.powi(j as i32 + 1));
                wpow *= w;
            }
        }
        acc
    }
}

/// Phi_{R,k,lambda}(w) for complex w; errors if w sits on the located pole.
pub fn kernel_phi(
    modulus: u32,
    k: i64,
    lambda: (i64, i64),
    w: Complex64,
    _tp: &TruncationParams,
) -> Result<Complex64> {
    if modulus % 24 == 0 {
        return Err(Error::Unsupported(format!(
            "R = {modulus} divisible by 24: pole bookkeeping on [0, 1/24] is undefined"
        )));
    }
    let eval = PhiEvaluator::new(modulus, k, lambda)?;
    if let Some(p) = eval.pole() {
        if (w - p.t_pole).norm() < 1e-12 {
            return Err(Error::Pole(format!(
                "w = {w} is the kernel pole t = {}",
                p.t_pole
            )));
        }
    }
    Ok(eval.eval_complex(w))
}

/// Scaled value of the fifth-component kernel integral
///
///   PV int_0^{1/24} Phi_{R,k,lambda}(t) (1-24t)^{1/4}
///      I_{1/2}( (pi/k) sqrt(2 n_s (1-24t)/3) ) dt
///
/// returned as mantissa * exp(x_k) with x_k = (pi/k) sqrt(2 n_s/3).
///
/// The substitution s = sqrt(1-24t) turns (1-24t)^{1/4} I_{1/2}(x_k s(t))
/// into the analytic sqrt(2/(pi x_k)) sinh(x_k s), so composite panels in s
/// converge spectrally; a pole inside (0, 1/24) is subtracted globally and
/// its principal value restored in closed form.
pub(crate) fn pv_kernel_integral_scaled(
    modulus: u32,
    k: i64,
    lambda: (i64, i64),
    n: u64,
    tp: &TruncationParams,
) -> Result<LogScaled> {
    if modulus % 24 == 0 {
        return Err(Error::Unsupported(format!("R = {modulus} divisible by 24")));
    }
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let ns = (24 * n - 1) as f64 / 24.0;
    let x_k = PI / k as f64 * (2.0 * ns / 3.0).sqrt();
    let eval = PhiEvaluator::new(modulus, k, lambda)?;

    // scaled g~(s) = e^{-x_k} sqrt(s) I_{1/2}(x_k s) = sqrt(2/(pi x_k)) sinh(x_k s) e^{-x_k}
    let pref = (2.0 / (PI * x_k)).sqrt();
    let sinh_scaled = |s: f64| 0.5 * ((x_k * (s - 1.0)).exp() - (-x_k * (s + 1.0)).exp());
    let g_tilde = |s: f64| pref * sinh_scaled(s);

    let panels = tp.quad_panels.max(x_k.ceil() as usize + 16);

    let mantissa = match eval.pole() {
        None => {
            // int_0^1 Phi((1-s^2)/24) g~(s) (s/12) ds
            quad::composite(0.0, 1.0, panels, 8, |s| {
                eval.eval((1.0 - s * s) / 24.0) * g_tilde(s) * s / 12.0
            })
        }
        Some(pole) => {
            let t_p = pole.t_pole;
            let s_p = (1.0 - 24.0 * t_p).sqrt();
            // V1: deflated kernel integral
            let v1 = quad::composite(0.0, 1.0, panels, 8, |s| {
                eval.eval_deflated((1.0 - s * s) / 24.0) * g_tilde(s) * s / 12.0
            });
            // V2: int g; V3: PV int g/(t - t_p)
            let v2 = quad::composite(0.0, 1.0, panels, 8, |s| g_tilde(s) * s / 12.0);
            let g_at_pole = g_tilde(s_p);
            let quotient = |s: f64| 2.0 * s * (g_tilde(s) - g_at_pole) / ((s_p - s) * (s_p + s));
            // split panels at s_p so no node collides with it
            let v3 = quad::composite(0.0, s_p, panels, 8, quotient)
                + quad::composite(s_p, 1.0, panels, 8, quotient)
                + g_at_pole * ((1.0 / 24.0 - t_p) / t_p).ln();
            v1 + v2 / t_p + v3
        }
    };
    Ok(LogScaled::new(x_k, mantissa))
}

/// Public form of the kernel integral (collapses the scale; safe for the
/// n-ranges used in practice, overflows to inf near n ~ 7.6e4 k^2).
pub fn pv_kernel_integral(
    modulus: u32,
    k: i64,
    lambda: (i64, i64),
    n: u64,
    tp: &TruncationParams,
) -> Result<f64> {
    Ok(pv_kernel_integral_scaled(modulus, k, lambda, n, tp)?.to_f64())
}
