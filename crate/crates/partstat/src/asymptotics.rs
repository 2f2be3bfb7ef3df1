//! Closed-form leading asymptotics of T_{R,r}(n): the pole-safety margin
//! eps_R, the kernel Psi_{R,r}, the full log/digamma bracket, its power
//! expansion coefficients a_{R,r,l}, the antisymmetric difference
//! T_{R,r}(n) - T_{R,R-r}(n), and the part-probability ratio
//! T_{R,r}(n)/T_{1,1}(n).
//!
//! Predictions carry a split (exponent, mantissa) representation because the
//! leading factor exp(pi sqrt(2 n_s/3)) leaves f64 range near n ~ 7.6e4.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::{BigRational, Ratio};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::numerics::lattice::one_sided_tail;
use crate::numerics::quad;
use crate::numerics::scaled::LogScaled;
use crate::params::TruncationParams;
use crate::specfun::bernoulli::{bernoulli_number, bernoulli_poly_rational};
use crate::specfun::digamma_rational;
use crate::specfun::expint::ei_scaled_complex;

const PI: f64 = std::f64::consts::PI;

/// n_s = n - 1/24 in double precision.
pub fn n_shifted(n: u64) -> f64 {
    (24 * n - 1) as f64 / 24.0
}

/// The leading exponent x = pi sqrt(2 n_s / 3).
pub fn leading_exponent(n: u64) -> f64 {
    PI * (2.0 * n_shifted(n) / 3.0).sqrt()
}

fn check_not_div24(modulus: u32) -> Result<()> {
    if modulus % 24 == 0 {
        return Err(Error::Unsupported(format!(
            "R = {modulus} is divisible by 24; the kernel pole would sit on the boundary"
        )));
    }
    Ok(())
}

/// eps_R = (1/2) dist(1/24, Z/R), exact. Requires 24 !| R.
pub fn epsilon_r(modulus: u32) -> Result<Ratio<i64>> {
    if modulus == 0 {
        return Err(Error::Domain("R must be positive".into()));
    }
    check_not_div24(modulus)?;
    let m = (modulus % 24) as i64;
    Ok(Ratio::new(m.min(24 - m), 48 * modulus as i64))
}

/// Kernel Psi_{R,r}(t) = sum_{n1,n2 != 0} R^2 t zeta_R^{r n1} /
/// (n1 n2 (R t - n1 n2)), evaluated by collapsing the n2 sum into a
/// cotangent and accelerating the n1 tail:
///
///   Psi_{R,r}(t) = R sum_{n1 >= 1} 2 cos(2 pi r n1 / R)
///                    (pi/n1) (cot(y) - 1/y),   y = pi R t / n1.
pub struct PsiKernel {
    modulus: u32,
    residue: u32,
    rows: i64,
    /// tau_p = sum_{n1 > rows} cos(2 pi r n1/R) / n1^{2p}, p = 1..=5
    tails: Vec<f64>,
}

impl PsiKernel {
    pub fn new(modulus: u32, residue: u32, tp: &TruncationParams) -> Result<Self> {
        if modulus == 0 || residue == 0 || residue > modulus {
            return Err(Error::Domain("need 1 <= r <= R".into()));
        }
        let rows = tp.lattice_radius.max(64);
        let tails = (1..=5u32)
            .map(|p| {
                one_sided_tail(
                    Ratio::new(residue as i64, modulus as i64),
                    Ratio::zero(),
                    2 * p,
                    rows,
                )
                .re
            })
            .collect();
        Ok(PsiKernel {
            modulus,
            residue,
            rows,
            tails,
        })
    }

    /// Psi_{R,r}(t); domain error if R t is a nonzero integer (a pole).
    pub fn eval(&self, t: f64) -> Result<f64> {
        let rt = self.modulus as f64 * t;
        if rt.round() != 0.0 && (rt - rt.round()).abs() < 1e-12 {
            return Err(Error::Pole(format!("R t = {rt} sits on a pole of Psi")));
        }
        let r = self.modulus as f64;
        let mut acc = 0.0;
        for n1 in 1..=self.rows {
            let y = PI * rt / n1 as f64;
            let c = 2.0
                * (2.0 * PI * (self.residue as i64 * n1 % self.modulus as i64) as f64 / r).cos();
            acc += c * PI / n1 as f64 * cot_minus_inv(y);
        }
        // tail rows via the Laurent series of cot:
        // (pi/n1)(cot y - 1/y) = -sum_p c_p pi^{2p} (R t)^{2p-1} / n1^{2p}
        let mut tail = 0.0;
        let mut rt_pow = rt;
        for (p, tau) in self.tails.iter().enumerate() {
            tail -= 2.0 * COT_SERIES[p] * PI.powi(2 * (p as i32 + 1)) * rt_pow * tau;
            rt_pow *= rt * rt;
        }
        Ok(r * (acc + tail))
    }
}

use crate::numerics::{cot_minus_inv, COT_SERIES};

/// Psi_{R,r}(t) through a fresh kernel (convenience form of the evaluator).
pub fn psi_kernel(modulus: u32, residue: u32, t: f64, tp: &TruncationParams) -> Result<f64> {
    PsiKernel::new(modulus, residue, tp)?.eval(t)
}

/// Labeled pieces of the leading-asymptotic bracket.
#[derive(Clone, Copy, Debug, Default)]
pub struct PredictionTerms {
    /// log(n_s)
    pub log_ns: f64,
    /// -log(pi^2/6) - 2 psi(r/R) - 2 log R
    pub constant: f64,
    /// pi (2r - R) / (2 sqrt(6 n_s))
    pub sqrt_correction: f64,
    /// (R - 2r) / (4 n_s)
    pub inv_correction: f64,
    /// 2 E(2 pi sqrt(2 n_s/3))
    pub exp_integral: f64,
    /// 2 int_0^{eps_R} Psi_{R,r}(t) e^{-pi sqrt(2 n_s/3)(1 - sqrt(1-24t))} dt
    pub psi_integral: f64,
}

impl PredictionTerms {
    pub fn bracket(&self) -> f64 {
        self.log_ns
            + self.constant
            + self.sqrt_correction
            + self.inv_correction
            + self.exp_integral
            + self.psi_integral
    }
}

/// A leading-asymptotic prediction with its term breakdown, stored as
/// bracket/(4 pi R sqrt(2 n_s)) times exp(log_scale).
#[derive(Clone, Copy, Debug)]
pub struct AsymptoticPrediction {
    pub n: u64,
    pub value: LogScaled,
    pub terms: PredictionTerms,
}

impl AsymptoticPrediction {
    /// Collapse to f64 (overflows to inf for n beyond ~7.6e4).
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Full leading asymptotic of T_{R,r}(n):
///
///   e^{pi sqrt(2 n_s/3)} / (4 pi R sqrt(2 n_s)) * [ log n_s - log(pi^2/6)
///     - 2 psi(r/R) - 2 log R + pi(2r-R)/(2 sqrt(6 n_s)) + (R-2r)/(4 n_s)
///     + 2 E(2 pi sqrt(2 n_s/3)) + 2 int_0^{eps_R} Psi_{R,r}(t)
///         e^{-pi sqrt(2 n_s/3)(1 - sqrt(1-24t))} dt ].
pub fn leading_asymptotic(
    modulus: u32,
    residue: u32,
    n: u64,
    tp: &TruncationParams,
) -> Result<AsymptoticPrediction> {
    check_not_div24(modulus)?;
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    let ns = n_shifted(n);
    let x = leading_exponent(n);
    let rr = Ratio::new(residue as i64, modulus as i64);

    let terms = PredictionTerms {
        log_ns: ns.ln(),
        constant: -(PI * PI / 6.0).ln() - 2.0 * digamma_rational(rr)? - 2.0 * (modulus as f64).ln(),
        sqrt_correction: PI * (2.0 * residue as f64 - modulus as f64) / (2.0 * (6.0 * ns).sqrt()),
        inv_correction: (modulus as f64 - 2.0 * residue as f64) / (4.0 * ns),
        exp_integral: 2.0 * ei_scaled_complex(Complex64::new(2.0 * x, 0.0)).re,
        psi_integral: 2.0 * psi_weight_integral(modulus, residue, n, tp)?,
    };

    let prefactor = 1.0 / (4.0 * PI * modulus as f64 * (2.0 * ns).sqrt());
    Ok(AsymptoticPrediction {
        n,
        value: LogScaled::new(x, prefactor * terms.bracket()),
        terms,
    })
}

/// int_0^{eps_R} Psi_{R,r}(t) e^{-x (1 - sqrt(1-24t))} dt with x the leading
/// exponent; the integrand is smooth on [0, eps_R].
fn psi_weight_integral(modulus: u32, residue: u32, n: u64, tp: &TruncationParams) -> Result<f64> {
    let eps = epsilon_r(modulus)?;
    let eps_f = eps.to_f64().unwrap();
    let x = leading_exponent(n);
    let kernel = PsiKernel::new(modulus, residue, tp)?;
    // weight decays on a scale ~1/(12 x); resolve it
    let panels = tp.quad_panels.max((4.0 * x * eps_f).ceil() as usize + 8);
    let mut err: Option<Error> = None;
    let v = quad::composite(0.0, eps_f, panels, 16, |t| match kernel.eval(t) {
        Ok(p) => p * (-x * (1.0 - (1.0 - 24.0 * t).sqrt())).exp(),
        Err(e) => {
            err = Some(e);
            0.0
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(v),
    }
}

/// Coefficients a_{R,r,0..=l_max} of the power-suppressed expansion
///
///   T_{R,r}(n) ~ e^x/(4 pi R sqrt(2 n_s)) ( log n_s + sum_l a_l n_s^{-l/2} ).
pub fn power_expansion_coefficients(modulus: u32, residue: u32, l_max: usize) -> Result<Vec<f64>> {
    check_not_div24(modulus)?;
    if residue == 0 || residue > modulus {
        return Err(Error::Domain("need 1 <= r <= R".into()));
    }
    if l_max > 64 {
        return Err(Error::Unsupported(format!(
            "l_max = {l_max} beyond the exact Bernoulli range (64)"
        )));
    }
    let rr = BigRational::new(BigInt::from(residue), BigInt::from(modulus));
    let rf = modulus as f64;
    let two_r_minus = 2.0 * residue as f64 - rf;
    let mut out = Vec::with_capacity(l_max + 1);
    for l in 0..=l_max {
        let v = match l {
            0 => {
                -(PI * PI / 6.0).ln()
                    - 2.0 * digamma_rational(Ratio::new(residue as i64, modulus as i64))?
                    - 2.0 * rf.ln()
            }
            1 => (6.0 + PI * PI * two_r_minus) / (2.0 * 6.0f64.sqrt() * PI),
            _ => {
                // inner sum over j in [ceil(l/4), floor(l/2)] with exact
                // Bernoulli products, assembled as rational * pi^{4j}
                let mut inner = 0.0;
                let j_lo = l.div_ceil(4);
                let j_hi = l / 2;
                for j in j_lo..=j_hi {
                    let bern = bernoulli_number(2 * j) * bernoulli_poly_rational(2 * j, &rr);
                    let rational = bern
                        * BigRational::new(BigInt::from(l as i64), BigInt::from(2 * j as i64))
                        * BigRational::new(
                            BigInt::from(2i64 * modulus as i64).pow(2 * j as u32),
                            BigInt::from(3i64).pow(2 * j as u32),
                        )
                        / (BigRational::from(factorial_big(l - 2 * j))
                            * BigRational::from(factorial_big(4 * j - l))
                            * BigRational::from(factorial_big(2 * j)));
                    inner += rational.to_f64().unwrap() * PI.powi(4 * j as i32);
                }
                let sign = if l % 2 == 0 { 1.0 } else { -1.0 };
                let base = 2.0
                    * factorial_f64(l - 1)
                    * (3.0f64.sqrt() / (2.0 * 2.0f64.sqrt() * PI)).powi(l as i32);
                let delta2 = if l == 2 {
                    (rf - 2.0 * residue as f64) / 4.0
                } else {
                    0.0
                };
                delta2 + base * (1.0 - sign * inner)
            }
        };
        out.push(v);
    }
    Ok(out)
}

fn factorial_big(n: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// Power-suppressed prediction from the a-coefficients with L terms.
pub fn power_expansion_eval(modulus: u32, residue: u32, n: u64, big_l: usize) -> Result<LogScaled> {
    let coeffs = power_expansion_coefficients(modulus, residue, big_l)?;
    let ns = n_shifted(n);
    let x = leading_exponent(n);
    let mut bracket = ns.ln();
    for (l, a) in coeffs.iter().enumerate() {
        bracket += a / ns.powf(l as f64 / 2.0);
    }
    Ok(LogScaled::new(
        x,
        bracket / (4.0 * PI * modulus as f64 * (2.0 * ns).sqrt()),
    ))
}

/// Antisymmetric difference prediction for T_{R,r}(n) - T_{R,R-r}(n):
///
///   e^x/(2 pi R sqrt(2 n_s)) (b0 + b1/sqrt(n_s) + b2/n_s)
///   + (1/R) sqrt(2/n_s) sum_{a1 a2 < R/32, aـi >= 1} sin(2 pi r a1/R)
///       e^{x sqrt(1 - 24 a1 a2 / R)},
///
/// with b0 = pi cot(pi r/R), b1 = pi(2r-R)/(2 sqrt 6), b2 = (R-2r)/4.
/// Valid for 1 <= r <= R-1 (24 | R is allowed here).
pub fn antisymmetric_difference_split(modulus: u32, residue: u32, n: u64) -> Result<LogScaled> {
    if modulus < 2 || residue == 0 || residue >= modulus {
        return Err(Error::Domain(format!(
            "need 1 <= r <= R-1, got r = {residue}, R = {modulus}"
        )));
    }
    let ns = n_shifted(n);
    let x = leading_exponent(n);
    let rf = modulus as f64;
    let r = residue as f64;
    let b0 = PI / (PI * r / rf).tan();
    let b1 = PI * (2.0 * r - rf) / (2.0 * 6.0f64.sqrt());
    let b2 = (rf - 2.0 * r) / 4.0;
    let main = (b0 + b1 / ns.sqrt() + b2 / ns) / (2.0 * PI * rf * (2.0 * ns).sqrt());
    let mut acc = LogScaled::new(x, main);
    for a1 in 1..modulus as u64 {
        for a2 in 1..modulus as u64 {
            if 32 * a1 * a2 >= modulus as u64 {
                continue;
            }
            let scale = (1.0 - 24.0 * (a1 * a2) as f64 / rf).sqrt();
            let weight = (2.0 / ns).sqrt() / rf * (2.0 * PI * r * a1 as f64 / rf).sin();
            acc = acc.add(LogScaled::new(x * scale, weight));
        }
    }
    Ok(acc)
}

/// antisymmetric_difference_split collapsed to f64 (fine for n up to ~7.6e4).
pub fn antisymmetric_difference_eval(modulus: u32, residue: u32, n: u64) -> Result<f64> {
    Ok(antisymmetric_difference_split(modulus, residue, n)?.to_f64())
}

/// Probability-ratio prediction for T_{R,r}(n) / T_{1,1}(n):
///
///   (1/R) [ 1 - (log R + psi(r/R) + gamma)/L
///     + pi/(4 sqrt(6 n_s) L) (2r - R - 1
///         + (6+pi^2)(log R + psi(r/R) + gamma)/(pi^2 L)) ],
///   L = log(e^gamma sqrt(6 n_s)/pi).
pub fn part_probability_ratio(modulus: u32, residue: u32, n: u64) -> Result<f64> {
    check_not_div24(modulus)?;
    if residue == 0 || residue > modulus {
        return Err(Error::Domain("need 1 <= r <= R".into()));
    }
    let ns = n_shifted(n);
    let gamma = crate::specfun::EULER_GAMMA;
    let bias = (modulus as f64).ln()
        + digamma_rational(Ratio::new(residue as i64, modulus as i64))?
        + gamma;
    let big_l = gamma + (6.0 * ns).sqrt().ln() - PI.ln();
    let rf = modulus as f64;
    let r = residue as f64;
    Ok((1.0 / rf)
        * (1.0 - bias / big_l
            + PI / (4.0 * (6.0 * ns).sqrt() * big_l)
                * (2.0 * r - rf - 1.0 + (6.0 + PI * PI) * bias / (PI * PI * big_l))))
}
