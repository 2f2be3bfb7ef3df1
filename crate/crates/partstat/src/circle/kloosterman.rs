//! The five Kloosterman-like sums of the circle-method expansion. Each is a
//! finite sum over 0 <= h < k with gcd(h,k) = 1 of multiplier phases times
//! root-of-unity factors in n; all phases are exact rationals (in turns)
//! reduced mod 1 before any trigonometry. The shifted index n_s = n - 1/24
//! enters phases only through 24 n_s = 24n - 1, kept as an exact integer.

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numerics::phase::unit;
use crate::transform::{constants_abc, nu_hk_exponent, weil_multiplier, TransformFrame};

/// Which of the five sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KloostermanKind {
    K1,
    K2,
    K3,
    K4,
    K5,
}

/// All frames h/k with 0 <= h < k, gcd(h,k) = 1.
pub(crate) fn coprime_frames(k: i64) -> Result<Vec<TransformFrame>> {
    if k < 1 {
        return Err(Error::Domain("k must be >= 1".into()));
    }
    if k == 1 {
        return Ok(vec![TransformFrame::new(0, 1)?]);
    }
    (0..k)
        .filter(|h| h.gcd(&k) == 1)
        .map(|h| TransformFrame::new(h, k))
        .collect()
}

/// Turns of zeta_{24k}^{-h' - 24 n_s h} with 24 n_s = 24n - 1 exact.
fn turns_24(frame: &TransformFrame, n: u64) -> Ratio<i64> {
    let k = frame.k;
    let nm = (24 * n as i64 - 1).rem_euclid(24 * k);
    Ratio::new(-frame.h_prime - nm * frame.h, 24 * k)
}

/// K^{[1]}(n,k) = sum_h nu_{h,k} zeta_{24k}^{-h' - 24 n_s h}.
pub fn kloosterman_k1(n: u64, k: i64) -> Result<Complex64> {
    let mut acc = Complex64::zero();
    for frame in coprime_frames(k)? {
        acc += unit(nu_hk_exponent(&frame) + turns_24(&frame, n));
    }
    Ok(acc)
}

/// K^{[2]}_{R,r}(n,k): as K^{[1]} weighted by A_{R,r,h,k}.
pub fn kloosterman_k2(modulus: u32, residue: u32, n: u64, k: i64) -> Result<Complex64> {
    let mut acc = Complex64::zero();
    for frame in coprime_frames(k)? {
        let c = constants_abc(modulus, residue, &frame)?;
        acc += c.a * unit(nu_hk_exponent(&frame) + turns_24(&frame, n));
    }
    Ok(acc)
}

/// K^{[3]}_{R,r}(n,k): as K^{[1]} weighted by B_{R,r,h,k}.
pub fn kloosterman_k3(modulus: u32, residue: u32, n: u64, k: i64) -> Result<Complex64> {
    let mut acc = Complex64::zero();
    for frame in coprime_frames(k)? {
        let c = constants_abc(modulus, residue, &frame)?;
        acc += c.b * unit(nu_hk_exponent(&frame) + turns_24(&frame, n));
    }
    Ok(acc)
}

/// K^{[4]}_{R,r,alpha}(n,k) = i sum_h (phi(alpha) - phi((R,R)-alpha))/2
///   e^{-pi i h'(1 - 24 a1 a2/R)/(12 k) - 2 pi i n_s h / k}.
pub fn kloosterman_k4(
    modulus: u32,
    residue: u32,
    n: u64,
    k: i64,
    alpha: (i64, i64),
) -> Result<Complex64> {
    let r = modulus as i64;
    let mut acc = Complex64::zero();
    for frame in coprime_frames(k)? {
        let psi_a = weil_multiplier(modulus, residue, &frame, alpha);
        let psi_b = weil_multiplier(modulus, residue, &frame, (r - alpha.0, r - alpha.1));
        let nm = (24 * n as i64 - 1).rem_euclid(24 * k);
        let turns = Ratio::new(-frame.h_prime * (r - 24 * alpha.0 * alpha.1), 24 * k * r)
            + Ratio::new(-nm * frame.h, 24 * k);
        acc += (psi_a - psi_b) * 0.5 * unit(nu_hk_exponent(&frame) + turns);
    }
    Ok(acc * Complex64::new(0.0, 1.0))
}

/// K^{[5]}_{R,r,alpha,kappa}(n,k) = sum_h phi(alpha)
///   e^{2 pi i h' R (kappa1+a1/R)(kappa2+a2/R)/k - pi i h'/(12k) - 2 pi i n_s h/k}.
pub fn kloosterman_k5(
    modulus: u32,
    residue: u32,
    n: u64,
    k: i64,
    alpha: (i64, i64),
    kappa: (i64, i64),
) -> Result<Complex64> {
    let r = modulus as i64;
    let rk = r * k;
    let l1 = (r * kappa.0 + alpha.0).rem_euclid(rk);
    let l2 = (r * kappa.1 + alpha.1).rem_euclid(rk);
    let mut acc = Complex64::zero();
    for frame in coprime_frames(k)? {
        let psi = weil_multiplier(modulus, residue, &frame, alpha);
        let turns =
            Ratio::new(frame.h_prime * ((l1 * l2).rem_euclid(rk)), rk) + turns_24(&frame, n);
        acc += psi * unit(nu_hk_exponent(&frame) + turns);
    }
    Ok(acc)
}

/// Dispatching entry point; alpha is required for kinds 4 and 5, kappa for
/// kind 5 (contract errors otherwise).
pub fn kloosterman(
    kind: KloostermanKind,
    modulus: u32,
    residue: u32,
    n: u64,
    k: i64,
    alpha: Option<(i64, i64)>,
    kappa: Option<(i64, i64)>,
) -> Result<Complex64> {
    match kind {
        KloostermanKind::K1 => kloosterman_k1(n, k),
        KloostermanKind::K2 => kloosterman_k2(modulus, residue, n, k),
        KloostermanKind::K3 => kloosterman_k3(modulus, residue, n, k),
        KloostermanKind::K4 => {
            let alpha = alpha.ok_or_else(|| Error::Contract("kind 4 needs alpha".into()))?;
            kloosterman_k4(modulus, residue, n, k, alpha)
        }
        KloostermanKind::K5 => {
            let alpha = alpha.ok_or_else(|| Error::Contract("kind 5 needs alpha".into()))?;
            let kappa = kappa.ok_or_else(|| Error::Contract("kind 5 needs kappa".into()))?;
            kloosterman_k5(modulus, residue, n, k, alpha, kappa)
        }
    }
}

/// Euler's totient, used by the trivial-bound tests.
pub fn euler_phi(k: i64) -> i64 {
    (1..=k).filter(|h| h.gcd(&k) == 1).count() as i64
}
