//! Exact combinatorial oracles: partition numbers p(n), the counts
//! T_{R,r}(n) of parts congruent to r (mod R) over all partitions of n
//! (by divisor convolution and by brute-force enumeration), and reciprocal
//! hook-length sums H_{R,r}(n) over Young diagrams.
//!
//! T_{R,r}(n) values outgrow u64 quickly (T_{1,1}(1000) has 35 digits), so
//! everything is big-integer; hook sums are exact rationals because the
//! identity H_{R,r}(n) = T_{R,r}(n) must test exactly.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A partition of n: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates the weakly decreasing invariant.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Domain("partition parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Domain(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Multiset of hook lengths of the Young diagram.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let parts = &self.parts;
        if parts.is_empty() {
            return Vec::new();
        }
        // conjugate[j] = number of rows with at least j+1 cells
        let width = parts[0] as usize;
        let mut conjugate = vec![0u32; width];
        for &p in parts {
            for c in conjugate.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        let mut hooks = Vec::with_capacity(self.sum() as usize);
        for (i, &p) in parts.iter().enumerate() {
            for j in 0..p as usize {
                // arm + leg + 1
                hooks.push(p - j as u32 + conjugate[j] - i as u32 - 1);
            }
        }
        hooks
    }
}

/// Visit every partition of n (lexicographically, largest part first).
pub fn for_each_partition<F: FnMut(&[u32])>(n: u64, mut visit: F) {
    let mut parts: Vec<u32> = Vec::new();
    fn descend<F: FnMut(&[u32])>(remaining: u64, cap: u64, parts: &mut Vec<u32>, visit: &mut F) {
        if remaining == 0 {
            visit(parts);
            return;
        }
        let largest = remaining.min(cap);
        for p in (1..=largest).rev() {
            parts.push(p as u32);
            descend(remaining - p, p, parts, visit);
            parts.pop();
        }
    }
    descend(n, n.max(1), &mut parts, &mut visit);
}

/// p(0..=cap) by the pentagonal-number recurrence, exact.
pub fn partition_numbers(cap: usize) -> Vec<BigUint> {
    let mut p = vec![BigUint::zero(); cap + 1];
    p[0] = BigUint::one();
    for n in 1..=cap {
        let mut acc = BigInt::zero();
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = k % 2 == 1;
            let mut contrib = BigInt::from(p[n - g1].clone());
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                contrib += BigInt::from(p[n - g2].clone());
            }
            if sign {
                acc += contrib;
            } else {
                acc -= contrib;
            }
            k += 1;
        }
        p[n] = acc.to_biguint().expect("partition numbers are nonnegative");
    }
    p
}

/// Exact table of p(n) and T_{R,r}(n) for n = 0..=cap.
#[derive(Clone, Debug)]
pub struct ExactTable {
    pub modulus: u32,
    pub residue: u32,
    pub cap: usize,
    /// p(0..=cap)
    pub p: Vec<BigUint>,
    /// t[n] = T_{R,r}(n)
    pub t: Vec<BigUint>,
}

/// T_{R,r}(n) for n <= cap via the convolution
/// T_{R,r}(n) = sum_{m = r (mod R), m >= 1} sum_{j >= 1} p(n - j m).
pub fn exact_parts_count(modulus: u32, residue: u32, cap: usize) -> Result<ExactTable> {
    check_residue(modulus, residue)?;
    let p = partition_numbers(cap);
    let mut t = vec![BigUint::zero(); cap + 1];
    let mut m = residue as usize;
    while m <= cap {
        let mut jm = m;
        while jm <= cap {
            for n in jm..=cap {
                let add = p[n - jm].clone();
                t[n] += add;
            }
            jm += m;
        }
        m += modulus as usize;
    }
    Ok(ExactTable {
        modulus,
        residue,
        cap,
        p,
        t,
    })
}

/// T_{R,r}(n) by direct enumeration of the partitions of n.
pub fn brute_force_parts_count(modulus: u32, residue: u32, n: u64) -> Result<BigUint> {
    check_residue(modulus, residue)?;
    let target = residue % modulus; // r = R counted as 0 mod R
    let mut total = BigUint::zero();
    for_each_partition(n, |parts| {
        let hits = parts.iter().filter(|&&p| p % modulus == target).count();
        total += BigUint::from(hits);
    });
    Ok(total)
}

/// H_{R,r}(n) = sum over partitions of n of sum_{hooks h = r (mod R)} 1/h,
/// as an exact rational.
pub fn hook_sum(modulus: u32, residue: u32, n: u64) -> Result<BigRational> {
    check_residue(modulus, residue)?;
    let target = residue % modulus;
    let mut total = BigRational::zero();
    for_each_partition(n, |parts| {
        let lambda = Partition {
            parts: parts.to_vec(),
        };
        for h in lambda.hook_lengths() {
            if h % modulus == target {
                total += BigRational::new(BigInt::one(), BigInt::from(h));
            }
        }
    });
    Ok(total)
}

fn check_residue(modulus: u32, residue: u32) -> Result<()> {
    if modulus == 0 {
        return Err(Error::Domain("modulus R must be positive".into()));
    }
    if residue == 0 || residue > modulus {
        return Err(Error::Domain(format!(
            "residue r must satisfy 1 <= r <= R, got r = {residue}, R = {modulus}"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn count_partitions(n: u64) -> u64 {
        let mut c = 0;
        for_each_partition(n, |_| c += 1);
        c
    }

    #[test]
    fn partition_numbers_vs_enumeration() {
        let p = partition_numbers(12);
        assert_eq!(p[0], BigUint::one());
        for n in 0..=12u64 {
            assert_eq!(
                p[n as usize].to_u64().unwrap(),
                count_partitions(n),
                "n={n}"
            );
        }
        // spot values derived by the enumeration oracle
        assert_eq!(p[4].to_u64().unwrap(), 5);
        assert_eq!(p[10].to_u64().unwrap(), 42);
    }

    #[test]
    fn zero_cap_table() {
        assert_eq!(partition_numbers(0), vec![BigUint::one()]);
    }

    #[test]
    fn known_large_partition_number() {
        // p(100) = 190569292
        let p = partition_numbers(100);
        assert_eq!(p[100].to_u64().unwrap(), 190_569_292);
    }

    #[test]
    fn exact_counts_small() {
        // partitions of 4: [4], [3,1], [2,2], [2,1,1], [1,1,1,1]
        let t11 = exact_parts_count(1, 1, 8).unwrap();
        assert_eq!(t11.t[4].to_u64().unwrap(), 12);
        let t21 = exact_parts_count(2, 1, 8).unwrap();
        assert_eq!(t21.t[4].to_u64().unwrap(), 8);
        let t22 = exact_parts_count(2, 2, 8).unwrap();
        assert_eq!(t22.t[4].to_u64().unwrap(), 4);
        assert_eq!(t11.t[0].to_u64().unwrap(), 0);
    }

    #[test]
    fn brute_force_matches_convolution() {
        for modulus in 1..=6u32 {
            let tables: Vec<ExactTable> = (1..=modulus)
                .map(|r| exact_parts_count(modulus, r, 30).unwrap())
                .collect();
            for n in 0..=30u64 {
                for r in 1..=modulus {
                    let brute = brute_force_parts_count(modulus, r, n).unwrap();
                    assert_eq!(
                        tables[(r - 1) as usize].t[n as usize],
                        brute,
                        "T_{{{modulus},{r}}}({n})"
                    );
                }
            }
        }
    }

    #[test]
    fn residue_classes_partition_total_count() {
        let total = exact_parts_count(1, 1, 40).unwrap();
        for modulus in 2..=5u32 {
            for n in 0..=40usize {
                let sum: BigUint = (1..=modulus)
                    .map(|r| exact_parts_count(modulus, r, 40).unwrap().t[n].clone())
                    .sum();
                assert_eq!(sum, total.t[n], "R={modulus} n={n}");
            }
        }
    }

    #[test]
    fn brute_force_edge_cases() {
        assert_eq!(
            brute_force_parts_count(2, 2, 4).unwrap().to_u64().unwrap(),
            4
        );
        assert_eq!(
            brute_force_parts_count(2, 1, 4).unwrap().to_u64().unwrap(),
            8
        );
        assert_eq!(
            brute_force_parts_count(5, 3, 2).unwrap().to_u64().unwrap(),
            0
        );
        assert_eq!(brute_force_parts_count(3, 1, 0).unwrap(), BigUint::zero());
    }

    #[test]
    fn hook_lengths_of_staircase() {
        // lambda = (2,1): hooks are 3,1,1
        let lambda = Partition::new(vec![2, 1]).unwrap();
        let mut hooks = lambda.hook_lengths();
        hooks.sort_unstable();
        assert_eq!(hooks, vec![1, 1, 3]);
    }

    #[test]
    fn hook_sum_identity_small() {
        // H_{R,r}(n) = T_{R,r}(n), exactly, as rationals
        assert_eq!(
            hook_sum(1, 1, 1).unwrap(),
            BigRational::from(BigInt::from(1))
        );
        assert_eq!(
            hook_sum(1, 1, 4).unwrap(),
            BigRational::from(BigInt::from(12))
        );
        assert_eq!(
            hook_sum(2, 1, 4).unwrap(),
            BigRational::from(BigInt::from(8))
        );
        for modulus in 1..=4u32 {
            for r in 1..=modulus {
                for n in 0..=10u64 {
                    let h = hook_sum(modulus, r, n).unwrap();
                    let t = brute_force_parts_count(modulus, r, n).unwrap();
                    assert_eq!(
                        h,
                        BigRational::from(BigInt::from(t)),
                        "R={modulus} r={r} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn lambert_coefficient_check() {
        // coefficient route: T series = (divisor-count series) * 1/(q;q)_inf,
        // i.e. t[n] = sum_{s<=n} #{d | s : d = r (mod R)} p(n-s)
        let cap = 50usize;
        let p = partition_numbers(cap);
        for (modulus, r) in [(1u32, 1u32), (2, 1), (3, 2), (5, 5)] {
            let table = exact_parts_count(modulus, r, cap).unwrap();
            let target = r % modulus;
            for n in 0..=cap {
                let mut acc = BigUint::zero();
                for s in 1..=n {
                    let divs = (1..=s)
                        .filter(|d| s % d == 0 && (*d as u32) % modulus == target)
                        .count();
                    acc += p[n - s].clone() * BigUint::from(divs);
                }
                assert_eq!(acc, table.t[n], "R={modulus} r={r} n={n}");
            }
        }
    }

    #[test]
    fn domain_errors() {
        assert!(exact_parts_count(3, 0, 5).is_err());
        assert!(exact_parts_count(3, 4, 5).is_err());
        assert!(brute_force_parts_count(0, 1, 5).is_err());
    }
}
