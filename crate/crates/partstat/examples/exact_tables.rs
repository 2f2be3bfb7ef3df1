//! Exact tables of T_{R,r}(n): big-integer convolution vs brute-force
//! enumeration, and the residue-class sum rule.
//!
//!     cargo run --release --example exact_tables

use partstat::partitions::{brute_force_parts_count, exact_parts_count};

fn main() {
    let (modulus, cap) = (3u32, 20usize);
    let tables: Vec<_> = (1..=modulus)
        .map(|r| exact_parts_count(modulus, r, cap).unwrap())
        .collect();
    let total = exact_parts_count(1, 1, cap).unwrap();

    println!("T_{{3,r}}(n) for n <= {cap}:");
    println!(
        "{:>4} {:>12} {:>10} {:>10} {:>10} {:>10}",
        "n", "p(n)", "r=1", "r=2", "r=3", "total"
    );
    for n in 0..=cap {
        println!(
            "{:>4} {:>12} {:>10} {:>10} {:>10} {:>10}",
            n,
            total.p[n].to_string(),
            tables[0].t[n].to_string(),
            tables[1].t[n].to_string(),
            tables[2].t[n].to_string(),
            total.t[n].to_string(),
        );
        let sum: num_bigint::BigUint = tables.iter().map(|t| t.t[n].clone()).sum();
        assert_eq!(
            sum, total.t[n],
            "residue classes must partition the total part count"
        );
    }

    // spot-check the convolution against direct enumeration
    for r in 1..=modulus {
        let brute = brute_force_parts_count(modulus, r, 20).unwrap();
        assert_eq!(brute, tables[(r - 1) as usize].t[20]);
    }
    println!("\nconvolution agrees with brute-force enumeration at n = 20");

    // the big numbers are exact: T_{1,1}(1000) has 34 digits
    let large = exact_parts_count(1, 1, 1000).unwrap();
    println!("T_{{1,1}}(1000) = {}", large.t[1000]);
}
