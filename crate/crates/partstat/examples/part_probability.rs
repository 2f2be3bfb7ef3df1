//! The probability that a part (equivalently a reciprocal-weighted hook
//! length) lies in a residue class: T_{R,r}(n)/T_{1,1}(n) against its
//! 1/log expansion. Parts equidistribute, with a digamma-shaped bias
//! toward small residues at finite n.
//!
//!     cargo run --release --example part_probability

use num_traits::ToPrimitive;
use partstat::asymptotics::part_probability_ratio;
use partstat::partitions::exact_parts_count;

fn main() {
    let modulus = 5u32;
    let t11 = exact_parts_count(1, 1, 1000).unwrap();
    let tables: Vec<_> = (1..=modulus)
        .map(|r| exact_parts_count(modulus, r, 1000).unwrap())
        .collect();

    println!("probability of a part being r (mod 5), exact vs predicted:");
    println!(
        "{:>4} {:>6} {:>12} {:>12} {:>10}",
        "n", "r", "exact", "predicted", "diff"
    );
    for n in [250u64, 1000] {
        for r in 1..=modulus {
            let exact = tables[(r - 1) as usize].t[n as usize].to_f64().unwrap()
                / t11.t[n as usize].to_f64().unwrap();
            let pred = part_probability_ratio(modulus, r, n).unwrap();
            println!(
                "{n:>4} {r:>6} {exact:>12.6} {pred:>12.6} {:>10.2e}",
                (exact - pred).abs()
            );
        }
    }

    // far beyond exact-table reach the prediction approaches 1/R
    println!("\npredicted ratios at n = 10^6 (limit 1/5 = 0.2):");
    for r in 1..=modulus {
        let v = part_probability_ratio(modulus, r, 1_000_000).unwrap();
        println!("  r={r}: {v:.6}");
    }
}
