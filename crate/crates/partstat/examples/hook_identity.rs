//! The multiset of hook lengths over all partitions of n matches the parts
//! repeated by their own size, so reciprocal hook sums in a residue class
//! collapse to exact integers: H_{R,r}(n) = T_{R,r}(n).
//!
//!     cargo run --release --example hook_identity

use partstat::partitions::{exact_parts_count, hook_sum, Partition};

fn main() {
    let lambda = Partition::new(vec![4, 2, 1]).unwrap();
    let mut hooks = lambda.hook_lengths();
    hooks.sort_unstable();
    println!("hook lengths of (4,2,1): {hooks:?}");

    for modulus in 1..=5u32 {
        let tables: Vec<_> = (1..=modulus)
            .map(|r| exact_parts_count(modulus, r, 15).unwrap())
            .collect();
        for r in 1..=modulus {
            for n in 0..=15u64 {
                let h = hook_sum(modulus, r, n).unwrap();
                assert!(h.is_integer(), "hook sum must be an integer");
                assert_eq!(
                    h.to_integer().to_biguint().unwrap(),
                    tables[(r - 1) as usize].t[n as usize]
                );
            }
        }
        println!("H_{{{modulus},r}}(n) = T_{{{modulus},r}}(n) exactly for all r, n <= 15");
    }

    // one concrete value: the 12 parts over the partitions of 4, as a
    // sum of reciprocal hooks
    let h = hook_sum(1, 1, 4).unwrap();
    println!("H_{{1,1}}(4) = {h} (= T_{{1,1}}(4))");
}
