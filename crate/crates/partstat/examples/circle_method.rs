//! The five-part circle-method expansion of T_{R,r}(n) against the exact
//! big-integer values: per-component breakdown and relative errors.
//!
//!     cargo run --release --example circle_method

use partstat::circle::{expansion_sweep, kloosterman_k1};
use partstat::TruncationParams;

fn main() {
    let tp = TruncationParams::default();
    let (modulus, r) = (5u32, 2u32);
    println!("five-part expansion for T_{{{modulus},{r}}}(n):\n");
    let rows = expansion_sweep(modulus, r, &[125, 250, 500, 1000], &tp).unwrap();
    for b in &rows {
        println!("n = {}", b.n);
        println!("  exact      = {}", b.exact);
        println!(
            "  total      = {:.6e}   rel error {:.3e}",
            b.sum, b.rel_error
        );
        for (j, (c, lm)) in b.components.iter().zip(&b.log_magnitudes).enumerate() {
            println!("  T[{}]       = {c:>13.6e}   (ln|.| = {lm:.2})", j + 1);
        }
    }

    // the Kloosterman sums behind the k-dependence
    println!("\nK[1](1000, k) for small k:");
    for k in 1..=6i64 {
        let v = kloosterman_k1(1000, k).unwrap();
        println!("  k={k}: {v:.6}");
    }
}
