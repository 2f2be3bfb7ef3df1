//! The closed-form leading asymptotic of T_{R,r}(n): per-term bracket
//! breakdown, the a-coefficient power expansion, and convergence of the
//! exact/predicted ratio.
//!
//!     cargo run --release --example leading_asymptotics

use num_traits::ToPrimitive;
use partstat::asymptotics::{
    leading_asymptotic, power_expansion_coefficients, power_expansion_eval,
};
use partstat::partitions::exact_parts_count;
use partstat::TruncationParams;

fn main() {
    let tp = TruncationParams::default();
    let (modulus, r) = (5u32, 2u32);
    let table = exact_parts_count(modulus, r, 1000).unwrap();

    println!("exact / leading-asymptotic ratio for T_{{{modulus},{r}}}(n):");
    for n in [125u64, 250, 500, 1000] {
        let pred = leading_asymptotic(modulus, r, n, &tp).unwrap();
        let ratio = table.t[n as usize].to_f64().unwrap() / pred.value_f64();
        println!("  n={n:>5}: ratio - 1 = {:+.3e}", ratio - 1.0);
    }

    let pred = leading_asymptotic(modulus, r, 1000, &tp).unwrap();
    println!("\nbracket terms at n = 1000:");
    println!("  log n_s        = {:+.9}", pred.terms.log_ns);
    println!("  constant       = {:+.9}", pred.terms.constant);
    println!("  1/sqrt(n_s)    = {:+.9}", pred.terms.sqrt_correction);
    println!("  1/n_s          = {:+.9}", pred.terms.inv_correction);
    println!("  2 E(2x)        = {:+.9}", pred.terms.exp_integral);
    println!("  Psi integral   = {:+.9e}", pred.terms.psi_integral);

    let coeffs = power_expansion_coefficients(modulus, r, 6).unwrap();
    println!("\npower-expansion coefficients a_{{{modulus},{r},l}}:");
    for (l, a) in coeffs.iter().enumerate() {
        println!("  a_{l} = {a:+.9}");
    }
    let c14 = power_expansion_eval(modulus, r, 1000, 6).unwrap();
    println!(
        "\npower form with L = 6 at n = 1000: exact/pred - 1 = {:+.3e}",
        table.t[1000].to_f64().unwrap() / c14.to_f64() - 1.0
    );
}
