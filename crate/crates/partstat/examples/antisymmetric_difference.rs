//! The bias between complementary residue classes: T_{R,r}(n) - T_{R,R-r}(n)
//! against its three-term prediction, including the secondary exponential
//! line that becomes visible for R > 32.
//!
//!     cargo run --release --example antisymmetric_difference

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use partstat::asymptotics::{antisymmetric_difference_eval, antisymmetric_difference_split};
use partstat::partitions::exact_parts_count;

fn main() {
    let t31 = exact_parts_count(3, 1, 1000).unwrap();
    let t32 = exact_parts_count(3, 2, 1000).unwrap();
    println!("T_{{3,1}}(n) - T_{{3,2}}(n) vs the three-term prediction:");
    for n in [250u64, 500, 1000] {
        let exact =
            BigInt::from(t31.t[n as usize].clone()) - BigInt::from(t32.t[n as usize].clone());
        let pred = antisymmetric_difference_eval(3, 1, n).unwrap();
        let ns = (24 * n - 1) as f64 / 24.0;
        let err_scale = (std::f64::consts::PI * (ns / 6.0).sqrt()).exp();
        println!(
            "  n={n:>5}: exact = {:.6e}, prediction = {pred:.6e}, |diff|/error-class = {:.4}",
            exact.to_f64().unwrap(),
            (exact.to_f64().unwrap() - pred).abs() / err_scale
        );
    }

    // R = 48: the alpha-sum line carries e^{x/sqrt 2}, far above the error
    // class e^{x/2}; dropping it would wreck the prediction
    let with = antisymmetric_difference_split(48, 1, 1000).unwrap();
    println!(
        "\nT_{{48,1}} - T_{{48,47}} prediction at n = 1000: ln|value| = {:.4}",
        with.ln_abs()
    );
    println!("(the secondary line contributes at ln scale {:.4})", {
        let ns = (24.0 * 1000.0 - 1.0) / 24.0;
        let x = std::f64::consts::PI * (2.0 * ns / 3.0f64).sqrt();
        (std::f64::consts::PI / 24.0).sin().ln() + x * 0.5f64.sqrt()
            - (24.0 * (2.0 * ns).sqrt()).ln()
    });
}
