//! The Euler-Maclaurin/Mordell summation identity for the twisted series
//! sum_m 1/(zeta_k^{-nu} e^{(m+alpha)t} - 1), covering both divisibility
//! branches and the alpha = 1 correction path.
//!
//!     cargo run --release --example summation_identity

use num_rational::Ratio;
use partstat::qseries::twisted_sum_identity_check;
use partstat::TruncationParams;

fn main() {
    let tp = TruncationParams::default();
    println!("{:<34} {:>14}", "parameters", "residual");
    for (k, nu, alpha, t, label) in [
        (3u32, 1i64, Ratio::new(1i64, 3), 2.0f64, "k !| nu"),
        (3, 2, Ratio::new(2, 3), 1.0, "k !| nu"),
        (5, 7, Ratio::new(3, 5), 3.0, "k !| nu"),
        (1, 0, Ratio::new(1, 2), 1.0, "k | nu, digamma branch"),
        (2, 2, Ratio::new(1, 1), 1.5, "k | nu, alpha = 1"),
        (6, 4, Ratio::new(5, 6), 0.5, "k !| nu, slow decay"),
    ] {
        let r = twisted_sum_identity_check(k, nu, alpha, t, &tp).unwrap();
        println!(
            "{:<34} {:>14.3e}   ({label})",
            format!("k={k} nu={nu} alpha={alpha} t={t}"),
            r
        );
    }
}
