//! The generating series F_{R,r} splits into an indefinite theta function
//! f_{R,(0,r)} (modular) plus a false-indefinite one g_{R,(0,r)} (not), and
//! the kernel Phi with its exact pole bookkeeping drives the fifth
//! circle-method component.
//!
//!     cargo run --release --example theta_decomposition

use num_complex::Complex64;
use partstat::circle::{kernel_phi, locate_pole, pv_kernel_integral};
use partstat::qseries::{eisenstein_f, false_theta_g, indef_theta_f, LatticeShift, UpperHalfPoint};
use partstat::TruncationParams;

fn main() {
    let tp = TruncationParams::default();
    let tau = UpperHalfPoint::new(Complex64::new(0.1, 0.7)).unwrap();
    for (modulus, r) in [(3u32, 2u32), (5, 2)] {
        let shift = LatticeShift::new(modulus, (0, r as i64)).unwrap();
        let f = indef_theta_f(&shift, &tau, &tp);
        let g = false_theta_g(&shift, &tau, &tp);
        let lambert = eisenstein_f(modulus, r, 1, &tau, &tp).unwrap();
        println!("R={modulus} r={r}:");
        println!("  f + g    = {:.12}", f + g);
        println!(
            "  F_{{R,r}}  = {lambert:.12}  (diff {:.2e})",
            (f + g - lambert).norm()
        );
    }

    // kernel pole bookkeeping: R < 24 has no pole; R = 25 puts one at 1/25
    println!("\nkernel poles on (0, 1/24):");
    for (modulus, lambda) in [(5u32, (3i64, 7i64)), (25, (1, 1)), (49, (48, 47))] {
        let p = locate_pole(modulus, 1, lambda).unwrap();
        match p.t_val {
            Some(t) => println!("  R={modulus} lambda={lambda:?}: pole at t = {t}"),
            None => println!("  R={modulus} lambda={lambda:?}: no pole"),
        }
    }

    let w = Complex64::new(1.0 / 50.0, 0.0);
    println!(
        "\nPhi_{{5,2,(3,7)}}(1/50) = {:.12e}",
        kernel_phi(5, 2, (3, 7), w, &tp).unwrap().re
    );
    println!(
        "PV kernel integral (R=25, k=1, lambda=(1,1), n=40) = {:.6e}",
        pv_kernel_integral(25, 1, (1, 1), 40, &tp).unwrap()
    );
}
