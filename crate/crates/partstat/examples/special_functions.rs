//! The special-function layer: half-integer Bessel I and its order
//! derivative, scaled exponential integrals, digamma at rationals, exact
//! Bernoulli data, and the shifted Euler-Maclaurin checker.
//!
//!     cargo run --release --example special_functions

use num_rational::Ratio;
use partstat::specfun::{
    bernoulli_number, bessel_i_half, bessel_i_half_scaled, bessel_i_order_derivative_half,
    bessel_i_series, digamma_rational, euler_maclaurin_residual, exp_integrals, sawtooth_rational,
    SmoothFn,
};

struct ExpDecay;
impl SmoothFn for ExpDecay {
    fn eval(&self, order: usize, x: f64) -> f64 {
        if order % 2 == 0 {
            (-x).exp()
        } else {
            -(-x).exp()
        }
    }
    fn max_order(&self) -> usize {
        8
    }
}

fn main() {
    println!("I_1/2(1)          = {:.12}", bessel_i_half(1.0).unwrap());
    println!("series oracle     = {:.12}", bessel_i_series(0.5, 1.0));
    println!(
        "II_1/2(3)         = {:.12}",
        bessel_i_order_derivative_half(3.0).unwrap()
    );
    println!(
        "e^-80 I_1/2(80)   = {:.12e} (scaled, no overflow)",
        bessel_i_half_scaled(80.0)
    );

    let ints = exp_integrals(200.0).unwrap();
    println!("\nexp integrals at x = 200:");
    println!("  E(x) = Ei e^-x  = {:.12e}  (x E -> 1)", ints.ei_scaled);
    println!("  F(x) = E1 e^+x  = {:.12e}  (x F -> 1)", ints.e1_scaled);

    println!("\ndigamma at rationals (Gauss closed form):");
    for (p, q) in [(1i64, 1i64), (1, 2), (1, 3), (2, 5)] {
        println!(
            "  psi({p}/{q}) = {:+.12}",
            digamma_rational(Ratio::new(p, q)).unwrap()
        );
    }

    println!(
        "\nBernoulli numbers: B_2 = {}, B_12 = {}",
        bernoulli_number(2),
        bernoulli_number(12)
    );
    println!("sawtooth ((7/3)) = {}", sawtooth_rational(Ratio::new(7, 3)));

    let r = euler_maclaurin_residual(&ExpDecay, 1.0 / 3.0, 0, 20, 2).unwrap();
    println!("\nshifted Euler-Maclaurin residual for e^-x, a = 1/3, L = 2: {r:.3e}");
}
