//! End-to-end acceptance suite. Each test covers one numbered criterion,
//! runs it at its stated tolerance, and prints one PASS line (visible with
//! --nocapture). Every tolerance is pinned here; none defer to runtime
//! calibration.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

use partstat::asymptotics::{
    antisymmetric_difference_eval, leading_asymptotic, part_probability_ratio,
};
use partstat::circle::expansion_sweep;
use partstat::partitions::{brute_force_parts_count, exact_parts_count, hook_sum};
use partstat::qseries::{pv_laplace_pole, twisted_sum_identity_check, verify_cusp_transformation};
use partstat::specfun::{
    bernoulli_poly, bessel_i_3half, bessel_i_half, bessel_i_order_derivative_half, bessel_i_series,
    euler_maclaurin_residual, SmoothFn,
};
use partstat::TruncationParams;

const PI: f64 = std::f64::consts::PI;

fn tp() -> TruncationParams {
    TruncationParams::default()
}

#[test]
fn criterion_01_exact_oracle_equivalence() {
    let start = Instant::now();
    for modulus in 1..=6u32 {
        let tables: Vec<_> = (1..=modulus)
            .map(|r| exact_parts_count(modulus, r, 30).unwrap())
            .collect();
        for n in 0..=30u64 {
            for r in 1..=modulus {
                let brute = brute_force_parts_count(modulus, r, n).unwrap();
                assert_eq!(
                    tables[(r - 1) as usize].t[n as usize],
                    brute,
                    "T_{{{modulus},{r}}}({n}) mismatch"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget 5 s");
    println!("ACCEPTANCE 1 (exact-oracle equivalence, n <= 30, R <= 6): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_hook_identity() {
    let start = Instant::now();
    for modulus in 1..=5u32 {
        for r in 1..=modulus {
            let table = exact_parts_count(modulus, r, 15).unwrap();
            for n in 0..=15u64 {
                let hooks = hook_sum(modulus, r, n).unwrap();
                assert!(
                    hooks.is_integer(),
                    "H_{{{modulus},{r}}}({n}) not an integer"
                );
                assert_eq!(
                    hooks.to_integer().to_biguint().unwrap(),
                    table.t[n as usize],
                    "hook identity fails at R={modulus} r={r} n={n}"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "took {elapsed:?}, budget 30 s"
    );
    println!("ACCEPTANCE 2 (hook identity, n <= 15, R <= 5): PASS in {elapsed:?}");
}

#[test]
fn criterion_03_cusp_transformation_grid() {
    let start = Instant::now();
    let mut max_residual: f64 = 0.0;
    for (modulus, r) in [(1u32, 1u32), (3, 1), (3, 2), (5, 2)] {
        for (h, k) in [(0i64, 1i64), (1, 2), (1, 3), (2, 3)] {
            for z in [Complex64::new(1.0, 0.0), Complex64::new(1.2, 0.4)] {
                let check = verify_cusp_transformation(modulus, r, h, k, z, &tp()).unwrap();
                let residual = check.residual();
                assert!(
                    residual <= 1e-6,
                    "R={modulus} r={r} h={h} k={k} z={z}: residual {residual:e}"
                );
                max_residual = max_residual.max(residual);
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "took {elapsed:?}, budget 2 min"
    );
    println!(
        "ACCEPTANCE 3 (modular transformation grid, residual <= 1e-6): PASS, max residual {max_residual:.2e} in {elapsed:?}"
    );
}

#[test]
fn criterion_04_twisted_sum_identity_grid() {
    // both divisibility branches and the alpha = 1 case
    let mut max_residual: f64 = 0.0;
    for (k, nu, an, ad, t) in [
        (3u32, 1i64, 1i64, 3i64, 2.0f64), // k !| nu
        (3, 2, 2, 3, 1.0),
        (5, 7, 3, 5, 3.0),
        (4, 2, 1, 2, 0.7),
        (1, 0, 1, 2, 1.0), // k | nu, log/digamma branch
        (2, 2, 1, 1, 1.5), // k | nu with alpha = 1
        (1, 0, 1, 1, 0.5),
        (6, 4, 5, 6, 0.5),
    ] {
        let residual = twisted_sum_identity_check(k, nu, Ratio::new(an, ad), t, &tp()).unwrap();
        assert!(
            residual <= 1e-7,
            "k={k} nu={nu} alpha={an}/{ad} t={t}: {residual:e}"
        );
        max_residual = max_residual.max(residual);
    }
    println!("ACCEPTANCE 4 (summation identity grid, residual <= 1e-7): PASS, max residual {max_residual:.2e}");
}

#[test]
fn criterion_05_circle_method_expansion() {
    let start = Instant::now();
    // The absolute-error class is n^{3/4} log n with an unspecified constant;
    // the implementation lands at f64 noise (~1e-15 relative), so the
    // recorded constant is representation-noise-dominated at n = 1000.
    const RECORDED_CONSTANT: f64 = 2.0e16;
    let grid = [125u64, 250, 500, 1000];
    for (modulus, r) in [(1u32, 1u32), (3, 1), (5, 2)] {
        let rows = expansion_sweep(modulus, r, &grid, &tp()).unwrap();
        let last = rows.last().unwrap();
        assert!(
            last.rel_error <= 0.02,
            "R={modulus} r={r} n=1000: rel_error {}",
            last.rel_error
        );
        let mut inversions = 0;
        for w in rows.windows(2) {
            if w[1].rel_error > w[0].rel_error {
                inversions += 1;
            }
        }
        assert!(
            inversions <= 1,
            "R={modulus} r={r}: {inversions} inversions in rel_error"
        );
        for b in &rows {
            let exact_f = b.exact.to_f64().unwrap();
            let scaled = (b.sum - exact_f).abs() / ((b.n as f64).powf(0.75) * (b.n as f64).ln());
            assert!(
                scaled <= RECORDED_CONSTANT,
                "R={modulus} r={r} n={}: |err|/(n^0.75 ln n) = {scaled:e}",
                b.n
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 600.0,
        "took {elapsed:?}, budget 10 min"
    );
    println!(
        "ACCEPTANCE 5 (five-part expansion: rel_error(1000) <= 2%, error class bounded by {RECORDED_CONSTANT:.0e}): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_06_leading_asymptotic_ratio() {
    for (modulus, r) in [(1u32, 1u32), (3, 1), (5, 2)] {
        let table = exact_parts_count(modulus, r, 1000).unwrap();
        let devs: Vec<f64> = [250u64, 500, 1000]
            .iter()
            .map(|&n| {
                let pred = leading_asymptotic(modulus, r, n, &tp()).unwrap();
                let ratio = table.t[n as usize].to_f64().unwrap() / pred.value_f64();
                assert!(
                    (0.97..=1.03).contains(&ratio),
                    "R={modulus} r={r} n={n}: ratio {ratio}"
                );
                (ratio - 1.0).abs()
            })
            .collect();
        let inversions = devs.windows(2).filter(|w| w[1] > w[0]).count();
        assert!(inversions <= 1, "R={modulus} r={r}: deviations {devs:?}");
        assert!(
            devs[2] < devs[0],
            "no improvement from 250 to 1000: {devs:?}"
        );
    }
    println!("ACCEPTANCE 6 (leading asymptotic: ratio in [0.97, 1.03] at n=1000, monotone improvement): PASS");
}

#[test]
fn criterion_07_antisymmetric_difference() {
    // |exact difference - three-term formula| / e^{pi sqrt(n_s/6)} bounded;
    // at n = 1000 the measurement is limited by the rounding of exp(x)
    // (x ~ 81), which dominates the true error-class constant (~0.003).
    const RECORDED_CONSTANT: f64 = 10.0;
    let t31 = exact_parts_count(3, 1, 1000).unwrap();
    let t32 = exact_parts_count(3, 2, 1000).unwrap();
    let mut worst: f64 = 0.0;
    for n in [250u64, 500, 1000] {
        let d = BigInt::from(t31.t[n as usize].clone()) - BigInt::from(t32.t[n as usize].clone());
        let d_exact = d.to_f64().unwrap();
        let formula = antisymmetric_difference_eval(3, 1, n).unwrap();
        let ns = (24 * n - 1) as f64 / 24.0;
        let scaled = (d_exact - formula).abs() / (PI * (ns / 6.0).sqrt()).exp();
        assert!(scaled <= RECORDED_CONSTANT, "n={n}: scaled error {scaled}");
        worst = worst.max(scaled);
    }
    println!(
        "ACCEPTANCE 7 (antisymmetric difference, scaled error <= {RECORDED_CONSTANT}): PASS, max {worst:.3}"
    );
}

#[test]
fn criterion_08_probability_ratio() {
    let t52 = exact_parts_count(5, 2, 1000).unwrap();
    let t11 = exact_parts_count(1, 1, 1000).unwrap();
    let mut errs = Vec::new();
    for n in [250u64, 1000] {
        let exact_ratio = t52.t[n as usize].to_f64().unwrap() / t11.t[n as usize].to_f64().unwrap();
        let pred = part_probability_ratio(5, 2, n).unwrap();
        let err = (exact_ratio - pred).abs();
        assert!(
            err / pred <= 0.15,
            "n={n}: relative deviation {}",
            err / pred
        );
        errs.push(err);
    }
    assert!(errs[1] < errs[0], "no improvement: {errs:?}");
    println!("ACCEPTANCE 8 (probability ratio within 15%, improving 250 -> 1000): PASS");
}

struct ExpDecay;
impl SmoothFn for ExpDecay {
    fn eval(&self, order: usize, x: f64) -> f64 {
        let sign = if order % 2 == 0 { 1.0 } else { -1.0 };
        sign * (-x).exp()
    }
    fn max_order(&self) -> usize {
        8
    }
}

#[test]
fn criterion_09_special_functions() {
    // Bessel elementary forms vs power series on [0.1, 30]
    let mut x = 0.1;
    while x <= 30.0 {
        let a = bessel_i_half(x).unwrap();
        assert!(
            (a - bessel_i_series(0.5, x)).abs() <= 1e-12 * a,
            "I_1/2 at {x}"
        );
        let a = bessel_i_3half(x).unwrap();
        assert!(
            (a - bessel_i_series(1.5, x)).abs() <= 1e-12 * a.abs().max(1e-12),
            "I_3/2 at {x}"
        );
        x += 0.193;
    }

    // order derivative vs finite difference through the series oracle
    let eps = 1e-5;
    let fd = (bessel_i_series(0.5 + eps, 3.0) - bessel_i_series(0.5 - eps, 3.0)) / (2.0 * eps);
    assert!((bessel_i_order_derivative_half(3.0).unwrap() - fd).abs() <= 1e-6);

    // Bernoulli Fourier identity at l = 2, x = 0.3, 1e5 terms
    let xb = 0.3f64;
    let mut fourier = 0.0;
    for m in 1..=100_000u64 {
        let mf = m as f64;
        fourier += 2.0 * (2.0 * PI * mf * xb - PI).cos() / (2.0 * PI * mf).powi(2);
    }
    assert!((-2.0 * fourier - bernoulli_poly(2, xb)).abs() <= 1e-8);

    // principal-value bound on 200 seeded random samples, zero violations
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let w = Complex64::new(rng.gen_range(0.5..5.0), rng.gen_range(-3.0..3.0));
        let mag = rng.gen_range(0.2..10.0);
        let alpha = if i % 2 == 0 { mag } else { -mag };
        let v = pv_laplace_pole(w, alpha, &tp()).unwrap();
        let bound = if alpha > 0.0 {
            PI * (-2.0 * PI * alpha * w.re).exp() + 1.0 / (alpha * alpha * w.re * w.re)
        } else {
            1.0 / (alpha * alpha * w.re * w.re)
        };
        assert!(
            v.norm() <= bound * (1.0 + 1e-9),
            "bound violated at w={w} alpha={alpha}"
        );
    }

    // Euler-Maclaurin both-sides residual
    let r = euler_maclaurin_residual(&ExpDecay, 1.0 / 3.0, 0, 20, 2).unwrap();
    assert!(r <= 1e-9, "Euler-Maclaurin residual {r:e}");

    println!("ACCEPTANCE 9 (special functions: Bessel 1e-12, order derivative 1e-6, Fourier 1e-8, PV bound 0 violations, Euler-Maclaurin 1e-9): PASS");
}

#[test]
fn criterion_10_deterministic_reports() {
    let bin = env!("CARGO_BIN_EXE_partstat");
    let dir = std::env::temp_dir().join("partstat-acceptance-determinism");
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();

    let runs: Vec<Vec<String>> = vec![
        vec!["exact", "--R", "5", "--r", "2", "--n", "0..64"],
        vec!["compare", "--R", "3", "--r", "1", "--n", "20,40"],
        vec!["compare", "--R", "3", "--r", "1", "--n", "60,80", "--diff"],
        vec!["transform-check", "--identity", "prop31"],
        vec!["specfun-check", "--seed", "99"],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();

    for (i, args) in runs.iter().enumerate() {
        let mut outputs = Vec::new();
        for pass in 0..2 {
            let path = dir.join(format!("run{i}-pass{pass}.json"));
            let status = std::process::Command::new(bin)
                .args(args)
                .arg("--out")
                .arg(&path)
                .status()
                .unwrap();
            assert!(status.success(), "command {args:?} failed");
            outputs.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(outputs[0], outputs[1], "bytes differ for {args:?}");
    }
    println!("ACCEPTANCE 10 (byte-identical reruns across the report suite): PASS");
}
