//! Property tests and independent series oracles for the special functions.

use proptest::prelude::*;
use scatter2d_core::specfun::{airy_ai, bessel_j, bessel_y};
use std::f64::consts::PI;

/// Independent Maclaurin oracle for J_m: direct term-by-term summation,
/// no code shared with the implementation path.
fn bessel_j_series_oracle(m: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for j in 1..=m {
        term *= half / j as f64;
    }
    let mut sum = term;
    for j in 1..500 {
        term *= -(half * half) / (j as f64 * (j as f64 + m as f64));
        sum += term;
        if term.abs() < 1e-20 * sum.abs().max(1e-300) {
            break;
        }
    }
    sum
}

#[test]
fn j0_at_one_matches_series_oracle() {
    let oracle = bessel_j_series_oracle(0, 1.0);
    // frozen value of the oracle itself
    assert!((oracle - 0.765_197_686_557_966_6).abs() < 1e-15);
    assert!((bessel_j(0, 1.0).unwrap() - oracle).abs() < 1e-12);
}

#[test]
fn j_matches_series_oracle_on_grid() {
    for m in [0u32, 1, 2, 5, 9] {
        for i in 1..=24 {
            let x = 0.5 * i as f64; // series oracle trustworthy to x = 12
            let value = bessel_j(m, x).unwrap();
            let oracle = bessel_j_series_oracle(m, x);
            assert!(
                (value - oracle).abs() < 1e-11 * (1.0 + oracle.abs()),
                "J_{m}({x}): {value} vs {oracle}"
            );
        }
    }
}

#[test]
fn y0_diverges_toward_origin() {
    // irregular solution: large negative as x -> 0+, rejected below x_min
    let y = bessel_y(0, 1e-8).unwrap();
    assert!(y < -5.0);
    assert!(bessel_y(0, 1e-13).is_err());
    assert!(bessel_y(0, 0.0).is_err());
    assert!(bessel_y(0, -1.0).is_err());
}

#[test]
fn wronskian_sweep() {
    // J_{m+1} Y_m - J_m Y_{m+1} = 2/(pi x) within 1e-9 on x in [1, 100]
    for m in [0u32, 1, 2, 5, 10, 20, 30] {
        for i in 0..=198 {
            let x = 1.0 + 0.5 * i as f64;
            let w = bessel_j(m + 1, x).unwrap() * bessel_y(m, x).unwrap()
                - bessel_j(m, x).unwrap() * bessel_y(m + 1, x).unwrap();
            let expect = 2.0 / (PI * x);
            assert!(
                (w - expect).abs() < 1e-9,
                "Wronskian m = {m}, x = {x}: {w} vs {expect}"
            );
        }
    }
}

#[test]
fn airy_ode_residual_across_range() {
    // Ai'' - x Ai = 0 with the second derivative from central differences
    let h = 1e-3;
    for i in 0..=100 {
        let x = -5.0 + 0.1 * i as f64;
        let f = |t: f64| airy_ai(t).unwrap();
        let second = (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
        assert!((second - x * f(x)).abs() < 1e-6, "x = {x}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn recurrence_consistency(m in 1u32..=30, x in 0.5f64..100.0) {
        // J_{m-1}(x) + J_{m+1}(x) = (2m/x) J_m(x), relative to the largest term
        let jm1 = bessel_j(m - 1, x).unwrap();
        let jp1 = bessel_j(m + 1, x).unwrap();
        let jm = bessel_j(m, x).unwrap();
        let lhs = jm1 + jp1;
        let rhs = 2.0 * m as f64 / x * jm;
        let scale = lhs.abs().max(rhs.abs()).max(1e-300);
        prop_assert!(
            (lhs - rhs).abs() / scale < 1e-9,
            "m = {}, x = {}: {} vs {}", m, x, lhs, rhs
        );
    }

    #[test]
    fn wronskian_property(m in 0u32..=30, x in 1.0f64..100.0) {
        let w = bessel_j(m + 1, x).unwrap() * bessel_y(m, x).unwrap()
            - bessel_j(m, x).unwrap() * bessel_y(m + 1, x).unwrap();
        prop_assert!((w - 2.0 / (PI * x)).abs() < 1e-9);
    }

    #[test]
    fn airy_is_finite_and_bounded(x in -30.0f64..30.0) {
        let ai = airy_ai(x).unwrap();
        prop_assert!(ai.is_finite());
        prop_assert!(ai.abs() <= 0.7);
    }
}
