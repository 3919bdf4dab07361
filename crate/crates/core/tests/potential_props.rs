//! Property tests for the potential catalog.

use proptest::prelude::*;
use scatter2d_core::potential::{AppendixBParams, RadialPotential};

#[test]
fn seam_continuity_at_declared_tolerance() {
    // |U(R_c - eps) - U(R_c + eps)| -> 0, checked at eps = 1e-6 R_c
    for &(a, r_c) in &[(1.0, 1.0), (0.5, 2.0), (-0.8, 0.7), (3.0, 0.1)] {
        let p = RadialPotential::appendix_b(AppendixBParams { strength: a, r_c }).unwrap();
        let eps = 1e-6 * r_c;
        let gap = (p.eval(r_c - eps) - p.eval(r_c + eps)).abs();
        let scale = p.eval(r_c).abs().max(1e-30);
        assert!(gap / scale < 1e-5, "A = {a}, R_c = {r_c}: relative gap {}", gap / scale);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn gaussian_honors_declared_range(
        u0 in prop::sample::select(vec![-5.0, -1.0, -0.3, 0.2, 1.0, 4.0]),
        a in 0.2f64..4.0,
    ) {
        let p = RadialPotential::gaussian(u0, a).unwrap();
        // spot-check on a log grid beyond r_range
        for i in 0..8 {
            let r = p.r_range() * 1.5f64.powi(i);
            prop_assert!(p.eval(r).abs() <= p.range_epsilon() * 1.0001);
        }
    }

    #[test]
    fn tabulated_honors_declared_range(n in 5usize..60, scale in 0.5f64..3.0) {
        let samples: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let r = scale * (i as f64 + 0.5) / n as f64;
                (r, (-r * r).exp())
            })
            .collect();
        let p = RadialPotential::tabulated(&samples).unwrap();
        for i in 0..6 {
            let r = p.r_range() * (1.0 + 0.7 * i as f64);
            prop_assert!(p.eval(r).abs() <= p.range_epsilon().max(1e-10) * 1.0001 || r <= p.r_range());
        }
    }

    #[test]
    fn appendix_b_seam_random(a in -3.0f64..3.0, r_c in 0.1f64..5.0) {
        prop_assume!(a.abs() > 1e-3);
        let p = RadialPotential::appendix_b(AppendixBParams { strength: a, r_c }).unwrap();
        let eps = 1e-6 * r_c;
        let gap = (p.eval(r_c - eps) - p.eval(r_c + eps)).abs();
        prop_assert!(gap / p.eval(r_c).abs() < 1e-5);
    }
}
