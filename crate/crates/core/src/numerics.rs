//! Shared numerical kernels: adaptive Gauss-Kronrod quadrature, root
//! bracketing and bisection, scalar minimization, and finite-difference
//! derivatives with one level of Richardson extrapolation.

use crate::error::{Error, Result};

/// Gauss-Kronrod 7-15 abscissae on [0, 1] (positive half, descending).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

/// 7-point Gauss weights.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

/// 15-point Kronrod weights.
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// One Gauss-Kronrod 7-15 panel; returns (integral, error estimate).
///
/// The error estimate is the QUADPACK one: the raw |K15 - G7| difference
/// sharpened against the local variation resasc, floored at roundoff level.
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let f_center = f(center);
    let mut gauss = WG[3] * f_center;
    let mut kronrod = WGK[7] * f_center;
    let mut resabs = WGK[7] * f_center.abs();
    let mut fv = [[0.0_f64; 2]; 7];

    for j in 0..7 {
        let x = half * XGK[j];
        let (f1, f2) = (f(center - x), f(center + x));
        fv[j] = [f1, f2];
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[j][0] - mean).abs() + (fv[j][1] - mean).abs());
    }
    resasc *= half.abs();
    resabs *= half.abs();

    let integral = kronrod * half;
    let mut err = ((kronrod - gauss) * half).abs();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * 1.0_f64.min((200.0 * err / resasc).powf(1.5));
    }
    let floor = 50.0 * f64::EPSILON * resabs;
    if floor > f64::MIN_POSITIVE {
        err = err.max(floor);
    }
    (integral, err)
}

/// Adaptively integrates `f` over [a, b] to absolute tolerance `abs_tol`.
///
/// Bisects the interval with the largest error estimate until the total
/// estimated error is below tolerance. Integrable interior spikes (for
/// example near-zero radicands close to an orbiting impact parameter) are
/// handled by the subdivision; a hard cap on the interval count guards
/// against genuinely divergent integrands.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    const MAX_INTERVALS: usize = 4000;

    if a == b {
        return Ok(0.0);
    }
    let (est, err) = qk15(&f, a, b);
    let mut intervals = vec![(a, b, est, err)];

    loop {
        let total_err: f64 = intervals.iter().map(|iv| iv.3).sum();
        if total_err <= abs_tol {
            return Ok(intervals.iter().map(|iv| iv.2).sum());
        }
        if intervals.len() >= MAX_INTERVALS {
            return Err(Error::QuadratureNonConvergent(format!(
                "error estimate {total_err:.3e} > tol {abs_tol:.3e} after {} intervals",
                intervals.len()
            )));
        }
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1 .3.total_cmp(&y.1 .3))
            .map(|(i, _)| i)
            .unwrap();
        let (lo, hi, _, _) = intervals.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            // interval at floating-point resolution; keep its estimate
            let panel = qk15(&f, lo, hi);
            intervals.push((lo, hi, panel.0, 0.0));
            continue;
        }
        let left = qk15(&f, lo, mid);
        let right = qk15(&f, mid, hi);
        intervals.push((lo, mid, left.0, left.1));
        intervals.push((mid, hi, right.0, right.1));
    }
}

/// Refines a bracketed sign change of `f` by bisection.
///
/// `f(lo)` and `f(hi)` must have opposite signs. Iterates until the bracket
/// width falls below `rel_tol * max(|lo|, |hi|, 1)`.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, rel_tol: f64) -> Result<f64> {
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::InvalidArgument(format!(
            "bisect: no sign change on [{lo:.6e}, {hi:.6e}]"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo).abs() <= rel_tol * lo.abs().max(hi.abs()).max(1.0) || mid <= lo.min(hi) || mid >= lo.max(hi) {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Golden-section minimization of `f` on [a, b] to interval width `tol`.
///
/// Assumes a unimodal function on the bracket; returns the abscissa of the
/// smallest value seen.
pub fn golden_minimize<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_8;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc < fd {
        c
    } else {
        d
    }
}

/// Centered first derivative with one Richardson level: O(h^4) accurate.
pub fn central_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let d_h = (f(x + h) - f(x - h)) / (2.0 * h);
    let d_h2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    (4.0 * d_h2 - d_h) / 3.0
}

/// Centered second derivative with one Richardson level: O(h^4) accurate.
pub fn second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    let fx = f(x);
    let s_h = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
    let s_h2 = (f(x + 0.5 * h) - 2.0 * fx + f(x - 0.5 * h)) / (0.25 * h * h);
    (4.0 * s_h2 - s_h) / 3.0
}

/// Fritsch-Carlson monotone-cubic slopes for a PCHIP interpolant.
pub fn pchip_slopes(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut d = vec![0.0; n];
    let h: Vec<f64> = xs.windows(2).map(|w| w[1] - w[0]).collect();
    let delta: Vec<f64> = (0..n - 1).map(|i| (ys[i + 1] - ys[i]) / h[i]).collect();
    if n == 2 {
        d[0] = delta[0];
        d[1] = delta[0];
        return d;
    }
    d[0] = pchip_endpoint(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = pchip_endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    for i in 1..n - 1 {
        if delta[i - 1] * delta[i] <= 0.0 {
            d[i] = 0.0;
        } else {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    d
}

fn pchip_endpoint(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
    let s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if s * d0 <= 0.0 {
        0.0
    } else if d0 * d1 <= 0.0 && s.abs() > 3.0 * d0.abs() {
        3.0 * d0
    } else {
        s
    }
}

/// Evaluates the PCHIP interpolant; clamps below the table, zero beyond it.
pub fn pchip_eval(xs: &[f64], ys: &[f64], d: &[f64], x: f64) -> f64 {
    let n = xs.len();
    if x <= xs[0] {
        return ys[0];
    }
    if x >= xs[n - 1] {
        return 0.0;
    }
    let i = match xs.partition_point(|&v| v <= x) {
        0 => 0,
        p => p - 1,
    };
    let h = xs[i + 1] - xs[i];
    let t = (x - xs[i]) / h;
    let (t2, t3) = (t * t, t * t * t);
    let h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    let h10 = t3 - 2.0 * t2 + t;
    let h01 = -2.0 * t3 + 3.0 * t2;
    let h11 = t3 - t2;
    h00 * ys[i] + h10 * h * d[i] + h01 * ys[i + 1] + h11 * h * d[i + 1]
}

/// Least-squares straight line through (xs, ys); returns (slope, intercept).
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> Result<(f64, f64)> {
    if xs.len() != ys.len() || xs.len() < 2 {
        return Err(Error::IllConditionedFit(format!(
            "need >= 2 paired samples, got {} and {}",
            xs.len(),
            ys.len()
        )));
    }
    let n = xs.len() as f64;
    let sx: f64 = xs.iter().sum();
    let sy: f64 = ys.iter().sum();
    let sxx: f64 = xs.iter().map(|x| x * x).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| x * y).sum();
    let denom = n * sxx - sx * sx;
    if denom.abs() < 1e-300 * n * sxx.abs().max(1.0) {
        return Err(Error::IllConditionedFit("degenerate abscissae".into()));
    }
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    Ok((slope, intercept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn integrates_smooth_functions() {
        let v = integrate(|x| x.sin(), 0.0, PI, 1e-12).unwrap();
        assert!((v - 2.0).abs() < 1e-11);
        let v = integrate(|x| (-x * x).exp(), -8.0, 8.0, 1e-12).unwrap();
        assert!((v - PI.sqrt()).abs() < 1e-11);
    }

    #[test]
    fn integrates_interior_spike() {
        // 1/sqrt(x^2 + eps^2) has a sharp but integrable peak at 0
        let eps = 1e-6;
        let v = integrate(|x: f64| 1.0 / (x * x + eps * eps).sqrt(), -1.0, 1.0, 1e-10).unwrap();
        let exact = 2.0 * ((1.0 + (1.0 + eps * eps).sqrt()) / eps).ln();
        assert!((v - exact).abs() < 1e-8, "got {v}, want {exact}");
    }

    #[test]
    fn bisect_finds_root() {
        let r = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((r - 2.0_f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn bisect_rejects_no_sign_change() {
        assert!(bisect(|x| x * x + 1.0, -1.0, 1.0, 1e-12).is_err());
    }

    #[test]
    fn golden_finds_minimum() {
        // localization saturates near sqrt(eps) when the offset dominates
        let x = golden_minimize(|x| (x - 0.3).powi(2) + 1.0, -2.0, 2.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-6);
    }

    #[test]
    fn derivative_richardson_accuracy() {
        let d = central_derivative(|x| x.exp(), 1.0, 1e-3);
        assert!((d - 1.0_f64.exp()).abs() < 1e-12);
        let s = second_derivative(|x| x.sin(), 0.7, 1e-3);
        assert!((s + 0.7_f64.sin()).abs() < 1e-9);
    }

    #[test]
    fn linear_fit_recovers_line() {
        let xs: Vec<f64> = (0..20).map(|i| i as f64 * 0.1).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.5 * x - 1.25).collect();
        let (m, c) = linear_fit(&xs, &ys).unwrap();
        assert!((m - 3.5).abs() < 1e-12 && (c + 1.25).abs() < 1e-12);
    }
}
