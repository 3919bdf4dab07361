//! Classical layer: turning points, the deflection function, classical
//! differential and total cross sections, and orbiting diagnostics.
//!
//! The radial kinetic function used throughout is
//!
//! ```text
//! F(r) = k² - U(r) - k² b²/r²,
//! ```
//!
//! i.e. the pure centrifugal term with m = k b (Langer-consistent, no
//! -1/4), so that Θ = 2 dδ_WKB/dm holds between the classical and
//! semiclassical layers. The deflection function is
//!
//! ```text
//! Θ(k², b) = π - 2 b k ∫_{r₀}^∞ dr r⁻² F^(-1/2)(r),   F(r₀) = 0,
//! ```
//!
//! evaluated with the substitution u = √(r - r₀) (which removes the
//! inverse-square-root endpoint singularity) plus the analytic free tail
//! beyond the potential range.

use crate::error::{Error, Result};
use crate::numerics;
use crate::potential::RadialPotential;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Default absolute tolerance on a deflection angle.
pub const DEFLECTION_TOL: f64 = 1e-12;

/// Branches closer than this in b are merged (caustic vicinity).
const BRANCH_MERGE_TOL: f64 = 1e-9;

/// Centered-difference step for dΘ/db is `1e-4 * max(b, 1)`.
const SLOPE_STEP_FACTOR: f64 = 1e-4;

#[inline]
fn kinetic(pot: &RadialPotential, k: f64, b: f64, r: f64) -> f64 {
    k * k - pot.eval(r) - k * k * b * b / (r * r)
}

/// Reduced radicand (F(r0 + u²) - F(r0)) / u² for turning-point
/// substitutions: smooth through u = 0 with value F'(r0).
///
/// Subtracting F(r0) pins the root exactly to u = 0 (the bisected r0
/// carries a few-ulp residual that would otherwise leave an unresolvable
/// boundary layer); below `u_eps` the quotient is frozen to dodge
/// catastrophic cancellation noise. Shifting F by the residual moves the
/// computed integral by O(1e-13).
pub(crate) fn reduced_radicand<F: Fn(f64) -> f64>(
    f: &F,
    r0: f64,
    f_r0: f64,
    u_eps: f64,
    u: f64,
) -> f64 {
    let u_clamped = u.max(u_eps);
    (f(r0 + u_clamped * u_clamped) - f_r0) / (u_clamped * u_clamped)
}

/// Outermost classical turning point: the largest root of F(r) = 0.
///
/// Brackets by scanning inward from beyond the potential range, then
/// bisects to relative tolerance 1e-13. Fails with [`Error::NoTurningPoint`]
/// when F stays positive all the way down (head-on plunging orbit, only
/// possible for b = 0) and with [`Error::OrbitingDegenerate`] when the root
/// is a double root within tolerance.
pub fn turning_point(pot: &RadialPotential, k: f64, b: f64) -> Result<f64> {
    if !(k > 0.0) || b < 0.0 || !b.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "turning_point: need k > 0 and b >= 0, got k = {k}, b = {b}"
        )));
    }
    let r_hi = 1.2 * pot.r_range().max(2.0 * b).max(1.0);
    let r_lo = (1e-3 * b).max(1e-9).min(0.5 * r_hi);
    let f = |r: f64| kinetic(pot, k, b, r);

    if f(r_hi) <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "turning_point: F({r_hi:.3e}) <= 0 beyond the potential range; \
             the scan bracket does not contain the asymptotic region"
        )));
    }

    // geometric scan inward; the first sign change from outside is the
    // outermost root
    const N_SCAN: usize = 1600;
    let ratio = (r_lo / r_hi).powf(1.0 / N_SCAN as f64);
    let mut r_outer = r_hi;
    let mut f_outer = f(r_outer);
    let mut bracket = None;
    let mut r = r_hi;
    for _ in 0..N_SCAN {
        r *= ratio;
        let fr = f(r);
        if fr <= 0.0 && f_outer > 0.0 {
            bracket = Some((r, r_outer));
            break;
        }
        r_outer = r;
        f_outer = fr;
    }
    let (lo, hi) = match bracket {
        Some(v) => v,
        None => return Err(Error::NoTurningPoint { r_min: r_lo }),
    };

    // bisect keeping the outer (F >= 0) end so the deflection integrand
    // never sees a negative radicand at its endpoint
    let mut lo = lo;
    let mut hi = hi;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (hi - lo) <= 1e-13 * hi.max(1.0) || mid <= lo || mid >= hi {
            break;
        }
        if f(mid) <= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let r0 = hi;

    // double-root (orbiting) detection: simple roots have slopes of order
    // k²/r; near a critical orbit the slope collapses like sqrt(b - b0)
    let dr = 1e-7 * r0.max(1.0);
    let f_slope = (f(r0 + dr) - f(r0 - dr)) / (2.0 * dr);
    if f_slope.abs() * r0.max(1.0) / (k * k) < 1e-4 {
        return Err(Error::OrbitingDegenerate { r0 });
    }
    Ok(r0)
}

/// Deflection function Θ(k², b) at default tolerance.
pub fn deflection(pot: &RadialPotential, k: f64, b: f64) -> Result<f64> {
    deflection_with_tol(pot, k, b, DEFLECTION_TOL)
}

/// Deflection function with an explicit absolute tolerance on Θ.
pub fn deflection_with_tol(pot: &RadialPotential, k: f64, b: f64, tol: f64) -> Result<f64> {
    if b == 0.0 {
        // reflecting head-on trajectory: no angular sweep
        turning_point(pot, k, b)?;
        return Ok(PI);
    }
    let r0 = turning_point(pot, k, b)?;
    let r_cut = pot.r_range().max(1.5 * r0).max(1.5 * b);

    // core [r0, r_cut] via r = r0 + u²; the reduced radicand is smooth
    // through the turning point
    let u_max = (r_cut - r0).sqrt();
    let u_eps = 1e-4 * u_max;
    let f = |r: f64| kinetic(pot, k, b, r);
    let f_r0 = f(r0);
    let integrand = |u: f64| {
        let r = r0 + u * u;
        let q = reduced_radicand(&f, r0, f_r0, u_eps, u);
        if q <= 0.0 {
            return 0.0; // genuine interior zero: orbiting-adjacent churn
        }
        2.0 / (r * r * q.sqrt())
    };
    let quad_tol = (tol / (2.0 * b * k)).max(1e-16);
    let core = numerics::integrate(integrand, 0.0, u_max, quad_tol)?;

    // free tail: ∫_R^∞ dr r⁻² (k² - k²b²/r²)^(-1/2) = arcsin(b/R)/(k b)
    let tail = (b / r_cut).asin() / (k * b);

    Ok(PI - 2.0 * b * k * (core + tail))
}

/// Sampled deflection function over an impact-parameter grid.
///
/// Per-point failures (plunging orbits, orbiting degeneracies) are
/// recorded as gaps rather than aborting the sweep. The curve keeps the
/// potential and wavenumber so downstream branch searches can refine
/// against the exact Θ(b).
#[derive(Debug, Clone)]
pub struct DeflectionCurve {
    pot: RadialPotential,
    pub k: f64,
    pub bs: Vec<f64>,
    /// Θ per grid point; `None` marks a gap.
    pub thetas: Vec<Option<f64>>,
    /// Turning point per grid point; `None` marks a gap.
    pub turning_points: Vec<Option<f64>>,
}

/// Elementwise deflection sweep; gaps where a point fails.
pub fn deflection_curve(pot: &RadialPotential, k: f64, bs: &[f64]) -> Result<DeflectionCurve> {
    if !(k > 0.0) {
        return Err(Error::InvalidArgument(format!("deflection_curve: k = {k} must be positive")));
    }
    for w in bs.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::InvalidArgument(
                "deflection_curve: b grid must be strictly increasing".into(),
            ));
        }
    }
    let rows: Vec<(Option<f64>, Option<f64>)> = bs
        .par_iter()
        .map(|&b| {
            let r0 = turning_point(pot, k, b).ok();
            let theta = r0.and_then(|_| deflection(pot, k, b).ok());
            (theta, r0)
        })
        .collect();
    Ok(DeflectionCurve {
        pot: pot.clone(),
        k,
        bs: bs.to_vec(),
        thetas: rows.iter().map(|r| r.0).collect(),
        turning_points: rows.iter().map(|r| r.1).collect(),
    })
}

impl DeflectionCurve {
    pub fn potential(&self) -> &RadialPotential {
        &self.pot
    }

    /// Largest |Θ| among valid samples.
    pub fn max_abs_deflection(&self) -> Option<f64> {
        self.thetas
            .iter()
            .flatten()
            .map(|t| t.abs())
            .max_by(f64::total_cmp)
    }

    /// CSV rendering with columns `b, theta_defl, r0`; gaps are empty cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("b,theta_defl,r0\n");
        for i in 0..self.bs.len() {
            let theta = self.thetas[i].map(|t| format!("{t:.11e}")).unwrap_or_default();
            let r0 = self.turning_points[i].map(|r| format!("{r:.11e}")).unwrap_or_default();
            out.push_str(&format!("{:.11e},{theta},{r0}\n", self.bs[i]));
        }
        out
    }
}

/// One classical branch contributing at a given observable angle.
#[derive(Debug, Clone, Copy)]
pub struct ClassicalBranch {
    /// Impact parameter solving |Θ(b)| = θ.
    pub b: f64,
    /// Slope dΘ/db at the branch (signed).
    pub d_theta_db: f64,
}

/// Classical differential cross section at one angle.
#[derive(Debug, Clone)]
pub struct ClassicalDcs {
    /// Σ_j |db/dθ| over branches; exactly 0 on the dark side.
    pub value: f64,
    /// True when θ exceeds max |Θ|: classically no scattering there.
    pub dark_side: bool,
    pub branches: Vec<ClassicalBranch>,
}

/// Finds every impact parameter with |Θ(b)| = θ on the sampled curve.
///
/// Sign changes of |Θ(b)| - θ between valid samples are bracketed and
/// refined by bisection against the exact deflection; branches closer
/// than 1e-9 in b are merged (caustic vicinity; use the Airy form there).
fn classical_branches(curve: &DeflectionCurve, theta: f64) -> Result<Vec<ClassicalBranch>> {
    let g = |b: f64| -> f64 {
        match deflection(&curve.pot, curve.k, b) {
            Ok(t) => t.abs() - theta,
            Err(_) => f64::NAN,
        }
    };
    let mut roots: Vec<f64> = Vec::new();
    for i in 0..curve.bs.len().saturating_sub(1) {
        let (Some(t0), Some(t1)) = (curve.thetas[i], curve.thetas[i + 1]) else {
            continue;
        };
        let g0 = t0.abs() - theta;
        let g1 = t1.abs() - theta;
        if g0 == 0.0 {
            roots.push(curve.bs[i]);
            continue;
        }
        if g0.signum() * g1.signum() < 0.0 {
            let root = numerics::bisect(g, curve.bs[i], curve.bs[i + 1], 1e-12)?;
            if root.is_finite() {
                roots.push(root);
            }
        }
    }
    if let (Some(&b_last), Some(Some(t_last))) = (curve.bs.last(), curve.thetas.last()) {
        if (t_last.abs() - theta) == 0.0 {
            roots.push(b_last);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() < BRANCH_MERGE_TOL);

    let mut branches = Vec::with_capacity(roots.len());
    for b in roots {
        let h = SLOPE_STEP_FACTOR * b.max(1.0);
        let lo = deflection(&curve.pot, curve.k, b - h)?;
        let hi = deflection(&curve.pot, curve.k, b + h)?;
        branches.push(ClassicalBranch { b, d_theta_db: (hi - lo) / (2.0 * h) });
    }
    Ok(branches)
}

/// 2D classical differential cross section dσ/dθ = Σ_j |db/dθ|_j.
///
/// Beyond the largest |Θ| on the curve the return is exactly zero with the
/// dark-side flag set: classically there is no scattering past the rainbow.
pub fn classical_dcs_2d(curve: &DeflectionCurve, theta: f64) -> Result<ClassicalDcs> {
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::InvalidArgument(format!(
            "classical_dcs_2d: theta = {theta} must lie in (0, pi]"
        )));
    }
    let branches = classical_branches(curve, theta)?;
    if branches.is_empty() {
        let dark = curve.max_abs_deflection().map(|max| theta > max).unwrap_or(true);
        return Ok(ClassicalDcs { value: 0.0, dark_side: dark, branches });
    }
    let value = branches.iter().map(|br| 1.0 / br.d_theta_db.abs()).sum();
    Ok(ClassicalDcs { value, dark_side: false, branches })
}

/// The 3D comparison forms at one angle.
#[derive(Debug, Clone)]
pub struct Classical3dComparison {
    /// dσ/dΩ = Σ (b/sin θ) |dΘ/db|⁻¹; diverges at θ = 0, π when b ≠ 0.
    pub per_steradian: f64,
    /// dσ/dθ = Σ 2π b |db/dθ|.
    pub per_angle: f64,
    /// Set when sin θ → 0 with a nonzero-b branch: glory geometry (3D only).
    pub glory_divergent: bool,
    pub branches: Vec<ClassicalBranch>,
}

/// 3D classical cross section forms for side-by-side comparison with 2D.
pub fn classical_dcs_3d_compare(
    curve: &DeflectionCurve,
    theta: f64,
) -> Result<Classical3dComparison> {
    if !(theta > 0.0 && theta <= PI) {
        return Err(Error::InvalidArgument(format!(
            "classical_dcs_3d_compare: theta = {theta} must lie in (0, pi]"
        )));
    }
    let branches = classical_branches(curve, theta)?;
    let sin_theta = theta.sin();
    let mut per_steradian = 0.0;
    let mut per_angle = 0.0;
    for br in &branches {
        per_steradian += br.b / sin_theta / br.d_theta_db.abs();
        per_angle += 2.0 * PI * br.b / br.d_theta_db.abs();
    }
    let glory = sin_theta.abs() < 1e-9 && branches.iter().any(|br| br.b > 1e-9);
    Ok(Classical3dComparison {
        per_steradian,
        per_angle,
        glory_divergent: glory,
        branches,
    })
}

/// Total 2D classical cross section with a sharp impact-parameter cutoff:
/// σ = 2 b_max.
pub fn classical_total_2d(b_max: f64) -> Result<f64> {
    if !(b_max >= 0.0) || !b_max.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "classical_total_2d: b_max = {b_max} must be nonnegative"
        )));
    }
    Ok(2.0 * b_max)
}

/// Critical orbit located by [`detect_orbiting`].
#[derive(Debug, Clone, Copy)]
pub struct OrbitingInfo {
    /// Impact parameter of the critical orbit.
    pub b0: f64,
    /// Radius of the effective-potential maximum.
    pub r0: f64,
    /// Energy (= k²) at which the orbit sits on the barrier top.
    pub e_crit: f64,
    /// Fitted slope of Θ against ln((b - b0)/b0) for b > b0.
    pub log_coeff_above: f64,
    /// Fitted slope of Θ against ln((b0 - b)/b0) for b < b0; the
    /// trajectory crosses the stall radius twice, so this is ~2x the
    /// coefficient above.
    pub log_coeff_below: f64,
}

/// Searches for a critical orbit: a b₀ and r₀ with both
/// d(U + b₀²k²/r²)/dr = 0 at r₀ and k² = U(r₀) + k² b₀²/r₀².
///
/// Repulsive potentials (no attractive region) return `None`. When a
/// critical orbit exists inside the b grid, the logarithmic divergence of
/// Θ(b) on both sides is fitted and both slopes reported.
pub fn detect_orbiting(
    pot: &RadialPotential,
    k: f64,
    b_grid: &[f64],
) -> Result<Option<OrbitingInfo>> {
    if !(k > 0.0) || b_grid.len() < 2 {
        return Err(Error::InvalidArgument(
            "detect_orbiting: need k > 0 and a b grid with >= 2 points".into(),
        ));
    }
    let r_max = 1.5 * pot.r_range().max(1.0);

    // no attractive region, no orbiting
    let attractive = (0..400).any(|i| {
        let r = r_max * (i as f64 + 0.5) / 400.0;
        pot.eval(r) < 0.0
    });
    if !attractive {
        return Ok(None);
    }

    let du = |r: f64| {
        let h = 1e-6 * r.max(1.0);
        (pot.eval(r + h) - pot.eval(r - h)) / (2.0 * h)
    };
    // where U' > 0, a barrier-top candidate has b²(r) = r³ U'(r)/(2k²);
    // the energy condition becomes g(r) = U + r U'/2 - k² = 0
    let g = |r: f64| pot.eval(r) + 0.5 * r * du(r) - k * k;

    let (b_lo, b_hi) = (b_grid[0], *b_grid.last().unwrap());
    const N: usize = 1200;
    let mut found: Option<(f64, f64)> = None;
    let mut prev: Option<(f64, f64)> = None;
    for i in 1..=N {
        let r = r_max * i as f64 / N as f64;
        if du(r) <= 0.0 {
            prev = None;
            continue;
        }
        let gr = g(r);
        if let Some((rp, gp)) = prev {
            if gp.signum() * gr.signum() < 0.0 {
                let r0 = numerics::bisect(g, rp, r, 1e-14)?;
                let b0 = (r0.powi(3) * du(r0) / (2.0 * k * k)).sqrt();
                // keep only barrier tops: the effective potential must have
                // a maximum there, not a valley floor
                let hh = 1e-5 * r0;
                let w_at = |r: f64| pot.eval(r) + k * k * b0 * b0 / (r * r);
                let w_dd = (w_at(r0 + hh) - 2.0 * w_at(r0) + w_at(r0 - hh)) / (hh * hh);
                if w_dd < 0.0 && b0 >= b_lo && b0 <= b_hi {
                    found = Some((r0, b0));
                    break;
                }
            }
        }
        prev = Some((r, gr));
    }
    let Some((r0, b0)) = found else {
        return Ok(None);
    };

    // fit Θ = const + c ln((b - b0)/b0) above and with 2c below; the
    // near-critical integrand spikes cap the useful quadrature tolerance
    let fit_tol = 1e-9;
    let rel_eps: Vec<f64> = (0..6).map(|i| 1e-4 * 100.0_f64.powf(i as f64 / 5.0)).collect();
    let mut xs_above = Vec::new();
    let mut ys_above = Vec::new();
    let mut xs_below = Vec::new();
    let mut ys_below = Vec::new();
    for &eps in &rel_eps {
        if let Ok(theta) = deflection_with_tol(pot, k, b0 * (1.0 + eps), fit_tol) {
            xs_above.push(eps.ln());
            ys_above.push(theta);
        }
        if let Ok(theta) = deflection_with_tol(pot, k, b0 * (1.0 - eps), fit_tol) {
            xs_below.push(eps.ln());
            ys_below.push(theta);
        }
    }
    if xs_above.len() < 5 || xs_below.len() < 5 {
        return Err(Error::IllConditionedFit(format!(
            "orbiting log fit: only {} samples above and {} below b0",
            xs_above.len(),
            xs_below.len()
        )));
    }
    let (c_above, _) = numerics::linear_fit(&xs_above, &ys_above)?;
    let (c_below, _) = numerics::linear_fit(&xs_below, &ys_below)?;

    Ok(Some(OrbitingInfo {
        b0,
        r0,
        e_crit: k * k,
        log_coeff_above: c_above,
        log_coeff_below: c_below,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_turning_point_is_b() {
        let pot = RadialPotential::free();
        let r0 = turning_point(&pot, 1.0, 2.0).unwrap();
        assert!((r0 - 2.0).abs() < 1e-11, "r0 = {r0}");
    }

    #[test]
    fn repulsive_turning_point_matches_fine_bisection() {
        let pot = RadialPotential::gaussian(0.5, 1.0).unwrap();
        let (k, b) = (1.0, 0.5);
        let r0 = turning_point(&pot, k, b).unwrap();
        // brute-force bisection at 1e-14 tolerance on the same function
        let f = |r: f64| k * k - pot.eval(r) - k * k * b * b / (r * r);
        let (mut lo, mut hi) = (1e-6, 5.0);
        assert!(f(lo) < 0.0 && f(hi) > 0.0);
        while hi - lo > 1e-14 {
            let mid = 0.5 * (lo + hi);
            if f(mid) <= 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((r0 - hi).abs() < 1e-10, "{r0} vs {hi}");
    }

    #[test]
    fn attraction_pulls_turning_point_inward() {
        let pot = RadialPotential::gaussian(-0.5, 1.0).unwrap();
        let r0 = turning_point(&pot, 1.0, 2.0).unwrap();
        assert!(r0 < 2.0, "r0 = {r0}");
    }

    #[test]
    fn plunging_orbit_reported() {
        // b = 0 with an attractive core: F = k² - U > 0 everywhere
        let pot = RadialPotential::gaussian(-0.5, 1.0).unwrap();
        assert!(matches!(
            turning_point(&pot, 1.0, 0.0),
            Err(Error::NoTurningPoint { .. })
        ));
    }

    #[test]
    fn free_deflection_vanishes() {
        let pot = RadialPotential::free();
        for b in [0.5, 1.0, 5.0] {
            let theta = deflection(&pot, 1.0, b).unwrap();
            assert!(theta.abs() < 1e-10, "Θ({b}) = {theta:e}");
        }
    }

    #[test]
    fn deflection_signs() {
        let repulsive = RadialPotential::gaussian(0.5, 1.0).unwrap();
        assert!(deflection(&repulsive, 1.0, 1.0).unwrap() > 0.0);
        let attractive = RadialPotential::gaussian(-0.3, 1.0).unwrap();
        assert!(deflection(&attractive, 1.0, 1.5).unwrap() < 0.0);
    }

    #[test]
    fn curve_free_is_all_zeros() {
        let pot = RadialPotential::free();
        let bs: Vec<f64> = (1..=20).map(|i| 0.25 * i as f64).collect();
        let curve = deflection_curve(&pot, 1.0, &bs).unwrap();
        for t in curve.thetas.iter().flatten() {
            assert!(t.abs() < 1e-10);
        }
    }

    #[test]
    fn attractive_curve_has_single_minimum() {
        let pot = RadialPotential::gaussian(-0.5, 1.0).unwrap();
        let bs: Vec<f64> = (1..=60).map(|i| 0.08 * i as f64).collect();
        let curve = deflection_curve(&pot, 3.0, &bs).unwrap();
        let ts: Vec<f64> = curve.thetas.iter().map(|t| t.unwrap()).collect();
        let min_idx = ts
            .iter()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(b.1))
            .unwrap()
            .0;
        assert!(min_idx > 0 && min_idx < ts.len() - 1);
        assert!(ts[min_idx] < 0.0);
        // decreasing then increasing around the minimum
        for i in 1..=min_idx {
            assert!(ts[i] <= ts[i - 1] + 1e-9);
        }
        for i in min_idx + 1..ts.len() {
            assert!(ts[i] >= ts[i - 1] - 1e-9);
        }
    }

    #[test]
    fn dark_side_is_exact_zero() {
        let pot = RadialPotential::free();
        let bs: Vec<f64> = (1..=20).map(|i| 0.25 * i as f64).collect();
        let curve = deflection_curve(&pot, 1.0, &bs).unwrap();
        for i in 1..=5 {
            let dcs = classical_dcs_2d(&curve, 0.5 * i as f64).unwrap();
            assert_eq!(dcs.value, 0.0);
            assert!(dcs.dark_side);
            assert!(dcs.branches.is_empty());
        }
    }

    #[test]
    fn curve_csv_has_gaps_as_empty_cells() {
        let pot = RadialPotential::gaussian(-0.5, 1.0).unwrap();
        // b = 0 plunges (no turning point) and is recorded as a gap
        let curve = deflection_curve(&pot, 1.0, &[0.0, 1.0]).unwrap();
        let csv = curve.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "b,theta_defl,r0");
        assert_eq!(lines.next().unwrap(), "0.00000000000e0,,");
        assert!(lines.next().unwrap().starts_with("1.00000000000e0,"));
    }

    #[test]
    fn total_cross_section_cutoff() {
        assert_eq!(classical_total_2d(1.0).unwrap(), 2.0);
        assert_eq!(classical_total_2d(0.0).unwrap(), 0.0);
        assert!(classical_total_2d(-1.0).is_err());
    }

    #[test]
    fn no_orbiting_for_repulsive() {
        let pot = RadialPotential::gaussian(0.5, 1.0).unwrap();
        let bs: Vec<f64> = (1..=30).map(|i| 0.2 * i as f64).collect();
        assert!(detect_orbiting(&pot, 1.0, &bs).unwrap().is_none());
    }
}
