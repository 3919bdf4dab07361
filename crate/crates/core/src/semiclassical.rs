//! Semiclassical layer: WKB wave functions and phase shifts, the Eikonal
//! limit, stationary-phase amplitudes, two-branch interference, and the
//! Airy description of rainbow caustics.
//!
//! The working identities, in the `ħ²/2μ = 1` convention:
//!
//! ```text
//! R̂(r)        = F^(-1/4) cos( ∫_{r₀}^r F^(1/2) dr' - π/4 )
//! δ_WKB(k, m) = mπ/2 + ∫_{r₀}^∞ (F^(1/2) - k) dr - k r₀
//! Θ(m)        = 2 dδ_WKB/dm,                     m = k b
//! δ_Eik(k, b) = -(1/2k) ∫_b^∞ r U(r) (r² - b²)^(-1/2) dr
//! f_Eik(k, θ) = (-ik/√(2π)) ∫_0^∞ db cos(kbθ) [e^{2iδ_Eik} - 1]
//! ```
//!
//! with `F(r) = k² - U(r) - m²/r²` (Langer-consistent, shared with the
//! classical layer). Stationary-phase branches solve
//! `±θ = -2 dδ/dm - 2κπ`; where the deflection function folds
//! (dΘ/dm = 0) the classical and SPA forms diverge and the cross section
//! follows Ai² instead.

use crate::classical::{self, DeflectionCurve};
use crate::error::{Error, Result};
use crate::numerics;
use crate::potential::RadialPotential;
use crate::specfun;
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

/// Below this |dΘ/dm| a stationary point counts as caustic-degenerate and
/// the SPA prefactor is refused; switch to [`airy_amplitude_dcs`].
pub const SLOPE_FLOOR: f64 = 1e-6;

/// Absolute quadrature tolerance for phase integrals.
const PHASE_TOL: f64 = 1e-12;

#[inline]
fn f_wkb(pot: &RadialPotential, k: f64, m: f64, r: f64) -> f64 {
    k * k - pot.eval(r) - m * m / (r * r)
}

/// Turning point for continuous angular momentum m; r₀ = 0 when the
/// m = 0 radial motion reaches the origin (no centrifugal barrier and
/// energy above the potential everywhere).
fn wkb_turning_point(pot: &RadialPotential, k: f64, m: f64) -> Result<f64> {
    let b = m / k;
    match classical::turning_point(pot, k, b) {
        Ok(r0) => Ok(r0),
        Err(Error::NoTurningPoint { .. }) => Ok(0.0),
        Err(e) => Err(e),
    }
}

/// WKB radial wave function on a grid of radii beyond the turning point.
///
/// Normalization is free. Points at or inside r₀ are rejected: the
/// F^(-1/4) prefactor diverges at the turning point and the form is
/// invalid there.
pub fn wkb_wavefunction(pot: &RadialPotential, k: f64, m: f64, rs: &[f64]) -> Result<Vec<f64>> {
    if !(k > 0.0) || m < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "wkb_wavefunction: need k > 0 and m >= 0, got k = {k}, m = {m}"
        )));
    }
    let r0 = wkb_turning_point(pot, k, m)?;
    if let Some(&bad) = rs.iter().find(|&&r| r <= r0) {
        return Err(Error::Domain(format!(
            "wkb_wavefunction: r = {bad:.6} is at or inside the turning point r0 = {r0:.6}"
        )));
    }

    // accumulate the phase integral ∫_{r0}^r sqrt(F) dr' over sorted radii
    let mut order: Vec<usize> = (0..rs.len()).collect();
    order.sort_by(|&i, &j| rs[i].total_cmp(&rs[j]));

    let mut phases = vec![0.0; rs.len()];
    let mut previous_r = r0;
    let mut accumulated = 0.0;
    for &idx in &order {
        let r = rs[idx];
        let segment = if previous_r == r0 && r0 > 0.0 {
            // first segment leaves the turning point: u = sqrt(r - r0)
            let u_max = (r - r0).sqrt();
            let u_eps = 1e-4 * u_max;
            let f = |rr: f64| f_wkb(pot, k, m, rr);
            let f_r0 = f(r0);
            numerics::integrate(
                |u| {
                    let q = classical::reduced_radicand(&f, r0, f_r0, u_eps, u);
                    if q <= 0.0 {
                        0.0
                    } else {
                        2.0 * u * u * q.sqrt()
                    }
                },
                0.0,
                u_max,
                PHASE_TOL,
            )?
        } else {
            numerics::integrate(
                |rr| f_wkb(pot, k, m, rr).max(0.0).sqrt(),
                previous_r,
                r,
                PHASE_TOL,
            )?
        };
        accumulated += segment;
        phases[idx] = accumulated;
        previous_r = r;
    }

    Ok(rs
        .iter()
        .zip(&phases)
        .map(|(&r, &phi)| f_wkb(pot, k, m, r).powf(-0.25) * (phi - FRAC_PI_4).cos())
        .collect())
}

/// WKB phase shift δ(k, m) for continuous m >= 0; absolute (unwrapped)
/// phase, not a principal value.
pub fn wkb_phase_shift(pot: &RadialPotential, k: f64, m: f64) -> Result<f64> {
    if !(k > 0.0) || !m.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "wkb_phase_shift: need k > 0 and finite m, got k = {k}, m = {m}"
        )));
    }
    let m_abs = m.abs(); // F depends on m²; the mπ/2 term keeps the sign
    let r0 = wkb_turning_point(pot, k, m_abs)?;
    let r_cut = pot
        .r_range()
        .max(1.5 * r0)
        .max(1.5 * m_abs / k)
        .max(1.0);

    let core = if r0 > 0.0 {
        let u_max = (r_cut - r0).sqrt();
        let u_eps = 1e-4 * u_max;
        let f = |r: f64| f_wkb(pot, k, m_abs, r);
        let f_r0 = f(r0);
        numerics::integrate(
            |u| {
                let q = classical::reduced_radicand(&f, r0, f_r0, u_eps, u);
                if q <= 0.0 {
                    -2.0 * u * k
                } else {
                    2.0 * u * u * q.sqrt() - 2.0 * u * k
                }
            },
            0.0,
            u_max,
            PHASE_TOL,
        )?
    } else {
        numerics::integrate(
            |r| f_wkb(pot, k, m_abs, r).max(0.0).sqrt() - k,
            0.0,
            r_cut,
            PHASE_TOL,
        )?
    };

    // analytic free tail ∫_R^∞ (sqrt(k² - m²/r²) - k) dr
    let tail = if m_abs > 0.0 {
        let root = (k * k * r_cut * r_cut - m_abs * m_abs).sqrt();
        -m_abs * FRAC_PI_2 + k * r_cut - root + m_abs * (root / m_abs).atan()
    } else {
        0.0
    };

    Ok(m * FRAC_PI_2 + core + tail - k * r0)
}

/// Deflection function from the WKB phase: Θ = 2 dδ/dm, centered
/// differences with one Richardson level (one-sided near m = 0).
pub fn deflection_from_wkb(pot: &RadialPotential, k: f64, m: f64) -> Result<f64> {
    let h = 1e-4 * m.max(1.0);
    let delta = |mm: f64| wkb_phase_shift(pot, k, mm);
    let d = if m > 2.0 * h {
        let d_h = (delta(m + h)? - delta(m - h)?) / (2.0 * h);
        let d_h2 = (delta(m + 0.5 * h)? - delta(m - 0.5 * h)?) / h;
        (4.0 * d_h2 - d_h) / 3.0
    } else {
        // second-order one-sided derivative on the m >= 0 side
        (-3.0 * delta(m)? + 4.0 * delta(m + h)? - delta(m + 2.0 * h)?) / (2.0 * h)
    };
    Ok(2.0 * d)
}

/// Eikonal phase shift δ = -(1/2k) ∫_b^∞ r U(r) (r²-b²)^(-1/2) dr,
/// evaluated with r = b cosh u to remove the endpoint singularity.
pub fn eikonal_phase(pot: &RadialPotential, k: f64, b: f64) -> Result<f64> {
    if !(k > 0.0) || b < 0.0 || !b.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "eikonal_phase: need k > 0 and b >= 0, got k = {k}, b = {b}"
        )));
    }
    let r_cut = pot.r_range();
    if b >= r_cut {
        return Ok(0.0);
    }
    if b < 1e-12 {
        let integral = numerics::integrate(|r| pot.eval(r), 0.0, r_cut, 1e-14)?;
        return Ok(-integral / (2.0 * k));
    }
    let u_max = (r_cut / b).acosh();
    // the raw integral scales like 1/b; tolerate at fixed phase accuracy
    let tol = 1e-13 * (2.0 * k / b).max(1.0);
    let integral = numerics::integrate(
        |u| pot.eval(b * u.cosh()) * u.cosh(),
        0.0,
        u_max,
        tol,
    )?;
    Ok(-b * integral / (2.0 * k))
}

/// Eikonal scattering amplitude truncated at b_max (the integrand vanishes
/// beyond once δ has decayed):
///
/// ```text
/// f_Eik(k, θ) = -ik sqrt(2/π) ∫_0^b_max db cos(kbθ) [e^{2iδ(b)} - 1].
/// ```
///
/// The prefactor is fixed by the continuum limit of the partial-wave sum
/// (ε_m-weighted, m = kb), which also keeps the optical theorem intact;
/// quantitative agreement with the exact amplitude at small angle is part
/// of the test suite.
///
/// Oscillatory quadrature on panels no wider than an eighth of the
/// cos(k b θ) period; errors if the truncation tail estimate 2|δ(b_max)| b_max
/// is not negligible.
pub fn eikonal_amplitude(
    pot: &RadialPotential,
    k: f64,
    theta: f64,
    b_max: f64,
) -> Result<Complex64> {
    if !(k > 0.0) || theta < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "eikonal_amplitude: need k > 0 and theta >= 0, got k = {k}, theta = {theta}"
        )));
    }
    if b_max < pot.r_range() {
        return Err(Error::InvalidArgument(format!(
            "eikonal_amplitude: b_max = {b_max} must reach the potential range {}",
            pot.r_range()
        )));
    }
    let tail_estimate = 2.0 * eikonal_phase(pot, k, b_max)?.abs() * b_max;
    const TAIL_TOL: f64 = 1e-6;
    if tail_estimate > TAIL_TOL {
        return Err(Error::TruncationTail { estimate: tail_estimate, tol: TAIL_TOL });
    }

    // sample the smooth phase once and integrate its monotone-cubic
    // interpolant; integrating the raw quadrature output instead would
    // make the oscillatory integrand noisy at the panel tolerance
    let n_grid = 2048;
    let grid: Vec<f64> = (0..=n_grid).map(|i| b_max * i as f64 / n_grid as f64).collect();
    let mut phases = Vec::with_capacity(grid.len());
    for &b in &grid {
        phases.push(eikonal_phase(pot, k, b)?);
    }
    let slopes = numerics::pchip_slopes(&grid, &phases);
    let delta_of = |b: f64| numerics::pchip_eval(&grid, &phases, &slopes, b);

    let panel = if theta > 0.0 {
        ((2.0 * PI / (k * theta)) / 8.0).min(b_max / 8.0)
    } else {
        b_max / 8.0
    };
    let n_panels = (b_max / panel).ceil() as usize;
    let panel_tol = 1e-12;

    let mut integral = Complex64::new(0.0, 0.0);
    for i in 0..n_panels {
        let lo = b_max * i as f64 / n_panels as f64;
        let hi = b_max * (i + 1) as f64 / n_panels as f64;
        let re = numerics::integrate(
            |b| ((2.0 * delta_of(b)).cos() - 1.0) * (k * b * theta).cos(),
            lo,
            hi,
            panel_tol,
        )?;
        let im = numerics::integrate(
            |b| (2.0 * delta_of(b)).sin() * (k * b * theta).cos(),
            lo,
            hi,
            panel_tol,
        )?;
        integral += Complex64::new(re, im);
    }
    Ok(Complex64::new(0.0, -k * (2.0 / PI).sqrt()) * integral)
}

/// One stationary point of the Poisson-sum phase.
#[derive(Debug, Clone, Copy)]
pub struct StationaryBranch {
    /// Continuous angular momentum at the stationary point.
    pub m_s: f64,
    /// +1 for the f⁽⁺⁾ (e^{imθ}) branch, -1 for f⁽⁻⁾.
    pub branch_sign: i8,
    /// dΘ/dm at the stationary point.
    pub d_theta_dm: f64,
    /// Winding count κ (nonzero only for orbiting interactions).
    pub kappa: u32,
}

/// All stationary points contributing at one observable angle.
#[derive(Debug, Clone)]
pub struct BranchSet {
    pub theta: f64,
    pub branches: Vec<StationaryBranch>,
}

/// Solves the stationary-phase condition ±θ = -2dδ/dm - 2κπ, i.e.
/// Θ(m) = ∓θ - 2κπ, on both cosine branches for κ = 0..kappa_max.
///
/// Positive deflection feeds f⁽⁻⁾ and negative feeds f⁽⁺⁾; an empty set is
/// the valid dark-side answer, not an error.
pub fn stationary_points(
    curve: &DeflectionCurve,
    theta: f64,
    kappa_max: u32,
) -> Result<BranchSet> {
    if !(theta > 0.0 && theta < PI) {
        return Err(Error::InvalidArgument(format!(
            "stationary_points: theta = {theta} must lie in (0, pi)"
        )));
    }
    let pot = curve.potential().clone();
    let k = curve.k;
    let mut branches = Vec::new();

    for kappa in 0..=kappa_max {
        for (sign, target) in [
            (1i8, -theta - 2.0 * PI * kappa as f64),
            (-1i8, theta - 2.0 * PI * kappa as f64),
        ] {
            // bracket Θ(b) = target between valid curve samples
            for i in 0..curve.bs.len().saturating_sub(1) {
                let (Some(t0), Some(t1)) = (curve.thetas[i], curve.thetas[i + 1]) else {
                    continue;
                };
                let (g0, g1) = (t0 - target, t1 - target);
                if g0 == 0.0 || g0.signum() * g1.signum() < 0.0 {
                    let root = if g0 == 0.0 {
                        curve.bs[i]
                    } else {
                        numerics::bisect(
                            |b| match classical::deflection(&pot, k, b) {
                                Ok(t) => t - target,
                                Err(_) => f64::NAN,
                            },
                            curve.bs[i],
                            curve.bs[i + 1],
                            1e-12,
                        )?
                    };
                    let h = 1e-4 * root.max(1.0);
                    let slope_b = numerics::central_derivative(
                        |b| classical::deflection(&pot, k, b).unwrap_or(f64::NAN),
                        root,
                        h,
                    );
                    branches.push(StationaryBranch {
                        m_s: k * root,
                        branch_sign: sign,
                        d_theta_dm: slope_b / k,
                        kappa,
                    });
                }
            }
        }
    }
    branches.sort_by(|a, b| a.m_s.total_cmp(&b.m_s));
    branches.dedup_by(|a, b| {
        (a.m_s - b.m_s).abs() < 1e-9 && a.branch_sign == b.branch_sign && a.kappa == b.kappa
    });
    Ok(BranchSet { theta, branches })
}

/// Stationary-phase amplitude f⁽⁺⁾ + f⁽⁻⁾ from a branch set.
///
/// Each branch contributes |dΘ/dm|^(-1/2) exp i[2δ + 2πκm ± mθ + sgn(dΘ/dm) π/4 - πκ];
/// branches with opposite slope signs therefore interfere with the extra
/// π/2 of the fold. δ is the WKB phase at the stationary point.
pub fn spa_amplitude(
    branches: &BranchSet,
    pot: &RadialPotential,
    k: f64,
) -> Result<Complex64> {
    let mut f = Complex64::new(0.0, 0.0);
    for br in &branches.branches {
        if br.d_theta_dm.abs() < SLOPE_FLOOR {
            return Err(Error::CausticProximity { slope: br.d_theta_dm.abs() });
        }
        let delta = wkb_phase_shift(pot, k, br.m_s)?;
        let zeta = 2.0 * delta
            + 2.0 * PI * br.kappa as f64 * br.m_s
            + br.branch_sign as f64 * br.m_s * branches.theta;
        let phase = zeta + br.d_theta_dm.signum() * FRAC_PI_4 - PI * br.kappa as f64;
        f += br.d_theta_dm.abs().powf(-0.5) * Complex64::new(0.0, phase).exp();
    }
    Ok(f)
}

/// dσ/dθ = |f|²/k for a stationary-phase branch set.
pub fn spa_dcs(branches: &BranchSet, pot: &RadialPotential, k: f64) -> Result<f64> {
    Ok(spa_amplitude(branches, pot, k)?.norm_sqr() / k)
}

/// Two-branch interference cross section, exactly as the closed form reads:
///
/// ```text
/// dσ/dθ = |db₁/dθ| + |db₂/dθ|
///       + 2 |db₁/dθ db₂/dθ|^(1/2) sin[k(b₁-b₂)θ + 2(δ(b₁)-δ(b₂))]
/// ```
///
/// with b₁ the inner (smaller) impact parameter. Coincident impact
/// parameters are uniform-approximation territory and rejected.
#[allow(clippy::too_many_arguments)]
pub fn two_branch_dcs(
    b1: f64,
    b2: f64,
    db1_dtheta: f64,
    db2_dtheta: f64,
    delta1: f64,
    delta2: f64,
    k: f64,
    theta: f64,
) -> Result<f64> {
    if b1 == b2 {
        return Err(Error::InvalidArgument(
            "two_branch_dcs: b1 = b2 is the caustic; use the Airy form".into(),
        ));
    }
    let cross = 2.0 * (db1_dtheta * db2_dtheta).abs().sqrt();
    let phase = k * (b1 - b2) * theta + 2.0 * (delta1 - delta2);
    Ok(db1_dtheta.abs() + db2_dtheta.abs() + cross * phase.sin())
}

/// A fold caustic of the deflection function.
#[derive(Debug, Clone, Copy)]
pub struct RainbowInfo {
    /// Continuous angular momentum at the extremum, m_r = k b_r.
    pub m_r: f64,
    /// Rainbow impact parameter.
    pub b_r: f64,
    /// Rainbow angle θ_r = |Θ(m_r)| (radians).
    pub theta_r: f64,
    /// Second derivative Θ''(m_r) with respect to m (signed).
    pub theta_dd: f64,
}

/// Locates an interior extremum of Θ(b) in the bracket: golden-section
/// localization followed by a bisection polish of dΘ/db = 0, so the slope
/// at b_r is zero to ~1e-8 in m. Monotonic deflection yields
/// [`Error::NoExtremum`].
pub fn find_rainbow(pot: &RadialPotential, k: f64, b_bracket: (f64, f64)) -> Result<RainbowInfo> {
    let (lo, hi) = b_bracket;
    if !(k > 0.0) || !(lo > 0.0) || !(hi > lo) {
        return Err(Error::InvalidArgument(format!(
            "find_rainbow: need k > 0 and 0 < lo < hi, got k = {k}, bracket = ({lo}, {hi})"
        )));
    }
    const N: usize = 96;
    let mut bs = Vec::with_capacity(N);
    let mut ts = Vec::with_capacity(N);
    for i in 0..N {
        let b = lo + (hi - lo) * i as f64 / (N - 1) as f64;
        if let Ok(t) = classical::deflection(pot, k, b) {
            bs.push(b);
            ts.push(t);
        }
    }
    if bs.len() < 5 {
        return Err(Error::NoExtremum { lo, hi });
    }
    // strict interior extremum among the samples
    let mut candidate: Option<(usize, bool)> = None; // (index, is_minimum)
    for i in 1..ts.len() - 1 {
        if ts[i] < ts[i - 1] && ts[i] < ts[i + 1] {
            candidate = Some((i, true));
            break;
        }
        if ts[i] > ts[i - 1] && ts[i] > ts[i + 1] {
            candidate = Some((i, false));
            break;
        }
    }
    let Some((idx, is_min)) = candidate else {
        return Err(Error::NoExtremum { lo, hi });
    };

    let tol = 1e-13;
    let theta_of = |b: f64| classical::deflection_with_tol(pot, k, b, tol).unwrap_or(f64::NAN);
    let objective = |b: f64| {
        let t = theta_of(b);
        if is_min {
            t
        } else {
            -t
        }
    };
    let b_golden = numerics::golden_minimize(objective, bs[idx - 1], bs[idx + 1], 1e-5 * hi);

    // polish: bisect the centered-difference slope through zero
    let h = 1e-4 * b_golden.max(1.0);
    let slope = |b: f64| numerics::central_derivative(theta_of, b, h);
    let mut w = 2e-4 * b_golden.max(1.0);
    let mut bracket = None;
    for _ in 0..12 {
        let (a, b) = ((b_golden - w).max(lo), (b_golden + w).min(hi));
        let (sa, sb) = (slope(a), slope(b));
        if sa.is_finite() && sb.is_finite() && sa.signum() * sb.signum() < 0.0 {
            bracket = Some((a, b));
            break;
        }
        w *= 2.0;
    }
    let b_r = match bracket {
        Some((a, b)) => numerics::bisect(slope, a, b, 1e-12)?,
        None => b_golden, // slope already below measurement noise everywhere
    };

    let m_r = k * b_r;
    let theta_signed = classical::deflection_with_tol(pot, k, b_r, tol)?;
    let h_m = 1e-3 * m_r.max(1.0);
    let theta_dd = numerics::second_derivative(
        |m: f64| classical::deflection_with_tol(pot, k, m / k, tol).unwrap_or(f64::NAN),
        m_r,
        h_m,
    );
    if !theta_dd.is_finite() || theta_dd.abs() < 1e-10 {
        return Err(Error::Domain(format!(
            "find_rainbow: degenerate fold, Θ''(m_r) = {theta_dd:e}"
        )));
    }
    Ok(RainbowInfo { m_r, b_r, theta_r: theta_signed.abs(), theta_dd })
}

/// Airy differential cross section at a rainbow:
///
/// ```text
/// dσ/dθ = 2^(5/3) k^(1/3) π / |Θ''_b|^(2/3) · Ai²[ 2^(1/3) k^(2/3) (θ-θ_r) / |Θ''_b|^(1/3) ]
/// ```
///
/// with Θ''_b = k² Θ''(m_r). Finite at the caustic where the classical
/// form diverges. The fold expansion is trusted for |θ-θ_r| <= θ_r/2; the
/// returned flag records whether θ is inside that window.
pub fn airy_amplitude_dcs(info: &RainbowInfo, k: f64, theta: f64) -> Result<AiryDcs> {
    if !(k > 0.0) || !theta.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "airy_amplitude_dcs: need k > 0 and finite theta, got k = {k}, theta = {theta}"
        )));
    }
    let theta_dd_b = (k * k * info.theta_dd).abs();
    let prefactor = 2.0_f64.powf(5.0 / 3.0) * k.powf(1.0 / 3.0) * PI / theta_dd_b.powf(2.0 / 3.0);
    let argument =
        2.0_f64.powf(1.0 / 3.0) * k.powf(2.0 / 3.0) * (theta - info.theta_r) / theta_dd_b.powf(1.0 / 3.0);
    let ai = specfun::airy_ai(argument)?;
    Ok(AiryDcs {
        value: prefactor * ai * ai,
        in_validity_window: (theta - info.theta_r).abs() <= 0.5 * info.theta_r,
    })
}

/// Airy cross-section value plus fold-validity flag.
#[derive(Debug, Clone, Copy)]
pub struct AiryDcs {
    pub value: f64,
    /// False outside |θ - θ_r| <= θ_r/2, where the quadratic-fold expansion
    /// is stretched past its derivation.
    pub in_validity_window: bool,
}

/// Supernumerary periods below the rainbow angle.
///
/// Returns `(local, uniform)`:
/// * local: the angle-dependent bright-side period
///   P_θ = π / [k √2 (θ_r - θ)^(1/2) / |Θ''_b|^(1/2)];
/// * uniform: P_θ = 2π/|m₁ - m₂| with the two-term stationary points
///   m_{1,2} = m_r ± √2 √(θ_r - θ)/|Θ''(m_r)|^(1/2).
///
/// Under the two-term expansion the two expressions are identical.
pub fn rainbow_periods(info: &RainbowInfo, k: f64, theta: f64) -> Result<(f64, f64)> {
    if !(theta < info.theta_r) {
        return Err(Error::InvalidArgument(format!(
            "rainbow_periods: theta = {theta} must be below theta_r = {}",
            info.theta_r
        )));
    }
    let depth = info.theta_r - theta;
    let theta_dd_b = (k * k * info.theta_dd).abs();
    let local = PI / (k * 2.0_f64.sqrt() * depth.sqrt() / theta_dd_b.sqrt());

    let spread = 2.0_f64.sqrt() * depth.sqrt() / info.theta_dd.abs().sqrt();
    let (m1, m2) = (info.m_r + spread, info.m_r - spread);
    let uniform = 2.0 * PI / (m1 - m2).abs();
    Ok((local, uniform))
}
