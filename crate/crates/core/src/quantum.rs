//! Exact quantum layer: partial-wave phase shifts, scattering amplitude,
//! and cross sections in two dimensions.
//!
//! The reduced radial equation is integrated outward with the Numerov
//! scheme,
//!
//! ```text
//! R''(r) + F(r) R(r) = 0,   F(r) = k² - U(r) - (m² - 1/4)/r²,
//! ```
//!
//! and matched to the free linear combination
//! `c₁ √(kr) J_m(kr) + c₂ √(kr) Y_m(kr)` at two radii beyond the potential
//! range; the phase shift follows from `tan δ_m = -c₂/c₁`. The amplitude is
//!
//! ```text
//! f(k, θ) = sqrt(2/π) Σ_m cos(mθ) ε_m e^{iδ_m} sin δ_m,   ε_0 = 1, ε_m = 2,
//! ```
//!
//! with dσ/dθ = |f|²/k. The printed closed form for the total cross
//! section, 4 Σ ε_m sin²δ_m, omits the 1/k needed for dimensional
//! consistency with dσ/dθ; this implementation restores it, and the
//! angular-integration identity test pins that normalization down.

use crate::error::{Error, Result};
use crate::potential::RadialPotential;
use crate::specfun;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// How a phase-shift table was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhaseShiftMethod {
    Quantum,
    Wkb,
    Eikonal,
}

/// Which machinery produced an angular distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistributionMethod {
    Quantum,
    Classical,
    SpaInterference,
    Airy,
}

/// Numerical parameters of a partial-wave computation.
#[derive(Debug, Clone, Copy)]
pub struct ScatteringSetup {
    k: f64,
    m_max: u32,
    r_match: f64,
    grid_step: f64,
}

impl ScatteringSetup {
    /// Validates the asymptotic-matching and sampling invariants:
    /// `k r_match >= m_max + 10` and at least 20 grid points per local
    /// wavelength.
    pub fn new(k: f64, m_max: u32, r_match: f64, grid_step: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidArgument(format!("wavenumber k = {k} must be positive")));
        }
        if !(r_match > 0.0) {
            return Err(Error::InvalidArgument(format!("r_match = {r_match} must be positive")));
        }
        if k * r_match < m_max as f64 + 10.0 {
            return Err(Error::InvalidArgument(format!(
                "k r_match = {:.3} violates k r_match >= m_max + 10 = {}",
                k * r_match,
                m_max + 10
            )));
        }
        let wavelength = 2.0 * PI / k;
        if !(grid_step > 0.0) || grid_step > wavelength / 20.0 {
            return Err(Error::InvalidArgument(format!(
                "grid_step = {grid_step} must be in (0, {:.3e}] (>= 20 points per wavelength)",
                wavelength / 20.0
            )));
        }
        Ok(Self { k, m_max, r_match, grid_step })
    }

    /// Defaults for a given potential: `m_max = ceil(k r_range) + 15`,
    /// matching radius beyond both the potential range and the
    /// `(m_max + 10)/k` asymptotic bound, and ~1024 points per wavelength.
    pub fn auto(pot: &RadialPotential, k: f64) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidArgument(format!("wavenumber k = {k} must be positive")));
        }
        let m_max = (k * pot.r_range()).ceil() as u32 + 15;
        Self::auto_with_m_max(pot, k, m_max)
    }

    /// Defaults as [`Self::auto`] but with an explicit partial-wave cutoff.
    pub fn auto_with_m_max(pot: &RadialPotential, k: f64, m_max: u32) -> Result<Self> {
        if !(k > 0.0) || !k.is_finite() {
            return Err(Error::InvalidArgument(format!("wavenumber k = {k} must be positive")));
        }
        let r_match = pot.r_range().max((m_max as f64 + 10.0) / k);
        let grid_step = (2.0 * PI / k) / 1024.0;
        Self::new(k, m_max, r_match, grid_step)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn m_max(&self) -> u32 {
        self.m_max
    }

    pub fn r_match(&self) -> f64 {
        self.r_match
    }

    pub fn grid_step(&self) -> f64 {
        self.grid_step
    }

    /// Same setup with a different grid step (for convergence studies).
    pub fn with_grid_step(&self, grid_step: f64) -> Result<Self> {
        Self::new(self.k, self.m_max, self.r_match, grid_step)
    }
}

/// Scattering phase shifts δ_m for m = 0..m_max at fixed wavenumber.
#[derive(Debug, Clone)]
pub struct PhaseShiftTable {
    pub k: f64,
    /// δ_m indexed by m. Matching-derived (quantum) values are principal,
    /// reduced to (-π/2, π/2]; WKB tables carry the absolute phase and the
    /// branch bookkeeping lives in the semiclassical layer.
    pub deltas: Vec<f64>,
    pub method: PhaseShiftMethod,
}

impl PhaseShiftTable {
    pub fn m_max(&self) -> u32 {
        self.deltas.len() as u32 - 1
    }

    /// CSV rendering with columns `m, delta`, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,delta\n");
        for (m, d) in self.deltas.iter().enumerate() {
            out.push_str(&format!("{m},{:.11e}\n", d));
        }
        out
    }
}

/// Differential cross section sampled on an angle grid.
#[derive(Debug, Clone)]
pub struct AngularDistribution {
    /// Strictly increasing angle grid in (0, π].
    pub thetas: Vec<f64>,
    /// dσ/dθ per angle; units of length. Nonnegative.
    pub values: Vec<f64>,
    pub method: DistributionMethod,
}

impl AngularDistribution {
    /// CSV rendering with columns `theta, dcs`, 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theta,dcs\n");
        for (t, v) in self.thetas.iter().zip(&self.values) {
            out.push_str(&format!("{:.11e},{:.11e}\n", t, v));
        }
        out
    }
}

/// Integrates the radial equation for channel m and extracts δ_m.
///
/// The free potential yields δ_m = 0 up to discretization error. Channels
/// that cannot penetrate the centrifugal barrier (m >> k r_range) come out
/// exponentially small.
pub fn radial_phase_shift(pot: &RadialPotential, setup: &ScatteringSetup, m: u32) -> Result<f64> {
    if m > setup.m_max {
        return Err(Error::InvalidArgument(format!(
            "m = {m} exceeds setup m_max = {}",
            setup.m_max
        )));
    }
    let k = setup.k;
    let h = setup.grid_step;

    // matching nodes: r_match and a quarter wavelength further out
    let i1 = (setup.r_match / h).round() as usize;
    let quarter_wave = ((PI / (2.0 * k)) / h).round().max(2.0) as usize;
    let i2 = i1 + quarter_wave;

    let f_of = |r: f64| k * k - pot.eval(r) - (m as f64 * m as f64 - 0.25) / (r * r);

    // The regular solution r^(m+1/2)(1 + ...) has unbounded derivatives at
    // the origin (half-integer index), which would feed Numerov
    // h-independent error over the first nodes. Low channels are seeded at
    // a node deep enough that the solution is smooth on the grid scale,
    // from a fine RK4 sweep of the regularized v = R̂ / r^(m+1/2); high
    // channels start directly inside the centrifugally forbidden region,
    // where any seed error decays away exponentially before the turning
    // point and |h²F| stays within the Numerov stability budget.
    let (n_start, y_seed_prev, y_seed) = if m <= 20 {
        let n_start = 64.min(i1 / 2).max(3);
        let (ra, rb) = ((n_start - 1) as f64 * h, n_start as f64 * h);
        let (v_a, v_b) = regularized_start(pot, k, m, h / 16.0, ra, rb);
        (n_start, v_a, (rb / ra).powf(m as f64 + 0.5) * v_b)
    } else {
        let mut r_start = 0.35 * m as f64 / k;
        while f_of(r_start) >= 0.0 && r_start > 65.0 * h {
            r_start *= 0.7;
        }
        let n_start = ((r_start / h) as usize).clamp(3, i1 / 2);
        let r_n = n_start as f64 * h;
        let kappa = (-f_of(r_n)).max(0.0).sqrt();
        (n_start, 1.0, (kappa * h).exp())
    };
    let mut y_prev = y_seed_prev;
    let mut y = y_seed;

    let h2_12 = h * h / 12.0;
    let mut t_prev = 1.0 + h2_12 * f_of((n_start - 1) as f64 * h);
    let mut t = 1.0 + h2_12 * f_of(n_start as f64 * h);

    let mut y_at_i1: Option<f64> = None;
    for i in n_start + 1..=i2 {
        let r = i as f64 * h;
        let t_next = 1.0 + h2_12 * f_of(r);
        let y_next = ((12.0 - 10.0 * t) * y - t_prev * y_prev) / t_next;
        y_prev = y;
        y = y_next;
        t_prev = t;
        t = t_next;
        if !y.is_finite() {
            return Err(Error::IntegrationNonConvergent(format!(
                "non-finite radial solution at r = {r:.4} (m = {m}); reduce grid_step"
            )));
        }
        // keep the growing solution in range; δ is scale invariant
        if y.abs() > 1e250 {
            y *= 1e-250;
            y_prev *= 1e-250;
            if let Some(v) = y_at_i1.as_mut() {
                *v *= 1e-250;
            }
        }
        if i == i1 {
            y_at_i1 = Some(y);
        }
    }
    let y1 = y_at_i1.ok_or_else(|| {
        Error::IntegrationNonConvergent("matching radius inside the start of the grid".into())
    })?;
    let y2 = y;

    let (ra, rb) = (i1 as f64 * h, i2 as f64 * h);
    let uj = |r: f64| -> Result<f64> { Ok((k * r).sqrt() * specfun::bessel_j(m, k * r)?) };
    let uy = |r: f64| -> Result<f64> { Ok((k * r).sqrt() * specfun::bessel_y(m, k * r)?) };
    let (ja, ya) = (uj(ra)?, uy(ra)?);
    let (jb, yb) = (uj(rb)?, uy(rb)?);

    let det = ja * yb - jb * ya;
    let scale = (ja * ja + ya * ya).sqrt() * (jb * jb + yb * yb).sqrt();
    if det.abs() < 1e-12 * scale {
        return Err(Error::MatchingDegenerate { r: ra });
    }
    let c1 = (y1 * yb - y2 * ya) / det;
    let c2 = (y2 * ja - y1 * jb) / det;

    // principal value in (-π/2, π/2]
    let mut delta = (-c2 / c1).atan();
    if delta <= -PI / 2.0 {
        delta += PI;
    }
    Ok(delta)
}

/// Fine-stage start: integrates v(r) = R̂(r) / r^(m+1/2), which satisfies
/// v'' + (2m+1) v'/r + (k² - U) v = 0 with v(0) = 1, v'(0) = 0, with no
/// singular index, smooth through the origin for any potential finite
/// there. Returns v at the two hand-off radii; the caller restores the
/// r^(m+1/2) scaling ratio.
fn regularized_start(
    pot: &RadialPotential,
    k: f64,
    m: u32,
    step: f64,
    r_a: f64,
    r_b: f64,
) -> (f64, f64) {
    let order = 2.0 * m as f64 + 1.0;
    let accel = |r: f64, v: f64, vp: f64| -order * vp / r - (k * k - pot.eval(r)) * v;

    // Taylor seed off the origin: v = 1 + c2 r², (2m+2)·2 c2 = -(k² - U(0))
    let c2 = -(k * k - pot.eval(step)) / (2.0 * (2.0 * m as f64 + 2.0));
    let mut r = step;
    let mut v = 1.0 + c2 * r * r;
    let mut vp = 2.0 * c2 * r;
    let mut v_a = None;

    while r < r_b - 1e-12 * r_b {
        // explicit RK4 stability against the (2m+1)/r damping needs
        // steps no longer than ~2.5 r / (2m+1)
        let mut hh = step.min(2.5 * r / order);
        if r < r_a && r + hh > r_a {
            hh = r_a - r;
        } else if r + hh > r_b {
            hh = r_b - r;
        }
        let (k1, l1) = (vp, accel(r, v, vp));
        let (k2, l2) = (vp + 0.5 * hh * l1, accel(r + 0.5 * hh, v + 0.5 * hh * k1, vp + 0.5 * hh * l1));
        let (k3, l3) = (vp + 0.5 * hh * l2, accel(r + 0.5 * hh, v + 0.5 * hh * k2, vp + 0.5 * hh * l2));
        let (k4, l4) = (vp + hh * l3, accel(r + hh, v + hh * k3, vp + hh * l3));
        v += hh / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        vp += hh / 6.0 * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
        r += hh;
        if v_a.is_none() && (r - r_a).abs() < 1e-12 * r_a {
            v_a = Some(v);
        }
    }
    (v_a.unwrap_or(v), v)
}

/// Builds the full quantum phase-shift table, one channel per worker.
pub fn phase_shift_table(pot: &RadialPotential, setup: &ScatteringSetup) -> Result<PhaseShiftTable> {
    let deltas: Result<Vec<f64>> = (0..=setup.m_max)
        .into_par_iter()
        .map(|m| radial_phase_shift(pot, setup, m))
        .collect();
    Ok(PhaseShiftTable { k: setup.k, deltas: deltas?, method: PhaseShiftMethod::Quantum })
}

/// Scattering amplitude f(k, θ); carries dimension length^(1/2).
pub fn amplitude(table: &PhaseShiftTable, theta: f64) -> Complex64 {
    let mut f = Complex64::new(0.0, 0.0);
    for (m, &delta) in table.deltas.iter().enumerate() {
        let eps_m = if m == 0 { 1.0 } else { 2.0 };
        let phase = Complex64::new(0.0, delta).exp();
        f += eps_m * (m as f64 * theta).cos() * phase * delta.sin();
    }
    f * (2.0 / PI).sqrt()
}

/// dσ/dθ = |f|²/k on an angle grid.
pub fn differential_cross_section(table: &PhaseShiftTable, thetas: &[f64]) -> AngularDistribution {
    let values = thetas
        .iter()
        .map(|&theta| amplitude(table, theta).norm_sqr() / table.k)
        .collect();
    AngularDistribution {
        thetas: thetas.to_vec(),
        values,
        method: DistributionMethod::Quantum,
    }
}

/// Total cross section σ = (4/k) Σ_m ε_m sin²δ_m; dimension length.
pub fn total_cross_section(table: &PhaseShiftTable) -> f64 {
    let sum: f64 = table
        .deltas
        .iter()
        .enumerate()
        .map(|(m, d)| if m == 0 { 1.0 } else { 2.0 } * d.sin().powi(2))
        .sum();
    4.0 * sum / table.k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn setup_enforces_invariants() {
        assert!(ScatteringSetup::new(1.0, 20, 25.0, 0.01).is_err()); // k r_match too small
        assert!(ScatteringSetup::new(1.0, 10, 25.0, 0.5).is_err()); // step too coarse
        assert!(ScatteringSetup::new(-1.0, 10, 25.0, 0.01).is_err());
        assert!(ScatteringSetup::new(1.0, 10, 25.0, 0.01).is_ok());
    }

    #[test]
    fn free_particle_phase_shifts_vanish() {
        let pot = RadialPotential::free();
        let setup = ScatteringSetup::auto_with_m_max(&pot, 1.0, 8).unwrap();
        for m in [0u32, 1, 3, 8] {
            let d = radial_phase_shift(&pot, &setup, m).unwrap();
            assert!(d.abs() < 1e-8, "free δ_{m} = {d:e}");
        }
    }

    #[test]
    fn closed_channel_suppressed() {
        // m far beyond k a: centrifugal barrier keeps the wave out
        let pot = RadialPotential::gaussian(-0.2, 1.0).unwrap();
        let setup = ScatteringSetup::auto_with_m_max(&pot, 3.0, 40).unwrap();
        let d = radial_phase_shift(&pot, &setup, 40).unwrap();
        assert!(d.abs() < 1e-6, "δ_40 = {d:e}");
    }

    #[test]
    fn amplitude_trivial_tables() {
        let zero = PhaseShiftTable { k: 1.0, deltas: vec![0.0; 6], method: PhaseShiftMethod::Quantum };
        for i in 0..8 {
            let theta = 0.1 + 0.4 * i as f64;
            assert_eq!(amplitude(&zero, theta).norm(), 0.0);
        }

        // single open channel at resonance: f = sqrt(2/π) i, flat in θ
        let single = PhaseShiftTable {
            k: 1.0,
            deltas: vec![PI / 2.0, 0.0, 0.0],
            method: PhaseShiftMethod::Quantum,
        };
        let expect = (2.0 / PI).sqrt();
        for i in 0..8 {
            let theta = 0.3 * i as f64;
            let f = amplitude(&single, theta);
            assert!((f.re).abs() < 1e-15 && (f.im - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn amplitude_tail_negligible_when_extended() {
        let pot = RadialPotential::gaussian(-0.2, 1.0).unwrap();
        let setup = ScatteringSetup::auto_with_m_max(&pot, 3.0, 40).unwrap();
        let table = phase_shift_table(&pot, &setup).unwrap();
        // doubling the number of retained terms must not move the sum
        let mut extended = table.clone();
        extended.deltas.resize(81, 0.0);
        for i in 1..6 {
            let theta = 0.5 * i as f64;
            let a = amplitude(&table, theta);
            let b = amplitude(&extended, theta);
            assert!((a - b).norm() < 1e-10);
        }
    }

    #[test]
    fn total_cross_section_values() {
        let zero = PhaseShiftTable { k: 1.0, deltas: vec![0.0; 4], method: PhaseShiftMethod::Quantum };
        assert_eq!(total_cross_section(&zero), 0.0);

        let single = PhaseShiftTable {
            k: 1.0,
            deltas: vec![PI / 2.0],
            method: PhaseShiftMethod::Quantum,
        };
        assert!((total_cross_section(&single) - 4.0).abs() < 1e-14);
    }

    #[test]
    fn csv_renderings() {
        let table = PhaseShiftTable {
            k: 1.0,
            deltas: vec![0.0, 0.25],
            method: PhaseShiftMethod::Quantum,
        };
        assert_eq!(
            table.to_csv(),
            "m,delta\n0,0.00000000000e0\n1,2.50000000000e-1\n"
        );
        let dist = AngularDistribution {
            thetas: vec![0.5],
            values: vec![2.0],
            method: DistributionMethod::Quantum,
        };
        assert_eq!(dist.to_csv(), "theta,dcs\n5.00000000000e-1,2.00000000000e0\n");
    }

    #[test]
    fn dcs_constant_for_single_channel() {
        let single = PhaseShiftTable {
            k: 1.0,
            deltas: vec![PI / 2.0],
            method: PhaseShiftMethod::Quantum,
        };
        let thetas: Vec<f64> = (1..=10).map(|i| 0.3 * i as f64).collect();
        let dist = differential_cross_section(&single, &thetas);
        for v in &dist.values {
            assert!((v - 2.0 / PI).abs() < 1e-14);
        }
    }
}
