//! Strict JSON run configuration. Unknown keys are rejected so a typo in
//! a tolerance override cannot pass silently.

use scatter2d_core::potential::{AppendixBParams, RadialPotential};
use serde::Deserialize;
use std::path::{Path, PathBuf};

/// Potential selection, tagged by `type`.
#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum PotentialSpec {
    /// U(r) = u0 exp(-r²/a²).
    Gaussian { u0: f64, a: f64 },
    /// Piecewise Coulomb-parabolic model: A/r outside r_c, parabolic core inside.
    AppendixB { a: f64, r_c: f64 },
    /// Two-column CSV (r, U), monotone-cubic interpolated.
    Tabulated { path: PathBuf },
}

impl PotentialSpec {
    pub fn build(&self, config_dir: &Path) -> Result<RadialPotential, String> {
        match self {
            PotentialSpec::Gaussian { u0, a } => {
                RadialPotential::gaussian(*u0, *a).map_err(|e| e.to_string())
            }
            PotentialSpec::AppendixB { a, r_c } => {
                RadialPotential::appendix_b(AppendixBParams { strength: *a, r_c: *r_c })
                    .map_err(|e| e.to_string())
            }
            PotentialSpec::Tabulated { path } => {
                let resolved = if path.is_relative() {
                    config_dir.join(path)
                } else {
                    path.clone()
                };
                RadialPotential::tabulated_from_csv(&resolved).map_err(|e| e.to_string())
            }
        }
    }
}

/// A uniform grid: n points from start to stop inclusive.
#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn points(&self) -> Result<Vec<f64>, String> {
        if !(self.start.is_finite() && self.stop.is_finite()) || self.n < 2 {
            return Err(format!(
                "grid must have finite bounds and n >= 2, got [{}, {}] with n = {}",
                self.start, self.stop, self.n
            ));
        }
        if !(self.stop > self.start) {
            return Err(format!(
                "grid must be strictly increasing, got start = {}, stop = {}",
                self.start, self.stop
            ));
        }
        Ok((0..self.n)
            .map(|i| self.start + (self.stop - self.start) * i as f64 / (self.n - 1) as f64)
            .collect())
    }
}

/// Optional numerical overrides.
#[derive(Debug, Clone, Copy, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tolerances {
    /// Radial integration step; defaults to (2π/k)/1024.
    pub grid_step: Option<f64>,
}

/// One batch run: a potential, a wavenumber, and command-specific grids.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub potential: PotentialSpec,
    /// Wavenumber; the energy is k² in the ħ²/2μ = 1 convention.
    pub k: f64,
    /// Partial-wave cutoff (phase-shifts, cross-section); defaults to
    /// ceil(k r_range) + 15.
    #[serde(default)]
    pub m_max: Option<u32>,
    /// Impact-parameter grid (deflection; optional for cross-section).
    #[serde(default)]
    pub b_grid: Option<GridSpec>,
    /// Angle grid in (0, π] (cross-section).
    #[serde(default)]
    pub theta_grid: Option<GridSpec>,
    #[serde(default)]
    pub tolerances: Option<Tolerances>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, String> {
        let config: RunConfig = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if !(config.k > 0.0) || !config.k.is_finite() {
            return Err(format!("k = {} must be positive and finite", config.k));
        }
        Ok(config)
    }
}

/// Which command to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    PhaseShifts,
    CrossSection,
    Deflection,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_gaussian_config() {
        let config = RunConfig::from_json(
            r#"{"potential": {"type": "gaussian", "u0": -0.5, "a": 1.0}, "k": 3.0}"#,
        )
        .unwrap();
        assert_eq!(config.k, 3.0);
        assert!(matches!(config.potential, PotentialSpec::Gaussian { .. }));
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(RunConfig::from_json(
            r#"{"potential": {"type": "gaussian", "u0": -0.5, "a": 1.0}, "k": 3.0, "tolerance": 1e-5}"#,
        )
        .is_err());
        assert!(RunConfig::from_json(
            r#"{"potential": {"type": "gaussian", "u0": -0.5, "a": 1.0, "width": 2}, "k": 3.0}"#,
        )
        .is_err());
        assert!(RunConfig::from_json(
            r#"{"potential": {"type": "gaussian", "u0": -0.5, "a": 1.0}, "k": 3.0,
                "tolerances": {"grid_stepp": 0.001}}"#,
        )
        .is_err());
    }

    #[test]
    fn rejects_bad_k_and_grids() {
        assert!(RunConfig::from_json(
            r#"{"potential": {"type": "gaussian", "u0": -0.5, "a": 1.0}, "k": -3.0}"#,
        )
        .is_err());
        let grid = GridSpec { start: 1.0, stop: 0.5, n: 10 };
        assert!(grid.points().is_err());
        let grid = GridSpec { start: 0.5, stop: 1.0, n: 1 };
        assert!(grid.points().is_err());
    }

    #[test]
    fn malformed_json_is_an_error() {
        assert!(RunConfig::from_json("{not json").is_err());
    }
}
