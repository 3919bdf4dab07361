//! Command execution: builds the physics objects from a config, runs the
//! requested layer(s), and writes plot-ready CSV plus a JSON summary.

use crate::config::{Command, RunConfig};
use crate::output::csv_table;
use scatter2d_core::classical::{
    classical_dcs_2d, deflection_curve, detect_orbiting, DeflectionCurve,
};
use scatter2d_core::potential::RadialPotential;
use scatter2d_core::quantum::{phase_shift_table, total_cross_section, ScatteringSetup};
use scatter2d_core::semiclassical::{
    airy_amplitude_dcs, eikonal_phase, find_rainbow, spa_dcs, stationary_points, wkb_phase_shift,
    RainbowInfo,
};
use scatter2d_core::Error as CoreError;
use serde::Serialize;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("io error: {0}")]
    Io(String),
}

/// What a command produced: written files plus per-method diagnostics
/// (non-empty diagnostics mean partial results, exit code 4).
#[derive(Debug)]
pub struct RunOutcome {
    pub files: Vec<PathBuf>,
    pub diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct RainbowSummary {
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    b_r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    theta_r: Option<f64>,
    /// Θ''(m_r) with respect to angular momentum.
    #[serde(skip_serializing_if = "Option::is_none")]
    theta_dd_m: Option<f64>,
    /// d²Θ/db² = k² Θ''(m_r).
    #[serde(skip_serializing_if = "Option::is_none")]
    theta_dd_b: Option<f64>,
}

impl RainbowSummary {
    fn from(info: Option<&RainbowInfo>, k: f64) -> Self {
        match info {
            Some(r) => RainbowSummary {
                exists: true,
                b_r: Some(r.b_r),
                theta_r: Some(r.theta_r),
                theta_dd_m: Some(r.theta_dd),
                theta_dd_b: Some(k * k * r.theta_dd),
            },
            None => RainbowSummary {
                exists: false,
                b_r: None,
                theta_r: None,
                theta_dd_m: None,
                theta_dd_b: None,
            },
        }
    }
}

#[derive(Serialize)]
struct OrbitingSummary {
    exists: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    b0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r0: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    e_crit: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    log_coeff_above: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    log_coeff_below: Option<f64>,
}

/// Rainbow-threshold report for the piecewise Coulomb-parabolic model:
/// the deflection function has an interior maximum exactly when the
/// energy k² exceeds 3A/(2 R_c).
#[derive(Serialize)]
struct AppendixBSummary {
    energy: f64,
    threshold_energy: f64,
    rainbow_expected: bool,
}

#[derive(Serialize)]
struct PhaseShiftSummary {
    k: f64,
    m_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma_total_quantum: Option<f64>,
    diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct CrossSectionSummary {
    k: f64,
    m_max: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma_total_quantum: Option<f64>,
    rainbow: RainbowSummary,
    diagnostics: Vec<String>,
}

#[derive(Serialize)]
struct DeflectionSummary {
    k: f64,
    rainbow: RainbowSummary,
    orbiting: OrbitingSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    appendix_b: Option<AppendixBSummary>,
    diagnostics: Vec<String>,
}

/// Runs one command against a parsed config, writing artifacts into
/// `out_dir`. All file writes happen at the end from this single thread.
pub fn run(
    command: Command,
    config: &RunConfig,
    config_dir: &Path,
    out_dir: &Path,
) -> Result<RunOutcome, CliError> {
    let pot = config.potential.build(config_dir).map_err(CliError::Config)?;
    std::fs::create_dir_all(out_dir).map_err(|e| CliError::Io(e.to_string()))?;
    match command {
        Command::PhaseShifts => cmd_phase_shifts(config, &pot, out_dir),
        Command::CrossSection => cmd_cross_section(config, &pot, out_dir),
        Command::Deflection => cmd_deflection(config, &pot, out_dir),
    }
}

fn setup_for(
    config: &RunConfig,
    pot: &RadialPotential,
) -> Result<ScatteringSetup, CliError> {
    let k = config.k;
    let base = match config.m_max {
        Some(m) => ScatteringSetup::auto_with_m_max(pot, k, m),
        None => ScatteringSetup::auto(pot, k),
    }
    .map_err(|e| CliError::Config(e.to_string()))?;
    match config.tolerances.unwrap_or_default().grid_step {
        Some(h) => base.with_grid_step(h).map_err(|e| CliError::Config(e.to_string())),
        None => Ok(base),
    }
}

fn default_b_grid(pot: &RadialPotential, k: f64) -> Vec<f64> {
    let b_hi = (1.5 * pot.r_range()).min(30.0).max(12.0 / k).max(4.0);
    let n = 400;
    (1..=n).map(|i| b_hi * i as f64 / n as f64).collect()
}

fn write(out_dir: &Path, name: &str, contents: &str) -> Result<PathBuf, CliError> {
    let path = out_dir.join(name);
    std::fs::write(&path, contents).map_err(|e| CliError::Io(e.to_string()))?;
    Ok(path)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable summary");
    text.push('\n');
    text
}

/// Side-by-side quantum / WKB / Eikonal phase shifts, one row per channel
/// (the Eikonal evaluated at b = m/k).
fn cmd_phase_shifts(
    config: &RunConfig,
    pot: &RadialPotential,
    out_dir: &Path,
) -> Result<RunOutcome, CliError> {
    let k = config.k;
    let setup = setup_for(config, pot)?;
    let mut diagnostics = Vec::new();

    let quantum = match phase_shift_table(pot, &setup) {
        Ok(table) => Some(table),
        Err(e) => {
            diagnostics.push(format!("quantum: {e}"));
            None
        }
    };

    let mut rows = Vec::new();
    let mut wkb_failures = 0usize;
    for m in 0..=setup.m_max() {
        let dq = quantum.as_ref().map(|t| t.deltas[m as usize]);
        let dw = match wkb_phase_shift(pot, k, m as f64) {
            Ok(v) => Some(v),
            Err(_) => {
                wkb_failures += 1;
                None
            }
        };
        let de = eikonal_phase(pot, k, m as f64 / k).ok();
        rows.push(vec![Some(m as f64), dq, dw, de]);
    }
    if wkb_failures > 0 {
        diagnostics.push(format!("wkb: {wkb_failures} channel(s) failed"));
    }
    if quantum.is_none() && rows.iter().all(|r| r[2].is_none() && r[3].is_none()) {
        return Err(CliError::Numerical("all methods failed".into()));
    }

    let csv = csv_table(&["m", "delta_quantum", "delta_wkb", "delta_eikonal"], &rows);
    let summary = PhaseShiftSummary {
        k,
        m_max: setup.m_max(),
        sigma_total_quantum: quantum.as_ref().map(total_cross_section),
        diagnostics: diagnostics.clone(),
    };
    let files = vec![
        write(out_dir, "phase_shifts.csv", &csv)?,
        write(out_dir, "phase_shifts_summary.json", &to_json(&summary))?,
    ];
    Ok(RunOutcome { files, diagnostics })
}

/// Angle sweep comparing dσ/dθ across methods, with per-method gaps where
/// a method does not apply (dark side, caustic window, no rainbow).
fn cmd_cross_section(
    config: &RunConfig,
    pot: &RadialPotential,
    out_dir: &Path,
) -> Result<RunOutcome, CliError> {
    let k = config.k;
    let thetas = config
        .theta_grid
        .as_ref()
        .ok_or_else(|| CliError::Config("cross-section needs a theta_grid".into()))?
        .points()
        .map_err(CliError::Config)?;
    if thetas[0] <= 0.0 || *thetas.last().unwrap() > PI {
        return Err(CliError::Config(format!(
            "theta grid must lie in (0, pi], got [{}, {}]",
            thetas[0],
            thetas.last().unwrap()
        )));
    }
    let setup = setup_for(config, pot)?;
    let mut diagnostics = Vec::new();

    let quantum = match phase_shift_table(pot, &setup) {
        Ok(t) => Some(t),
        Err(e) => {
            diagnostics.push(format!("quantum: {e}"));
            None
        }
    };

    let bs = match &config.b_grid {
        Some(grid) => grid.points().map_err(CliError::Config)?,
        None => default_b_grid(pot, k),
    };
    let curve = match deflection_curve(pot, k, &bs) {
        Ok(c) => Some(c),
        Err(e) => {
            diagnostics.push(format!("classical: {e}"));
            None
        }
    };

    let rainbow = curve
        .as_ref()
        .and_then(|_| find_rainbow(pot, k, (bs[0], *bs.last().unwrap())).ok());

    // winding branches only matter for orbiting interactions
    let kappa_max = match detect_orbiting(pot, k, &bs) {
        Ok(Some(_)) => 3,
        _ => 0,
    };

    let mut caustic_gaps = 0usize;
    let mut classical_gaps = 0usize;
    let rows: Vec<Vec<Option<f64>>> = thetas
        .iter()
        .map(|&theta| {
            let dq = quantum
                .as_ref()
                .map(|t| scatter2d_core::quantum::amplitude(t, theta).norm_sqr() / k);
            let dcl = curve.as_ref().and_then(|c| match classical_dcs_2d(c, theta) {
                Ok(d) => Some(d.value),
                Err(_) => {
                    classical_gaps += 1;
                    None
                }
            });
            let dspa = curve.as_ref().and_then(|c| {
                if theta >= PI {
                    return None;
                }
                match stationary_points(c, theta, kappa_max) {
                    Ok(set) => match spa_dcs(&set, pot, k) {
                        Ok(v) => Some(v),
                        Err(CoreError::CausticProximity { .. }) => {
                            caustic_gaps += 1;
                            None
                        }
                        Err(_) => None,
                    },
                    Err(_) => None,
                }
            });
            let dairy = rainbow.as_ref().and_then(|info| {
                let out = airy_amplitude_dcs(info, k, theta).ok()?;
                out.in_validity_window.then_some(out.value)
            });
            vec![Some(theta), dq, dcl, dspa, dairy]
        })
        .collect();
    if caustic_gaps > 0 {
        diagnostics.push(format!(
            "spa: {caustic_gaps} angle(s) within the caustic slope floor; use the airy column"
        ));
    }
    if classical_gaps > 0 {
        diagnostics.push(format!("classical: {classical_gaps} angle(s) failed"));
    }

    let csv = csv_table(
        &["theta", "dcs_quantum", "dcs_classical", "dcs_spa", "dcs_airy"],
        &rows,
    );
    let summary = CrossSectionSummary {
        k,
        m_max: setup.m_max(),
        sigma_total_quantum: quantum.as_ref().map(total_cross_section),
        rainbow: RainbowSummary::from(rainbow.as_ref(), k),
        diagnostics: diagnostics.clone(),
    };
    let files = vec![
        write(out_dir, "cross_section.csv", &csv)?,
        write(out_dir, "cross_section_summary.json", &to_json(&summary))?,
    ];
    Ok(RunOutcome { files, diagnostics })
}

/// Deflection-function sweep plus rainbow / orbiting summaries; for the
/// piecewise Coulomb-parabolic model the energy threshold 3A/(2R_c) is
/// reported alongside.
fn cmd_deflection(
    config: &RunConfig,
    pot: &RadialPotential,
    out_dir: &Path,
) -> Result<RunOutcome, CliError> {
    let k = config.k;
    let bs = config
        .b_grid
        .as_ref()
        .ok_or_else(|| CliError::Config("deflection needs a b_grid".into()))?
        .points()
        .map_err(CliError::Config)?;
    if bs[0] < 0.0 {
        return Err(CliError::Config("b grid must be nonnegative".into()));
    }
    let mut diagnostics = Vec::new();

    let curve: DeflectionCurve =
        deflection_curve(pot, k, &bs).map_err(|e| CliError::Numerical(e.to_string()))?;
    let gaps = curve.thetas.iter().filter(|t| t.is_none()).count();
    if gaps > 0 {
        diagnostics.push(format!("deflection: {gaps} grid point(s) recorded as gaps"));
    }
    if gaps == curve.thetas.len() {
        return Err(CliError::Numerical("no deflection point converged".into()));
    }

    let rainbow = find_rainbow(pot, k, (bs[0].max(1e-3), *bs.last().unwrap())).ok();
    let orbiting = detect_orbiting(pot, k, &bs)
        .ok()
        .flatten()
        .map(|info| OrbitingSummary {
            exists: true,
            b0: Some(info.b0),
            r0: Some(info.r0),
            e_crit: Some(info.e_crit),
            log_coeff_above: Some(info.log_coeff_above),
            log_coeff_below: Some(info.log_coeff_below),
        })
        .unwrap_or(OrbitingSummary {
            exists: false,
            b0: None,
            r0: None,
            e_crit: None,
            log_coeff_above: None,
            log_coeff_below: None,
        });

    let appendix_b = match &config.potential {
        crate::config::PotentialSpec::AppendixB { a, r_c } => {
            let threshold = 3.0 * a / (2.0 * r_c);
            Some(AppendixBSummary {
                energy: k * k,
                threshold_energy: threshold,
                rainbow_expected: k * k > threshold,
            })
        }
        _ => None,
    };

    let rows: Vec<Vec<Option<f64>>> = (0..curve.bs.len())
        .map(|i| vec![Some(curve.bs[i]), curve.thetas[i], curve.turning_points[i]])
        .collect();
    let csv = csv_table(&["b", "theta_defl", "r0"], &rows);
    let summary = DeflectionSummary {
        k,
        rainbow: RainbowSummary::from(rainbow.as_ref(), k),
        orbiting,
        appendix_b,
        diagnostics: diagnostics.clone(),
    };
    let files = vec![
        write(out_dir, "deflection.csv", &csv)?,
        write(out_dir, "deflection_summary.json", &to_json(&summary))?,
    ];
    Ok(RunOutcome { files, diagnostics })
}
