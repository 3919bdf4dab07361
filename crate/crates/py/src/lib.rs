//! Python bindings for the 2D scattering workbench.
//!
//! Exposes the potential catalog, the quantum partial-wave layer, the
//! classical deflection machinery, and the semiclassical (WKB / Eikonal /
//! rainbow) operations. Units follow the core convention ħ²/2μ = 1.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use scatter2d_core::classical;
use scatter2d_core::potential::{AppendixBParams, RadialPotential};
use scatter2d_core::quantum;
use scatter2d_core::semiclassical;
use scatter2d_core::specfun;

fn err<T>(result: scatter2d_core::Result<T>) -> PyResult<T> {
    result.map_err(|e| PyValueError::new_err(e.to_string()))
}

/// A central potential U(r) with effective-range metadata.
#[pyclass(frozen)]
struct Potential {
    inner: RadialPotential,
}

#[pymethods]
impl Potential {
    /// Gaussian potential U(r) = u0 exp(-r²/a²).
    #[staticmethod]
    fn gaussian(u0: f64, a: f64) -> PyResult<Self> {
        Ok(Potential { inner: err(RadialPotential::gaussian(u0, a))? })
    }

    /// Piecewise Coulomb-parabolic model: A/r outside r_c, parabolic core.
    #[staticmethod]
    fn appendix_b(a: f64, r_c: f64) -> PyResult<Self> {
        Ok(Potential {
            inner: err(RadialPotential::appendix_b(AppendixBParams { strength: a, r_c }))?,
        })
    }

    /// Monotone-cubic interpolant through (r, U) samples.
    #[staticmethod]
    fn tabulated(samples: Vec<(f64, f64)>) -> PyResult<Self> {
        Ok(Potential { inner: err(RadialPotential::tabulated(&samples))? })
    }

    /// The free particle, U = 0.
    #[staticmethod]
    fn free() -> Self {
        Potential { inner: RadialPotential::free() }
    }

    /// Evaluates U(r).
    fn eval(&self, r: f64) -> f64 {
        self.inner.eval(r)
    }

    /// Radius beyond which |U| is below the declared epsilon.
    #[getter]
    fn r_range(&self) -> f64 {
        self.inner.r_range()
    }

    fn __repr__(&self) -> String {
        format!("Potential({})", self.inner.label())
    }
}

/// Quantum phase shifts δ_m for m = 0..m_max (default: ceil(k r_range) + 15).
#[pyfunction]
#[pyo3(signature = (potential, k, m_max=None))]
fn quantum_phase_shifts(potential: &Potential, k: f64, m_max: Option<u32>) -> PyResult<Vec<f64>> {
    let setup = err(match m_max {
        Some(m) => quantum::ScatteringSetup::auto_with_m_max(&potential.inner, k, m),
        None => quantum::ScatteringSetup::auto(&potential.inner, k),
    })?;
    Ok(err(quantum::phase_shift_table(&potential.inner, &setup))?.deltas)
}

/// Total quantum cross section σ = (4/k) Σ ε_m sin² δ_m from a table.
#[pyfunction]
fn total_cross_section(deltas: Vec<f64>, k: f64) -> f64 {
    let table = quantum::PhaseShiftTable {
        k,
        deltas,
        method: quantum::PhaseShiftMethod::Quantum,
    };
    quantum::total_cross_section(&table)
}

/// Differential cross section dσ/dθ = |f|²/k on an angle grid.
#[pyfunction]
fn differential_cross_section(deltas: Vec<f64>, k: f64, thetas: Vec<f64>) -> Vec<f64> {
    let table = quantum::PhaseShiftTable {
        k,
        deltas,
        method: quantum::PhaseShiftMethod::Quantum,
    };
    quantum::differential_cross_section(&table, &thetas).values
}

/// Scattering amplitude f(k, θ) as (re, im).
#[pyfunction]
fn amplitude(deltas: Vec<f64>, k: f64, theta: f64) -> (f64, f64) {
    let table = quantum::PhaseShiftTable {
        k,
        deltas,
        method: quantum::PhaseShiftMethod::Quantum,
    };
    let f = quantum::amplitude(&table, theta);
    (f.re, f.im)
}

/// Classical deflection angle Θ(k², b).
#[pyfunction]
fn deflection(potential: &Potential, k: f64, b: f64) -> PyResult<f64> {
    err(classical::deflection(&potential.inner, k, b))
}

/// Outermost classical turning point.
#[pyfunction]
fn turning_point(potential: &Potential, k: f64, b: f64) -> PyResult<f64> {
    err(classical::turning_point(&potential.inner, k, b))
}

/// Deflection sweep: returns (thetas, turning_points) with None at gaps.
#[pyfunction]
fn deflection_curve(
    potential: &Potential,
    k: f64,
    bs: Vec<f64>,
) -> PyResult<(Vec<Option<f64>>, Vec<Option<f64>>)> {
    let curve = err(classical::deflection_curve(&potential.inner, k, &bs))?;
    Ok((curve.thetas, curve.turning_points))
}

/// Classical differential cross sections dσ/dθ = Σ|db/dθ| on an angle
/// grid, branch-resolved from a deflection sweep over `bs`. Dark-side
/// angles give exactly 0.0; angles where the evaluation fails give None.
#[pyfunction]
fn classical_dcs(
    potential: &Potential,
    k: f64,
    bs: Vec<f64>,
    thetas: Vec<f64>,
) -> PyResult<Vec<Option<f64>>> {
    let curve = err(classical::deflection_curve(&potential.inner, k, &bs))?;
    Ok(thetas
        .iter()
        .map(|&theta| classical::classical_dcs_2d(&curve, theta).ok().map(|d| d.value))
        .collect())
}

/// WKB phase shift at continuous angular momentum m.
#[pyfunction]
fn wkb_phase_shift(potential: &Potential, k: f64, m: f64) -> PyResult<f64> {
    err(semiclassical::wkb_phase_shift(&potential.inner, k, m))
}

/// Eikonal phase shift at impact parameter b.
#[pyfunction]
fn eikonal_phase(potential: &Potential, k: f64, b: f64) -> PyResult<f64> {
    err(semiclassical::eikonal_phase(&potential.inner, k, b))
}

/// Eikonal amplitude at angle θ, truncated at b_max; returns (re, im).
#[pyfunction]
fn eikonal_amplitude(potential: &Potential, k: f64, theta: f64, b_max: f64) -> PyResult<(f64, f64)> {
    let f = err(semiclassical::eikonal_amplitude(&potential.inner, k, theta, b_max))?;
    Ok((f.re, f.im))
}

/// Rainbow search in a bracket of impact parameters; returns a dict with
/// m_r, b_r, theta_r, theta_dd (Θ'' with respect to m).
#[pyfunction]
fn find_rainbow(
    py: Python<'_>,
    potential: &Potential,
    k: f64,
    b_lo: f64,
    b_hi: f64,
) -> PyResult<Py<PyAny>> {
    let info = err(semiclassical::find_rainbow(&potential.inner, k, (b_lo, b_hi)))?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("m_r", info.m_r)?;
    dict.set_item("b_r", info.b_r)?;
    dict.set_item("theta_r", info.theta_r)?;
    dict.set_item("theta_dd", info.theta_dd)?;
    Ok(dict.into())
}

/// Airy rainbow cross section at angle θ; returns (value, in_validity_window).
#[pyfunction]
fn airy_dcs(
    potential: &Potential,
    k: f64,
    theta: f64,
    b_lo: f64,
    b_hi: f64,
) -> PyResult<(f64, bool)> {
    let info = err(semiclassical::find_rainbow(&potential.inner, k, (b_lo, b_hi)))?;
    let out = err(semiclassical::airy_amplitude_dcs(&info, k, theta))?;
    Ok((out.value, out.in_validity_window))
}

/// Bessel function J_m(x).
#[pyfunction]
fn bessel_j(m: u32, x: f64) -> PyResult<f64> {
    err(specfun::bessel_j(m, x))
}

/// Neumann function Y_m(x).
#[pyfunction]
fn bessel_y(m: u32, x: f64) -> PyResult<f64> {
    err(specfun::bessel_y(m, x))
}

/// Airy function Ai(x).
#[pyfunction]
fn airy_ai(x: f64) -> PyResult<f64> {
    err(specfun::airy_ai(x))
}

#[pymodule]
fn scatter2d(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Potential>()?;
    m.add_function(wrap_pyfunction!(quantum_phase_shifts, m)?)?;
    m.add_function(wrap_pyfunction!(total_cross_section, m)?)?;
    m.add_function(wrap_pyfunction!(differential_cross_section, m)?)?;
    m.add_function(wrap_pyfunction!(amplitude, m)?)?;
    m.add_function(wrap_pyfunction!(deflection, m)?)?;
    m.add_function(wrap_pyfunction!(turning_point, m)?)?;
    m.add_function(wrap_pyfunction!(deflection_curve, m)?)?;
    m.add_function(wrap_pyfunction!(classical_dcs, m)?)?;
    m.add_function(wrap_pyfunction!(wkb_phase_shift, m)?)?;
    m.add_function(wrap_pyfunction!(eikonal_phase, m)?)?;
    m.add_function(wrap_pyfunction!(eikonal_amplitude, m)?)?;
    m.add_function(wrap_pyfunction!(find_rainbow, m)?)?;
    m.add_function(wrap_pyfunction!(airy_dcs, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_j, m)?)?;
    m.add_function(wrap_pyfunction!(bessel_y, m)?)?;
    m.add_function(wrap_pyfunction!(airy_ai, m)?)?;
    Ok(())
}
