//! Numerical workbench for two-dimensional scattering.
//!
//! Computes scattering observables for a particle in a central potential
//! three ways and cross-validates them:
//!
//! * exactly, by integrating the partial-wave radial equation and summing
//!   phase shifts ([`quantum`]),
//! * classically, from turning points and the deflection function
//!   ([`classical`]),
//! * semiclassically, via WKB and Eikonal phases, stationary-phase
//!   amplitudes, and the Airy description of rainbow caustics
//!   ([`semiclassical`]).
//!
//! # Units
//!
//! Everything uses the convention `ħ²/2μ = 1`. Energies are measured in
//! inverse length squared, so `E = k²` and the reduced potential `U(r)`
//! is numerically equal to the physical potential. Scattering amplitudes
//! carry dimension length^(1/2) and cross sections dimension length.

pub mod classical;
pub mod error;
pub mod numerics;
pub mod potential;
pub mod quantum;
pub mod semiclassical;
pub mod specfun;

pub use error::{Error, Result};
pub use potential::RadialPotential;
