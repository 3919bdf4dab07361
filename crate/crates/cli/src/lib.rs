//! Library surface of the `scatter2d` batch tool: strict JSON
//! configuration, command runners, and deterministic CSV/JSON writers.
//!
//! Units follow the core convention `ħ²/2μ = 1`: energies are `k²` in
//! inverse length squared and the reduced potential equals the physical
//! one numerically.

pub mod config;
pub mod output;
pub mod runner;

pub use config::{Command, GridSpec, PotentialSpec, RunConfig, Tolerances};
pub use runner::{run, CliError, RunOutcome};

/// Process exit codes: 0 success, 2 config error, 3 numerical failure,
/// 4 partial results written.
pub fn exit_code(result: &Result<RunOutcome, CliError>) -> u8 {
    match result {
        Ok(outcome) if outcome.diagnostics.is_empty() => 0,
        Ok(_) => 4,
        Err(CliError::Config(_)) => 2,
        Err(CliError::Numerical(_)) | Err(CliError::Io(_)) => 3,
    }
}
