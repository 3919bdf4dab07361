//! `scatter2d`: batch front end for the 2D scattering workbench.
//!
//! Unit convention: ħ²/2μ = 1, so the energy is k² (inverse length
//! squared) and U(r) is numerically the physical potential.

use clap::{Parser, Subcommand};
use scatter2d_cli::{exit_code, run, Command, RunConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "scatter2d",
    about = "Two-dimensional scattering workbench: exact partial waves, WKB/Eikonal, \
             deflection functions, rainbow and orbiting diagnostics",
    long_about = "Computes 2D scattering observables for a central potential, exactly \
                  (partial waves) and semiclassically (WKB, Eikonal, stationary phase, Airy), \
                  and writes plot-ready CSV plus JSON summaries.\n\n\
                  Units: hbar^2/(2 mu) = 1, so E = k^2 and U(r) is numerically the physical \
                  potential; lengths set the scale. CSV numbers carry 12 significant digits and \
                  identical configs produce byte-identical outputs.\n\n\
                  Exit codes: 0 success, 2 config error, 3 numerical failure, 4 partial results.\n\
                  SCATTER2D_THREADS caps the worker count."
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Phase shifts per channel: quantum, WKB, Eikonal side by side (CSV m,
    /// delta_quantum, delta_wkb, delta_eikonal + JSON summary with sigma_total)
    PhaseShifts {
        /// JSON run configuration (potential, k, optional m_max/tolerances)
        #[arg(long)]
        config: PathBuf,
        /// Output directory (default: current directory)
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Differential cross sections on an angle grid: quantum, classical,
    /// stationary-phase, Airy (CSV theta, dcs_* + JSON summary)
    CrossSection {
        /// JSON run configuration (needs theta_grid; b_grid optional)
        #[arg(long)]
        config: PathBuf,
        /// Output directory (default: current directory)
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Classical deflection function over an impact-parameter grid with
    /// rainbow / orbiting summaries (CSV b, theta_defl, r0 + JSON summary)
    Deflection {
        /// JSON run configuration (needs b_grid)
        #[arg(long)]
        config: PathBuf,
        /// Output directory (default: current directory)
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("SCATTER2D_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        } else {
            eprintln!("SCATTER2D_THREADS must be a positive integer, got {threads:?}");
            return ExitCode::from(2);
        }
    }

    let cli = Cli::parse();
    let (command, config_path, out_dir) = match cli.command {
        CliCommand::PhaseShifts { config, out } => (Command::PhaseShifts, config, out),
        CliCommand::CrossSection { config, out } => (Command::CrossSection, config, out),
        CliCommand::Deflection { config, out } => (Command::Deflection, config, out),
    };

    let text = match std::fs::read_to_string(&config_path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", config_path.display());
            return ExitCode::from(2);
        }
    };
    let config = match RunConfig::from_json(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: invalid config {}: {e}", config_path.display());
            return ExitCode::from(2);
        }
    };
    let config_dir = config_path
        .parent()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."));

    let result = run(command, &config, &config_dir, &out_dir);
    match &result {
        Ok(outcome) => {
            for file in &outcome.files {
                println!("wrote {}", file.display());
            }
            for diag in &outcome.diagnostics {
                eprintln!("warning: {diag}");
            }
        }
        Err(e) => eprintln!("error: {e}"),
    }
    ExitCode::from(exit_code(&result))
}
