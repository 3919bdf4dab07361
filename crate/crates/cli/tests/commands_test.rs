//! End-to-end tests of the command runners and the binary: output
//! formats, determinism, per-method gaps, and exit codes.

use scatter2d_cli::{exit_code, run, Command, RunConfig};
use std::path::Path;
use std::process::Command as Process;

fn run_to_dir(cmd: Command, json: &str, dir: &Path) -> scatter2d_cli::RunOutcome {
    let config = RunConfig::from_json(json).unwrap();
    run(cmd, &config, Path::new("."), dir).unwrap()
}

#[test]
fn free_potential_gives_all_zero_columns() {
    // a two-point zero table stands in for U = 0
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("zero.csv");
    std::fs::write(&table, "r,U\n0.1,0.0\n10.0,0.0\n").unwrap();
    let json = format!(
        r#"{{"potential": {{"type": "tabulated", "path": "{}"}}, "k": 1.0, "m_max": 12}}"#,
        table.display()
    );
    let outcome = run_to_dir(Command::PhaseShifts, &json, dir.path());
    assert!(outcome.diagnostics.is_empty());

    let csv = std::fs::read_to_string(dir.path().join("phase_shifts.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "m,delta_quantum,delta_wkb,delta_eikonal"
    );
    for line in lines {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols.len(), 4);
        for col in &cols[1..] {
            let v: f64 = col.parse().unwrap();
            assert!(v.abs() < 1e-8, "nonzero entry in {line}");
        }
    }
    let summary = std::fs::read_to_string(dir.path().join("phase_shifts_summary.json")).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&summary).unwrap();
    assert!(parsed["sigma_total_quantum"].as_f64().unwrap() < 1e-12);
}

#[test]
fn gaussian_methods_converge_at_weak_coupling() {
    // |U0|/k² small: the three phase-shift columns approach each other
    let dir = tempfile::tempdir().unwrap();
    let json = r#"{"potential": {"type": "gaussian", "u0": -0.2, "a": 1.0}, "k": 5.0}"#;
    run_to_dir(Command::PhaseShifts, json, dir.path());
    let csv = std::fs::read_to_string(dir.path().join("phase_shifts.csv")).unwrap();
    for line in csv.lines().skip(1).take(10) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let (dq, dw, de) = (cols[1], cols[2], cols[3]);
        assert!((dq - dw).abs() < 5e-3, "quantum vs wkb in {line}");
        assert!((dw - de).abs() < 5e-3, "wkb vs eikonal in {line}");
    }
}

#[test]
fn zero_potential_deflection_curve_is_flat() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("zero.csv");
    std::fs::write(&table, "r,U\n0.1,0.0\n10.0,0.0\n").unwrap();
    let json = format!(
        r#"{{"potential": {{"type": "tabulated", "path": "{}"}}, "k": 1.0,
             "b_grid": {{"start": 0.2, "stop": 4.0, "n": 60}}}}"#,
        table.display()
    );
    run_to_dir(Command::Deflection, &json, dir.path());
    let csv = std::fs::read_to_string(dir.path().join("deflection.csv")).unwrap();
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let theta: f64 = cols[1].parse().unwrap();
        assert!(theta.abs() < 1e-10, "nonzero deflection in {line}");
    }
}

#[test]
fn deflection_summary_reports_threshold_flip() {
    for (energy, expected) in [(1.65_f64, true), (1.35, false)] {
        let dir = tempfile::tempdir().unwrap();
        let json = format!(
            r#"{{"potential": {{"type": "appendix_b", "a": 1.0, "r_c": 1.0}}, "k": {},
                "b_grid": {{"start": 0.02, "stop": 5.0, "n": 200}}}}"#,
            energy.sqrt()
        );
        run_to_dir(Command::Deflection, &json, dir.path());
        let summary: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(dir.path().join("deflection_summary.json")).unwrap(),
        )
        .unwrap();
        assert_eq!(summary["rainbow"]["exists"].as_bool().unwrap(), expected);
        assert_eq!(
            summary["appendix_b"]["rainbow_expected"].as_bool().unwrap(),
            expected
        );
        assert!((summary["appendix_b"]["threshold_energy"].as_f64().unwrap() - 1.5).abs() < 1e-12);
    }
}

#[test]
fn cross_section_columns_behave_per_method() {
    // attractive Gaussian: dark side beyond the rainbow has classical = 0,
    // spa = 0, quantum > 0; airy fills only its validity window
    let dir = tempfile::tempdir().unwrap();
    let json = r#"{"potential": {"type": "gaussian", "u0": -0.5, "a": 1.0}, "k": 3.0,
                   "theta_grid": {"start": 0.005, "stop": 0.8, "n": 160}}"#;
    let outcome = run_to_dir(Command::CrossSection, json, dir.path());
    let _ = outcome;
    let csv = std::fs::read_to_string(dir.path().join("cross_section.csv")).unwrap();
    let summary: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("cross_section_summary.json")).unwrap(),
    )
    .unwrap();
    let theta_r = summary["rainbow"]["theta_r"].as_f64().unwrap();

    let mut dark_classical_zero = 0;
    let mut airy_in_window = 0;
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        let theta: f64 = cols[0].parse().unwrap();
        let quantum: f64 = cols[1].parse().unwrap();
        assert!(quantum >= 0.0);
        if theta > theta_r * 1.2 && !cols[2].is_empty() {
            let classical: f64 = cols[2].parse().unwrap();
            assert_eq!(classical, 0.0, "dark side must be exactly zero: {line}");
            dark_classical_zero += 1;
        }
        if !cols[4].is_empty() {
            let airy: f64 = cols[4].parse().unwrap();
            assert!(airy.is_finite() && airy >= 0.0);
            assert!((theta - theta_r).abs() <= 0.5 * theta_r + 1e-12);
            airy_in_window += 1;
        }
    }
    assert!(dark_classical_zero > 10);
    assert!(airy_in_window > 3);
}

#[test]
fn repulsive_spa_column_equals_classical() {
    let dir = tempfile::tempdir().unwrap();
    let json = r#"{"potential": {"type": "gaussian", "u0": 2.0, "a": 1.0}, "k": 1.0,
                   "theta_grid": {"start": 0.4, "stop": 2.4, "n": 40}}"#;
    run_to_dir(Command::CrossSection, json, dir.path());
    let csv = std::fs::read_to_string(dir.path().join("cross_section.csv")).unwrap();
    let mut checked = 0;
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        if cols[2].is_empty() || cols[3].is_empty() {
            continue;
        }
        let classical: f64 = cols[2].parse().unwrap();
        let spa: f64 = cols[3].parse().unwrap();
        assert!(
            (spa - classical).abs() <= 1e-4 * classical.max(1e-12),
            "spa {spa} vs classical {classical}"
        );
        checked += 1;
    }
    assert!(checked > 30);
}

#[test]
fn quantum_supernumeraries_match_airy_period() {
    // large size parameter: the quantum curve's oscillations near the
    // rainbow angle carry the Airy local period
    let dir = tempfile::tempdir().unwrap();
    let json = r#"{"potential": {"type": "gaussian", "u0": -187.5, "a": 3.0}, "k": 25.0,
                   "theta_grid": {"start": 0.02, "stop": 0.25, "n": 1200}}"#;
    run_to_dir(Command::CrossSection, json, dir.path());
    let csv = std::fs::read_to_string(dir.path().join("cross_section.csv")).unwrap();
    let summary: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.path().join("cross_section_summary.json")).unwrap(),
    )
    .unwrap();
    let theta_r = summary["rainbow"]["theta_r"].as_f64().unwrap();
    let theta_dd_b = summary["rainbow"]["theta_dd_b"].as_f64().unwrap().abs();
    let k = 25.0_f64;

    let mut thetas = Vec::new();
    let mut quantum = Vec::new();
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        thetas.push(cols[0].parse::<f64>().unwrap());
        quantum.push(cols[1].parse::<f64>().unwrap());
    }
    let mut peaks = Vec::new();
    for i in 1..quantum.len() - 1 {
        if quantum[i] > quantum[i - 1] && quantum[i] > quantum[i + 1] && thetas[i] < theta_r {
            peaks.push(thetas[i]);
        }
    }
    assert!(peaks.len() >= 2, "need supernumeraries, found {peaks:?}");
    let spacing = peaks[peaks.len() - 1] - peaks[peaks.len() - 2];
    let midpoint = 0.5 * (peaks[peaks.len() - 1] + peaks[peaks.len() - 2]);
    let local_period = std::f64::consts::PI * theta_dd_b.sqrt()
        / (k * 2.0_f64.sqrt() * (theta_r - midpoint).sqrt());
    assert!(
        ((spacing - local_period) / local_period).abs() < 0.15,
        "spacing {spacing} vs Airy local period {local_period}"
    );
}

#[test]
fn identical_configs_produce_identical_bytes() {
    let json = r#"{"potential": {"type": "gaussian", "u0": -0.5, "a": 1.0}, "k": 3.0,
                   "b_grid": {"start": 0.05, "stop": 4.0, "n": 120}}"#;
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    run_to_dir(Command::Deflection, json, dir_a.path());
    run_to_dir(Command::Deflection, json, dir_b.path());
    for name in ["deflection.csv", "deflection_summary.json"] {
        let a = std::fs::read(dir_a.path().join(name)).unwrap();
        let b = std::fs::read(dir_b.path().join(name)).unwrap();
        assert_eq!(a, b, "{name} differs between identical runs");
    }
}

#[test]
fn exit_codes_through_the_binary() {
    let exe = env!("CARGO_BIN_EXE_scatter2d");
    let dir = tempfile::tempdir().unwrap();

    // malformed config: exit 2 and no output file
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{definitely not json").unwrap();
    let out_dir = dir.path().join("out");
    let status = Process::new(exe)
        .args(["phase-shifts", "--config"])
        .arg(&bad)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert!(!out_dir.join("phase_shifts.csv").exists());

    // missing file: exit 2
    let status = Process::new(exe)
        .args(["phase-shifts", "--config", "/nonexistent/nope.json"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(2));

    // valid run: exit 0 and files written
    let good = dir.path().join("good.json");
    std::fs::write(
        &good,
        r#"{"potential": {"type": "gaussian", "u0": -0.3, "a": 1.0}, "k": 2.0, "m_max": 14}"#,
    )
    .unwrap();
    let status = Process::new(exe)
        .args(["phase-shifts", "--config"])
        .arg(&good)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0), "{status:?}");
    assert!(out_dir.join("phase_shifts.csv").exists());
    assert!(out_dir.join("phase_shifts_summary.json").exists());
}

#[test]
fn exit_code_mapping() {
    use scatter2d_cli::CliError;
    let ok = Ok(scatter2d_cli::RunOutcome { files: vec![], diagnostics: vec![] });
    assert_eq!(exit_code(&ok), 0);
    let partial = Ok(scatter2d_cli::RunOutcome {
        files: vec![],
        diagnostics: vec!["wkb: 1 channel(s) failed".into()],
    });
    assert_eq!(exit_code(&partial), 4);
    assert_eq!(exit_code(&Err(CliError::Config("x".into()))), 2);
    assert_eq!(exit_code(&Err(CliError::Numerical("x".into()))), 3);
}
