//! End-to-end tests of the `roegen` binary: exit codes, emitted files, and
//! summary contents.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn binary() -> &'static str {
    env!("CARGO_BIN_EXE_roegen")
}

fn scenario(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("scenarios")
        .join(name)
}

fn run(args: &[&str], out: &Path) -> Output {
    Command::new(binary())
        .args(args)
        .arg("--out")
        .arg(out)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

/// Parses "key = value" style summary lines.
fn field(text: &str, key: &str) -> f64 {
    for line in text.lines() {
        let trimmed = line.trim();
        if let Some(rest) = trimmed.strip_prefix(key) {
            if let Some(value) = rest.trim_start().strip_prefix('=') {
                return value
                    .split_whitespace()
                    .next()
                    .unwrap()
                    .parse()
                    .unwrap_or_else(|e| panic!("cannot parse {key} from {line}: {e}"));
            }
        }
    }
    panic!("no field {key} in:\n{text}");
}

#[test]
fn carnot_default_summary_and_files() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["carnot"], dir.path());
    assert!(output.status.success(), "{}", stdout(&output));

    let text = stdout(&output);
    assert!((field(&text, "W") - 1.0).abs() <= 1e-6);
    assert!((field(&text, "eta") - 0.5).abs() <= 1e-12);
    assert!((field(&text, "q_H") - 2.0).abs() <= 1e-6);
    assert!(text.contains("validation: PASS"));

    for name in ["cycle_qp.csv", "cycle_ei.csv", "cycle_report.json"] {
        assert!(dir.path().join(name).exists(), "missing {name}");
    }
    let qp = std::fs::read_to_string(dir.path().join("cycle_qp.csv")).unwrap();
    assert!(qp.starts_with("leg,Q,P,I,E,G\n"));
    assert_eq!(qp.lines().count(), 1 + 4 * 1000);
    let ei = std::fs::read_to_string(dir.path().join("cycle_ei.csv")).unwrap();
    assert!(ei.starts_with("leg,E,I\n"));
    // no SVG without the flag
    assert!(!dir.path().join("cycle_qp.svg").exists());
}

#[test]
fn carnot_svg_flag_writes_diagrams() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["carnot", "--svg"], dir.path());
    assert!(output.status.success());
    for name in ["cycle_qp.svg", "cycle_ei.svg"] {
        let svg = std::fs::read_to_string(dir.path().join(name)).unwrap();
        assert!(svg.starts_with("<svg"), "{name} is not svg");
    }
}

#[test]
fn carnot_reverse_negates_energies() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["carnot", "--reverse"], dir.path());
    assert!(output.status.success());
    let text = stdout(&output);
    assert!((field(&text, "W") + 1.0).abs() <= 1e-6);
    assert!((field(&text, "q_H") + 2.0).abs() <= 1e-6);
    assert!((field(&text, "q_C") + 1.0).abs() <= 1e-6);
}

#[test]
fn carnot_config_file_matches_defaults() {
    let dir_a = tempfile::tempdir().unwrap();
    let dir_b = tempfile::tempdir().unwrap();
    let plain = run(&["carnot"], dir_a.path());
    let configured = run(
        &[
            "carnot",
            "--config",
            scenario("carnot_default.toml").to_str().unwrap(),
        ],
        dir_b.path(),
    );
    assert!(plain.status.success() && configured.status.success());
    let a = std::fs::read(dir_a.path().join("cycle_qp.csv")).unwrap();
    let b = std::fs::read(dir_b.path().join("cycle_qp.csv")).unwrap();
    assert_eq!(a, b);
}

#[test]
fn carnot_flag_overrides_config() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(
        &[
            "carnot",
            "--config",
            scenario("carnot_default.toml").to_str().unwrap(),
            "--I-hot",
            "4.0",
        ],
        dir.path(),
    );
    assert!(output.status.success());
    assert!((field(&stdout(&output), "eta") - 0.75).abs() <= 1e-12);
}

#[test]
fn carnot_malformed_config_exits_1_without_files() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("broken.toml");
    std::fs::write(&config, "[carnot]\nI_H = \"not a number\"\n").unwrap();
    let out = dir.path().join("out");
    let output = run(
        &["carnot", "--config", config.to_str().unwrap()],
        &out,
    );
    assert_eq!(output.status.code(), Some(1));
    assert!(!out.exists(), "no files may be written on config errors");
}

#[test]
fn carnot_domain_error_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["carnot", "--I-hot", "1.0", "--I-cold", "1.0"], dir.path());
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("I_H"), "{err}");
}

#[test]
fn carnot_undersampled_cycle_fails_validation_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["carnot", "--samples", "16"], dir.path());
    assert_eq!(output.status.code(), Some(2));
    assert!(stdout(&output).contains("validation: FAIL"));
    // outputs are still written so the failure can be inspected
    assert!(dir.path().join("cycle_qp.csv").exists());
}

#[test]
fn vdw_critical_prints_reference_values() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["vdw", "critical"], dir.path());
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(
        text.contains("P_c = 1  Q_c = 3  I_c = 1"),
        "unexpected critical line: {text}"
    );
    assert!(text.contains("stationary inflection: PASS"));
}

#[test]
fn vdw_maxwell_reduced_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["vdw", "maxwell", "--I-reduced", "0.9"], dir.path());
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    let p_sat = json["P_sat"].as_f64().unwrap();
    assert!((p_sat - 0.6469983518722512).abs() <= 1e-6);
    assert!(json["Q_lo"].as_f64().unwrap() < json["Q_hi"].as_f64().unwrap());
}

#[test]
fn vdw_maxwell_supercritical_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["vdw", "maxwell", "--I-reduced", "1.1"], dir.path());
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("supercritical"), "{err}");
}

#[test]
fn vdw_isotherm_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(
        &[
            "vdw",
            "isotherm",
            "--config",
            scenario("vdw_subcritical.toml").to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(output.status.success());
    let csv = std::fs::read_to_string(dir.path().join("vdw_isotherm.csv")).unwrap();
    assert!(csv.starts_with("Q,P,I\n"));
    assert_eq!(csv.lines().count(), 1 + 400);
    assert!(stdout(&output).contains("tie line"));
}

#[test]
fn vdw_surface_grid_has_expected_size() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["vdw", "surface"], dir.path());
    assert!(output.status.success());
    let csv = std::fs::read_to_string(dir.path().join("vdw_surface.csv")).unwrap();
    assert!(csv.starts_with("Q,P,I\n"));
    assert_eq!(csv.lines().count(), 1 + 40 * 7);
}

#[test]
fn catastrophe_critical_state_maps_to_origin() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["catastrophe", "--state", "1,3,1"], dir.path());
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(field(&text, "x").abs() <= 1e-12);
    assert!(field(&text, "alpha").abs() <= 1e-12);
    assert!(field(&text, "beta").abs() <= 1e-12);
}

#[test]
fn catastrophe_check_passes_by_default() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["catastrophe", "--check", "--samples", "1000"], dir.path());
    assert!(output.status.success());
    assert!(stdout(&output).contains("PASS"));
}

#[test]
fn catastrophe_grid_writes_csv_and_rejects_empty() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(
        &[
            "catastrophe",
            "--grid",
            "--config",
            scenario("cusp_grid.toml").to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(output.status.success());
    let csv = std::fs::read_to_string(dir.path().join("cusp_grid.csv")).unwrap();
    assert!(csv.starts_with("alpha,beta,roots\n"));
    assert_eq!(csv.lines().count(), 1 + 81 * 81);

    let empty = run(&["catastrophe", "--grid", "--grid-alpha", "0"], dir.path());
    assert_eq!(empty.status.code(), Some(1));
}

#[test]
fn unknown_flag_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let output = run(&["carnot", "--no-such-flag"], dir.path());
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn help_exits_0() {
    let output = Command::new(binary()).arg("--help").output().unwrap();
    assert_eq!(output.status.code(), Some(0));
}
