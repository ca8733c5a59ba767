//! End-to-end tests of the `uslev` binary: output formats, exit codes,
//! determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn uslev(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uslev"))
        .args(args)
        .current_dir(dir)
        .env_remove("USLEV_TOL")
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_string()
}

fn setup() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    write(
        dir.path(),
        "nonpos.json",
        r#"{"kind":"orthant","dim":2,"sign":"nonpos"}"#,
    );
    write(
        dir.path(),
        "orthant.json",
        r#"{"kind":"orthant","dim":2,"sign":"nonneg"}"#,
    );
    write(dir.path(), "F.csv", "x,y\n0,3\n1,1\n3,0\n2,2\n");
    dir
}

#[test]
fn phi_reference_output() {
    let dir = setup();
    let out = uslev(
        dir.path(),
        &["phi", "--set", "nonpos.json", "--k", "1,1", "--point", "-1,-1"],
    );
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "{\"class\":\"real\",\"phi\":-1.0}\n"
    );
}

#[test]
fn phi_nu_and_neginf_render_verbatim() {
    let dir = setup();
    write(
        dir.path(),
        "lateral.json",
        r#"{"kind":"halfspaces","normals":[[0,1]],"offsets":[0]}"#,
    );
    let out = uslev(
        dir.path(),
        &["phi", "--set", "lateral.json", "--k", "1,0", "--point", "5,1"],
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "{\"class\":\"nu\",\"phi\":\"nu\"}\n"
    );
    let out = uslev(
        dir.path(),
        &["phi", "--set", "lateral.json", "--k", "1,0", "--point", "5,-1"],
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "{\"class\":\"neginf\",\"phi\":\"-inf\"}\n"
    );
}

#[test]
fn phi_oracle_flag() {
    let dir = setup();
    write(
        dir.path(),
        "hyperbola.json",
        r#"{"kind":"oracle","name":"hyperbola","closed":true,"recession":[[-1,0]]}"#,
    );
    let out = uslev(
        dir.path(),
        &[
            "phi",
            "--set",
            "hyperbola.json",
            "--k",
            "-1,0",
            "--point",
            "0,2",
            "--oracle",
        ],
    );
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let phi = value["phi"].as_f64().unwrap();
    assert!((phi - 0.5).abs() <= 1e-9, "{text}");
}

#[test]
fn norm_output() {
    let dir = setup();
    let out = uslev(
        dir.path(),
        &["norm", "--cone", "orthant.json", "--k", "1,1", "--point", "1,-2"],
    );
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "{\"norm\":2.0}\n");
}

#[test]
fn eff_and_min_outputs() {
    let dir = setup();
    let out = uslev(
        dir.path(),
        &["eff", "--points", "F.csv", "--set", "orthant.json"],
    );
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(value["indices"], serde_json::json!([0, 1, 2]));

    let out = uslev(
        dir.path(),
        &["eff", "--points", "F.csv", "--set", "orthant.json", "--weak"],
    );
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(value["indices"], serde_json::json!([0, 1, 2]));

    let out = uslev(
        dir.path(),
        &["min", "--points", "F.csv", "--set", "orthant.json"],
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout), "[0,1,2]\n");
}

#[test]
fn characterize_and_scalarize_reports() {
    let dir = setup();
    let out = uslev(
        dir.path(),
        &[
            "characterize",
            "--points",
            "F.csv",
            "--set",
            "orthant.json",
            "--k",
            "1,1",
        ],
    );
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(value["result"]["indices"], serde_json::json!([0, 1, 2]));
    assert_eq!(value["seed"], serde_json::json!(42));

    let out = uslev(
        dir.path(),
        &[
            "scalarize",
            "--points",
            "F.csv",
            "--set",
            "orthant.json",
            "--ref",
            "4,4",
            "--k",
            "1,1",
            "--dom",
            "orthant.json",
        ],
    );
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(value["argmin"], serde_json::json!([1]));
    assert_eq!(
        value["values"],
        serde_json::json!([-1.0, -3.0, -1.0, -2.0])
    );
}

#[test]
fn bound_and_separate_reports() {
    let dir = setup();
    let out = uslev(
        dir.path(),
        &[
            "bound",
            "--points",
            "F.csv",
            "--set",
            "orthant.json",
            "--ref",
            "4,4",
            "--orientation",
            "below",
        ],
    );
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    let weakly: Vec<u64> = value["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|v| v["kind"] == "weakly_efficient" || v["kind"] == "efficient")
        .map(|v| v["index"].as_u64().unwrap())
        .collect();
    assert_eq!(weakly, vec![0, 1, 2]);

    write(dir.path(), "D.csv", "1,2\n-1,-1\n");
    let out = uslev(
        dir.path(),
        &[
            "separate",
            "--set",
            "nonpos.json",
            "--k",
            "1,1",
            "--points",
            "D.csv",
        ],
    );
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(value["verdict"], "intersecting");
    assert_eq!(value["witnesses"], serde_json::json!([1]));
}

#[test]
fn refusal_exits_one_and_names_the_hypothesis() {
    let dir = setup();
    // k = (1,-1) is not in the recession cone of the orthant.
    let out = uslev(
        dir.path(),
        &[
            "characterize",
            "--points",
            "F.csv",
            "--set",
            "orthant.json",
            "--k",
            "1,-1",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("0⁺D"), "stderr: {err}");

    let out = uslev(
        dir.path(),
        &[
            "separate",
            "--set",
            "orthant.json",
            "--k",
            "-1,1",
            "--points",
            "F.csv",
        ],
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("-0⁺A"));
}

#[test]
fn input_errors_exit_two() {
    let dir = setup();
    write(dir.path(), "broken.json", r#"{"kind":"halfspaces","normals":[[1,1],[0,1]],"offsets":[0]}"#);
    let out = uslev(
        dir.path(),
        &["phi", "--set", "broken.json", "--k", "1,1", "--point", "0,0"],
    );
    assert_eq!(out.status.code(), Some(2));

    let out = uslev(
        dir.path(),
        &["phi", "--set", "missing.json", "--k", "1,1", "--point", "0,0"],
    );
    assert_eq!(out.status.code(), Some(2));

    write(dir.path(), "bad.csv", "1,2\nx,y\n");
    let out = uslev(
        dir.path(),
        &["eff", "--points", "bad.csv", "--set", "orthant.json"],
    );
    assert_eq!(out.status.code(), Some(2));

    // Unknown flags are rejected before any computation.
    let out = uslev(dir.path(), &["phi", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    let out = uslev(dir.path(), &["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tolerance_env_override() {
    let dir = setup();
    let out = Command::new(env!("CARGO_BIN_EXE_uslev"))
        .args(["phi", "--set", "nonpos.json", "--k", "1,1", "--point", "-1,-1"])
        .current_dir(dir.path())
        .env("USLEV_TOL", "not-a-number")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = Command::new(env!("CARGO_BIN_EXE_uslev"))
        .args(["phi", "--set", "nonpos.json", "--k", "1,1", "--point", "-1,-1"])
        .current_dir(dir.path())
        .env("USLEV_TOL", "1e-6")
        .output()
        .unwrap();
    assert!(out.status.success());
}

#[test]
fn seeded_outputs_are_byte_identical() {
    let dir = setup();
    let args = [
        "separate",
        "--seed",
        "7",
        "--set",
        "nonpos.json",
        "--k",
        "1,1",
        "--points",
        "F.csv",
    ];
    let first = uslev(dir.path(), &args);
    let second = uslev(dir.path(), &args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);

    let check = ["check", "--suite", "paper-example", "--seed", "9"];
    let first = uslev(dir.path(), &check);
    let second = uslev(dir.path(), &check);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn check_command_modes() {
    let dir = setup();
    let out = uslev(dir.path(), &["check", "--list"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("paper-example"));

    // sizes=0 passes vacuously with a warning in the summary.
    let out = uslev(dir.path(), &["check", "--sizes", "0"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    let last = text.lines().last().unwrap();
    assert!(last.contains("vacuously"), "{last}");

    // A single fast suite runs clean.
    let out = uslev(dir.path(), &["check", "--suite", "paper-example"]);
    assert!(out.status.success());

    let out = uslev(dir.path(), &["check", "--suite", "no-such-suite"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dump_grid_emits_values() {
    let dir = setup();
    let out = uslev(
        dir.path(),
        &[
            "phi",
            "--set",
            "nonpos.json",
            "--k",
            "1,1",
            "--dump-grid",
            "-2,2,-2,2,5,5",
        ],
    );
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&String::from_utf8_lossy(&out.stdout)).unwrap();
    assert_eq!(value["xs"].as_array().unwrap().len(), 5);
    assert_eq!(value["values"].as_array().unwrap().len(), 5);
    // Center of the grid is the origin: phi = 0 there.
    assert_eq!(value["values"][2][2], serde_json::json!(0.0));
}
