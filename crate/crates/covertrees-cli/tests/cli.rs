//! End-to-end tests against the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_covertrees"));
    cmd.env_remove("COVERTREES_MAX_VERTICES");
    cmd
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn tmp_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

const CUBE3_TOWER: &str = "vertices 2\nrank 2\n0 1 10\n0 1 01\n0 1 00\n";

#[test]
fn kappa_families() {
    let out = run(&["kappa", "--family", "theta", "--n", "5"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "5\n");

    let out = run(&["kappa", "--family", "hypercube", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");

    let out = run(&["kappa", "--family", "b", "--a", "1", "--b", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "12\n");
}

#[test]
fn kappa_values_stay_exact_past_64_bits() {
    let out = run(&["kappa", "--family", "hypercube", "--n", "6"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "1657509127047778993870601546036901052416000000\n"
    );
}

#[test]
fn kappa_from_edge_list_file() {
    let path = tmp_path("theta3.edges");
    std::fs::write(&path, "# theta(3)\nvertices 2\n0 1\n0 1\n0 1\n").unwrap();
    let out = run(&["kappa", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn kappa_rejects_bad_usage() {
    // No source at all, then two sources at once.
    let out = run(&["kappa"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["kappa", "--family", "theta", "--n", "3", "--file", "x"]);
    assert_eq!(out.status.code(), Some(2));

    // Family without its parameter.
    let out = run(&["kappa", "--family", "theta"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--n"));

    // Unreadable file.
    let out = run(&["kappa", "--file", "/nonexistent/g.edges"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!stderr(&out).is_empty());
}

#[test]
fn kappa_reports_parse_errors_with_line_numbers() {
    let path = tmp_path("broken.edges");
    std::fs::write(&path, "vertices 2\n0 1\n0 9\n").unwrap();
    let out = run(&["kappa", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn census_output_matches_the_closed_forms() {
    let out = run(&["census", "--n", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("   1             5  40"), "{text}");
    assert!(text.contains("   2            10  60"), "{text}");
    assert!(text.contains("total 15"), "{text}");
    assert!(text.contains("overall: PASS"), "{text}");

    let out = run(&["census", "--n", "4"]);
    let text = stdout(&out);
    assert!(text.contains("   1             4  24"), "{text}");
    assert!(text.contains("   2             3  32"), "{text}");
    assert!(text.contains("total 7"), "{text}");

    let out = run(&["census", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cube_verify_human_output() {
    let out = run(&["cube-verify", "--n", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("overall: PASS"));

    // Beyond the direct-leg bound the flag is mandatory...
    let out = run(&["cube-verify", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--skip-direct"));

    // ...and with it the run goes through.
    let out = run(&["cube-verify", "--n", "9", "--skip-direct"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("overall: PASS"));
}

#[test]
fn eq1_verify_runs_on_a_voltage_file() {
    let path = tmp_path("cube3.volt");
    std::fs::write(&path, CUBE3_TOWER).unwrap();
    let out = run(&["eq1-verify", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("product_formula"), "{text}");
    assert!(text.contains("384"), "{text}");
    assert!(text.contains("overall: PASS"), "{text}");
}

#[test]
fn eq1_verify_rejects_disconnected_covers() {
    let path = tmp_path("disconnected.volt");
    std::fs::write(&path, "vertices 2\nrank 1\n0 1 1\n").unwrap();
    let out = run(&["eq1-verify", "--file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("disconnected"), "{}", stderr(&out));
}

#[test]
fn lvalue_evaluates_twisted_determinants() {
    let path = tmp_path("cube3b.volt");
    std::fs::write(&path, CUBE3_TOWER).unwrap();
    let path = path.to_str().unwrap();

    let out = run(&["lvalue", "--file", path, "--chi", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8\n");

    let out = run(&["lvalue", "--file", path, "--chi", "11"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "8\n");

    // Trivial character and malformed masks are parameter errors.
    let out = run(&["lvalue", "--file", path, "--chi", "00"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["lvalue", "--file", path, "--chi", "1"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["lvalue", "--file", path, "--chi", "1x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cube_verify_writes_a_json_report_for_larger_dimensions() {
    let path = tmp_path("cube6.json");
    let out = run(&["cube-verify", "--n", "6", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());

    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    // Large counts stay exact decimal strings end to end.
    let expected = "1657509127047778993870601546036901052416000000";
    for leg in ["direct", "product_formula", "characters", "closed_form"] {
        assert_eq!(value["kappa"][leg], expected, "leg {leg}");
    }
}

#[test]
fn kappa_json_artifact_uses_decimal_strings() {
    let path = tmp_path("kappa_h6.json");
    let out = run(&[
        "kappa",
        "--family",
        "hypercube",
        "--n",
        "6",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(value["run"], "kappa");
    assert_eq!(value["params"]["family"], "hypercube");
    assert_eq!(
        value["kappa"]["kappa"],
        "1657509127047778993870601546036901052416000000"
    );
    assert!(value["kappa"]["kappa"].is_string());
}

#[test]
fn json_artifacts_are_deterministic_when_asked() {
    let path_a = tmp_path("det_a.json");
    let path_b = tmp_path("det_b.json");
    for path in [&path_a, &path_b] {
        let out = run(&[
            "census",
            "--n",
            "3",
            "--deterministic",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b);
    assert!(!String::from_utf8(a).unwrap().contains("generated_at"));
}

#[test]
fn json_artifacts_carry_a_timestamp_by_default() {
    let path = tmp_path("stamped.json");
    let out = run(&["census", "--n", "3", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(value["generated_at"].is_string());
    assert_eq!(value["run"], "census");
}

#[test]
fn vertex_budget_env_var_caps_runs() {
    let out = binary()
        .env("COVERTREES_MAX_VERTICES", "100")
        .args(["cube-verify", "--n", "7"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("COVERTREES_MAX_VERTICES"),
        "{}",
        stderr(&out)
    );

    let out = binary()
        .env("COVERTREES_MAX_VERTICES", "not-a-number")
        .args(["census", "--n", "3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = binary()
        .env("COVERTREES_MAX_VERTICES", "8192")
        .args(["kappa", "--family", "hypercube", "--n", "4"])
        .output()
        .unwrap();
    assert!(out.status.success());
}
