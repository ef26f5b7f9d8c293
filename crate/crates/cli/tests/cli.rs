//! Exit codes and command behavior.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphertrop"))
        .args(args)
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn golden(rel: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(rel)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn embedding(table: &str, name: &str) -> (PathBuf, PathBuf) {
    (
        golden(&format!("{table}/datum.json")),
        golden(&format!("{table}/{name}.fan.json")),
    )
}

#[test]
fn validate_accepts_a_table_fan() {
    let (d, f) = embedding("table1", "P2");
    let out = run(&["validate", "--datum", s(&d), "--fan", s(&f)]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["valid"], true);
}

#[test]
fn validate_reports_missing_origin() {
    let tmp = tempfile::tempdir().unwrap();
    let fan = tmp.path().join("fan.json");
    fs::write(
        &fan,
        r#"{"cones": [{"generators": [["-1"]], "colors": []}]}"#,
    )
    .unwrap();
    let out = run(&[
        "validate",
        "--datum",
        s(&golden("table1/datum.json")),
        "--fan",
        s(&fan),
    ]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["valid"], false);
    assert!(v["violations"]
        .as_array()
        .unwrap()
        .iter()
        .any(|x| x["axiom"] == "face-closure"));
}

#[test]
fn malformed_json_is_an_input_error() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.json");
    fs::write(&bad, "{").unwrap();
    let out = run(&["validate", "--datum", s(&bad), "--fan", s(&bad)]);
    assert_eq!(code(&out), 2);
    let out = run(&[
        "validate",
        "--datum",
        "/nonexistent/datum.json",
        "--fan",
        s(&bad),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn both_routes_agree_on_the_blowup() {
    let (d, f) = embedding("blowup-a4", "Bl0A4");
    let out = run(&["trop", "--datum", s(&d), "--fan", s(&f), "--mode", "both"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["comparison"]["verdict"], "equal");
    assert_eq!(v["trop"]["strata"].as_array().unwrap().len(), 4);
}

#[test]
fn unknown_mode_lists_the_available_ones() {
    let (d, f) = embedding("table1", "P2");
    let out = run(&["trop", "--datum", s(&d), "--fan", s(&f), "--mode", "magic"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("facewise") && err.contains("grobner"), "{err}");
}

#[test]
fn invalid_fan_is_a_domain_failure() {
    let tmp = tempfile::tempdir().unwrap();
    let fan = tmp.path().join("fan.json");
    fs::write(&fan, r#"{"cones": [{"generators": [], "colors": []}, {"generators": [["1"]], "colors": []}, {"generators": [["1"]], "colors": ["D"]}]}"#).unwrap();
    let out = run(&[
        "trop",
        "--datum",
        s(&golden("table1/datum.json")),
        "--fan",
        s(&fan),
    ]);
    assert_eq!(code(&out), 1, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn rank_zero_gives_a_single_point() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path().join("d.json");
    let f = tmp.path().join("f.json");
    fs::write(
        &d,
        r#"{"rank": 0, "valuation_cone": {"generators": []}, "palette": []}"#,
    )
    .unwrap();
    fs::write(&f, r#"{"cones": [{"generators": [], "colors": []}]}"#).unwrap();
    let out = run(&["trop", "--datum", s(&d), "--fan", s(&f)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let strata = json(&out)["strata"].as_array().unwrap().clone();
    assert_eq!(strata.len(), 1);
    assert_eq!(strata[0]["shape"], "point");
}

#[test]
fn compare_detects_differences() {
    let a = golden("table1/P2.trop.json");
    let b = golden("table1/Bl0P2.trop.json");
    let same = run(&["compare", s(&a), s(&a)]);
    assert_eq!(code(&same), 0);
    let diff = run(&["compare", s(&a), s(&b)]);
    assert_eq!(code(&diff), 1);
    assert_eq!(json(&diff)["verdict"], "different");
}

#[test]
fn grtrop_lists_charts_per_maximal_cone() {
    let (d, f) = embedding("table2", "P4");
    let out = run(&["grtrop", "--datum", s(&d), "--fan", s(&f)]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["charts"].as_array().unwrap().len(), 2);
    assert_eq!(v["trop"]["strata"].as_array().unwrap().len(), 5);
}

#[test]
fn polynomial_actions() {
    let e3 = golden("e3/e3.poly");
    let out = run(&[
        "poly",
        "--poly",
        s(&e3),
        "--action",
        "trop",
        "--weight",
        "(0, 2)",
    ]);
    assert_eq!(json(&out)["value"], "-1");
    let out = run(&[
        "poly",
        "--poly",
        s(&e3),
        "--action",
        "init",
        "--weight",
        "(-2,0)",
        "--method",
        "substitution",
    ]);
    assert_eq!(json(&out)["initial_form"], "-6*x1^2 + 4*x1*x2");
    let json_file = golden("e3/e3.json");
    let out = run(&[
        "poly",
        "--poly",
        s(&json_file),
        "--action",
        "trop",
        "--weight",
        "(-2, 0)",
    ]);
    assert_eq!(json(&out)["value"], "-4");
    let out = run(&["poly", "--poly", "x1 + x2 + 1", "--action", "hypersurface"]);
    let cells = json(&out)["torus"]["cells"].as_array().unwrap().clone();
    assert_eq!(cells.len(), 3);
    assert!(cells
        .iter()
        .all(|c| c["rays"].as_array().unwrap().len() == 1));
}

#[test]
fn infinite_weight_rules() {
    let out = run(&[
        "poly",
        "--poly",
        "x1 + x2 + 1",
        "--action",
        "trop",
        "--weight",
        "(inf, 0)",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["value"], "0");
    let out = run(&[
        "poly",
        "--poly",
        "x1^-1 + x2",
        "--action",
        "trop",
        "--weight",
        "(inf, 0)",
    ]);
    assert_eq!(code(&out), 1);
    let out = run(&[
        "poly", "--poly", "x1 + ", "--action", "trop", "--weight", "(0)",
    ]);
    assert_eq!(code(&out), 2);
    let out = run(&["poly", "--poly", "x1 + x2", "--action", "trop"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn ftt_verdicts() {
    let ok = run(&["ftt", "--poly", "x1 + x2 + 1", "--witness", "t, -1 - t"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(json(&ok)["consistent"], true);
    let bad = run(&["ftt", "--poly", "x1 + x2 + 1", "--witness", "t, 1"]);
    assert_eq!(code(&bad), 1);
    let zero = run(&["ftt", "--poly", "x1 + x2 + 1", "--witness", "0, 1"]);
    assert_eq!(code(&zero), 2);
}

#[test]
fn render_refuses_rank_three() {
    let tmp = tempfile::tempdir().unwrap();
    let d = tmp.path().join("d.json");
    let f = tmp.path().join("f.json");
    let t = tmp.path().join("t.json");
    fs::write(&d, r#"{"rank": 3, "valuation_cone": {"generators": [["1","0","0"],["-1","0","0"],["0","1","0"],["0","-1","0"],["0","0","1"],["0","0","-1"]]}, "palette": []}"#).unwrap();
    fs::write(&f, r#"{"cones": [{"generators": [], "colors": []}]}"#).unwrap();
    let out = run(&["trop", "--datum", s(&d), "--fan", s(&f), "--out", s(&t)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["render", s(&t)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("rank"));
}

#[test]
fn render_output_is_deterministic_and_written_to_file() {
    let tmp = tempfile::tempdir().unwrap();
    let t = golden("table2/Bl0P4.trop.json");
    let a = tmp.path().join("a.svg");
    let b = tmp.path().join("b.svg");
    for p in [&a, &b] {
        assert_eq!(
            code(&run(&["render", s(&t), "--extent", "3/2", "--out", s(p)])),
            0
        );
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert!(fs::read_to_string(&a).unwrap().starts_with("<svg"));
    assert_eq!(code(&run(&["render", s(&t), "--extent", "0"])), 2);
    assert_eq!(code(&run(&["render", s(&t), "--format", "png"])), 2);
}

#[test]
fn trop_output_reparses_equal() {
    // The `compare` of a file with the `both` wrapper and the plain output
    // exercises the reader on both shapes.
    let tmp = tempfile::tempdir().unwrap();
    let (d, f) = embedding("table2", "Bl0P4");
    let plain = tmp.path().join("plain.json");
    let both = tmp.path().join("both.json");
    run(&["trop", "--datum", s(&d), "--fan", s(&f), "--out", s(&plain)]);
    run(&[
        "trop",
        "--datum",
        s(&d),
        "--fan",
        s(&f),
        "--mode",
        "both",
        "--out",
        s(&both),
    ]);
    assert_eq!(code(&run(&["compare", s(&plain), s(&both)])), 0);
}

#[test]
fn unknown_example_is_rejected() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run(&["examples", "table3", "--out", s(tmp.path())]);
    assert_eq!(code(&out), 2);
}
