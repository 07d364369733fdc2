use std::process::{Command, Output};

use serde_json::Value;

fn jwcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jwcat"))
        .args(args)
        .env_remove("JWCAT_WINDOW")
        .output()
        .expect("binary runs")
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(map) => {
            map.remove("elapsed_us");
            map.values_mut().for_each(strip_timing);
        }
        Value::Array(items) => items.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn kdm_group_reports_exactly_four_passing_checks() {
    let out = jwcat(&["verify", "--window", "4", "--only", "kdm", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "jwcat-report/v1");
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    for c in checks {
        assert_eq!(c["verdict"], "pass");
        for key in ["name", "anchor", "witness", "series", "elapsed_us"] {
            assert!(c.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn json_is_identical_apart_from_timing() {
    let args = ["verify", "-n", "5", "--only", "decat,dual-p1", "--format", "json"];
    let (a, b) = (jwcat(&args), jwcat(&args));
    let mut a: Value = serde_json::from_slice(&a.stdout).unwrap();
    let mut b: Value = serde_json::from_slice(&b.stdout).unwrap();
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let decat = a["checks"].as_array().unwrap().iter().find(|c| c["name"] == "decat.P(P(1))").unwrap();
    assert_eq!(decat["series"][0]["agreement_order"], 11);
}

#[test]
fn window_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_jwcat"))
        .args(["verify", "--only", "kdm", "--format", "json"])
        .env("JWCAT_WINDOW", "5")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["config"]["window"], 5);
    assert_eq!(v["config"]["order"], 11);

    let out = Command::new(env!("CARGO_BIN_EXE_jwcat"))
        .args(["verify", "--only", "kdm"])
        .env("JWCAT_WINDOW", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_with_three() {
    assert_eq!(jwcat(&["verify", "--window", "3"]).status.code(), Some(3));
    assert_eq!(jwcat(&["verify", "--only", "nonsense"]).status.code(), Some(3));
    assert_eq!(jwcat(&["verify", "--format", "xml"]).status.code(), Some(3));
    assert_eq!(jwcat(&["show", "nonsense"]).status.code(), Some(3));
    assert_eq!(jwcat(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(jwcat(&["--help"]).status.code(), Some(0));
}

#[test]
fn eval_reports_parse_position() {
    let out = jwcat(&["eval", "D(L(1)"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("at position 6"), "{err}");
}

#[test]
fn eval_prints_reduced_complex_and_class() {
    let out = jwcat(&["eval", "-n", "8", "CK(D(P(2)))"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("reduced (minimal)"), "{text}");
    assert!(text.contains("class (projective basis)"), "{text}");

    let out = jwcat(&["eval", "-n", "4", "--format", "json", "D(L(2))<1>[1]"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["expression"], "D(L(2))<1>[1]");
    assert_eq!(v["minimal"], true);
}

#[test]
fn show_lists_and_prints_fixtures() {
    let out = jwcat(&["show", "list"]);
    let names = String::from_utf8(out.stdout).unwrap();
    assert!(names.lines().any(|l| l == "sl2-middle"));
    for name in names.lines() {
        let out = jwcat(&["show", "-n", "4", name]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert!(!out.stdout.is_empty());
    }
}
