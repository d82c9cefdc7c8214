use std::process::{Command, Output};

use serde_json::Value;

fn qtheta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtheta")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("elapsed_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn yangian_suite_passes() {
    let out = qtheta(&["verify", "yangian", "--n", "2", "--height", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["suite"], "yangian");
    assert_eq!(v["params"]["n"], 2);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "nonsense"][..],
        &["verify", "yangian", "--bogus"],
        &["verify", "yangian", "--n", "2", "--node", "3"],
        &["verify", "yangian", "--height", "0"],
        &["solve"],
    ] {
        assert_eq!(qtheta(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solve_prints_gklo_coefficients() {
    let out = qtheta(&["solve", "gklo", "--n", "1", "--order", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines, ["a_{1,0} = (-1/2)*xi_1,0", "a_{1,1} = (1/4)*xi_1,0 + (1/4)*xi_1,0^2 + (-1/2)*xi_1,1"]);
}

#[test]
fn solve_s_series_writes_report_on_request() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    let out = qtheta(&["solve", "s-series", "--n", "2", "--order", "3", "--report", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("c_{")).count(), 6);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "s-series");
}

#[test]
fn verify_all_reports_only_the_commutation_failures() {
    let out = qtheta(&["verify", "all", "--n", "2", "--height", "3", "--depth", "4", "--order", "6"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let suites: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["suite"].as_str().unwrap()).collect();
    assert_eq!(
        suites,
        ["kernel", "yangian", "gklo", "s-series", "quantum-cartan", "prefund", "qaffine-roots", "theta-qaffine"]
    );
    let stderr = String::from_utf8(out.stderr).unwrap();
    let fails: Vec<&str> = stderr.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert_eq!(fails.len(), 2, "{stderr}");
    assert!(fails.iter().all(|l| l.contains("[theta-qaffine] exponents of Theta_") && l.contains(" commute:")));
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let out = qtheta(&["verify", "prefund", "--depth", "5"]);
        assert_eq!(out.status.code(), Some(0));
        let mut v = json(&out);
        strip_timing(&mut v);
        v
    };
    assert_eq!(run(), run());
}

#[test]
fn flags_override_the_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("qtheta.toml");
    std::fs::write(&cfg, "n = 1\nheight = 2\n").unwrap();
    let c = cfg.to_str().unwrap();
    let v = json(&qtheta(&["verify", "yangian", "--config", c]));
    assert_eq!((v["params"]["n"].as_u64(), v["params"]["height"].as_u64()), (Some(1), Some(2)));
    let v = json(&qtheta(&["verify", "yangian", "--config", c, "--height", "3"]));
    assert_eq!((v["params"]["n"].as_u64(), v["params"]["height"].as_u64()), (Some(1), Some(3)));
    std::fs::write(&cfg, "rank = 1\n").unwrap();
    assert_eq!(qtheta(&["verify", "yangian", "--config", c]).status.code(), Some(2));
}
