use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use shifted_voa::qseries::series_from_json;
use shifted_voa::QSeries;

fn run(config: &str, args: &[&str]) -> Output {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(config.as_bytes()).unwrap();
    Command::new(env!("CARGO_BIN_EXE_shiftvoa"))
        .args(args)
        .arg("--config")
        .arg(file.path())
        .output()
        .unwrap()
}

fn run_json(config: &str, args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = run(config, &all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: stdout {:?}, stderr {:?}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "float {n}"),
        Value::Array(xs) => xs.iter().for_each(assert_no_floats),
        Value::Object(m) => m.values().for_each(assert_no_floats),
        _ => {}
    }
}

const RANK1_NORM4_HALF: &str = r#"{"lattice": {"named": {"rank1": 4}}, "shift": {"real": ["1/2"]}}"#;

#[test]
fn analyze_reports_type_and_agreeing_partition_functions() {
    let (code, v) = run_json(RANK1_NORM4_HALF, &["analyze"]);
    assert_eq!(code, 0);
    assert_eq!(v["type"]["label"], "IIA+");
    assert_eq!(v["self_dual"], true);
    assert_eq!(v["partition_function"]["agree"], true);
    assert_no_floats(&v);
    let direct: QSeries = series_from_json(&v["partition_function"]["direct"]).unwrap();
    let theta: QSeries = series_from_json(&v["partition_function"]["theta"]).unwrap();
    assert_eq!(direct, theta);
}

#[test]
fn analyze_root_lattice_with_dual_shift() {
    let cfg = r#"{"lattice": {"named": {"A": 2}}, "shift": {"real": [1, 0], "basis": "dual"}}"#;
    let (code, v) = run_json(cfg, &["analyze"]);
    assert_eq!(code, 0);
    assert_eq!(v["type"]["label"], "IA+");
    assert_eq!(v["type"]["dim_V0"], "3");
}

#[test]
fn complex_shift_has_no_type() {
    let cfg = r#"{"lattice": {"named": {"rank1": 2}}, "shift": {"real": ["1/2"], "imag": ["1/2"]}}"#;
    let (code, v) = run_json(cfg, &["analyze"]);
    assert_eq!(code, 0);
    assert!(v["type"].is_null());
    assert!(v["partition_function"].is_null());
    assert_eq!(v["violations"][0]["weight"]["im"], "-1/1");
}

#[test]
fn holomorphic_family_leading_exponents() {
    let (code, v) = run_json(r#"{"family": {"holomorphic": {"c": 8, "r_range": [1, 2]}}}"#, &["family"]);
    assert_eq!(code, 0);
    let leads: Vec<&str> =
        v["members"].as_array().unwrap().iter().map(|m| m["leading"]["exponent"].as_str().unwrap()).collect();
    assert_eq!(leads, ["-4/3", "-7/3"]);
}

#[test]
fn holomorphic_family_rejects_c_not_divisible_by_eight() {
    let out = run(r#"{"family": {"holomorphic": {"c": 12}}}"#, &["family"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("12"));
}

#[test]
fn same_partition_function_family_charges() {
    let cfg = r#"{"lattice": {"named": {"rank1": 2}}, "family": {"same_Z": {"count": 3}}}"#;
    let (code, v) = run_json(cfg, &["family"]);
    assert_eq!(code, 0);
    let charges: Vec<&str> =
        v["members"].as_array().unwrap().iter().map(|m| m["central_charge"].as_str().unwrap()).collect();
    assert_eq!(charges, ["1/1", "-23/1", "-95/1"]);
    assert_eq!(v["identical_partition_functions"], true);
}

#[test]
fn verify_virasoro_on_configured_theory() {
    let cfg = r#"{"lattice": {"named": {"rank1": 2}}, "shift": {"real": ["1/2"]}}"#;
    let (code, v) = run_json(cfg, &["verify", "--suite", "virasoro"]);
    assert_eq!(code, 0);
    let detail = v["checks"][0]["detail"].as_str().unwrap();
    assert!(detail.contains("c_h = -5/1"), "{detail}");
}

#[test]
fn verify_codim_on_default_targets() {
    let (code, v) = run_json("{}", &["verify", "--suite", "codim"]);
    assert_eq!(code, 0);
    assert_eq!(v["suite"], "codim");
    assert_eq!(v["summary"]["failed"], 0);
    // default targets: 3 + 5 + 7 real shifts and one complex shift
    assert_eq!(v["summary"]["passed"], 15);
    assert_eq!(v["summary"]["skipped"], 1);
}

#[test]
fn suite_from_config_file() {
    let (code, v) = run_json(r#"{"suite": "weights"}"#, &["verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["suite"], "weights");
}

#[test]
fn verify_cgraded_lists_imaginary_violation() {
    let (code, v) = run_json("{}", &["verify", "--suite", "cgraded"]);
    assert_eq!(code, 0);
    let complex = v["checks"].as_array().unwrap().iter().find(|c| c["target"].as_str().unwrap().contains("+i")).unwrap();
    assert_eq!(complex["status"], "PASS");
    assert!(complex["detail"].as_str().unwrap().contains("-1i"));
}

#[test]
fn theta_and_spectrum() {
    let (code, v) = run_json(RANK1_NORM4_HALF, &["theta", "--order", "5"]);
    assert_eq!(code, 0);
    let t: QSeries = series_from_json(&v["theta"]).unwrap();
    let terms: Vec<(String, String)> = t.iter().map(|(e, c)| (e.to_string(), c.to_string())).collect();
    assert_eq!(terms, [("1/2".to_string(), "2".to_string()), ("9/2".to_string(), "2".to_string())]);
    let (code, v) = run_json(RANK1_NORM4_HALF, &["spectrum", "--order", "2"]);
    assert_eq!(code, 0);
    let dims: Vec<&str> = v["spectrum"].as_array().unwrap().iter().map(|g| g["dim"].as_str().unwrap()).collect();
    assert_eq!(dims, ["2", "2", "4"]);
    assert_no_floats(&v);
}

#[test]
fn usage_errors_exit_two() {
    let out = run(RANK1_NORM4_HALF, &["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(r#"{"lattice": {"gram": [[1]]}}"#, &["analyze"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(r#"{"lattice": {"named": {"rank1": 2}}, "shift": {"real": [0.5]}}"#, &["analyze"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(RANK1_NORM4_HALF, &["analyze", "--order", "-3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run("{", &["analyze"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = run(RANK1_NORM4_HALF, &["analyze", "--json"]).stdout;
    let b = run(RANK1_NORM4_HALF, &["analyze", "--json"]).stdout;
    assert_eq!(a, b);
    let a = run(RANK1_NORM4_HALF, &["analyze"]).stdout;
    let b = run(RANK1_NORM4_HALF, &["analyze"]).stdout;
    assert_eq!(a, b);
}
