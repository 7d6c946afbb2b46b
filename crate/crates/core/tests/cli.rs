use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_extquot"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn eq_json_is_byte_stable() {
    let a = run(&["eq", "--n", "6", "--json"]);
    let b = run(&["eq", "--n", "6", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["n"], 6);
    assert_eq!(doc["group"], serde_json::json!([6]));
    assert_eq!(doc["components"].as_array().unwrap().len(), 11);
}

#[test]
fn eq_text_uses_sym_power_names() {
    let out = run(&["eq", "--n", "5"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("7 components"));
    assert!(text.contains("T x Sym^2(T)"));
    assert!(text.contains("Sym^2(T) x T"));
    assert!(text.contains("Sym^5(T)"));
    assert!(!text.contains("Sym^1"));
}

#[test]
fn verify_reports_total_and_exit_zero() {
    let doc = json(&["verify", "--n", "3", "--grid", "2", "--json"]);
    assert_eq!(doc["total"], 10);
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["classes"][0]["partition"], serde_json::json!([3]));

    let out = run(&["verify", "--n", "3", "--grid", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("total 10"));
}

#[test]
fn verify_over_budget_is_resource_error() {
    let out = run(&["verify", "--n", "4", "--grid", "4", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn domain_errors_exit_2() {
    assert_eq!(run(&["eq", "--n", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["bernstein-classify", "--shape", "1:x"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["spherical-eval", "--weight", "1,0", "--point", "0.5,1.5"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["eq"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--grid", "2"]).status.code(), Some(1));
    assert_eq!(run(&["bernstein-classify"]).status.code(), Some(1));
    assert_eq!(run(&["eq", "--n", "-3"]).status.code(), Some(1));
}

#[test]
fn classify_equivalent_pair() {
    let out = run(&[
        "bernstein-classify",
        "--shape",
        "2:2;1:1",
        "--shape",
        "1:2;3:1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("equivalent: true"));

    let out = run(&["bernstein-classify", "--shape", "1:2", "--shape", "1:1;1:1"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("equivalent: false"));

    let doc = json(&[
        "bernstein-classify",
        "--shape",
        "2:2;1:1",
        "--shape",
        "1:2;3:1",
        "--json",
    ]);
    assert_eq!(doc["equivalent"], true);
    assert_eq!(
        doc["shapes"][0],
        serde_json::json!({"n":5,"entries":[{"m":2,"e":2},{"m":1,"e":1}],"exponents":[2,1],"d":3,"weyl":[2,1]})
    );
}

#[test]
fn enumerate_lists_shapes_with_decompositions() {
    let doc = json(&["bernstein-enumerate", "--n", "3", "--json"]);
    let shapes = doc["shapes"].as_array().unwrap();
    assert_eq!(shapes.len(), 5);
    assert_eq!(
        shapes[1]["shape"]["entries"],
        serde_json::json!([{"m":1,"e":3}])
    );
    assert_eq!(
        shapes[1]["decomposition"]["components"]
            .as_array()
            .unwrap()
            .len(),
        3
    );
}

#[test]
fn iwahori_matches_seven_components() {
    let doc = json(&["iwahori", "--n", "5", "--json"]);
    assert_eq!(doc["ok"], true);
    assert_eq!(doc["matched"].as_array().unwrap().len(), 7);
}

#[test]
fn spherical_eval_worked_value() {
    let doc = json(&[
        "spherical-eval",
        "--weight",
        "2,0",
        "--point",
        "0.25,0.25",
        "--json",
    ]);
    assert_eq!(doc["component"], "Sym^2(T)");
    assert!((doc["value"]["re"].as_f64().unwrap() + 2.0).abs() < 1e-12);
    assert!(doc["value"]["im"].as_f64().unwrap().abs() < 1e-12);

    // negative weights and an explicit n
    let out = run(&[
        "spherical-eval",
        "--n",
        "2",
        "--weight",
        "-1,1",
        "--point",
        "0.1,0.2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&[
        "spherical-eval",
        "--n",
        "3",
        "--weight",
        "1,0",
        "--point",
        "0.1,0.2",
    ]);
    assert_eq!(out.status.code(), Some(2));
}
