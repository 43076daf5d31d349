use std::process::Command;

use expansive_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["expansive"];
    argv.extend_from_slice(args);
    let out = run(argv);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, v)
}

fn gens(v: &Value) -> Vec<Vec<u32>> {
    serde_json::from_value(v["ideal"]["gens"].clone()).unwrap()
}

#[test]
fn expansive_point_of_three_z_plus_five() {
    let (code, v) = call(&["exp", "--ring", "2,3,inf,inf", "--poly", "3*z+5"]);
    assert_eq!(code, 0);
    assert_eq!(gens(&v), [[1, 2, 0, 0], [1, 1, 2, 0], [1, 0, 3, 0]]);
    assert_eq!(v["ideal"]["text"], "(x1*x2^2, x1*x2*x3^2, x1*x3^3)");
}

#[test]
fn lex_point_of_twisted_cubics() {
    let (code, v) = call(&["lex", "--ring", "inf,inf,inf,inf", "--poly", "3*z+1"]);
    assert_eq!(code, 0);
    assert_eq!(v["ideal"]["text"], "(x1, x2^4, x2^3*x3)");
}

#[test]
fn empty_scheme_is_a_domain_error() {
    let (code, v) = call(&["check", "--ring", "2,3,inf,inf", "--poly", "z"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "empty-hilbert-scheme");
    let (code, v) = call(&["exp", "--ring", "inf,inf", "--poly", "z/2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "inadmissible-polynomial");
    let (code, v) = call(&["check", "--ring", "inf,2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "usage");
    let (code, v) = call(&["hp", "--ring", "inf,2,inf", "--ideal", "x1"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "invalid-ring");
}

#[test]
fn budget_exhaustion_exits_one() {
    let (code, v) = call(&["enumerate", "--ring", "inf,inf,inf,inf", "--poly", "3*z+1", "--max-candidates", "1"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "budget-exceeded");
}

#[test]
fn emitted_ideals_parse_back() {
    let (_, v) = call(&["exp", "--ring", "2,3,inf,inf", "--poly", "3*z+5"]);
    let wire = serde_json::to_string(&v["ideal"]).unwrap();
    let (code, back) = call(&["hp", "--ideal", &wire]);
    assert_eq!(code, 0);
    assert_eq!(back["ideal"], v["ideal"]);
    assert_eq!(back["hp"], "3*z+5");
    let (code, v) = call(&["hp", "--ring", "2,inf", "--ideal", &wire]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "ring-mismatch");
}

#[test]
fn enumeration_and_classification() {
    let (code, v) = call(&["enumerate", "--ring", "inf,inf,inf,inf", "--poly", "3*z+1"]);
    assert_eq!(code, 0);
    assert_eq!(v["count"], 3);
    assert_eq!(v["complete"], true);
    let (_, v) = call(&["classify", "--ring", "2,3,inf,inf", "--poly", "3*z"]);
    assert_eq!(v["lex_eq_exp_case"], "CASE1");
    let (_, v) = call(&["classify", "--ring", "inf,inf,inf,inf", "--ideal", "x1^2, x1*x2, x1*x3, x2^3"]);
    assert_eq!(v["strongly_stable"], true);
    assert_eq!(v["lex"], false);
    assert_eq!(v["expansive"], true);
}

#[test]
fn betti_tables_in_both_formats() {
    let twisted = ["--ring", "inf,inf,inf,inf", "--ideal", "x1^2, x1*x2, x1*x3, x2^3"];
    let (code, v) = call(&[&["betti"][..], &twisted[..]].concat());
    assert_eq!(code, 0);
    assert_eq!(v["table"]["totals"], serde_json::json!([1, 4, 4, 1]));
    let (_, ek) = call(&[&["betti", "--method", "ek"][..], &twisted[..]].concat());
    assert_eq!(ek["table"]["entries"], v["table"]["entries"]);
    let out = run([&["expansive", "betti", "--format", "csv"][..], &twisted[..]].concat());
    assert_eq!(out.stdout, "j-i,0,1,2,3\n0,1,0,0,0\n1,0,3,3,1\n2,0,1,1,0\n");
    let (_, q) = call(&["betti", "--ring", "2,2,inf", "--ideal", "x1, x2", "--over", "quotient", "--imax", "4", "--jmax", "8"]);
    assert_eq!(q["table"]["totals"], serde_json::json!([1, 2, 3, 4, 5]));
    let (_, r) = call(&["betti", "--ring", "2,2,inf", "--ideal", "x1, x2", "--over", "quotient", "--method", "recursion", "--imax", "4"]);
    assert_eq!(r["totals"], q["table"]["totals"]);
    let (code, _) = call(&["betti", "--ring", "2,2,inf", "--ideal", "x1", "--method", "ek"]);
    assert_eq!(code, 2);
}

#[test]
fn bounds_report_carries_provenance() {
    let (code, v) = call(&["bounds", "--ring", "inf,inf,inf,inf,inf", "--poly", "7*z"]);
    assert_eq!(code, 0);
    assert_eq!(v["report"]["table"]["totals"], serde_json::json!([1, 19, 42, 33, 9]));
    assert_eq!(v["report"]["provenance"], "UNCONDITIONAL");
}

#[test]
fn verify_reads_a_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cases.txt");
    std::fs::write(&path, "# twisted cubics\nring=inf,inf,inf,inf poly=3*z+1\nring=2,2,inf,inf poly=2*z+1\n").unwrap();
    let (code, v) = call(&["verify", "--suite", "all", "--matrix", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{v:#}");
    assert_eq!(v["passed"], true);
    let lines: Vec<u64> = v["cases"].as_array().unwrap().iter().map(|c| c["line"].as_u64().unwrap()).collect();
    assert_eq!(lines, [2, 3]);

    std::fs::write(&path, "ring=inf,inf poly=1 colour=red\n").unwrap();
    let (code, v) = call(&["verify", "--matrix", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "parse");
}

#[test]
fn verify_reports_counterexamples() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cases.txt");
    std::fs::write(&path, "ring=2,3,3,inf,inf poly=7*z\n").unwrap();
    let (code, v) = call(&["verify", "--suite", "bounds", "--matrix", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    let case = &v["cases"][0];
    assert_eq!(case["passed"], false);
    assert!(!case["failures"].as_array().unwrap().is_empty());
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_expansive");
    let go = || Command::new(bin).args(["verify", "--suite", "axioms"]).output().unwrap();
    let (a, b) = (go(), go());
    assert_eq!(a.stdout, b.stdout);
    assert!(!a.stdout.is_empty());
    let e = Command::new(bin).args(["check", "--ring", "2,3,inf,inf", "--poly", "z"]).output().unwrap();
    assert_eq!(e.status.code(), Some(2));
}
