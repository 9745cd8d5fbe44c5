use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn morsekit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_morsekit")).args(args).output().expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = morsekit(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn header(path: &Path) -> String {
    fs::read_to_string(path).unwrap().lines().next().unwrap().to_string()
}

fn build(dir: &TempDir, name: &str, extra: &[&str]) -> String {
    let path = dir.path().join(format!("{name}.fac"));
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["build", name, "-o", &p];
    args.extend_from_slice(extra);
    ok(&args);
    p
}

#[test]
fn build_sigma_3_has_twelve_vertices() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "sigma", &["--dim", "3"]);
    assert_eq!(header(Path::new(&p)), "# f = (12,56,97,52)");
    let v: Value = serde_json::from_str(&ok(&["verify", "--mode", "free-faces", &p])).unwrap();
    assert_eq!(v["count"], 1);
}

#[test]
fn build_named_complexes() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "two_optima", &[]);
    assert_eq!(header(Path::new(&p)), "# f = (106,596,1064,573)");
    let p = build(&dir, "sigma2_sigma3prime", &[]);
    assert_eq!(header(Path::new(&p)), "# f = (25,128,218,114)");
    let p = build(&dir, "poincare", &[]);
    assert_eq!(header(Path::new(&p)), "# f = (16,106,180,90)");
    let p = build(&dir, "dunce_hat", &[]);
    assert_eq!(header(Path::new(&p)), "# f = (8,24,17)");
}

#[test]
fn round_trip_is_identical() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "two_optima", &[]);
    let again = dir.path().join("again.fac");
    ok(&["transform", &p, "--op", "quotient", "--map", "", "-o", again.to_str().unwrap()]);
    assert_eq!(fs::read_to_string(&p).unwrap(), fs::read_to_string(&again).unwrap());
}

#[test]
fn e2_has_two_free_faces() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "E", &["--dim", "2"]);
    let v: Value = serde_json::from_str(&ok(&["verify", "--mode", "free-faces", &p])).unwrap();
    assert_eq!(v["count"], 2);
}

#[test]
fn spectrum_of_simplex_is_trivial() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "simplex", &["--dim", "3"]);
    let v: Value = serde_json::from_str(&ok(&["spectrum", &p, "--runs", "5"])).unwrap();
    assert_eq!(v["histogram"].as_array().unwrap().len(), 1);
    assert_eq!(v["histogram"][0]["vector"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(v["histogram"][0]["count"], 5);
    assert_eq!(v["master_seed"], 0);
    assert_eq!(v["strategy"], "random");
}

#[test]
fn spectrum_two_optima_lex_last() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "two_optima", &[]);
    let v: Value =
        serde_json::from_str(&ok(&["spectrum", &p, "--strategy", "random-lex-last", "--runs", "100"])).unwrap();
    assert_eq!(v["histogram"][0]["vector"], serde_json::json!([1, 1, 1, 0]));
    assert_eq!(v["histogram"][0]["count"], 100);
}

#[test]
fn spectrum_does_not_depend_on_workers() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "poincare", &[]);
    let one = ok(&["spectrum", &p, "--runs", "200", "--seed", "7", "--workers", "1"]);
    let four = ok(&["spectrum", &p, "--runs", "200", "--seed", "7", "--workers", "4"]);
    assert_eq!(one, four);
}

#[test]
fn spectrum_csv_records_seed() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "simplex", &["--dim", "2"]);
    let csv = ok(&["spectrum", &p, "--runs", "3", "--seed", "42", "--format", "csv"]);
    let mut lines = csv.lines();
    assert!(lines.next().unwrap().contains("master_seed=42"));
    assert_eq!(lines.next().unwrap(), "vector,total,count,share");
    assert_eq!(lines.next().unwrap(), "\"(1,0,0)\",1,3,1.000000");
}

#[test]
fn transform_sd_multiplies_top_faces() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "two_optima", &[]);
    let out = ok(&["transform", "--op", "sd", &p]);
    let f3: u64 = out.lines().next().unwrap().trim_end_matches(')').rsplit(',').next().unwrap().parse().unwrap();
    assert_eq!(f3, 24 * 573);
}

#[test]
fn transform_link_of_vertex_is_cycle() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "simplex_boundary", &["--dim", "3"]);
    let out = ok(&["transform", "--op", "link", "--face", "1", &p]);
    assert_eq!(out, "# f = (3,3)\n2 3\n2 4\n3 4\n");
}

#[test]
fn transform_ops_run() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "simplex", &["--dim", "2"]);
    assert!(ok(&["transform", &p, "--op", "cone"]).starts_with("# f = (4,6,4,1)"));
    assert!(ok(&["transform", &p, "--op", "suspension"]).starts_with("# f = (5,9,7,2)"));
    assert!(ok(&["transform", &p, "--op", "boundary"]).starts_with("# f = (3,3)"));
    assert!(ok(&["transform", &p, "--op", "stellar", "--face", "1,2,3"]).starts_with("# f = (4,6,3)"));
    assert!(ok(&["transform", &p, "--op", "product_I"]).starts_with("# f = (6,"));
    assert!(ok(&["transform", &p, "--op", "delete", "--vertex", "1"]).starts_with("# f = (2,1)"));
    assert!(ok(&["transform", &p, "--op", "contract", "--face", "1,2"]).starts_with("# f = (2,1)"));
    assert_eq!(morsekit(&["transform", &p, "--op", "quotient", "--map", "3=2"]).status.code(), Some(1));

    let two = dir.path().join("two.fac");
    fs::write(&two, "1 2\n3 4\n").unwrap();
    let out = ok(&["transform", two.to_str().unwrap(), "--op", "quotient", "--map", "3=1,4=2"]);
    assert_eq!(out, "# f = (2,1)\n1 2\n");
}

#[test]
fn homology_of_poincare_sphere() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "poincare", &[]);
    let v: Value = serde_json::from_str(&ok(&["verify", "--mode", "homology", &p])).unwrap();
    assert_eq!(v["ranks"], serde_json::json!([1, 0, 0, 1]));
    let v: Value = serde_json::from_str(&ok(&["verify", "--mode", "homology", "--prime", "2", &p])).unwrap();
    assert_eq!(v["ranks"], serde_json::json!([1, 0, 0, 1]));
}

#[test]
fn size_limit_comes_from_environment() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "poincare", &[]);
    let out = Command::new(env!("CARGO_BIN_EXE_morsekit"))
        .args(["verify", "--mode", "homology", &p])
        .env("MORSEKIT_SIZE_LIMIT", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("limit 10"));
}

#[test]
fn oracle_and_morse_check() {
    let dir = TempDir::new().unwrap();
    let p = build(&dir, "dunce_hat", &[]);
    let v: Value = serde_json::from_str(&ok(&["verify", "--mode", "oracle", &p])).unwrap();
    assert_eq!(v["collapsible"], "no");
    assert_eq!(v["nonevasive"], "no");
    let v: Value = serde_json::from_str(&ok(&["verify", "--mode", "morse-check", "--vector", "1,1,1", &p])).unwrap();
    assert_eq!(v["violations"], serde_json::json!([]));
    let bad = morsekit(&["verify", "--mode", "morse-check", "--vector", "1,1,0", &p]);
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    assert_eq!(morsekit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(morsekit(&["build", "sigma"]).status.code(), Some(1));
    assert_eq!(morsekit(&["spectrum", "/nonexistent/file.fac"]).status.code(), Some(1));
    assert_eq!(morsekit(&["--help"]).status.code(), Some(0));

    let bad = dir.path().join("bad.fac");
    fs::write(&bad, "1 2 3\n# fine\n4 0\n").unwrap();
    let out = morsekit(&["spectrum", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let p = build(&dir, "simplex", &["--dim", "2"]);
    assert_eq!(morsekit(&["transform", &p, "--op", "link"]).status.code(), Some(1));
    assert_eq!(morsekit(&["spectrum", &p, "--strategy", "greedy"]).status.code(), Some(1));
}

#[test]
fn pipeline_writes_manifold_boundary_and_report() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("ball5.fac");
    let report = dir.path().join("stages.json");
    ok(&["build", "pipeline_5manifold", "-o", out.to_str().unwrap(), "--report", report.to_str().unwrap()]);
    assert_eq!(header(&out), "# f = (5013,72300,290944,495912,383136,110880)");
    let bd = dir.path().join("ball5.fac.boundary");
    assert_eq!(header(&bd), "# f = (5010,65520,212000,252480,100992)");
    let r: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let stages = r["stages"].as_array().unwrap();
    for s in stages {
        if !s["expected"].is_null() {
            assert_eq!(s["expected"], s["f_vector"], "{}", s["name"]);
        }
    }
    assert_eq!(stages.last().unwrap()["name"], "boundary");

    let again = ok(&["transform", "--op", "boundary", out.to_str().unwrap()]);
    assert_eq!(again, fs::read_to_string(&bd).unwrap());
}
