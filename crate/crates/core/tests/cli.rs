use std::process::Command;

use serde_json::Value;
use temperley_lieb::cli::run;

fn tl(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("tl").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = tl(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn dims_three() {
    let v = json(&["dims", "3", "--json"]);
    assert_eq!(v.to_string(), r#"{"(1,1)":2,"(0,3)":1}"#);
    let (_, text, _) = tl(&["dims", "3"]);
    assert_eq!(text, "(1,1)\t2\n(0,3)\t1\n");
}

#[test]
fn det_worked_example_closed() {
    let v = json(&["det", "11", "5", "--method", "closed", "--json"]);
    assert_eq!(v["lambda"], serde_json::json!([5, 1]));
    assert_eq!(v["agree"], Value::Bool(true));
    let det = temperley_lieb::exactring::IntPoly::from_strings(
        &v["det"].as_array().unwrap().iter().map(|s| s.as_str().unwrap()).collect::<Vec<_>>(),
    )
    .unwrap();
    assert_eq!(det, temperley_lieb::gramdet::worked_example_polynomial());
    assert!(v["methods"].get("direct").is_none());
}

#[test]
fn det_all_methods_small() {
    let v = json(&["det", "3", "1", "--json"]);
    assert_eq!(v["det"], serde_json::json!(["-1", "0", "1"]));
    for m in ["closed", "branching"] {
        assert_eq!(v["methods"][m]["num"], serde_json::json!(["-1", "0", "1"]));
    }
    assert_eq!(v["methods"]["direct"], serde_json::json!(["-1", "0", "1"]));
    let v = json(&["det", "3", "1", "--method", "direct", "--json"]);
    assert_eq!(v["det"], serde_json::json!(["-1", "0", "1"]));
}

#[test]
fn gram_spectrum_seminormal_shapes() {
    let g = json(&["gram", "3", "1", "--json"]);
    assert_eq!(g["order"], serde_json::json!([[0, 0, 1, 1], [0, 0, 0, 1]]));
    assert_eq!(g["entries"][0][0], serde_json::json!(["0", "1"]));
    let s = json(&["spectrum", "3", "1", "--json"]);
    assert_eq!(s[1]["r"][3], serde_json::json!(["-1", "0", "1"]));
    let f = json(&["seminormal", "3", "1", "--json"]);
    assert_eq!(f[1]["gamma"]["num"], serde_json::json!(["-1", "0", "1"]));
    assert_eq!(f[1]["coords"].as_array().unwrap().len(), 2);
}

#[test]
fn basis_lines_parse() {
    let (code, out, _) = tl(&["basis", "4", "--json"]);
    assert_eq!(code, 0);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 14);
    assert!(lines.iter().all(|l| l["diagram"]["n"] == 4));
}

#[test]
fn usage_errors_exit_one() {
    for args in [&["dims", "0"][..], &["gram", "4", "3"], &["bogus"], &["det", "4", "1", "--method", "nope"]] {
        let (code, _, err) = tl(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, out, _) = tl(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("Usage"));
}

#[test]
fn verify_and_golden_round_trip() {
    let (code, out, _) = tl(&["verify", "4"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| l.starts_with("[PASS]")));
    let dir = std::env::temp_dir().join(format!("tl-golden-{}", std::process::id()));
    let d = dir.to_str().unwrap();
    assert_eq!(tl(&["verify", "3", "--golden", d, "--bless"]).0, 0);
    assert_eq!(tl(&["verify", "3", "--golden", d]).0, 0);
    std::fs::write(dir.join("dims_3_--json.golden"), "{}\n").unwrap();
    let (code, out, _) = tl(&["verify", "3", "--golden", d]);
    assert_eq!(code, 2);
    assert!(out.contains("dims_3_--json.golden: output differs"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let a = tl(&["seminormal", "6", "2", "--json", "--threads", "1"]).1;
    let b = tl(&["seminormal", "6", "2", "--json", "--threads", "3"]).1;
    assert_eq!(a, b);
    assert_eq!(tl(&["dims", "3", "--threads", "0"]).0, 1);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_tl");
    let ok = Command::new(bin).args(["dims", "4"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = Command::new(bin).args(["dims"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let threads = Command::new(bin).env("TL_THREADS", "2").args(["bratteli", "4", "--json"]).output().unwrap();
    assert_eq!(threads.status.code(), Some(0));
    let levels: Value = serde_json::from_slice(&threads.stdout).unwrap();
    assert_eq!(levels.as_array().unwrap().len(), 5);
}
