use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use riley_cli::ScanRecord;
use serde_json::Value;

fn riley(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_riley"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn records(path: &Path) -> Vec<ScanRecord> {
    fs::read_to_string(path)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn poly_of_trefoil() {
    let o = riley(&["poly", "3", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1 + x\ncoeffs [1, 1]\n");
    let o = riley(&["poly", "5", "1", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lambda"], serde_json::json!(["1", "3", "1"]));
}

#[test]
fn invariants_of_ten_32() {
    let o = riley(&["invariants", "69", "29", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["sigma"], 0);
    assert_eq!(v["determinant"], 69);
    assert_eq!(v["congruence_ok"], true);
}

#[test]
fn roots_output() {
    let o = riley(&["roots", "5", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "no real roots\n");
    let o = riley(&["roots", "5", "1", "--width", "1e-6", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let roots = v["roots"].as_array().unwrap();
    assert_eq!(roots.len(), 2);
    // roots of x² + 3x + 1 are (-3 ± √5) / 2
    let golden = [(-3.0 - 5f64.sqrt()) / 2.0, (-3.0 + 5f64.sqrt()) / 2.0];
    for (r, g) in roots.iter().zip(golden) {
        let end = |i: usize| -> f64 {
            let s = r[i].as_str().unwrap();
            let (a, b) = s.split_once('/').unwrap_or((s, "1"));
            a.parse::<f64>().unwrap() / b.parse::<f64>().unwrap()
        };
        assert!(end(0) < g && g < end(1));
        assert!(end(1) - end(0) <= 1e-6);
    }
}

#[test]
fn verify_exit_codes() {
    let o = riley(&["verify", "3", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = riley(&["verify", "5", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("real roots 2") && out.contains("bound 2"), "{out}");
    let o = riley(&["verify", "69", "29"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("strict"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(riley(&["verify", "4", "1"]).status.code(), Some(2));
    assert_eq!(riley(&["poly", "9", "3"]).status.code(), Some(2));
    assert_eq!(riley(&["bogus"]).status.code(), Some(2));
    assert_eq!(riley(&["scan", "--pmax", "2", "--out", "x"]).status.code(), Some(2));
    assert_eq!(riley(&["witness", "3", "1", "--n", "2"]).status.code(), Some(2));
    assert_eq!(riley(&["roots", "3", "1", "--width", "0"]).status.code(), Some(2));
}

#[test]
fn witness_outputs() {
    let o = riley(&["witness", "3", "1", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w = &v["roots"][0]["witnesses"][0];
    assert_eq!(w["converged"], true);
    assert!((w["x_n"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    assert!(w["residual"].as_f64().unwrap() < 1e-12);

    let o = riley(&["witness", "5", "3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("no real parabolic roots"));

    let o = riley(&["witness", "5", "1", "--nrange", "3:64"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for root in v["roots"].as_array().unwrap() {
        assert_eq!(root["witnesses"].as_array().unwrap().len(), 62);
        assert!(root["smallest_converged_n"].is_u64());
        assert!(root["monotone_from_n"].as_u64().unwrap() <= 64);
    }
}

#[test]
fn scan_small_family() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    let o = riley(&["scan", "--pmax", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let recs = records(&out);
    let keys: Vec<_> = recs.iter().map(|r| r.key()).collect();
    assert_eq!(keys, [(3, 1), (3, -1), (5, 1), (5, -1), (5, 3), (5, -3)]);
    assert!(recs.iter().all(|r| r.satisfied && r.congruence_ok && r.timing_ms.is_none()));
    assert!(stdout(&o).contains("records 6 (computed 6, reused 0)"));
}

#[test]
fn scan_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    riley(&["scan", "--pmax", "21", "--jobs", "1", "--out", a.to_str().unwrap()]);
    riley(&["scan", "--pmax", "21", "--jobs", "4", "--out", b.to_str().unwrap()]);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn resume_reuses_and_repairs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    let path = out.to_str().unwrap();
    riley(&["scan", "--pmax", "15", "--out", path]);
    let full = fs::read(&out).unwrap();

    let o = riley(&["scan", "--pmax", "15", "--out", path, "--resume"]);
    assert!(stdout(&o).contains("computed 0"));
    assert_eq!(fs::read(&out).unwrap(), full);

    // interrupted mid-line
    let text = String::from_utf8(full.clone()).unwrap();
    let cut = text.match_indices('\n').nth(9).unwrap().0 + 20;
    fs::write(&out, &text[..cut]).unwrap();
    let o = riley(&["scan", "--pmax", "15", "--out", path, "--resume"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("reused 10") && s.contains("corrupt trailing line"), "{s}");
    assert_eq!(fs::read(&out).unwrap(), full);

    // extending the range keeps the old records
    let o = riley(&["scan", "--pmax", "17", "--out", path, "--resume"]);
    assert!(stdout(&o).contains("reused"));
    let recs = records(&out);
    assert_eq!(recs.len(), full.iter().filter(|&&c| c == b'\n').count() + 16);
    assert!(fs::read(&out).unwrap().starts_with(&full));
}

#[test]
fn resume_rejects_inner_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    let path = out.to_str().unwrap();
    riley(&["scan", "--pmax", "7", "--out", path]);
    let text = fs::read_to_string(&out).unwrap();
    fs::write(&out, format!("garbage\n{text}")).unwrap();
    let o = riley(&["scan", "--pmax", "7", "--out", path, "--resume"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn io_failure_exits_four() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("missing").join("scan.jsonl");
    let o = riley(&["scan", "--pmax", "5", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn dedup_keeps_one_per_class() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    riley(&["scan", "--pmax", "9", "--dedup", "--out", out.to_str().unwrap()]);
    let recs = records(&out);
    // 18 fractions; 5/3 ~ 5/-3, 7/3 ~ 7/5, 7/-3 ~ 7/-5, 9/5 ~ 9/-7, 9/7 ~ 9/-5
    assert_eq!(recs.len(), 13);
    assert!(recs.iter().any(|r| r.key() == (9, 1)));
}

#[test]
fn resume_out_of_order_file_is_rewritten() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("scan.jsonl");
    let fresh = dir.path().join("fresh.jsonl");
    let path = out.to_str().unwrap();
    riley(&["scan", "--pmax", "11", "--dedup", "--out", path]);
    let o = riley(&["scan", "--pmax", "11", "--out", path, "--resume"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("computed 9, reused 19"), "{}", stdout(&o));
    riley(&["scan", "--pmax", "11", "--out", fresh.to_str().unwrap()]);
    assert_eq!(fs::read(&out).unwrap(), fs::read(&fresh).unwrap());
    assert!(!dir.path().join("scan.jsonl.partial").exists());
}
