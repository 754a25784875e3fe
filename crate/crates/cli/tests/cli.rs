use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn surfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_surfkit")).args(args).output().expect("run surfkit")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn construct(dir: &Path, family: &str, extra: &[&str]) -> Output {
    let mut args = vec!["construct", family, "--out", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    surfkit(&args)
}

#[test]
fn construct_writes_ideal_and_meta() {
    let tmp = tempfile::tempdir().unwrap();
    let o = construct(tmp.path(), "k2=-6", &["--seed", "5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let ideal = std::fs::read_to_string(tmp.path().join("ideal.txt")).unwrap();
    assert!(ideal.starts_with("ring p=31991 vars=6\n"));
    assert_eq!(ideal.lines().count(), 11);
    let meta: Value = serde_json::from_str(&std::fs::read_to_string(tmp.path().join("meta.json")).unwrap()).unwrap();
    assert_eq!(meta["seed"], 5);
    assert_eq!(meta["generator_degrees"], serde_json::json!([0, 0, 0, 10]));
    assert_eq!(meta["numbers"]["degree"], 10);
    assert!(!meta["seeds"].as_array().unwrap().is_empty());
}

#[test]
fn unknown_family_exits_with_one() {
    let tmp = tempfile::tempdir().unwrap();
    let o = construct(tmp.path(), "bogus", &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown family"));
}

#[test]
fn bad_primes_are_refused() {
    for p in ["2", "1009000", "32001"] {
        let o = surfkit(&["classify", "--prime", p]);
        assert_eq!(o.status.code(), Some(1), "{p}");
    }
    let o = surfkit(&["verify-table1", "--prime", "2", "--rows", "k2=-6"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("too small"));
}

#[test]
fn betti_reports_agreeing_tables() {
    let tmp = tempfile::tempdir().unwrap();
    construct(tmp.path(), "k2=-4", &[]);
    let o = surfkit(&["betti", tmp.path().join("ideal.txt").to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["agree"], true);
    assert_eq!(v["resolution"]["entries"], serde_json::json!([[0, 0, 1], [1, 3, 10], [2, 4, 15], [3, 5, 6]]));
}

#[test]
fn zero_ideal_and_parse_errors() {
    let tmp = tempfile::tempdir().unwrap();
    let zero = tmp.path().join("zero.txt");
    std::fs::write(&zero, "ring p=31991 vars=4\n").unwrap();
    let o = surfkit(&["betti", zero.to_str().unwrap(), "--json"]);
    assert_eq!(json(&o)["koszul"]["entries"], serde_json::json!([[0, 0, 1]]));

    let bad = tmp.path().join("bad.txt");
    std::fs::write(&bad, "ring p=31991 vars=2\nx0 + x1^2\n").unwrap();
    assert_eq!(surfkit(&["betti", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(surfkit(&["hilbert", "/nonexistent/ideal.txt"]).status.code(), Some(1));
}

#[test]
fn hilbert_of_a_family() {
    let tmp = tempfile::tempdir().unwrap();
    construct(tmp.path(), "k2=-6", &[]);
    let o = surfkit(&["hilbert", tmp.path().join("ideal.txt").to_str().unwrap()]);
    assert_eq!(stdout(&o), "values: [1, 6, 21, 46, 81, 126]\nnumerator: 1 - 10t^3 + 15t^4 - 6t^5\n");
}

#[test]
fn mf_and_normal_bundle() {
    let tmp = tempfile::tempdir().unwrap();
    construct(tmp.path(), "k2=-6", &[]);
    let ideal = tmp.path().join("ideal.txt");
    let o = surfkit(&["mf", ideal.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["verified"], true);
    assert_eq!(v["shape"]["text"], "      0  1\ntot: 15 15\n  0: 15  6\n  1:  .  9\n");
    let o = surfkit(&["normal-bundle", ideal.to_str().unwrap()]);
    assert_eq!(stdout(&o), "12\n");

    assert_eq!(surfkit(&["mf", tmp.path().join("none.txt").to_str().unwrap()]).status.code(), Some(1));
    let empty = tmp.path().join("e.txt");
    std::fs::write(&empty, "ring p=31991 vars=3\n").unwrap();
    assert_eq!(surfkit(&["mf", empty.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(surfkit(&["normal-bundle", empty.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn classify_lists_seven_families() {
    let o = surfkit(&["classify", "--json"]);
    let v = json(&o);
    let accepted: Vec<&str> = v["accepted"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(accepted, ["k2=-6", "k2=-5", "k2=-4", "k2=-3", "k2=-2", "k2=-1", "k2=0"]);
    assert!(v["verification"].is_null());
    assert_eq!(v["tree"]["children"].as_array().unwrap().len(), 7);
}

#[test]
fn classify_verify_counts_quadrics() {
    let o = surfkit(&["classify", "--verify", "--json"]);
    assert!(o.status.success());
    let checks = json(&o)["verification"].as_array().unwrap().clone();
    assert_eq!(checks.len(), 6);
    assert!(checks.iter().all(|c| c["quadrics"] == 1));
}

#[test]
fn json_output_is_deterministic() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let x = construct(a.path(), "k2=-2", &["--json", "--seed", "77"]);
    let y = construct(b.path(), "k2=-2", &["--json", "--seed", "77"]);
    assert_eq!(x.stdout, y.stdout);
    assert_eq!(std::fs::read(a.path().join("ideal.txt")).unwrap(), std::fs::read(b.path().join("ideal.txt")).unwrap());
}

#[test]
fn config_file_is_overridden_by_flags() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = tmp.path().join("run.toml");
    std::fs::write(&cfg, format!("seed = 9\njson = true\nout = \"{}\"\n", tmp.path().join("o").display())).unwrap();
    let o = surfkit(&["construct", "k2=-5", "--config", cfg.to_str().unwrap(), "--seed", "3"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["seed"], 3);
    assert!(tmp.path().join("o/meta.json").exists());

    std::fs::write(&cfg, "prime = 2\n").unwrap();
    assert_eq!(surfkit(&["classify", "--config", cfg.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn table_subset_has_two_rows() {
    let tmp = tempfile::tempdir().unwrap();
    let o = surfkit(&["verify-table1", "--rows", "k2=-6,k2=-1", "--json", "--out", tmp.path().to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
    assert!(tmp.path().join("k2=-1/ideal.txt").exists());
    let o = surfkit(&["verify-table1", "--rows", "p2(8;3^2,2^9)"]);
    assert_eq!(o.status.code(), Some(1));
}
