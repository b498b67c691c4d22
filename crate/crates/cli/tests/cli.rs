use std::process::{Command, Output};

use serde_json::Value;

fn ufo7(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ufo7")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = ufo7(&a);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn classify_examples() {
    assert_eq!(json(&["classify", "--l1", "1", "--l2", "z"])["family"], 11);
    let v = json(&["classify", "--l1", "2", "--l2", "3"]);
    assert_eq!(v["family"], 1);
    assert_ne!(v["shapovalov"], "0");
    assert_eq!(ufo7(&["classify", "--l1", "0", "--l2", "1"]).status.code(), Some(2));
    assert_eq!(ufo7(&["classify", "--l1", "z^", "--l2", "1"]).status.code(), Some(2));
}

#[test]
fn simple_examples() {
    let v = json(&["simple", "--family", "18"]);
    assert_eq!((v["dim"].as_u64(), v["max_degree"].to_string()), (Some(11), "[5,3]".to_string()));
    assert_eq!(json(&["simple", "--family", "1"])["max_degree"].to_string(), "[12,8]");
    assert_eq!(json(&["simple", "--l1", "1", "--l2", "1"])["dim"], 1);
    let split = json(&["simple", "--l1", "1", "--l2", "z^7", "--q12", "z", "--ls1", "3", "--ls2", "-1/2"]);
    assert_eq!((split["family"].as_u64(), split["dim"].as_u64()), (Some(13), Some(23)));
    assert_eq!(split["phi_family"], 44);
    assert_eq!(ufo7(&["simple", "--family", "48"]).status.code(), Some(2));
    assert_eq!(ufo7(&["simple"]).status.code(), Some(2));
}

#[test]
fn json_output_roundtrips() {
    let o = ufo7(&["simple", "--family", "13", "--format", "json"]);
    let text = stdout(&o);
    let v: Value = serde_json::from_str(&text).unwrap();
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(
        keys,
        ["family", "lambda1", "lambda2", "dim", "max_degree", "graded_dims", "hw_weight", "phi_family"]
    );
    let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
    assert_eq!(again, text);
}

#[test]
fn hilbert_csv() {
    let o = ufo7(&["hilbert", "--family", "11", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "b1,b2,dim");
    assert_eq!(lines.len(), 12);
    assert!(lines.contains(&"5,4,1"));
}

#[test]
fn table1_cache_reuse() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let first = ufo7(&["table1", "--check", "--cache", d]);
    assert_eq!(first.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&first.stderr).contains("0 hit(s), 47 computed"));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 47);
    let second = ufo7(&["table1", "--check", "--cache", d, "--jobs", "2"]);
    assert!(String::from_utf8_lossy(&second.stderr).contains("47 hit(s), 0 computed"));
    assert_eq!(first.stdout, second.stdout);
    let md = stdout(&second);
    assert!(md.starts_with("| Family | dim L(λ) | max degree | L(λ)^φ | status |"));
    assert!(md.contains("| I24 | 85 | (10,7) | I35 | match |"));
    assert!(md.contains("| I42 | 71 | (11,7) | I20 | match |"));
}

#[test]
fn rank1_examples() {
    let dim = |args: &[&str]| json(args)["dim"].as_u64().unwrap();
    assert_eq!(dim(&["rank1", "--N", "2", "--q", "-1", "--lam", "1"]), 1);
    assert_eq!(dim(&["rank1", "--N", "3", "--q", "z^4", "--lam", "2"]), 3);
    let v = json(&["rank1", "--N", "12", "--q", "z", "--lam", "z^11", "--oracle"]);
    assert_eq!(v["dim"], v["oracle"]);
    assert_eq!(ufo7(&["rank1", "--N", "4", "--q", "z", "--lam", "1"]).status.code(), Some(2));
}

#[test]
fn example_z12_reports_the_difference() {
    let o = ufo7(&["example-z12", "--check", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 144);
    assert_eq!(v["empty_families"].to_string(), "[6,10]");
    assert_eq!(v["matches_printed"], false);
    let sum: u64 = v["counts"].as_array().unwrap().iter().map(|c| c[1].as_u64().unwrap()).sum();
    assert_eq!(sum, 144);
}

#[test]
fn verify_flags_the_height() {
    let o = ufo7(&["verify", "--weights", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let md = stdout(&o);
    assert!(md.contains("| Defining | E1^2 = 0 | quarantined | holds as `E1^3 = 0` |"));
    assert!(md.contains("| Singular | W1 | pass |"));
    assert!(!md.contains("FAIL"));
}
