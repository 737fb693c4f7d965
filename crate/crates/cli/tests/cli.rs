use std::process::{Command, Output};

use heegner_cli::commands::{point_range, unit_range};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heegner")).args(args).env_remove("HEEGNER_PRECISION").output().expect("binary runs")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn unit_identity_n5_passes() {
    let out = run(&["unit-identity", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["result"]["pass"], true);
    assert_eq!(r["result"]["h_K"], 1);
    for key in ["schema_version", "command", "inputs", "precision_used", "wall_time_ms"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn hypothesis_violations_are_rejected_with_reasons() {
    for (args, needle) in [
        (vec!["unit-identity", "--n", "17"], "mod 9"),
        (vec!["unit-identity", "--n", "10"], "coprime to 6"),
        (vec!["construct", "--a", "7", "--b", "1"], "mod 4"),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let r = &records(&out)[0];
        assert_eq!(r["status"], "rejected");
        assert!(r["reason"].as_str().unwrap().contains(needle), "{args:?}: {}", r["reason"]);
    }
}

#[test]
fn bad_usage_exits_two() {
    assert_eq!(run(&["construct", "--a", "5"]).status.code(), Some(2));
    assert_eq!(run(&["--precision", "64", "unit-identity", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["--guard", "4", "unit-identity", "--n", "5"]).status.code(), Some(2));
    assert_eq!(run(&["scan", "--max", "10"]).status.code(), Some(2));
}

#[test]
fn construct_five_one() {
    let out = run(&["construct", "--a", "5", "--b", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &records(&out)[0];
    assert_eq!(r["result"]["x"], "6319/3249");
    assert_eq!(r["result"]["y"], "-650998/185193");
    assert_eq!(r["result"]["multiple_of_generator"], 3);
}

#[test]
fn reproducible_runs_are_byte_identical() {
    let args = ["--reproducible", "scan", "--unit", "--max", "13"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert!(!a.stdout.is_empty());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_filters_are_deterministic() {
    // 49 = 7² is prime to 6, cube-free and ≡ 4 (mod 9)
    assert_eq!(unit_range(1, 50), vec![5, 7, 11, 13, 23, 25, 29, 31, 41, 43, 47, 49]);
    let pts = point_range(1, 100, 1);
    assert!(pts.contains(&5) && pts.contains(&41) && pts.contains(&61) && pts.contains(&77) && pts.contains(&-7));
    assert!(!pts.contains(&7) && !pts.contains(&13));
    for a in &pts {
        assert_eq!((a - 1).rem_euclid(4), 0);
    }
}

#[test]
fn empty_scan_is_empty() {
    let out = run(&["scan", "--unit", "--min", "30", "--max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}

#[test]
fn csv_has_one_header() {
    let out = run(&["--format", "csv", "--reproducible", "scan", "--unit", "--max", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("schema_version,command,inputs"));
    assert!(lines[1].starts_with("1,unit-identity,"));
}

#[test]
fn precision_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_heegner")).args(["unit-identity", "--n", "7"]).env("HEEGNER_PRECISION", "200").output().unwrap();
    assert_eq!(records(&out)[0]["precision_used"], 216);
}

#[test]
fn selftest_quick_and_corrupted_golden() {
    let out = run(&["selftest", "--quick"]);
    assert_eq!(out.status.code(), Some(0));
    let names: Vec<String> = records(&out).iter().map(|r| r["inputs"]["test"].as_str().unwrap().to_string()).collect();
    assert!(!names.contains(&"class-group".to_string()));
    assert!(names.contains(&"golden-X".to_string()));

    let dir = std::env::temp_dir().join(format!("heegner-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "X 41 -2:1 4:1 10:1 16:-1 22:-1 34:1 40:3\nY 34 -3:1 3:2 9:1 21:-2 27:-2 33:2\n").unwrap();
    let out = run(&["selftest", "--quick", "--golden", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let failed: Vec<Value> = records(&out).into_iter().filter(|r| r["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["inputs"]["test"], "golden-X");
    std::fs::remove_dir_all(dir).ok();
}
