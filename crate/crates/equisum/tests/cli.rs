//! End-to-end tests of the `equisum` binary and its exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

use equisum_core::{enumerate_feasible, verify};

fn equisum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equisum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn solve_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for n in [1u64, 2, 9, 16, 45, 56, 101, 210] {
        for (k, _) in enumerate_feasible(n).unwrap() {
            for extra in [&[][..], &["--no-meander"][..]] {
                let (n_s, k_s) = (n.to_string(), k.to_string());
                let mut args = vec!["solve", "--n", &n_s, "--k", &k_s, "--format", "json"];
                args.extend_from_slice(extra);
                let o = equisum(&args);
                assert_eq!(code(&o), 0);
                let json = stdout(&o);
                let p = equisum::format::from_json(&json).unwrap();
                assert!(verify(&p).valid());
                let file = write(dir.path(), "p.json", &json);
                assert_eq!(code(&equisum(&["verify", "--input", &file])), 0, "n={n} k={k}");
            }
        }
    }
}

#[test]
fn verify_reports_defects() {
    let dir = tempfile::tempdir().unwrap();
    let o = equisum(&["solve", "--n", "45", "--k", "9", "--no-meander", "--format", "json"]);
    let json = stdout(&o);
    assert!(json.contains("[7,14,21,34,39]"));
    let broken = json.replace("[7,14,21,34,39]", "[7,14,34,39]");
    let file = write(dir.path(), "broken.json", &broken);
    let o = equisum(&["verify", "--input", &file]);
    assert_eq!(code(&o), 1);
    let text = stdout(&o);
    assert!(text.contains("missing elements: 21"), "{text}");
    assert!(text.contains("T_7 sums to 94"), "{text}");

    let o = equisum(&["verify", "--input", &file, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["missing_ranges"], serde_json::json!([[21, 21]]));
    assert_eq!(v["sum_failures"], serde_json::json!([[7, 94]]));
}

#[test]
fn verify_malformed_input() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "junk.json", "this is not json");
    assert_eq!(code(&equisum(&["verify", "--input", &file])), 4);
    let file = write(dir.path(), "count.json", r#"{"n":3,"k":1,"t":3,"containers":[[3],[1,2]]}"#);
    assert_eq!(code(&equisum(&["verify", "--input", &file])), 4);
    let missing = dir.path().join("nope.json");
    assert_eq!(code(&equisum(&["verify", "--input", missing.to_str().unwrap()])), 4);
}

#[test]
fn solve_errors() {
    let o = equisum(&["solve", "--n", "3", "--k", "3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("smaller than n"));
    let o = equisum(&["solve", "--n", "45", "--k", "7"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not equal delta"));
    assert_eq!(code(&equisum(&["solve", "--n", "45", "--k", "9", "--t", "116"])), 2);
    assert_eq!(code(&equisum(&["solve", "--n", "45", "--k", "9", "--t", "115"])), 0);
    assert_eq!(code(&equisum(&["solve", "--n", "18446744073709551615", "--k", "1"])), 3);
}

#[test]
fn solve_shows_meander_grid() {
    let o = equisum(&["solve", "--n", "56", "--k", "21", "--show-matrix"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("T_19 = {9, 10, 19, 38}"));
    assert!(text.contains("T_19 T_20 T_20 T_21 T_21"));
    assert!(text.contains("   0    1    2    3    4"));
    // no grid without a meander stop
    let o = equisum(&["solve", "--n", "56", "--k", "21", "--show-matrix", "--no-meander"]);
    assert!(!stdout(&o).contains("----"));
}

#[test]
fn enumerate_outputs() {
    let o = equisum(&["enumerate", "--n", "16", "--format", "csv"]);
    assert_eq!(stdout(&o), "k,t,meander_applicable,is_gauss\n1,136,true,false\n2,68,true,false\n4,34,true,false\n8,17,true,true\n");
    let o = equisum(&["enumerate", "--n", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!([{"k": 1, "t": 1, "meander_applicable": true, "is_gauss": true}]));
    let o = equisum(&["enumerate", "--n", "9", "--format", "csv"]);
    assert!(stdout(&o).contains("3,15,false,false\n5,9,true,true\n"));
    assert_eq!(code(&equisum(&["enumerate", "--n", "0"])), 2);
    assert_eq!(code(&equisum(&["enumerate", "--n", "18446744073709551615"])), 3);
}

#[test]
fn oracle_exit_codes() {
    let o = equisum(&["oracle", "--n", "3", "--k", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("T_1 = {3}\nT_2 = {1, 2}"));
    assert_eq!(code(&equisum(&["oracle", "--n", "3", "--k", "3"])), 1);
    assert_eq!(code(&equisum(&["oracle", "--n", "5", "--k", "4"])), 1);
    assert_eq!(code(&equisum(&["oracle", "--n", "31", "--k", "2"])), 2);
    assert_eq!(code(&equisum(&["oracle", "--n", "10", "--k", "5", "--max-n", "41"])), 2);
    assert_eq!(code(&equisum(&["oracle", "--n", "30", "--k", "15", "--max-nodes", "3"])), 5);
}

#[test]
fn bench_csv() {
    let o = equisum(&["bench", "--n", "45,5", "--k", "9", "--reps", "3", "--no-meander"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "n,k,t,meander_stop,rep,wall_ns,steps,error");
    // n = 5 cannot be split into 9 containers: one error row, run continues
    assert!(lines[1].starts_with("5,9,0,false,0,,,"));
    assert_eq!(lines.len(), 5);
    assert!(lines[2..].iter().all(|l| l.starts_with("45,9,115,false,") && l.ends_with(",4,")));

    let o = equisum(&["bench", "--n-max", "30", "--stride", "10", "--reps", "1"]);
    assert_eq!(stdout(&o).lines().count(), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("median n=30 k=15"));
}
