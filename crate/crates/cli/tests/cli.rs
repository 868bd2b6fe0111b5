use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxhecke")).args(args).env_remove("COXHECKE_CACHE").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn klpoly_on_split_b2() {
    // p_{y,w} = v^{-L(w)+L(y)} for y ≤ w at equal parameters
    let o = run(&["--system", "i2m:4,1,1", "klpoly", "e", "1.2.1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "v^-3");
    let o = run(&["--system", "i2m:4,1,1", "klpoly", "2", "1.2.1", "--oracle"]);
    let s = stdout(&o);
    assert!(s.starts_with("v^-2\n"), "{s}");
    assert!(s.contains("(agree)"));
}

#[test]
fn cbasis_formats() {
    let o = run(&["--system", "b2:1,2", "--format", "json", "cbasis", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["w"], "2");
    assert_eq!(v["c"]["terms"].as_array().unwrap().len(), 2);
    let o = run(&["--system", "b2:1,2", "--format", "tex", "cbasis", "2"]);
    assert!(stdout(&o).contains("T_{e}"));
    let o = run(&["--system", "b2:1,2", "--format", "csv", "cbasis", "1.2.1", "--oracle"]);
    assert!(stdout(&o).starts_with("y,coefficient\n"));
    assert!(stdout(&o).contains("(agree)"));
}

#[test]
fn left_cells_of_infinite_dihedral() {
    let o = run(&["--system", "i2inf:1,2", "--radius", "10", "--margin", "3", "cells", "--kind", "left"]);
    assert!(o.status.success());
    let s = stdout(&o);
    let blocks: Vec<&str> = s.lines().filter(|l| l.starts_with('{')).collect();
    assert_eq!(blocks.len(), 4);
    assert!(blocks.contains(&"{e}"));
    assert!(blocks.contains(&"{1}"));
    assert!(blocks.iter().any(|b| b.starts_with("{2, 1.2, 2.1.2, 1.2.1.2")));
    assert!(blocks.iter().any(|b| b.starts_with("{2.1, 1.2.1, 2.1.2.1")));
}

#[test]
fn conjecture_report_and_exit_code() {
    let o = run(&["--system", "b2:1,2", "check-conjectures"]);
    let s = stdout(&o);
    let status: Vec<&str> = s.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(status.len(), 16);
    for id in 1..=15 {
        assert!(status.contains(&format!("P{id} holds").as_str()), "P{id}: {s}");
    }
    let all_hold = status.iter().all(|l| l.ends_with("holds"));
    assert_eq!(o.status.code(), Some(if all_hold { 0 } else { 1 }));
    if !all_hold {
        assert!(s.contains("witness:"));
    }
    let o = run(&["--system", "a3", "--format", "json", "check-conjectures", "--only", "P7,P15"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["id"], "P15");
    assert_eq!(lines[1]["status"], "holds");
}

#[test]
fn fold_a3_to_b2() {
    let o = run(&["--system", "a3", "fold", "--perm", "3,2,1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with("holds")).count(), 6);
}

#[test]
fn afun_with_oracle_column() {
    let o = run(&["--system", "i2m:6,1,2", "--oracle", "afun"]);
    let s = stdout(&o);
    let mut rows = s.lines();
    assert_eq!(rows.next(), Some("z,a,certified,delta,n,oracle_a"));
    for r in rows {
        let f: Vec<&str> = r.split(',').collect();
        assert_eq!(f[1], f[5], "{r}");
    }
}

#[test]
fn dset_and_gamma() {
    let o = run(&["--system", "b2:1,2", "dset"]);
    let s = stdout(&o);
    assert!(s.starts_with("d,n_d\n"));
    assert!(s.contains("\ne,1\n"));
    let o = run(&["--system", "b2:1,2", "--format", "json", "gamma"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["gamma"].as_array().unwrap().contains(&serde_json::json!(["", "", "", 1])));
}

#[test]
fn jring_and_phi() {
    let o = run(&["--system", "b2:1,2", "--format", "json", "jring"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["unit"].as_array().unwrap().len() >= 4);
    let o = run(&["--system", "b2:1,2", "phi", "e"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("t_e"));
}

#[test]
fn symbols_subcommands() {
    let o = run(&["symbols", "rank", "--a", "1", "--b", "2", "0,1,2,4/0,2"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = run(&["--format", "json", "symbols", "a", "--a", "1", "--b", "2", "--beta", "1,1"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["a"], 6);
    let o = run(&["symbols", "hoefsmit", "--a", "1", "--b", "1", "--alpha", "1"]);
    assert_eq!(stdout(&o).trim(), "1 + v^2");
    let o = run(&["symbols", "families", "--a", "1", "--b", "1", "2"]);
    let s = stdout(&o);
    assert!(s.contains("a=1 (-;2) (1;1) (1,1;-)"), "{s}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["klpoly", "1", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["--system", "b2:1,2", "klpoly", "7", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--system", "nosuch", "afun"]).status.code(), Some(2));
    assert_eq!(run(&["--system", "b2:1,2", "mu", "3", "e", "1"]).status.code(), Some(2));
}

#[test]
fn module_errors_are_named() {
    let o = run(&["symbols", "a", "--a", "1", "--b", "2", "0,1/0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("PreconditionViolated"));
    let o = run(&["--system", "i2m:3,1,2", "afun"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("OddBondWeightMismatch"));
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("coxhecke-cache-{}", std::process::id()));
    let args = ["--system", "a3", "--cache", dir.to_str().unwrap(), "klpoly", "e", "1.2.3.2.1"];
    let first = stdout(&run(&args));
    assert!(std::fs::read_dir(&dir).unwrap().next().is_some());
    assert_eq!(stdout(&run(&args)), first);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn oracle_diff_is_clean() {
    let o = run(&["oracle-diff"]);
    let s = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{s}");
    assert!(s.trim_end().ends_with("0 discrepancies"));
}
