use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pctree(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pctree"))
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_prints_tree_and_report() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("g.txt"), "p ecg 3 2\ne 1 2 1\ne 2 3 2\n").unwrap();
    let out = pctree(&["solve", "g.txt", "--report", "r.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "t 3\ne 1 2 1\ne 2 3 2\n");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["branch"], "exhaustive");
    assert_eq!(report["order"], 3);
}

#[test]
fn extremal_input_exits_one_with_family_in_report() {
    let dir = tempfile::tempdir().unwrap();
    let gen = pctree(
        &["gen", "G3", "--m", "3", "--k", "1", "--seed", "5", "--out", "g.txt"],
        dir.path(),
    );
    assert_eq!(gen.status.code(), Some(0));
    assert!(dir.path().join("g.txt.json").exists());
    let out = pctree(&["solve", "g.txt", "--report", "r.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "NO extremal-family\n");
    let report: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(report["family"]["tag"], "G3");
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "p ecg 3 1\ne 1 1 1\n").unwrap();
    fs::write(dir.path().join("split.txt"), "p ecg 3 1\ne 1 2 1\n").unwrap();
    fs::write(dir.path().join("path.txt"), "p ecg 4 3\ne 1 2 1\ne 2 3 1\ne 3 4 1\n").unwrap();
    assert_eq!(pctree(&["solve", "bad.txt"], dir.path()).status.code(), Some(2));
    assert_eq!(pctree(&["solve", "split.txt"], dir.path()).status.code(), Some(2));
    assert_eq!(pctree(&["solve", "missing.txt"], dir.path()).status.code(), Some(2));
    assert_eq!(pctree(&["rainbow", "path.txt"], dir.path()).status.code(), Some(2));
    assert_eq!(
        pctree(&["solve", "path.txt", "--delta0", "1"], dir.path())
            .status
            .code(),
        Some(2)
    );
    assert_eq!(pctree(&["frobnicate"], dir.path()).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = pctree(
        &[
            "gen", "random", "--n", "9", "--p", "0.6", "--colors", "4", "--seed", "11",
        ],
        dir.path(),
    );
    let b = pctree(
        &[
            "gen", "random", "--n", "9", "--p", "0.6", "--colors", "4", "--seed", "11",
        ],
        dir.path(),
    );
    assert_eq!(a.stdout, b.stdout);
    fs::write(dir.path().join("g.txt"), &a.stdout).unwrap();
    let s1 = pctree(&["solve", "g.txt", "--delta0", "2"], dir.path());
    let s2 = pctree(&["solve", "g.txt", "--delta0", "2"], dir.path());
    assert_eq!(s1.stdout, s2.stdout);
    assert_eq!(s1.status.code(), s2.status.code());
}

#[test]
fn reduce_then_oracle_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("f.cnf"), "p cnf 2 2\n1 -2 0\n2 0\n").unwrap();
    let red = pctree(&["reduce", "f.cnf", "--out", "g.txt"], dir.path());
    assert_eq!(red.status.code(), Some(0));
    let map: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("g.txt.json")).unwrap()).unwrap();
    assert_eq!(map["spine"].as_array().unwrap().len(), 2);
    let oracle = pctree(&["oracle", "g.txt", "--mode", "rainbow"], dir.path());
    assert_eq!(oracle.status.code(), Some(0));
    assert!(stdout(&oracle).starts_with("t 6\n"));
    fs::write(dir.path().join("t.txt"), &oracle.stdout).unwrap();
    let ok = pctree(&["verify", "g.txt", "t.txt", "--mode", "rainbow"], dir.path());
    assert_eq!(stdout(&ok), "ok 6\n");
}

#[test]
fn recognize_respects_tag_order() {
    let dir = tempfile::tempdir().unwrap();
    pctree(&["gen", "G6", "--m", "2", "--k", "1", "--out", "g.txt"], dir.path());
    let first = pctree(&["recognize", "g.txt", "--tags", "G6,G5"], dir.path());
    assert!(stdout(&first).contains("\"tag\":\"G6\""));
    let none = pctree(&["recognize", "g.txt", "--tags", "G1"], dir.path());
    assert_eq!(none.status.code(), Some(1));
}
