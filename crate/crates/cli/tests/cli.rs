//! End-to-end checks of the binary: output shapes, exit codes, worker
//! independence.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_smoothperm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "command {args:?} failed: {out:?}");
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn classify_flags() {
    assert_eq!(stdout(&["classify", "231"]).trim(), "smooth:yes covexillary:yes dbi:yes indecomposable:yes");
    assert_eq!(stdout(&["classify", "3412"]).trim(), "smooth:no covexillary:no dbi:yes indecomposable:yes");
    let json = stdout(&["--format", "json", "classify", "45231"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["smooth"], false);
    assert_eq!(v["covexillary"], false);
}

#[test]
fn tables() {
    let c23 = stdout(&["table", "231", "--which", "c23"]);
    assert_eq!(c23, "n=3\nT(1,2)\nT(2,3)\nR(1,2,3)\n");
    assert_eq!(stdout(&["table", "231", "--which", "essential"]), "n=3\n1,2\n");
    // identity has an empty 2-table and a diagonal essential set
    assert_eq!(stdout(&["table", "1,2,3", "--which", "t"]), "n=3\n");
    assert_eq!(stdout(&["table", "1,2,3", "--which", "essential"]), "n=3\n1,1\n2,2\n");
}

#[test]
fn pi_and_compat() {
    assert_eq!(stdout(&["pi", "--elems", "", "--n", "4"]).trim(), "1,2,3,4");
    assert_eq!(
        stdout(&["pi", "--elems", "T(1,2) T(2,3) R(1,2,3)", "--n", "3"]).trim(),
        "2,3,1"
    );
    let elems = "T(1,2) T(1,3) T(1,4) T(2,3) T(2,4) T(3,4) \
                 R(1,2,3) R(1,2,4) R(1,3,4) R(2,3,4) \
                 L(1,2,3) L(1,2,4) L(1,3,4) L(2,3,4)";
    assert_eq!(stdout(&["pi", "--elems", elems, "--n", "4"]).trim(), "4,3,2,1");
    let enumerated = stdout(&["compat", "--elems", elems, "--n", "4", "--enumerate"]);
    assert!(enumerated.trim().ends_with("count: 16"), "{enumerated}");
    let checked = stdout(&[
        "compat", "--elems", "T(1,2) T(2,3) R(1,2,3)", "--n", "3", "--check",
        "T(1,2) < T(2,3)",
    ]);
    assert_eq!(checked.trim(), "compatible: yes");
}

#[test]
fn dyck_round_trip() {
    assert_eq!(stdout(&["dyck", "encode", "231"]).trim(), "f=2,3,3; g=1,0,0");
    assert_eq!(stdout(&["dyck", "decode", "f=2,3,3; g=1,0,0"]).trim(), "2,3,1");
    assert_eq!(stdout(&["dyck", "decode", "f=1,2,3"]).trim(), "1,2,3");
}

#[test]
fn enumerate_rows() {
    let rows = stdout(&["enumerate", "--n", "4", "--method", "recurrence"]);
    assert!(rows.contains("4,smooth,recurrence,22"), "{rows}");
    let rows = stdout(&["enumerate", "--n", "4", "--class", "avoid321", "--method", "recurrence"]);
    assert!(rows.contains("4,avoid321,formula,13"), "{rows}");
}

#[test]
fn partition_max_output() {
    let out = stdout(&["partition-max", "3412", "1,3,4|2"]);
    assert!(out.starts_with("NO-MAXIMUM"), "{out}");
    assert_eq!(stdout(&["partition-max", "4321", "1,2|3,4"]).trim(), "2,1,4,3");
    assert_eq!(stdout(&["partition-max", "3412", "1|2|3|4"]).trim(), "1,2,3,4");
}

#[test]
fn closure_and_ascend() {
    assert_eq!(stdout(&["closure", "4231"]).trim(), "4,3,2,1");
    let trace = stdout(&["ascend", "4231", "--trace"]);
    assert_eq!(trace, "4,2,3,1\n4,3,2,1\n");
}

#[test]
fn verify_small_passes() {
    let out = stdout(&["verify", "--n", "3", "--all"]);
    assert_eq!(out.matches("PASS").count(), 6, "{out}");
    let one = stdout(&["verify", "--n", "4", "--theorem", "1.5"]);
    assert!(one.contains("theorem 1.5") && one.contains("PASS"), "{one}");
}

#[test]
fn exit_codes() {
    // usage error: unknown flag
    assert_eq!(run(&["classify", "231", "--bogus"]).status.code(), Some(1));
    // usage error: conflicting selectors
    assert_eq!(run(&["verify", "--all", "--theorem", "1.1"]).status.code(), Some(1));
    // invalid input: malformed permutation
    assert_eq!(run(&["classify", "2,4,1"]).status.code(), Some(2));
    // invalid input: non-admissible inline set
    assert_eq!(
        run(&["pi", "--elems", "T(1,2) T(2,3)", "--n", "3"]).status.code(),
        Some(2)
    );
    // invalid input: closure of a non-covexillary permutation
    assert_eq!(run(&["closure", "3412"]).status.code(), Some(2));
    // invalid input: decode of a bad decoration
    assert_eq!(run(&["dyck", "decode", "f=2,3,3; g=0,1,0"]).status.code(), Some(2));
    // ascending an already smooth permutation is a precondition violation
    assert_eq!(run(&["ascend", "231"]).status.code(), Some(2));
}

#[test]
fn set_files_round_trip_through_pi() {
    let dir = std::env::temp_dir().join(format!("smoothperm-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c45231.txt");
    let table = stdout(&["table", "45231", "--which", "c23"]);
    std::fs::write(&path, &table).unwrap();
    let out = stdout(&["pi", "--file", path.to_str().unwrap()]);
    assert_eq!(out.trim(), "4,5,3,2,1");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn jobs_do_not_change_results() {
    let strip = |s: String| {
        s.lines()
            .map(|l| l.split("  (").next().unwrap_or(l).to_string())
            .collect::<Vec<_>>()
            .join("\n")
    };
    let one = strip(stdout(&["--jobs", "1", "verify", "--n", "4", "--theorem", "1.6"]));
    let eight = strip(stdout(&["--jobs", "8", "verify", "--n", "4", "--theorem", "1.6"]));
    assert_eq!(one, eight);
}
