use std::path::PathBuf;
use std::process::{Command, Output};

fn gebra(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gebra")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gebra-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn eval_examples() {
    let o = gebra(&["eval", "--dim", "2", "--expr", "gco(e1^e2)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "&t(Id,e1we2) + &t(e1,e2) - &t(e2,e1) + &t(e1we2,Id)");

    let o = gebra(&["eval", "--expr", "cmul[B](e1, e2)"]);
    assert_eq!(stdout(&o).trim(), "b[1,2]*Id + e1we2");

    let o = gebra(&["eval", "--expr", "ev(e1, e1)"]);
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn eval_json() {
    let o = gebra(&["eval", "--expr", "gco(e1)", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], "tensor");
    assert_eq!(v["dim"], 2);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    assert_eq!(v["terms"][0]["coeff"], "1");
}

#[test]
fn every_target_reproduces() {
    let o = gebra(&["repro", "all"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.matches("golden: ").count(), 7);
    assert!(!out.contains("MISMATCH"));
    assert!(out.contains("gswitch braid: true\nBsw braid: true"));
}

#[test]
fn repro_json_document() {
    let o = gebra(&["repro", "rmatrix", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["target"], "rmatrix");
    assert_eq!(v["golden"]["status"], "passed");
    assert_eq!(v["results"][0]["name"], "R");
    assert_eq!(v["results"][0]["entries"][1][1], "-p[1,1]");
}

#[test]
fn corrupted_golden_fails_with_a_diff() {
    let dir = scratch("corrupt");
    let src = include_str!("../golden/antipodes.txt").replace("1, 0, 0, b[1,2] - b[2,1]", "1, 0, 0, b[1,2] + b[2,1]");
    std::fs::write(dir.join("antipodes.txt"), src).unwrap();
    let o = gebra(&["repro", "antipodes", "--golden", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("S_CL: entry (1,4)"), "{err}");
    assert!(err.contains("expected: b[1,2] + b[2,1]"), "{err}");

    std::fs::write(dir.join("antipodes.txt"), include_str!("../golden/antipodes.txt")).unwrap();
    let o = gebra(&["repro", "antipodes", "--golden", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn reordered_golden_still_matches() {
    let dir = scratch("reorder");
    let src = include_str!("../golden/bw-bs.txt").replace("b[2,1]*b[1,2] - b[2,2]*b[1,1]", "-(b[1,1]*b[2,2]) + b[1,2]*b[2,1]");
    std::fs::write(dir.join("bw-bs.txt"), src).unwrap();
    let o = gebra(&["repro", "bw-bs", "--golden", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn goldens_are_skipped_away_from_the_reference_context() {
    let o = gebra(&["repro", "bw-bs", "--dim", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("golden: skipped"));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let o = gebra(&["eval", "--expr", "cmul[B](e1we2, e2^e3)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("e1^e2"));

    let o = gebra(&["eval", "--expr", "gswitch(e1, 1)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("type mismatch"));

    assert_eq!(gebra(&["repro", "everything"]).status.code(), Some(2));
    assert_eq!(gebra(&["eval"]).status.code(), Some(2));
    assert_eq!(gebra(&["eval", "--dim", "0", "--expr", "Id"]).status.code(), Some(2));
}

#[test]
fn solve_with_a_context_file() {
    let dir = scratch("ctx");
    let path = dir.join("ctx.txt");
    std::fs::write(&path, "# numeric forms\ndim: 2\nB:\n1, 1/2\n-1/2, 1\nBI:\n0, 1\n0, 0\n").unwrap();
    let o = gebra(&["solve", "antipode", "--product", "clifford", "--coproduct", "clifford", "--context", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("solution: Unique"));
    assert!(out.contains("right antipode: true"));
    assert!(out.contains("N = 3/2"));

    std::fs::write(&path, "dim: 2\nB:\n1, 1/2\n").unwrap();
    let o = gebra(&["solve", "antipode", "--context", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("B must be 2x2"));
}

#[test]
fn grassmann_antipode_from_the_command_line() {
    let o = gebra(&["solve", "antipode", "--product", "wedge", "--coproduct", "grassmann", "--dim", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["solution"], "unique");
    assert_eq!(v["antipode"]["rows"], 8);
    assert_eq!(v["antipode"]["entries"][7][7], "-1");
}

#[test]
fn numeric_bindings_instantiate_the_context() {
    let o = gebra(&["eval", "--expr", "cmul(e1, e2) + x", "--numeric", "b[1,2] = 1/2, x = 2"]);
    assert_eq!(stdout(&o).trim(), "5/2*Id + e1we2");
    let o = gebra(&["solve", "rmatrix", "--numeric", "p[1,1]=0, p[1,2]=0, p[2,1]=0, p[2,2]=0"]);
    assert!(stdout(&o).contains("[0, 0, 0, 0]\n[0, 0, 0, 0]"), "{}", stdout(&o));
}

#[test]
fn evaluation_is_deterministic() {
    let args = ["eval", "--dim", "3", "--expr", "cco(cmul(e1^e2, e2 + e3))"];
    let a = gebra(&args);
    let b = gebra(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
