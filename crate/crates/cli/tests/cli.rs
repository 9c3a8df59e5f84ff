use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grouptrix")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn graph_summary_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pow.el");
    let o = run(&["graph", "--group", "psl2:7", "--kind", "pow", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("n=168 "));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("168 "));

    let o = run(&["graph", "--group", "cyclic:6", "--kind", "epow"]);
    assert_eq!(stdout(&o), "n=6 m=15 components=1\n");

    let o = run(&["graph", "--group", "v4", "--kind", "dcom", "--cover", "dihedral:8,center"]);
    assert_eq!(stdout(&o), "n=4 m=3 components=1\n");

    let o = run(&["graph", "--group", "sym:4", "--kind", "com", "--reduced", "centre", "--cokernel"]);
    assert_eq!(stdout(&o), "n=23 m=25 components=5 cokernel=7\n");
}

#[test]
fn dot_output() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q8.dot");
    let o = run(&["graph", "--group", "q8", "--kind", "pow", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("graph {"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["graph", "--group", "bogus:3", "--kind", "pow"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "--group", "q8", "--kind", "nope"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_grouptrix"))
        .args(["graph", "--group", "sym:4", "--kind", "ngen"])
        .env("GROUPTRIX_MAX_ORDER", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(run(&["classify", "lists", "even_d", "64"]).status.code(), Some(3));
}

#[test]
fn table_rows() {
    let o = run(&["table1", "--rows", "A5,A6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("A5.cells.NGen.status=MATCH"));
    assert!(text.contains("A6.cells.DCom.status=SKIPPED"));
    assert!(text.ends_with("all_match=true\n"));
    let json = stdout(&run(&["--json", "--jobs", "1", "table1", "--rows", "A5"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["A5"]["cells"]["Cyc"]["computed"], "32");
}

#[test]
fn classify_tasks() {
    let text = stdout(&run(&["classify", "pslq", "25"]));
    assert!(text.contains("condition=false"));
    assert!(text.contains("note=(q-1)/2=12 is OTHER"));
    let text = stdout(&run(&["classify", "lists", "even_d", "63"]));
    assert!(text.contains("values=1 2 3 4 5 7 11 13 17 19 23 31 61\n"));
    let text = stdout(&run(&["classify", "gk", "psl2:11"]));
    assert!(text.contains("gk=primes 2 3 5 11; edges {2,3}"));
    let text = stdout(&run(&["classify", "hierarchy", "sym:4"]));
    assert!(text.contains("all_hold=true"));
}

#[test]
fn deterministic_output() {
    let a = run(&["--json", "classify", "hierarchy", "q8"]);
    let b = run(&["--json", "--jobs", "1", "classify", "hierarchy", "q8"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn embed_command() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c5.el");
    std::fs::write(&path, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let o = run(&["embed", "--kind", "epow", "--edges", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("verified=true\n"));
    let o = run(&["embed", "--kind", "pow", "--edges", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}
