use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sphere-rigidity"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn construct(name: &str) -> String {
    stdout(&["construct", name], None)
}

#[test]
fn betti_of_octahedron_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("O6.txt");
    std::fs::write(&path, construct("O6")).unwrap();
    assert_eq!(stdout(&["betti", "--in", path.to_str().unwrap()], None), "b: -1,0,3,0,0,0,0\n");
    assert_eq!(stdout(&["betti", path.to_str().unwrap()], None), "b: -1,0,3,0,0,0,0\n");
}

#[test]
fn bipyramid_has_nine_four_belts() {
    let out = stdout(&["belts", "--k", "4"], Some(&construct("bipyramid:8")));
    assert_eq!(out.lines().last(), Some("count: 9"));
    assert_eq!(out.lines().filter(|l| l.starts_with("belt k=4:")).count(), 9);
}

#[test]
fn broken_file_is_a_domain_error() {
    let out = run(&["validate"], Some("n 4\nf 0 1 2\nf 0 1 3\n"));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a sphere"));
    let out = run(&["betti"], Some(&construct("C8")));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["bogus"], None).status.code(), Some(2));
    assert_eq!(run(&["belts", "--frobnicate"], None).status.code(), Some(2));
    assert_eq!(run(&["rigidity", "--n", "5"], None).status.code(), Some(2));
}

#[test]
fn json_reports() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "betti"], Some(&construct("O6")))).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["b"][2], 3);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["belts", "--json"], Some(&construct("O6")))).unwrap();
    assert_eq!(v["profile"]["4"], 3);
    assert_eq!(v["irreducible"], true);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "validate"], Some(&construct("D20")))).unwrap();
    assert_eq!(v["simplicial"], false);
    assert_eq!(v["faces"], 12);
}

#[test]
fn table_and_decompose() {
    let table = stdout(&["table", "--field", "two"], Some(&construct("O6")));
    assert_eq!(table.lines().nth(1), Some("i=1: 0 0 3 0 0 0 0"));
    let b5 = construct("bipyramid:5");
    let tree = stdout(&["decompose"], Some(&b5));
    assert!(tree.starts_with("split n=5 belt"));
    assert_eq!(tree.lines().last(), Some("leaves: 2"));
}

#[test]
fn sums() {
    let one = stdout(&["sum", "T4", "O6"], None);
    assert!(one.starts_with("n 7\n"));
    assert_eq!(stdout(&["betti"], Some(&one)), "b: -1,0,6,6,1,0,0,0\n");
    let dir = tempfile::tempdir().unwrap();
    let all = stdout(&["sum", "bipyramid:7", "bipyramid:7", "--all", "--out-dir", dir.path().to_str().unwrap()], None);
    let count: usize = all.lines().next().unwrap().strip_prefix("sums: ").unwrap().parse().unwrap();
    assert!(count >= 2);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), count);
    let bad = run(&["sum", "T4", "O6", "--face2", "0,1,9"], None);
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(run(&["sum", "T4", "nonsense"], None).status.code(), Some(1));
}

#[test]
fn census_rigidity_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let db = dir.path().join("census.txt");
    let db = db.to_str().unwrap();
    let built = stdout(&["census", "--n", "8", "--out", db, "--threads", "1"], None);
    assert!(built.contains("layer n=8: 14"));
    let first = std::fs::read(db).unwrap();
    stdout(&["census", "--n", "8", "--out", db, "--threads", "3"], None);
    assert_eq!(std::fs::read(db).unwrap(), first);

    let rigid = stdout(&["rigidity", "--db", db, "--n", "7"], None);
    assert!(rigid.starts_with("n=7 spheres=5 classes=3 rigid=2"));
    let report = stdout(&["verify", "--db", db, "--claims", "b2-determines-n,irreducible-bn4-maximum"], None);
    assert_eq!(report.lines().filter(|l| l.contains(": verified:")).count(), 2);
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "verify", "--db", db], None)).unwrap();
    assert_eq!(v["all_verified"], true);
    assert_eq!(run(&["rigidity", "--db", db, "--n", "9"], None).status.code(), Some(1));
}

#[test]
fn output_is_independent_of_threads() {
    let ico = construct("I12");
    assert_eq!(stdout(&["betti", "--threads", "1"], Some(&ico)), stdout(&["betti", "--threads", "4"], Some(&ico)));
}
