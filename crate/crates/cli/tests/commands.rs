use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn ktminor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ktminor")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn dense_graph(dir: &TempDir) -> PathBuf {
    let out = ktminor(&["gen", "random", "--n", "300", "--m", "2700", "--seed", "5"]);
    assert_eq!(out.status.code(), Some(0));
    file(dir, "dense.txt", &stdout(&out))
}

#[test]
fn gen_is_deterministic() {
    let a = ktminor(&["gen", "random", "--n", "50", "--m", "200", "--seed", "9"]);
    let b = ktminor(&["gen", "random", "--n", "50", "--m", "200", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_eq!(stdout(&a).lines().filter(|l| !l.starts_with('#')).count(), 200);

    let k5 = ktminor(&["gen", "planted", "--n", "5", "--t", "5", "--noise", "0", "--seed", "1"]);
    assert_eq!(stdout(&k5).lines().filter(|l| !l.starts_with('#')).count(), 10);
    let too_many = ktminor(&["gen", "random", "--n", "5", "--m", "11", "--seed", "1"]);
    assert_eq!(too_many.status.code(), Some(2));
}

#[test]
fn find_then_verify() {
    let dir = TempDir::new().unwrap();
    let graph = dense_graph(&dir);
    let trace = dir.path().join("trace.txt");
    let out = ktminor(&["find", "--t", "4", "--epsilon", "2", "--ops", "--trace", s(&trace), s(&graph)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let model_text = stdout(&out);
    assert!(model_text.starts_with("B1:"));
    assert_eq!(model_text.lines().count(), 4);
    assert!(stderr(&out).contains("ops="));
    assert!(fs::read_to_string(&trace).unwrap().lines().last().unwrap().starts_with("found "));

    let model = file(&dir, "model.txt", &model_text);
    let ok = ktminor(&["verify", "--t", "4", s(&graph), s(&model)]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout(&ok).trim(), "valid");

    let wrong_t = ktminor(&["verify", "--t", "5", s(&graph), s(&model)]);
    assert_eq!(wrong_t.status.code(), Some(1));
    assert!(stdout(&wrong_t).contains("expected 5 branch sets"));
}

#[test]
fn find_rejections() {
    let dir = TempDir::new().unwrap();
    let graph = dense_graph(&dir);
    let sparse = file(&dir, "sparse.txt", "0 1\n1 2\n2 0\n");
    let out = ktminor(&["find", "--t", "4", "--epsilon", "2", s(&sparse)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("insufficient density"));

    // g(4) = 4 < 2t/ε = 8
    let out = ktminor(&["find", "--t", "4", "--epsilon", "1", "--strict", s(&graph)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("strict"));

    let out = ktminor(&["find", "--t", "4", "--epsilon", "x", s(&graph)]);
    assert_eq!(out.status.code(), Some(2));
    let out = ktminor(&["find", "--t", "2", "--epsilon", "1", s(&graph)]);
    assert_eq!(out.status.code(), Some(2));

    let bad = file(&dir, "bad.txt", "0 1\n1 y\n");
    let out = ktminor(&["find", "--t", "4", "--epsilon", "2", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));

    let out = ktminor(&["find", "--t", "4", "--epsilon", "2", s(&dir.path().join("missing.txt"))]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn g_table_override() {
    let dir = TempDir::new().unwrap();
    let graph = dense_graph(&dir);
    // g(4) = 5 gives D = 20 > 18
    let table = file(&dir, "g.txt", "# override\n4 5\n");
    let out = ktminor(&["find", "--t", "4", "--epsilon", "2", "--g-table", s(&table), s(&graph)]);
    assert_eq!(out.status.code(), Some(2));
    let table = file(&dir, "g2.txt", "4 7/2\n");
    let out = ktminor(&["find", "--t", "4", "--epsilon", "3", "--g-table", s(&table), s(&graph)]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stderr(&out).contains("warning"));
    let table = file(&dir, "g3.txt", "4 9\n5 8\n");
    let out = ktminor(&["find", "--t", "4", "--epsilon", "2", "--g-table", s(&table), s(&graph)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("non-decreasing"));
}

#[test]
fn verify_reports_violations() {
    let dir = TempDir::new().unwrap();
    let path = file(&dir, "path.txt", "0 1\n1 2\n2 3\n");
    let model = file(&dir, "m.txt", "B1: 0 2\nB2: 1\nB3: 3\n");
    let out = ktminor(&["verify", "--t", "3", s(&path), s(&model)]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("B1 is not connected"));
    assert!(text.contains("no edge joins B2 and B3"));

    let unknown = file(&dir, "u.txt", "B1: 0\nB2: 1\nB3: 9\n");
    assert_eq!(ktminor(&["verify", "--t", "3", s(&path), s(&unknown)]).status.code(), Some(2));
    let garbled = file(&dir, "g.txt", "X1: 0\n");
    assert_eq!(ktminor(&["verify", "--t", "3", s(&path), s(&garbled)]).status.code(), Some(2));
}

#[test]
fn oracle_answers() {
    let dir = TempDir::new().unwrap();
    let mut petersen = String::new();
    for i in 0..5 {
        petersen += &format!("{i} {}\n{i} {}\n{} {}\n", (i + 1) % 5, i + 5, 5 + i, 5 + (i + 2) % 5);
    }
    let g = file(&dir, "petersen.txt", &petersen);
    let yes = ktminor(&["oracle", "--t", "5", s(&g)]);
    assert_eq!(yes.status.code(), Some(0));
    let model = file(&dir, "m.txt", &stdout(&yes));
    assert_eq!(ktminor(&["verify", "--t", "5", s(&g), s(&model)]).status.code(), Some(0));
    assert_eq!(ktminor(&["oracle", "--t", "6", s(&g)]).status.code(), Some(1));

    let big = dense_graph(&dir);
    let out = ktminor(&["oracle", "--t", "3", s(&big)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("at most 10"));
}

#[test]
fn bench_table() {
    let out = ktminor(&["bench", "--t", "4", "--epsilon", "2", "--sizes", "200,400", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().contains("ops"));
    assert_eq!(text.lines().filter(|l| l.starts_with("n=")).count(), 2);
    assert!(text.contains("n=400 ops="));
    assert_eq!(
        ktminor(&["bench", "--t", "4", "--epsilon", "0", "--sizes", "200", "--seed", "3"]).status.code(),
        Some(2)
    );
}
