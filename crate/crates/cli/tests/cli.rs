use std::path::Path;
use std::process::{Command, Output};

use blockgraph::{det_exact, parse_graph};

fn blockgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_blockgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn det_of_k2() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k2.txt", "n 2\ne 0 1\n");
    let out = blockgraph(&["det", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-1\n");
}

#[test]
fn det_prints_exact_fractions() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "k1.txt", "n 1\nw 2/3\n");
    assert_eq!(stdout(&blockgraph(&["det", &file])), "2/3\n");
}

#[test]
fn nmk_442_is_singular() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("nmk.txt");
    let file = file.to_str().unwrap();
    assert_eq!(
        blockgraph(&["gen", "nmk", "4", "4", "2", "-o", file])
            .status
            .code(),
        Some(0)
    );
    let out = blockgraph(&["check", file]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "singular\n");
}

#[test]
fn reduce_prints_trace_then_verdict() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p3.txt", "n 3\ne 0 1\ne 1 2\n");
    let traced = stdout(&blockgraph(&["reduce", &file, "--trace"]));
    let lines: Vec<&str> = traced.lines().collect();
    assert!(lines.len() >= 2);
    assert!(lines[..lines.len() - 1]
        .iter()
        .all(|l| l.starts_with("DELETE ") || l.starts_with("CONTRACT ")));
    assert_eq!(
        *lines.last().unwrap(),
        "VERDICT singular witness=CliqueComponentTauOne"
    );
    let plain = stdout(&blockgraph(&["reduce", &file]));
    assert_eq!(plain.trim_end(), *lines.last().unwrap());
}

#[test]
fn generated_graphs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for (n, m, k) in [(2, 3, 1), (3, 4, 2), (5, 3, 1)] {
        let out = blockgraph(&["gen", "nmk", &n.to_string(), &m.to_string(), &k.to_string()]);
        files.push(write(
            dir.path(),
            &format!("nmk{n}{m}{k}.txt"),
            &stdout(&out),
        ));
    }
    for seed in 0..10 {
        let out = blockgraph(&[
            "gen",
            "random",
            "--seed",
            &seed.to_string(),
            "--max-vertices",
            "12",
        ]);
        files.push(write(
            dir.path(),
            &format!("random{seed}.txt"),
            &stdout(&out),
        ));
    }
    let spec = write(
        dir.path(),
        "spec.txt",
        "n 4\na 0 4 4\na 1 4 4\na 2 4 4\na 3 4\n",
    );
    let out = blockgraph(&["gen", "coalesced", &spec]);
    files.push(write(dir.path(), "coalesced.txt", &stdout(&out)));

    for file in &files {
        let out = blockgraph(&["check", file]);
        assert_eq!(out.status.code(), Some(0), "{file}");
        let verdict = stdout(&out);
        let g = parse_graph(&std::fs::read_to_string(file).unwrap()).unwrap();
        let expected = if det_exact(&g).unwrap().is_zero() {
            "singular\n"
        } else {
            "nonsingular\n"
        };
        assert_eq!(verdict, expected, "{file}");
    }
}

#[test]
fn output_is_deterministic() {
    let a = blockgraph(&["gen", "random", "--seed", "42", "--max-vertices", "12"]);
    let b = blockgraph(&["gen", "random", "--seed", "42", "--max-vertices", "12"]);
    assert_eq!(a.stdout, b.stdout);
    let a = blockgraph(&["enumerate", "--max-vertices", "5"]);
    let b = blockgraph(&["enumerate", "--max-vertices", "5"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_separates_records() {
    let text = stdout(&blockgraph(&["enumerate", "--max-vertices", "4"]));
    let records: Vec<&str> = text.split("---\n").collect();
    assert_eq!(records.len(), 8);
    for r in records {
        parse_graph(r).unwrap();
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(blockgraph(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(blockgraph(&[]).status.code(), Some(1));
    assert_eq!(blockgraph(&["--help"]).status.code(), Some(0));

    let missing = dir.path().join("missing.txt");
    assert_eq!(
        blockgraph(&["check", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let garbage = write(dir.path(), "garbage.txt", "n 2\ne 0 five\n");
    assert_eq!(blockgraph(&["check", &garbage]).status.code(), Some(2));
    let bad_spec = write(dir.path(), "bad_spec.txt", "n 2\na 0 two\n");
    assert_eq!(
        blockgraph(&["gen", "coalesced", &bad_spec]).status.code(),
        Some(2)
    );

    let cycle = write(dir.path(), "c4.txt", "n 4\ne 0 1\ne 1 2\ne 2 3\ne 3 0\n");
    let out = blockgraph(&["check", &cycle]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(String::from_utf8(out.stderr).unwrap().lines().count(), 1);
    assert_eq!(
        blockgraph(&["gen", "nmk", "1", "4", "2"]).status.code(),
        Some(3)
    );
    assert_eq!(
        blockgraph(&["enumerate", "--max-vertices", "10"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn det_size_limit_comes_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "p3.txt", "n 3\ne 0 1\ne 1 2\n");
    let limited = Command::new(env!("CARGO_BIN_EXE_blockgraph"))
        .args(["det", &file])
        .env("BLOCKGRAPH_MAX_DET_VERTICES", "2")
        .output()
        .unwrap();
    assert_eq!(limited.status.code(), Some(3));
    assert_eq!(stdout(&blockgraph(&["det", &file])), "0\n");
}

#[test]
fn verify_reports_each_suite() {
    let out = blockgraph(&[
        "verify",
        "--suite",
        "all",
        "--samples",
        "200",
        "--seed",
        "7",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    for suite in ["oracle", "identities", "families"] {
        assert!(text.contains(&format!("{suite}: PASS\n")), "{text}");
    }
    assert_eq!(
        blockgraph(&["verify", "--suite", "nonsense"]).status.code(),
        Some(1)
    );
}
