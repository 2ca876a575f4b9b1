//! End-to-end runs of the `flowcat` binary against the corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn corpus() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

fn files_in(dir: &Path) -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

fn run(args: &[&str], load: &[PathBuf]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_flowcat"));
    cmd.args(args);
    if !load.is_empty() {
        cmd.arg("--load").args(load);
    }
    cmd.output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_accepts_the_corpus() {
    let files = corpus();
    let mut args = vec!["validate"];
    args.extend(files.iter().map(|p| path_str(p)));
    let out = run(&args, &[]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert_eq!(stdout(&out).lines().filter(|l| l.ends_with(" ok")).count(), files.len());
}

#[test]
fn missing_composite_is_reported_with_its_line() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "bad.fincat",
        "category 3\nobject a\nobject b\nobject c\narrow u : a -> b\narrow v : b -> c\n",
    );
    let out = run(&["validate", path_str(&path)], &[]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("bad.fincat:6:"), "{text}");
    assert!(text.contains("totality"), "{text}");
}

#[test]
fn duplicate_object_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "dup.fincat", "category D\nobject a\nobject a\n");
    let out = run(&["validate", path_str(&path)], &[]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("duplicate object `a`"));
}

#[test]
fn flow_sum_of_a_point_and_an_arrow() {
    let dir = TempDir::new().unwrap();
    let out = run(
        &["construct", "flow-sum", "id1", "at0", "--out", path_str(dir.path())],
        &corpus(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("category 1+2: 3 objects, 6 morphisms"));
    let files = files_in(dir.path());
    let mut args = vec!["validate"];
    args.extend(files.iter().map(|p| path_str(p)));
    assert_eq!(code(&run(&args, &[])), 0);
}

#[test]
fn flow_product_over_a_point_is_the_product() {
    let dir = TempDir::new().unwrap();
    let out = run(
        &[
            "construct",
            "flow-product",
            "collapse",
            "id1",
            "--out",
            path_str(dir.path()),
        ],
        &corpus(),
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    // P has 2 objects and 4 morphisms, the point 1 and 1.
    assert!(stdout(&out).contains("2 objects, 4 morphisms"));
    let out = run(&["check", "opfib", "t"], &files_in(dir.path()));
    assert_eq!(code(&out), 0, "{}{}", stdout(&out), stderr(&out));
}

#[test]
fn fiber_at_an_unknown_object_is_an_input_error() {
    let out = run(&["construct", "fiber", "at0", "zz"], &corpus());
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown object `zz`"));
}

#[test]
fn unknown_functor_is_an_input_error() {
    let out = run(&["kan", "left", "nope", "Fpq"], &corpus());
    assert_eq!(code(&out), 2);
}

#[test]
fn kan_extensions_along_a_collapse() {
    let left = stdout(&run(&["kan", "left", "collapse", "Fpq"], &corpus()));
    assert!(left.contains("object * |-> { K(T(a,id_*),x) }"), "{left}");
    let right = stdout(&run(&["kan", "right", "collapse", "Fpq"], &corpus()));
    assert!(right.contains("object * |-> { }"), "{right}");
}

/// Element counts of each `object x |-> { .. }` line, splitting on commas
/// outside parentheses.
fn set_sizes(text: &str) -> Vec<usize> {
    text.lines()
        .filter_map(|l| l.strip_prefix("object "))
        .map(|l| {
            let body = l.split_once("|->").unwrap().1.trim();
            let inner = body.trim_start_matches('{').trim_end_matches('}').trim();
            if inner.is_empty() {
                return 0;
            }
            let mut depth = 0i32;
            1 + inner
                .chars()
                .filter(|&c| {
                    match c {
                        '(' => depth += 1,
                        ')' => depth -= 1,
                        _ => {}
                    }
                    c == ',' && depth == 0
                })
                .count()
        })
        .collect()
}

#[test]
fn kan_along_an_identity_keeps_sizes() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "id2.catfun",
        "functor id2 : 2 -> 2\nobject 0 |-> 0\nobject 1 |-> 1\narrow u |-> u\n",
    );
    let mut load = corpus();
    load.push(path);
    for side in ["left", "right"] {
        let out = run(&["kan", side, "id2", "X"], &load);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let original = std::fs::read_to_string(corpus().iter().find(|p| p.ends_with("arrow.setfun")).unwrap()).unwrap();
        let sizes = set_sizes(&stdout(&out));
        assert_eq!(sizes, set_sizes(&original), "{side}");
    }
}

#[test]
fn exact_suite_passes() {
    let out = run(&["check", "exact-suite", "--seed", "7", "--samples", "20"], &[]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
}

#[test]
fn cofinality_reports_the_empty_coslice() {
    let out = run(&["check", "cofinal", "at0"], &corpus());
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("empty"));
    let out = run(&["check", "cofinal", "at1"], &corpus());
    assert_eq!(code(&out), 0);
}

#[test]
fn opfibration_failures_exit_one() {
    for f in ["at0", "inner"] {
        assert_eq!(code(&run(&["check", "opfib", f], &corpus())), 1, "{f}");
    }
}

#[test]
fn refused_square_is_an_input_error() {
    let out = run(&["check", "opfib-case", "gap"], &corpus());
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("refused"));
}

#[test]
fn structured_output_is_json() {
    let out = run(&["--format", "structured", "check", "cofinal", "at0"], &corpus());
    assert_eq!(code(&out), 1);
    for line in stdout(&out).lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["cofinal"], false);
    }
    let out = run(
        &[
            "--format",
            "structured",
            "check",
            "exact-suite",
            "--seed",
            "1",
            "--samples",
            "2",
            "--squares",
            "2",
        ],
        &[],
    );
    assert_eq!(code(&out), 0);
    for line in stdout(&out).lines() {
        serde_json::from_str::<serde_json::Value>(line).unwrap();
    }
}

#[test]
fn random_is_deterministic() {
    let (a, b) = (TempDir::new().unwrap(), TempDir::new().unwrap());
    for dir in [&a, &b] {
        assert_eq!(
            code(&run(
                &["random", "square", "--seed", "11", "--out", path_str(dir.path())],
                &[]
            )),
            0
        );
    }
    let (fa, fb) = (files_in(a.path()), files_in(b.path()));
    assert_eq!(
        fa.iter().map(|p| p.file_name()).collect::<Vec<_>>(),
        fb.iter().map(|p| p.file_name()).collect::<Vec<_>>()
    );
    for (x, y) in fa.iter().zip(&fb) {
        assert_eq!(std::fs::read(x).unwrap(), std::fs::read(y).unwrap());
    }
}

#[test]
fn random_with_no_room_is_the_point() {
    let dir = TempDir::new().unwrap();
    let out = run(
        &[
            "random",
            "category",
            "--seed",
            "5",
            "--max-objects",
            "1",
            "--max-edges",
            "0",
            "--out",
            path_str(dir.path()),
        ],
        &[],
    );
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("R.fincat")).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("object")).count(), 1);
    assert_eq!(text.lines().filter(|l| l.starts_with("arrow")).count(), 0);
}

#[test]
fn random_categories_validate() {
    let dir = TempDir::new().unwrap();
    let mut paths = Vec::new();
    for seed in 0..100 {
        let sub = dir.path().join(seed.to_string());
        std::fs::create_dir(&sub).unwrap();
        assert_eq!(
            code(&run(
                &[
                    "random",
                    "category",
                    "--seed",
                    &seed.to_string(),
                    "--out",
                    path_str(&sub)
                ],
                &[]
            )),
            0
        );
        paths.push(sub.join("R.fincat"));
    }
    for p in &paths {
        let out = run(&["validate", path_str(p)], &[]);
        assert_eq!(code(&out), 0, "{}", stdout(&out));
    }
}
