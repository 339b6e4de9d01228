//! Runs the binary on the documented invocations.

use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilcomplex")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

/// Nonzero valid rows `(m, n, dim)` of a CSV homology table.
fn nonzero_rows(csv: &str) -> Vec<(usize, i64, usize)> {
    let mut rows: Vec<_> = csv
        .lines()
        .skip(1)
        .filter_map(|l| {
            let c: Vec<&str> = l.split(',').collect();
            (c[3] == "true" && c[2] != "0").then(|| (c[0].parse().unwrap(), c[1].parse().unwrap(), c[2].parse().unwrap()))
        })
        .collect();
    rows.sort();
    rows
}

fn temp_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("nilcomplex_{}_{name}", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn circle_chain_table() {
    let file = temp_file("triangle.json", r#"{"vertices": 3, "facets": [[0,1],[1,2],[0,2]]}"#);
    let o = run(&[
        "homology", "--field", "zmod:3", "--q", "1", "--N", "3", "--builder", "simplicial-chains", "--file",
        file.to_str().unwrap(), "--variant", "d0", "--format", "csv",
    ]);
    std::fs::remove_file(&file).ok();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(nonzero_rows(&stdout(&o)), vec![(1, 0, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1)]);
}

#[test]
fn zero_builder_gives_an_empty_table() {
    let o = run(&["homology", "--builder", "zero", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn cyclotomic_hochschild_matches_dictionary() {
    let o = run(&["homology", "--field", "cyclotomic:3", "--q", "zeta", "--N", "3", "--builder", "hochschild", "--preset", "dual_numbers", "--format", "csv"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    let mut predicted = 0;
    for l in out.lines().skip(1) {
        let c: Vec<&str> = l.split(',').collect();
        if !c[4].is_empty() {
            assert_eq!(c[2], c[4], "{l}");
            predicted += 1;
        }
    }
    assert!(predicted >= 8);
}

#[test]
fn table_compares_two_columns() {
    for (field, n, preset) in [("zmod:3", "3", "triangle"), ("zmod:3", "3", "point"), ("zmod:5", "5", "tetrahedron")] {
        let o = run(&["table", "--field", field, "--q", "1", "--N", n, "--builder", "simplicial-chains", "--preset", preset]);
        assert!(o.status.success(), "{preset}");
        let out = stdout(&o);
        assert!(out.starts_with("m,n,generalized,dictionary"));
        for l in out.lines().skip(1) {
            let c: Vec<&str> = l.split(',').collect();
            assert_eq!(c[2], c[3], "{preset}: {l}");
        }
    }
    let o = run(&["table", "--field", "zmod:3", "--q", "1", "--N", "3", "--builder", "simplicial-chains", "--preset", "point"]);
    let ones: Vec<String> = stdout(&o).lines().skip(1).filter(|l| !l.ends_with(",0,0")).map(String::from).collect();
    assert_eq!(ones, vec!["1,0,1,1", "2,1,1,1"]);
}

#[test]
fn qdga_suite_passes() {
    let o = run(&["verify", "--suite", "qdga", "--preset", "dual_numbers"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    assert!(out.contains("qdga-trivial"));
}

#[test]
fn core_suite_is_deterministic() {
    let args = ["verify", "--suite", "core", "--seed", "42", "--trials", "3", "--D", "4", "--format", "json"];
    let (a, b) = (run(&args), run(&args));
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let names: Vec<String> = serde_json::from_slice::<serde_json::Value>(&a.stdout).unwrap().as_array().unwrap().iter().map(|v| v["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names, ["lemma1", "lemma2", "lemma5", "prop2", "lemma8", "cor3", "cor4", "thm1", "lemma9", "thm2", "thm3", "thm4", "kapranov"]);
}

#[test]
fn corrupted_input_fails_with_witness() {
    let file = temp_file("bad.json", r#"{"ctx": {"field": {"prime": 7}, "q": 2, "N": 3}, "lo": 0, "hi": 3, "dims": [1,1,1,1], "d": [[[1]],[[1]],[[1]]]}"#);
    let o = run(&["verify", "--file", file.to_str().unwrap()]);
    std::fs::remove_file(&file).ok();
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("FAIL input"));
    assert!(out.contains("e0 maps to"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["homology", "--field", "zmod:9"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "--builder", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "--N", "3", "--D", "2", "--builder", "hochschild"]).status.code(), Some(2));
    assert_eq!(run(&["homology", "--field", "zmod:7", "--q", "3", "--builder", "hochschild"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--field", "zmod:7", "--q", "3"]).status.code(), Some(3));
}
