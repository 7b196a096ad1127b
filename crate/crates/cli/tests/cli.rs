use std::io::Write;
use std::process::{Command, Output, Stdio};

fn ktorus(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ktorus"))
        .args(args)
        .env_remove("KTORUS_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const K5: &str = "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n";

#[test]
fn decide_k5_edge_list() {
    let o = ktorus(&["decide"], K5);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Toroidal Case-i");
}

#[test]
fn decide_catalog_name() {
    let o = ktorus(&["decide", "--name", "G4"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "NonToroidal FailedMCase");
}

#[test]
fn decide_batch_from_file_in_graph6() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // K4, K5 and K3,3.
    writeln!(f, "C~\nD~{{\nEFz_").unwrap();
    let path = f.path().to_str().unwrap();
    let o = ktorus(&["decide", "--format", "graph6", path], "");
    assert_eq!(o.status.code(), Some(2));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(
        lines,
        [
            "Toroidal AllPlanarBlocks",
            "Toroidal Case-i",
            "NotInClass K33Found"
        ]
    );
}

#[test]
fn decide_json_round_trips() {
    let o = ktorus(&["--json", "decide"], K5);
    let parsed: Vec<ktorus::toroidality::ToroidalityVerdict> =
        serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(parsed.len(), 1);
    assert_eq!(parsed[0].case_tag(), "Case-i");
    let again = serde_json::to_string_pretty(&parsed).unwrap();
    assert_eq!(again.trim(), stdout(&o).trim());
}

#[test]
fn garbage_is_an_input_error() {
    let o = ktorus(&["decide"], "this is not a graph\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn verify_obstructions_counts() {
    let o = ktorus(&["verify-obstructions", "--kind", "minor"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("4 minor passes; mismatches: []\n"));
    let o = ktorus(
        &["--json", "verify-obstructions", "--kind", "topological"],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"].as_array().unwrap().len(), 11);
    assert!(v["mismatches"].as_array().unwrap().is_empty());
}

#[test]
fn corrupted_catalog_is_an_input_error() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "G1 I~{{?GKF@w\nG2 not-graph6").unwrap();
    let o = ktorus(
        &[
            "verify-obstructions",
            "--kind",
            "minor",
            "--catalog",
            f.path().to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn splits_regenerate_the_catalog() {
    let o = ktorus(&["--json", "splits"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 11);
    let mut names: Vec<String> = v["graphs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["catalog_name"].as_str().unwrap().to_string())
        .collect();
    names.sort_by_key(|n| n[1..].parse::<u32>().unwrap());
    let expected: Vec<String> = (1..=11).map(|i| format!("G{i}")).collect();
    assert_eq!(names, expected);
}

#[test]
fn genus_and_count() {
    let o = ktorus(&["genus", "--name", "K5"], "");
    assert_eq!(stdout(&o).trim(), "genus 1");
    let o = ktorus(&["genus", "--count"], K5);
    assert_eq!(stdout(&o).trim(), "torus_embeddings 6");
}

#[test]
fn budget_refusal_via_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_ktorus"))
        .args(["genus", "--name", "G4"])
        .env("KTORUS_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = ktorus(&["genus", "--count", "--budget", "100", "--name", "M"], "");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn isomorphic_names_and_files() {
    let o = ktorus(&["isomorphic", "K5", "K5"], "");
    assert_eq!(stdout(&o).trim(), "true");
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, "{K5}").unwrap();
    let o = ktorus(&["isomorphic", f.path().to_str().unwrap(), "K5"], "");
    assert_eq!(stdout(&o).trim(), "true");
    let o = ktorus(&["isomorphic", "K5", "K33"], "");
    assert_eq!(stdout(&o).trim(), "false");
    let o = ktorus(&["isomorphic", "K5", "/nonexistent/graph"], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let a = ktorus(&["--json", "decide", "--name", "G3"], "");
    let b = ktorus(&["--json", "decide", "--name", "G3"], "");
    assert_eq!(a.stdout, b.stdout);
}
