use std::process::{Command, Output};

use suzuki_cli::TableDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_suzuki-chars"))
        .args(args)
        .env_remove("SUZUKI_CHARS_THREADS")
        .output()
        .expect("binary runs")
}

fn table_a231() -> Output {
    run(&["table", "--family", "A", "--p", "2", "--m", "3", "--l", "1"])
}

#[test]
fn a231_document_has_22_classes() {
    let out = table_a231();
    assert!(out.status.success());
    let doc = TableDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(doc.classes.len(), 22);
    assert_eq!(doc.characters.len(), 22);
    assert_eq!(doc.metadata.root_order, 4);
    assert_eq!(doc.metadata.order, 64);
}

#[test]
fn theta_one_exits_2() {
    let out = run(&["table", "--family", "A", "--p", "2", "--m", "3", "--l", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("θ = 1"), "{err}");
}

#[test]
fn bad_prime_and_missing_flags_exit_2() {
    assert_eq!(run(&["table", "--family", "A", "--p", "4", "--m", "2", "--l", "1"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--family", "A", "--p", "2", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--family", "E", "--p", "2", "--m", "2", "--l", "1"]).status.code(), Some(2));
}

#[test]
fn output_is_byte_identical() {
    assert_eq!(table_a231().stdout, table_a231().stdout);
    let csv = || run(&["table", "--family", "C", "--p", "3", "--m", "2", "--l", "1", "--epsilon", "0", "--format", "csv"]).stdout;
    assert_eq!(csv(), csv());
}

#[test]
fn d241_has_all_degrees() {
    let out = run(&["table", "--family", "D", "--p", "2", "--m", "4", "--l", "1", "--epsilon", "0"]);
    assert!(out.status.success());
    let doc = TableDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    let mut degrees: Vec<u64> = doc.characters.iter().map(|c| c.degree).collect();
    degrees.sort();
    degrees.dedup();
    assert_eq!(degrees, vec![1, 2, 4, 8, 16]);
}

#[test]
fn verify_recomputed_a231() {
    let out = run(&["verify", "--family", "A", "--p", "2", "--m", "3", "--l", "1"]);
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(out.status.code(), Some(0), "{text}");
    let passes = text.lines().filter(|l| l.split_whitespace().nth(1) == Some("pass")).count();
    assert_eq!(passes, 6, "{text}");
}

#[test]
fn stored_document_verifies_and_corruption_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a231.json");
    let out = run(&["table", "--family", "A", "--p", "2", "--m", "3", "--l", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let ok = run(&["verify", "--input", path.to_str().unwrap(), "--checks", "orth1,orth2,central"]);
    assert_eq!(ok.status.code(), Some(0));

    let mut doc = TableDocument::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc.characters[21].values[5][0] += 1;
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, doc.to_json()).unwrap();
    let out = run(&["verify", "--input", bad.to_str().unwrap(), "--checks", "orth1"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("chars [") && err.contains("21"), "{err}");
    assert!(err.contains("classes ["), "{err}");
}

#[test]
fn unreadable_input_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(run(&["verify", "--input", missing.to_str().unwrap()]).status.code(), Some(3));
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"metadata\": 1}").unwrap();
    assert_eq!(run(&["verify", "--input", junk.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn epsilon_as_coefficients() {
    let by_index = run(&["table", "--family", "B", "--p", "2", "--m", "2", "--l", "2", "--epsilon", "1"]);
    let by_list = run(&["table", "--family", "B", "--p", "2", "--m", "2", "--l", "2", "--epsilon", "[1,0]"]);
    assert!(by_index.status.success());
    assert_eq!(by_index.stdout, by_list.stdout);
}

#[test]
fn modulus_flag() {
    let out = run(&["table", "--family", "A", "--p", "2", "--m", "3", "--l", "1", "--modulus", "1,0,1,1"]);
    assert!(out.status.success());
    let doc = TableDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(doc.metadata.modulus, vec![1, 0, 1, 1]);
    let out = run(&["table", "--family", "A", "--p", "2", "--m", "3", "--l", "1", "--modulus", "1,1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
}
