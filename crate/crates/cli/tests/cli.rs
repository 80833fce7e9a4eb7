//! Runs the built binary as a subprocess: exit codes, text output, and the
//! golden JSON documents.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;
use torus_pinch_cli::report::ReportDocument;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torus-pinch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn golden_report_k1() {
    let o = run(&["report", "K", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("report_K_1.json"));
    let doc: ReportDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.results["pinch_number"], 2);
    assert_eq!(doc.results["slice_cf"], serde_json::json!([-4, -2]));
    assert_eq!(doc.results["slice_recognized"], true);
}

#[test]
fn golden_pinch_seq_4_9() {
    let o = run(&["pinch-seq", "4", "9", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("pinch_seq_4_9.json"));
}

#[test]
fn json_documents_round_trip() {
    for args in [
        &["pinch-seq", "8", "25", "--json"][..],
        &["surgery-knot", "J", "3", "--json"],
        &["verify", "corollaries", "--max-n", "6", "--json"],
        &["tangle", "cf", "-4", "25", "--json"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        let text = stdout(&o);
        let doc: ReportDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(format!("{}\n", doc.to_json()), text);
        let raw: Value = serde_json::from_str(&text).unwrap();
        let keys: Vec<&String> = raw.as_object().unwrap().keys().collect();
        assert_eq!(
            keys,
            ["command", "inputs", "results", "schema_version", "status"]
        );
    }
}

#[test]
fn pinch_seq_text_table() {
    let o = run(&["pinch-seq", "8", "25"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("(8,25) -> (6,19) -> (4,13) -> (2,7) -> (0,1)\n"));
    assert!(text.contains("pinch number: 4"));
    assert!(text.contains("(8,25)  (6,19)  7  22  -"));
}

#[test]
fn verify_tables_summary() {
    let o = run(&["verify", "tables", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "K: 5/5 rows match, J: 4/4 rows match\n");
}

#[test]
fn fraction_and_cf_notation() {
    let o = run(&["tangle", "cf", "2", "-9"]);
    assert_eq!(stdout(&o), "-2/9 = [-4,-2]\n");
    let o = run(&["tangle", "apply", "1", "0", "-7", "1", "4", "3"]);
    assert_eq!(stdout(&o), "[[1,0],[-7,1]] . 4/3 = -4/25\n");
}

#[test]
fn quiet_suppresses_text_but_not_exit_code() {
    let o = run(&["--quiet", "verify", "tables"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = run(&["pinch-move", "4", "6", "--quiet"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let ok: &[&[&str]] = &[
        &["pinch-move", "4", "9"],
        &["pinch-seq", "1", "0"],
        &["pinch-number", "20", "81"],
        &["family", "J", "1"],
        &["surgery-knot", "K", "2"],
        &["tangle", "cf", "-4", "9"],
        &["tangle", "apply", "1", "0", "0", "1", "3", "7"],
        &["jvc", "2", "3"],
        &["report", "J", "2"],
        &["verify", "all", "--max-n", "2"],
        &["--help"],
    ];
    for args in ok {
        assert_eq!(run(args).status.code(), Some(0), "{args:?}");
    }

    let usage_or_domain: &[&[&str]] = &[
        &[],
        &["frobnicate"],
        &["pinch-move", "four", "9"],
        &["pinch-move", "4"],
        &["pinch-move", "4", "6"],
        &["pinch-move", "0", "1"],
        &["pinch-seq", "-3", "2"],
        &["family", "L", "2"],
        &["family", "K", "0"],
        &["surgery-knot", "J", "1"],
        &["report", "J", "1"],
        &["tangle", "cf", "1", "3"],
        &["tangle", "cf", "5", "3"],
        &["tangle", "apply", "2", "0", "0", "1", "1", "2"],
        &["jvc", "9", "4"],
        &["jvc", "1", "4"],
        &["verify", "tables", "--max-n", "1"],
        &["verify", "everything"],
    ];
    for args in usage_or_domain {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}: no diagnostic");
    }
}

#[test]
fn errors_under_json_still_emit_a_document() {
    let o = run(&["jvc", "9", "4", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let doc: ReportDocument = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(serde_json::to_value(doc.status).unwrap(), "error");
    assert!(doc.results["error"]
        .as_str()
        .unwrap()
        .contains("not applicable"));
}
