//! End-to-end tests of the `schur` binary: output formats, exit codes, and
//! the stability of the JSON documents it emits.

use std::process::{Command, Output};

use schur_core::verify::enumerate_classes;

fn schur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(args)
        .output()
        .expect("the binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is text")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is text")
}

fn json_of(output: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(output).trim_end()).expect("stdout is one JSON document")
}

#[test]
fn act_applies_words_to_partitions() {
    let out = schur(&["act", "32", "(3,1)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "(3,3)\n");

    let out = schur(&["act", "232", "(3,1)"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n");

    let out = schur(&["act", "21", "()"]);
    assert_eq!(stdout(&out), "(2)\n");
}

#[test]
fn act_emits_json() {
    let out = schur(&["--json", "act", "32", "(3,1)"]);
    let v = json_of(&out);
    assert_eq!(v["word"], serde_json::json!([3, 2]));
    assert_eq!(v["partition"], serde_json::json!([3, 1]));
    assert_eq!(v["result"], serde_json::json!([3, 3]));

    let out = schur(&["--json", "act", "232", "(3,1)"]);
    assert_eq!(json_of(&out)["result"], serde_json::json!(0));
}

#[test]
fn malformed_input_exits_with_code_two() {
    let out = schur(&["act", "bogus", "(1)"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid word"));

    let out = schur(&["act", "21", "3,"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invalid partition"));

    let out = schur(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stats_prints_both_vectors() {
    let out = schur(&["stats", "32231114"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "w=(3,2,2,1) alpha=(0,1,1)\n");

    // Alpha vectors are stored with trailing zeros stripped.
    let out = schur(&["--json", "stats", "2321"]);
    let v = json_of(&out);
    assert_eq!(v["weight"], serde_json::json!([1, 2, 1]));
    assert_eq!(v["alpha"], serde_json::json!([1]));
}

#[test]
fn equiv_explains_equivalent_pairs() {
    let out = schur(&["equiv", "2321", "2312"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("equivalent\n"));
    assert!(text.contains("braid4(1) forward at 0"));

    let v = json_of(&schur(&["--json", "equiv", "2321", "2312"]));
    assert_eq!(v["equivalent"], serde_json::json!(true));
    assert_eq!(v["witness"], serde_json::Value::Null);
    assert_eq!(v["derivation"]["steps"].as_array().unwrap().len(), 1);
}

#[test]
fn equiv_explains_inequivalent_pairs() {
    let out = schur(&["equiv", "12", "21"]);
    assert!(out.status.success(), "without --exit-status the report itself succeeds");
    let text = stdout(&out);
    assert!(text.starts_with("inequivalent\n"));
    assert!(text.contains("witness: ()"));

    let out = schur(&["equiv", "12", "21", "--exit-status"]);
    assert_eq!(out.status.code(), Some(1));

    let v = json_of(&schur(&["--json", "equiv", "12", "21"]));
    assert_eq!(v["equivalent"], serde_json::json!(false));
    assert_eq!(v["witness"], serde_json::json!([]));
    assert_eq!(v["derivation"], serde_json::Value::Null);
}

#[test]
fn equiv_truncates_long_derivations_unless_asked() {
    // A run of twenty 3s between the 2s forces a long chain.
    let x = format!("2{}21", "3".repeat(20));
    let y = format!("2{}12", "3".repeat(20));
    let out = schur(&["equiv", &x, &y]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("steps: 79"));
    assert!(text.contains("--full"));
    assert!(!text.contains("braid4(1)"), "steps are withheld without --full");

    let out = schur(&["equiv", &x, &y, "--full"]);
    let text = stdout(&out);
    assert!(text.contains("steps: 79"));
    assert!(!text.contains("--full to list"));
    assert!(text.contains("braid4(1)"));
}

#[test]
fn rsk_prints_the_tableau_pair() {
    let out = schur(&["rsk", "32231114"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "P:\n1 1 1 4\n2 2 3\n3\nQ:\n1 3 4 8\n2 6 7\n5\n");

    let v = json_of(&schur(&["--json", "rsk", "121"]));
    assert_eq!(v["p"], serde_json::json!([[1, 1], [2]]));
    assert_eq!(v["q"], serde_json::json!([[1, 2], [3]]));
}

#[test]
fn derive_emits_the_full_chain() {
    let out = schur(&["derive", "23443231", "23443132"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("steps: 21\n"));
    // All 21 steps are listed even without --full.
    assert_eq!(text.lines().count(), 23);
    assert!(text.contains("23443123"), "the chain passes the canonical interleaving");
}

#[test]
fn derive_json_matches_the_checked_in_chains() {
    let out = schur(&["--json", "derive", "23443231", "23443123"]);
    assert_eq!(
        stdout(&out).trim_end(),
        include_str!("fixtures/worked_example_stage1.json").trim_end()
    );
    let out = schur(&["--json", "derive", "23443123", "23443132"]);
    assert_eq!(
        stdout(&out).trim_end(),
        include_str!("fixtures/worked_example_stage2.json").trim_end()
    );
}

#[test]
fn derive_rejects_inequivalent_words() {
    let out = schur(&["derive", "12", "21"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("not equivalent"));
}

#[test]
fn derive_respects_the_budget() {
    let out = schur(&["derive", "23443231", "23443132", "--budget", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn verify_reports_every_length() {
    let out = schur(&["--json", "verify", "3", "4"]);
    assert!(out.status.success());
    let v = json_of(&out);
    assert_eq!(v["ok"], serde_json::json!(true));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 4);
    for (index, report) in reports.iter().enumerate() {
        assert_eq!(report["n"], serde_json::json!(3));
        assert_eq!(report["l"], serde_json::json!(index + 1));
        assert_eq!(report["classes"], report["components"]);
        assert!(report["mismatches"].as_array().unwrap().is_empty());
    }
}

#[test]
fn verify_flags_a_missing_family() {
    let out = schur(&["verify", "3", "4", "--without", "braid4"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("MISMATCH"));
    assert!(text.contains("overall: mismatch"));

    let v = json_of(&schur(&["--json", "verify", "3", "4", "--without", "braid4"]));
    assert_eq!(v["ok"], serde_json::json!(false));
    let mismatches = v["reports"][3]["mismatches"].as_array().unwrap();
    assert!(!mismatches.is_empty());
    assert_eq!(mismatches[0]["kind"], serde_json::json!("split_class"));
    assert_eq!(mismatches[0]["x"], serde_json::json!([2, 1, 3, 2]));
    assert_eq!(mismatches[0]["y"], serde_json::json!([2, 3, 2, 1]));
}

#[test]
fn verify_rejects_unknown_families_and_caps() {
    let out = schur(&["verify", "3", "4", "--without", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));

    let out = schur(&["verify", "3", "9", "--budget", "100"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("exceeds the cap"));
}

#[test]
fn verify_records_the_seed_and_ignores_thread_count() {
    let v = json_of(&schur(&["--json", "--seed", "7", "verify", "2", "2"]));
    assert_eq!(v["reports"][0]["seed"], serde_json::json!(7));

    let default_run = stdout(&schur(&["--json", "verify", "3", "4"]));
    let pinned_run = stdout(&schur(&["--json", "--threads", "2", "verify", "3", "4"]));
    assert_eq!(default_run, pinned_run);
}

#[test]
fn classes_match_the_library_enumeration() {
    let v = json_of(&schur(&["--json", "classes", "3", "3"]));
    let expected = enumerate_classes(3, 3, 1_000_000).unwrap();
    assert_eq!(v["n"], serde_json::json!(3));
    assert_eq!(v["l"], serde_json::json!(3));
    assert_eq!(v["count"], serde_json::json!(expected.len()));
    let entries = v["classes"].as_array().unwrap();
    assert_eq!(entries.len(), expected.len());
    for (entry, ((weight, alpha), members)) in entries.iter().zip(expected.iter()) {
        assert_eq!(entry["weight"], serde_json::to_value(weight).unwrap());
        assert_eq!(entry["alpha"], serde_json::to_value(alpha).unwrap());
        assert_eq!(entry["size"], serde_json::json!(members.len()));
        assert_eq!(entry["representative"], serde_json::to_value(&members[0]).unwrap());
    }
}

#[test]
fn json_documents_reparse_to_identical_bytes() {
    let runs: &[&[&str]] = &[
        &["--json", "act", "32", "(3,1)"],
        &["--json", "stats", "32231114"],
        &["--json", "equiv", "2321", "2312"],
        &["--json", "equiv", "12", "21"],
        &["--json", "rsk", "32231114"],
        &["--json", "derive", "23443231", "23443132"],
        &["--json", "verify", "3", "3"],
        &["--json", "classes", "3", "3"],
    ];
    for args in runs {
        let out = schur(args);
        let text = stdout(&out);
        let trimmed = text.trim_end();
        assert_eq!(text.lines().count(), 1, "{args:?} prints one document");
        let value: serde_json::Value = serde_json::from_str(trimmed).unwrap();
        assert_eq!(
            serde_json::to_string(&value).unwrap(),
            trimmed,
            "{args:?} survives a parse/re-render round trip byte for byte"
        );
    }
}
