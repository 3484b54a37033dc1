//! End-to-end tests of the `zigzag` binary: output contracts and exit codes
//! (0 success, 1 verification mismatch, 2 usage/parse error).

use std::process::{Command, Output};

use zigzag::counting::{build_table, CountTable, CountTableDoc};
use zigzag::words::Orientation;

fn zigzag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zigzag"))
        .args(args)
        .output()
        .expect("failed to run binary")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn count_both_prints_match_and_succeeds() {
    let out = zigzag(&["count", "132", "--k", "5", "--n", "8", "--method", "both"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("brute-force: 1701"), "{text}");
    assert!(text.contains("formula:     1701"), "{text}");
    assert!(text.contains("MATCH"), "{text}");
}

#[test]
fn count_single_method_prints_bare_number() {
    let out = zigzag(&["count", "1-2-3", "--k", "2", "--n", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1");

    let out = zigzag(&["count", "312", "--k", "5", "--n", "9", "--method", "brute"]);
    assert_eq!(stdout(&out).trim(), "4089");

    let out = zigzag(&[
        "count", "312", "--k", "5", "--n", "9", "--method", "formula",
    ]);
    assert_eq!(stdout(&out).trim(), "4089");
}

#[test]
fn count_supports_downup_orientation() {
    // down-up avoiders of p = up-down avoiders of complement(p)
    let out = zigzag(&[
        "count",
        "132",
        "--k",
        "4",
        "--n",
        "6",
        "--orientation",
        "down-up",
        "--method",
        "both",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("MATCH"));
}

#[test]
fn bad_pattern_is_a_usage_error() {
    let out = zigzag(&["count", "124", "--k", "4", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = zigzag(&["count", "1--23", "--k", "4", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));

    let out = zigzag(&["table", "xyz", "4", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_csv_has_header_and_exact_counts() {
    let out = zigzag(&["table", "132", "4", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("k,n,count"));
    assert!(text.lines().any(|l| l == "4,6,90"), "{text}");
    assert_eq!(text.lines().count(), 1 + 3 * 7);
}

#[test]
fn table_json_round_trips_entry_by_entry() {
    let out = zigzag(&["table", "312", "5", "9", "--format", "json"]);
    assert!(out.status.success());
    let doc: CountTableDoc = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.convention_divergence_at_n1);
    let parsed = CountTable::from_doc(&doc).unwrap();
    let rebuilt = build_table(&"312".parse().unwrap(), Orientation::UpDown, 5, 9);
    assert_eq!(parsed, rebuilt);
}

#[test]
fn table_plain_marks_the_length_one_column() {
    let out = zigzag(&["table", "312", "5", "3"]);
    let text = stdout(&out);
    assert!(text.contains("1*"), "{text}");
    assert!(text.contains("true count of length-1 words"), "{text}");

    let out = zigzag(&["table", "132", "5", "3"]);
    let text = stdout(&out);
    assert!(!text.contains('*'), "{text}");
}

#[test]
fn wilf_defaults_match_every_class() {
    let out = zigzag(&["wilf"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches("verdict: MATCH").count(), 2, "{text}");
    assert!(
        text.contains("class A: 132  213  1-23  1-32  12-3  21-3"),
        "{text}"
    );
    assert!(
        text.contains("class D: 213  312  3-12  3-21  12-3  21-3"),
        "{text}"
    );
}

#[test]
fn wilf_tiny_scale_is_inconclusive_not_failing() {
    let out = zigzag(&["wilf", "--k-max", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("INCONCLUSIVE"));
}

#[test]
fn wilf_even_only_covers_consecutive_pairs() {
    let out = zigzag(&["wilf", "--parity", "even"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("class K: 123  321"), "{text}");
    assert!(text.contains("class C: 231  312"), "{text}");
    assert!(!text.contains("odd lengths"), "{text}");
}

#[test]
fn classes_lists_paths_counts_and_members() {
    let out = zigzag(&["classes", "5", "--i", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for path in ["UUUDDD", "UUDDUD", "UUDUDD", "UDUUDD", "UDUDUD"] {
        assert!(text.contains(path), "missing {path} in {text}");
    }
    assert!(text.contains("total words of length 2: 10"), "{text}");

    let out = zigzag(&["classes", "5", "--i", "2", "--list-members"]);
    let text = stdout(&out);
    for member in [
        "2412", "2413", "2414", "2424", "2524", "3524", "4524", "3423",
    ] {
        assert!(text.contains(member), "missing {member} in {text}");
    }

    let out = zigzag(&["classes", "3"]);
    let text = stdout(&out);
    assert!(
        text.contains("1 cut-equivalence classes for k = 3"),
        "{text}"
    );
    assert!(text.contains("path UD "), "{text}");

    let out = zigzag(&["classes", "5", "--list-members"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dyck_converts_both_ways() {
    let out = zigzag(&["dyck", "--k", "5", "UUDUDD"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("class {(2,4)}"));

    let out = zigzag(&["dyck", "--k", "5", "--pairs", "3:4,2:3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("path UDUDUD"), "{text}");
    assert!(text.contains("valleys 2"), "{text}");

    let out = zigzag(&["dyck", "--k", "5", "--pairs", "34,23"]);
    assert!(stdout(&out).contains("path UDUDUD"));

    // wrong semi-length and malformed paths are usage errors
    let out = zigzag(&["dyck", "--k", "5", "UD"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zigzag(&["dyck", "--k", "4", "UDDU"]);
    assert_eq!(out.status.code(), Some(2));
    let out = zigzag(&["dyck", "--k", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let out = zigzag(&["verify", "--suite", "bijection"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("suite bijection: PASS"));

    let out = zigzag(&["verify", "--suite", "tables"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("suite tables: PASS"));
}

#[test]
fn verify_all_passes() {
    let out = zigzag(&["verify"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for suite in ["tables", "wilf", "bijection", "formulas"] {
        assert!(text.contains(&format!("suite {suite}: PASS")), "{text}");
    }
}
