use std::process::{Command, Output};

use galilei::report::Report;

fn galilei(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_galilei"))
        .args(args)
        .output()
        .expect("run galilei")
}

fn structured(args: &[&str]) -> Report {
    let mut all = vec!["--format", "structured"];
    all.extend_from_slice(args);
    let out = galilei(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    Report::from_json(&String::from_utf8(out.stdout).unwrap()).expect("valid report")
}

#[test]
fn series_methods_agree() {
    let r = structured(&[
        "genfun", "series", "--k", "4", "--l", "2", "--degree", "12", "--method", "all",
    ]);
    assert!(r.all_pass());
    assert_eq!(
        r.command.split_whitespace().take(2).collect::<Vec<_>>(),
        ["genfun", "series"]
    );
}

#[test]
fn text_output_ends_with_wall_time() {
    let out = galilei(&["young", "rank", "--upto", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# young rank"));
    assert!(text
        .trim_end()
        .lines()
        .last()
        .unwrap()
        .starts_with("wall time:"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("radical.json");
    let out = galilei(&[
        "quiver",
        "radical",
        "--top",
        "V'(0)",
        "--depth",
        "2",
        "--format",
        "structured",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let r = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.params["top"], "V'(0)");
}

#[test]
fn usage_errors_exit_nonzero() {
    for args in [
        &["genfun", "series", "--k", "4"][..],
        &["young", "rank", "--upto", "3", "--bogus"],
        &["quiver", "radical", "--top", "W(3)", "--depth", "1"],
        &["sl2", "q0", "--l", "3", "--table"],
    ] {
        let out = galilei(args);
        assert!(!out.status.success(), "{args:?} should fail");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn failing_claims_set_exit_code_one() {
    let out = galilei(&["verify", "all", "--quick"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    let failed: Vec<_> = stderr
        .lines()
        .filter(|l| l.starts_with("FAILED:"))
        .collect();
    assert_eq!(
        out.status.code(),
        Some(if failed.is_empty() { 0 } else { 1 })
    );
}
