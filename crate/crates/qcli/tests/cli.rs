//! End-to-end tests of the qblocks binary.

use std::process::Command;

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_qblocks"));
    cmd.args(args);
    cmd.env_remove("QBLOCKS_DEPTH");
    cmd.env_remove("QBLOCKS_BOUND");
    cmd.env_remove("QBLOCKS_CAP");
    for (key, value) in env {
        cmd.env(key, value);
    }
    let output = cmd.output().expect("qblocks runs");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8(output.stdout).expect("stdout is UTF-8"),
        String::from_utf8(output.stderr).expect("stderr is UTF-8"),
    )
}

fn qblocks(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

#[test]
fn classify_reports_the_principal_block() {
    let (code, out, _) = qblocks(&["classify", "2,0,-2", "--algebra", "q"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""blockClass":"Principal""#), "{out}");
}

#[test]
fn projectives_show_the_pinned_trivial_row() {
    let (code, out, _) = qblocks(&["projectives", "0,0,0", "--algebra", "sq"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""P(0)": {"C":4,"L1":2,"L2":2}"#), "{out}");
}

#[test]
fn non_dominant_weights_are_usage_errors() {
    let (code, out, err) = qblocks(&["classify", "1,1,1"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("not dominant"), "{err}");
}

#[test]
fn half_integral_weights_parse() {
    let (code, out, _) = qblocks(&["classify", "3/2,1/2,-1/2", "--algebra", "sq"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""blockClass":"HalfStandard""#), "{out}");
}

#[test]
fn mixed_parity_weights_are_rejected() {
    let (code, _, err) = qblocks(&["classify", "3/2,1,0"]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"), "{err}");
}

#[test]
fn bad_coordinates_are_usage_errors() {
    let (code, _, err) = qblocks(&["classify", "1,banana,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("bad weight coordinate"), "{err}");
}

#[test]
fn wrong_rank_is_rejected() {
    let (code, _, err) = qblocks(&["classify", "1,0"]);
    assert_eq!(code, 2);
    assert!(err.contains("expected 3 coordinates"), "{err}");
}

#[test]
fn unknown_subcommands_exit_two() {
    let (code, _, err) = qblocks(&["frobnicate"]);
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = qblocks(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("qblocks"), "{out}");
}

#[test]
fn reports_are_byte_stable() {
    for args in [
        vec!["classify", "2,1,0", "--algebra", "sq"],
        vec!["projectives", "1,0,0", "--algebra", "q"],
        vec!["euler", "3,2,1", "--depth", "10"],
    ] {
        let first = qblocks(&args);
        let second = qblocks(&args);
        assert_eq!(first, second, "unstable output for {args:?}");
    }
}

#[test]
fn environment_defaults_match_flags() {
    let (code, flagged, _) = qblocks(&["euler", "2,1,0", "--depth", "5"]);
    assert_eq!(code, 0);
    let (code, via_env, _) = run_with_env(&["euler", "2,1,0"], &[("QBLOCKS_DEPTH", "5")]);
    assert_eq!(code, 0);
    assert_eq!(flagged, via_env);
    // An explicit flag wins over the environment.
    let (code, both, _) =
        run_with_env(&["euler", "2,1,0", "--depth", "5"], &[("QBLOCKS_DEPTH", "7")]);
    assert_eq!(code, 0);
    assert_eq!(flagged, both);
}

#[test]
fn invalid_environment_values_are_usage_errors() {
    let (code, _, err) = run_with_env(&["euler", "2,1,0"], &[("QBLOCKS_DEPTH", "banana")]);
    assert_eq!(code, 2);
    assert!(err.contains("QBLOCKS_DEPTH"), "{err}");
}

#[test]
fn euler_vanishes_at_the_origin() {
    let (code, out, _) = qblocks(&["euler", "0,0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""terms":[]"#), "{out}");
}

#[test]
fn euler_warns_at_non_dominant_weights() {
    let (code, out, _) = qblocks(&["euler", "0,1,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("sign-twisted"), "{out}");
}

#[test]
fn quiver_emits_dot() {
    let (code, out, _) = qblocks(&["quiver", "2,1,0", "--dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"), "{out}");
}

#[test]
fn quiver_writes_dot_to_a_file() {
    let path = std::env::temp_dir().join("qblocks-test-quiver.dot");
    let path_str = path.to_str().expect("temp path is UTF-8");
    let (code, out, _) = qblocks(&["quiver", "0,0,0", "--algebra", "sq", "-o", path_str]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""path":"#), "{out}");
    let written = std::fs::read_to_string(&path).expect("DOT file written");
    assert!(written.starts_with("digraph"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn wildness_calls_the_q_principal_block_wild() {
    let (code, out, _) = qblocks(&["wildness", "0,0,0"]);
    assert_eq!(code, 0);
    assert!(out.contains(r#""verdict":"wild""#), "{out}");
    assert!(out.contains(r#""degree":3"#), "{out}");
}

#[test]
fn filtration_lists_parity_twisted_layers() {
    let (code, out, _) = qblocks(&["filtration", "0,0,0", "--algebra", "sq"]);
    assert_eq!(code, 0);
    assert!(out.contains("\u{03a0}L(0,0,0)"), "{out}");
    assert!(out.contains(r#""nilpotency":5"#), "{out}");
}

#[test]
fn filtration_accepts_vertex_indices_and_labels() {
    let by_index = qblocks(&["filtration", "0,0,0", "--algebra", "sq", "--vertex", "1"]);
    assert_eq!(by_index.0, 0);
    let by_label =
        qblocks(&["filtration", "0,0,0", "--algebra", "sq", "--vertex", "\u{03a0}L(0,0,0)"]);
    assert_eq!(by_label.0, 0);
    assert_ne!(by_index.1, by_label.1);
    let missing = qblocks(&["filtration", "0,0,0", "--algebra", "sq", "--vertex", "L(9,9,9)"]);
    assert_eq!(missing.0, 2);
}
