use std::process::{Command, Output};

use ctilde::{Germ, PeriodicPermutation};

fn ctilde(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ctilde")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn normalize_coxeter_word_is_delta() {
    let out = ctilde(&["normalize", "-n", "2", "s0 s2 s1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "D^1 |\n");
}

#[test]
fn normalize_empty_word() {
    assert_eq!(stdout(&ctilde(&["normalize", "-n", "2", ""])), "D^0 |\n");
}

#[test]
fn eq_encodes_the_answer_in_the_exit_code() {
    assert_eq!(ctilde(&["eq", "-n", "2", "s0 s1 s0 s1", "s1 s0 s1 s0"]).status.code(), Some(0));
    assert_eq!(ctilde(&["eq", "-n", "2", "s0 s1 s0", "s1 s0 s1"]).status.code(), Some(1));
    assert_eq!(ctilde(&["eq", "-n", "3", "s1 s2 s1", "s2 s1 s2"]).status.code(), Some(0));
}

#[test]
fn exit_codes() {
    assert_eq!(ctilde(&["normalize", "-n", "2", "s7"]).status.code(), Some(1));
    assert_eq!(ctilde(&["normalize", "q1"]).status.code(), Some(2));
    assert_eq!(ctilde(&["lcm", "(1,3", "(2,3)"]).status.code(), Some(2));
    assert_eq!(ctilde(&["gcd", "(1,4)(2,3)", "(2,3)"]).status.code(), Some(1));
    assert_eq!(ctilde(&["bogus"]).status.code(), Some(2));
}

#[test]
fn json_errors_are_machine_readable() {
    let out = ctilde(&["divides", "--format", "json", "(1,2", "(2,3)"]);
    assert_eq!(out.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
}

#[test]
fn json_normal_form() {
    let out = ctilde(&["normalize", "--format", "json", "s0 s2 s1 s1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["delta_power"], 1);
    assert_eq!(v["body"].as_array().unwrap().len(), 1);
}

#[test]
fn printed_divisors_reparse_as_members() {
    let out = ctilde(&["divisors", "-n", "2", "-K", "1"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# window 1, truncated"));
    let germ = Germ::ctilde(2).unwrap();
    let mut count = 0;
    for line in lines {
        let w = PeriodicPermutation::parse(line, 4).unwrap();
        assert!(germ.member(&w).is_ok(), "{line}");
        count += 1;
    }
    assert_eq!(count, germ.enumerate_sigma(1).len());
}

#[test]
fn lcm_is_a_common_multiple() {
    let lcm = stdout(&ctilde(&["lcm", "(2,3)", "(1,2)(3,4)"]));
    for x in ["(2,3)", "(1,2)(3,4)"] {
        assert_eq!(stdout(&ctilde(&["divides", x, lcm.trim()])), "true\n");
    }
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["present", "-n", "3", "-K", "1"][..],
        &["draw", "-n", "2", "(1,3)(2,4)"],
        &["hurwitz", "-n", "2", "-K", "1", "--format", "json"],
        &["centralize", "-n", "3", "3"],
    ] {
        assert_eq!(ctilde(args).stdout, ctilde(args).stdout, "{args:?}");
    }
}

#[test]
fn draw_nine_periodic_cycle() {
    let out = ctilde(&["draw", "--period", "9", "--x-residues", "5,6,7,8,9", "(5,7,8,3,2)"]);
    assert!(out.status.success());
    let svg = stdout(&out);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(ctilde(&["draw", "(1,4)(2,3)"]).status.code(), Some(1));
}
