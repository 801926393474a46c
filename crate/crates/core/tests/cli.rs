//! The binary's exit codes and output contracts.

use std::process::{Command, Output};

use factorcrit::emit_graph6;
use factorcrit::families::petersen;
use serde_json::Value;

fn factorcrit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_factorcrit"))
        .args(args)
        .env_remove("FACTORCRIT_MAX_WIDTH")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    factorcrit(args).status.code().expect("exited normally")
}

fn json(args: &[&str]) -> Value {
    let out = factorcrit(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(code(&["analyze", "zz!"]), 2);
    assert_eq!(code(&["analyze", "kneser:3:2"]), 2);
    assert_eq!(code(&["verify-theorem", "--max-order", "8"]), 2);
    assert_eq!(code(&["verify-theorem", "--max-order", "3"]), 2);
    assert_eq!(code(&["verify-lemma", "--id", "9.9"]), 2);
    assert_eq!(code(&["oracle-check", "--corpus", ""]), 2);
    assert_eq!(code(&["oracle-check", "--corpus", "bogus"]), 2);
    assert_eq!(code(&["analyze", "cycle:5", "--witness", "0,9"]), 2);
}

#[test]
fn resource_caps_exit_3() {
    assert_eq!(code(&["analyze", "complete:41"]), 3);
    assert_eq!(code(&["generate", "complete:65"]), 3);
    assert_eq!(code(&["verify-theorem", "--max-order", "33"]), 3);
}

#[test]
fn wide_graphs_need_the_width_switch() {
    let out = Command::new(env!("CARGO_BIN_EXE_factorcrit"))
        .args(["generate", "complete:65"])
        .env("FACTORCRIT_MAX_WIDTH", "128")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("~?@@~~~"));
}

#[test]
fn analyze_reports_and_undefined_values() {
    let r = json(&["analyze", "cycle:5", "--json"]);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["graph6"], "Dhc");
    assert_eq!(r["three_factor_critical"], false);
    assert_eq!(r["factor_critical"], true);
    assert_eq!(r["bicritical"], "undefined");
    assert_eq!(r["lambda_c"], "undefined");
    assert_eq!(r["vertex_transitive"], true);
    assert!(r.get("timings_ms").is_none());

    let star = json(&["analyze", "Cs", "--json"]);
    assert_eq!(star["n"], 4);
    assert_eq!(star["connected"], true);
    assert_eq!(star["edges"], 3);
    assert_eq!(star["vertex_transitive"], false);
    assert_eq!(star["lambda2"], "undefined");
}

#[test]
fn witness_round_trip() {
    let r = json(&["analyze", "cycle:7", "--json"]);
    let w = r["witnesses"]["three_factor_critical"].as_array().expect("C7 has a witness");
    let arg = w.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
    let check = json(&["analyze", "cycle:7", "--json", "--witness", &arg]);
    assert_eq!(check["witness_check"]["size"], 3);
    assert_eq!(check["witness_check"]["remainder_has_perfect_matching"], false);
}

#[test]
fn sweep_is_deterministic_and_passes() {
    let a = factorcrit(&["verify-theorem", "--max-order", "9", "--threads", "1"]);
    let b = factorcrit(&["verify-theorem", "--max-order", "9", "--threads", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["violation_count"], 0);
}

#[test]
fn lemma_and_oracle_commands_pass() {
    let v = json(&["verify-lemma", "--id", "2.4", "--max-order", "9"]);
    assert_eq!(v["passed"], true);
    let v = json(&["oracle-check", "--corpus", "random", "--samples", "20"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn generate_formats() {
    let out = factorcrit(&["generate", "petersen"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), emit_graph6(&petersen()));
    let out = factorcrit(&["generate", "circulants:7"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 3);
    let out = factorcrit(&["generate", "cycle:4", "--emit", "edges"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 4);
}
