use std::process::{Command, Output};

use serde_json::Value;

fn fowidth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fowidth")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = fowidth(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn construct_accepts_all_graph_forms() {
    let named = json(&["construct", "rook:3"]);
    assert_eq!(named["n"], 9);
    assert_eq!(named["connectivity"], 4);
    let literal = json(&["construct", named["graph6"].as_str().unwrap()]);
    assert_eq!(literal, named);
    let power = json(&["construct", "complete:1", "--power", "4"]);
    assert_eq!(power["n"], 8);
    assert_eq!(power["cograph"], true);
}

#[test]
fn pebble_ea_and_bounds() {
    let game = json(&["pebble", "--g", "complete:4", "--h", "complete:3", "--k", "3"]);
    assert_eq!(game["outcome"]["kind"], "infinity");
    assert_eq!(json(&["ea", "--graph", "paley:13", "--k", "3"])["holds"], true);
    let turan = json(&["bounds", "--turan", "3"]);
    assert_eq!(turan["least_n_below_one"], 35);
    assert_eq!(turan["least_n_below_one_twentieth"], 48);
    assert_eq!(json(&["bounds", "--ell", "16"])["n"], 128);
}

#[test]
fn json_flag_writes_the_same_document() {
    let path = std::env::temp_dir().join(format!("fowidth-cli-{}.json", std::process::id()));
    let shown = json(&["--json", path.to_str().unwrap(), "decompose", "--in", "path:4"]);
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(shown, written);
    assert_eq!(shown["cograph"], false);
}

#[test]
fn verify_paper_filters_and_reports() {
    let listed = json(&["verify-paper", "--list", "--filter", "paw"]);
    assert_eq!(listed.as_array().unwrap().len(), 1);
    let out = fowidth(&["--profile", "quick", "verify-paper", "--filter", "sec4*"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("sec4.w-k4-k3"));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["failed"], 0);
    assert_eq!(report["results"][0]["status"], "pass");
}

#[test]
fn bad_input_exits_with_code_two() {
    let out = fowidth(&["construct", "nonsense:1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}
