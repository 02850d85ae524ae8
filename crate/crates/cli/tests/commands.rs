use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringcodes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

#[test]
fn gray_of_the_torsion_line() {
    let out = run(&["gray", "-p", "2", "-n", "4", "uvw*g^3", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["length"], 32);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["distance"], 32);
    assert_eq!(v["exact"], true);
}

#[test]
fn rank_of_two_generators() {
    let out = run(&["rank", "-p", "3", "-n", "3", "uw*g^2+vw*g", "vw*g^2", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["spanning_set"].as_array().unwrap().len(), 3);
}

#[test]
fn distance_uses_the_theorem_at_prime_power_length() {
    let out = run(&["distance", "-p", "2", "-n", "4", "uvw*g^2", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["theorem"]["distance"], 2);
    assert_eq!(v["oracle"]["distance"], 2);
    // no theorem path when n is not a power of p
    let out = run(&["distance", "-p", "2", "-n", "6", "uvw*g^2", "--json"]);
    let v = json(&out);
    assert!(v.get("theorem").is_none());
    assert_eq!(v["oracle"]["distance"], 2);
}

#[test]
fn canon_and_verify() {
    let out = run(&["canon", "-p", "2", "-n", "4", "vwg^2+uvw", "uvwg", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["t"], serde_json::json!([4, 4, 4, 4, 4, 4, 2, 1]));
    let out = run(&["verify", "-p", "2", "-n", "4", "vwg^2+uvw", "uvwg", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["all_checked_pass"], true);
    assert_eq!(v["conditions"].as_array().unwrap().len(), 21);
}

#[test]
fn oracle_command() {
    let out = run(&["oracle", "-p", "2", "-n", "4", "uvwg^3", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["hamming"]["distance"], 4);
    assert_eq!(v["lee"]["weight"], 32);
    assert_eq!(v["free"], false);
}

#[test]
fn sweep_reports_every_binding() {
    let out = run(&["rank", "-p", "2", "-n", "4", "vwg^2+(c_0+c_1x)uvw", "--sweep", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["bindings"], 4);
    assert_eq!(v["exhaustive"], true);
    let fixed = run(&["rank", "-p", "2", "-n", "4", "vwg^2+(c_0+c_1x)uvw", "--set", "c0=1", "--sweep", "--json"]);
    assert_eq!(json(&fixed)["bindings"], 2);
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["canon", "-p", "3", "-n", "3", "uwg+c_2vw+c_1uvw, vwg+c_0uvw", "--set", "c0=1", "--set", "c1=2", "--set", "c2=0", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn input_errors_exit_with_two() {
    for args in [
        vec!["rank", "-p", "4", "-n", "3", "u"],
        vec!["rank", "-p", "17", "-n", "3", "u"],
        vec!["rank", "-p", "3", "-n", "3", "u+"],
        vec!["rank", "-p", "3", "-n", "3", "c0*u"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("error JSON on stderr");
        assert!(err["error"].is_string() && err["message"].is_string());
    }
    let out = run(&["rank", "-p", "3", "-n", "3", "c0*u"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "unbound-constants");
    assert!(err["message"].as_str().unwrap().contains("c0"));
}

#[test]
fn budget_exhaustion_exits_with_one() {
    let out = run(&["gray", "-p", "3", "-n", "3", "1", "--budget", "1000", "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["exact"], false);
}

#[test]
fn tables_diff_the_binary_images() {
    let out = run(&["tables", "--table", "T2", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["verdict"], "match");
    assert_eq!(v["summary"]["budget"], 0);
    let tsv = run(&["tables", "--table", "T4", "--tsv"]);
    let text = String::from_utf8(tsv.stdout).unwrap();
    assert!(text.starts_with("table\tgenerators\tprinted\tcomputed\tverdict\n"));
    assert!(text.contains("skipped"));
}
