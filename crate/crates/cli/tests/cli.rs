use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinhecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn commutator_of_y1_and_x1() {
    let o = run(&["comm", "--algebra", "dahca", "--type", "A", "--n", "2", "y1", "x1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-u*w[2,1] + u*c1*c2*w[2,1]");
}

#[test]
fn covering_variables_skew_commute() {
    let o = run(&["nf", "--algebra", "cdaha", "--type", "A", "--n", "2", "xt2*xt1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "z*xt1*xt2");
}

#[test]
fn verify_exit_status() {
    let o = run(&["verify", "--suite", "assoc", "--type", "D", "--n", "3", "--budget", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 failures"));
    let o = run(&["verify", "--suite", "bogus"]);
    assert_ne!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown suite"));
}

#[test]
fn verify_json_report() {
    let o = run(&["verify", "--suite", "cocycle", "--type", "B", "--n", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["suite"], "cocycle");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["attempted"].as_u64().unwrap() > 0);
}

#[test]
fn parse_errors_are_reported_with_offsets() {
    let o = run(&["nf", "--n", "3", "x9"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("index out of range at offset 0"));
    let o = run(&["nf", "--algebra", "sdaha", "x1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown token"));
}

#[test]
fn nf_json_terms() {
    let o = run(&["nf", "--json", "y1*x1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(v["text"], "-u*w[2,1] + u*c1*c2*w[2,1] + x1*y1");
}

#[test]
fn maps_round_trip_through_text() {
    let o = run(&["map", "--which", "phi", "x1*y1"]);
    assert_eq!(stdout(&o), "(z8 + z8^3)*c1 (x) xi1*y1");
    let o = run(&["map", "--which", "psi", "(z8 + z8^3)*c1 (x) xi1*y1"]);
    assert_eq!(stdout(&o), "x1*y1");
    let o = run(&["map", "--which", "upsilon-", "z*xt1"]);
    assert_eq!(stdout(&o), "-xi1");
    let o = run(&["map", "--which", "upsilon+", "z*xt1 + tt1"]);
    assert_eq!(stdout(&o), "w[2,1] + x1");
}

#[test]
fn dunkl_actions() {
    let o = run(&["dunkl", "--vars", "x", "--f", "x1^2", "--m", "c1"]);
    assert_eq!(stdout(&o), "x1^2 (x) c1");
    let o = run(&["dunkl", "--vars", "x", "--f", "x1 + x2", "--m", "1", "--act", "y1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["dunkl", "--algebra", "sdaha", "--vars", "x", "--f", "x1"]);
    assert_eq!(o.status.code(), Some(2));
}
