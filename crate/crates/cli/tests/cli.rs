use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nikolskii"))
        .args(args)
        .env_remove("NIKOLSKII_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn table_csv_has_ten_rows() {
    let out = run(&["--format", "csv", "table", "--d-max", "10"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines[0].starts_with("d,"));
    let header: Vec<&str> = lines[0].split(',').collect();
    let col = header.iter().position(|h| *h == "upper").unwrap();
    let first: f64 = lines[1].split(',').nth(col).unwrap().parse().unwrap();
    assert!((first - 0.589).abs() < 5e-4);
}

#[test]
fn envelope_and_byte_stability() {
    let args = ["a0", "--alpha", "0", "--method", "all"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "a0");
    assert_eq!(v["config"]["method"], "all");
    assert_eq!(v["passed"], true);
    let routes = v["result"]["estimates"].as_array().expect("one entry per route");
    assert!(routes.len() >= 3);
    let vals: Vec<f64> = routes.iter().map(|r| r["value"].as_f64().unwrap()).collect();
    assert!(vals.iter().all(|x| (x - 0.38217196584712142).abs() < 1e-8));
}

#[test]
fn zeros_of_half_order() {
    let v = json(&["zeros", "--alpha", "0.5", "--k", "5"]);
    let zeros = v["result"]["zeros"].as_array().unwrap();
    assert_eq!(zeros.len(), 5);
    for (k, z) in zeros.iter().enumerate() {
        assert!((z.as_f64().unwrap() - (k + 1) as f64 * std::f64::consts::PI).abs() < 1e-12);
    }
}

#[test]
fn usage_and_precondition_errors_exit_with_two() {
    assert_eq!(run(&["table", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--alpha", "-0.4"]).status.code(), Some(2));
    assert_eq!(run(&["sphere", "--n", "4", "--d", "2", "--p", "3"]).status.code(), Some(2));
}

#[test]
fn exploratory_flag_lifts_the_guard() {
    let out = run(&["--exploratory", "lemma61", "--alpha", "-0.3", "--u-count", "3", "--horizon", "40"]);
    assert_ne!(out.status.code(), Some(2));
}

#[test]
fn sphere_and_remez() {
    let v = json(&["sphere", "--n", "5", "--d", "2", "--p", "2"]);
    assert!((v["result"]["value"].as_f64().unwrap() - 6.0).abs() < 1e-12);
    let v = json(&["sphere", "--n", "8", "--d", "1", "--grid-check"]);
    assert_eq!(v["passed"], true);
    let v = json(&["remez", "--d", "1"]);
    let r = &v["result"]["rows"][0];
    assert!((r["lower"].as_f64().unwrap() - 2.664670591941592).abs() < 1e-9);
}

#[test]
fn cache_directory_receives_a_snapshot() {
    let dir = std::env::temp_dir().join(format!("nikolskii-cli-cache-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_nikolskii"))
        .args(["zeros", "--alpha", "1.25", "--k", "4"])
        .env("NIKOLSKII_CACHE_DIR", &dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    let snap: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("zeros.json")).unwrap()).unwrap();
    assert!(snap.is_object() || snap.is_array());
    std::fs::remove_dir_all(&dir).unwrap();
}
