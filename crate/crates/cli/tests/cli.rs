use std::process::{Command, Output};

fn leavitt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leavitt")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn profile_prints_the_h_sequence() {
    let o = leavitt(&["profile", "--n", "35", "--d", "13"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("hseq 1,6,11,3,8,13,5,10,2,7,12,4,9"));
}

#[test]
fn profile_json_uses_snake_case() {
    let o = leavitt(&["profile", "--n", "5", "--d", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["profile"]["hseq"], serde_json::json!([1, 3, 2]));
    assert!(v["counts"]["list_size"].is_u64());
}

#[test]
fn verify_certifies() {
    let o = leavitt(&["verify", "--n", "5", "--d", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("certified"));
}

#[test]
fn verify_over_a_prime_field() {
    let o = Command::new(env!("CARGO_BIN_EXE_leavitt"))
        .args(["verify", "--n", "8", "--d", "5"])
        .env("LEAVITT_FIELD", "fp<65537>")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(env!("CARGO_BIN_EXE_leavitt"))
        .args(["verify", "--n", "5", "--d", "3"])
        .env("LEAVITT_FIELD", "fp<4>")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn lexicographic_target_is_inconclusive() {
    let o = leavitt(&["verify", "--fixture", "m3l5_lex", "--target", "1,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("inconclusive"));
}

#[test]
fn classify_rejects_size_two_over_l5() {
    let o = leavitt(&["classify", "--n", "5", "--d", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["compare"]["isomorphic"], false);
    assert_eq!(v["k0"]["modulus"], 4);
    let o = leavitt(&["classify", "--n", "5", "--d", "3", "--m", "5", "--k", "1"]);
    assert!(stdout(&o).contains("isomorphic to L_5"));
    assert!(!stdout(&o).contains("not isomorphic"));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(leavitt(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(leavitt(&["profile", "--n", "5"]).status.code(), Some(64));
    // d = 4 shares a factor with n - 1 = 4
    assert_eq!(leavitt(&["construct", "--n", "5", "--d", "4"]).status.code(), Some(64));
    assert_eq!(leavitt(&["construct", "--n", "5", "--d", "3", "--placement", "random"]).status.code(), Some(64));
}

#[test]
fn construct_json_round_trips_through_verify() {
    let o = leavitt(&["construct", "--n", "6", "--d", "4", "--placement", "random", "--seed", "7", "--json"]);
    assert!(o.status.success());
    let dir = std::env::temp_dir().join(format!("leavitt-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let set = dir.join("set.json");
    let cert = dir.join("cert.json");
    std::fs::write(&set, &o.stdout).unwrap();
    let v = leavitt(&[
        "verify",
        "--set",
        set.to_str().unwrap(),
        "--certificate",
        cert.to_str().unwrap(),
        "--json",
    ]);
    assert_eq!(v.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&v.stdout).unwrap();
    assert_eq!(report["relations_ok"], true);
    assert!(report.get("relations_ms").is_none());
    let c: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(c["n"], 6);
    assert!(!c["nodes"].as_array().unwrap().is_empty());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn same_seed_same_bytes() {
    let args = ["construct", "--n", "7", "--d", "5", "--placement", "random", "--seed", "42", "--json"];
    let a = leavitt(&args);
    let b = leavitt(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = leavitt(&["verify", "--n", "7", "--d", "5", "--json"]);
    let d = leavitt(&["verify", "--n", "7", "--d", "5", "--json"]);
    assert_eq!(c.stdout, d.stdout);
}
