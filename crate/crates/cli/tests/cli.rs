use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn adreal(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adreal"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SL2: &str = r#"{"algebra":"sl","group":"SL","n":2}"#;
const SL4: &str = r#"{"algebra":"sl","group":"SL","n":4}"#;

#[test]
fn decide_diag_one_minus_one() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("H.json"), r#"[["1","0"],["0","-1"]]"#).unwrap();
    let out = adreal(&["decide", "--ctx", SL2, "--matrix", "H.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["real"], "yes");
    assert_eq!(v["strongly_real"], "no");
    assert_eq!(v["reason"], "NMod4");
}

#[test]
fn witness_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("H.json"),
        "[[1,0,0,0],[0,2,0,0],[0,0,-1,0],[0,0,0,-2]]",
    )
    .unwrap();
    let out = adreal(
        &[
            "witness",
            "--involution",
            "--ctx",
            SL4,
            "--matrix",
            "H.json",
            "--out",
            "cert.json",
        ],
        dir.path(),
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = adreal(&["verify", "cert.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["status"], "pass");

    // flip one reverser entry: anticonjugation must fail
    let path = dir.path().join("cert.json");
    let mut cert: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let entry = &mut cert["reverser"]["entries"][0][0];
    *entry = Value::String(if entry == "0" { "5".into() } else { "0".into() });
    std::fs::write(&path, cert.to_string()).unwrap();
    let out = adreal(&["verify", "cert.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let v = stdout_json(&out);
    assert_eq!(v["status"], "fail");
    assert!(v["violation"].is_string());
}

#[test]
fn involution_refused_for_sl2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("H.json"), "[[1,0],[0,-1]]").unwrap();
    let out = adreal(
        &[
            "witness",
            "--involution",
            "--ctx",
            SL2,
            "--matrix",
            "H.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["status"], "not_realizable");
}

#[test]
fn bad_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("H.json"), r#"[["1","zz"],["0","-1"]]"#).unwrap();
    let out = adreal(&["decide", "--ctx", SL2, "--matrix", "H.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    std::fs::write(dir.path().join("H.json"), "[[1,1],[0,1]]").unwrap();
    let out = adreal(&["decide", "--ctx", SL2, "--matrix", "H.json"], dir.path());
    assert_eq!(out.status.code(), Some(2), "trace 2 is outside sl(2)");
}

#[test]
fn nilpotent_commands() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("N.json"), "[[0,1],[0,0]]").unwrap();
    let out = adreal(&["sl2", "--matrix", "N.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_json(&out)["h"]["entries"],
        serde_json::json!([["1", "0"], ["0", "-1"]])
    );
    let out = adreal(&["chains", "--matrix", "N.json"], dir.path());
    assert_eq!(stdout_json(&out)["blocks"][0]["d"], 2);
    let ctx = r#"{"algebra":"sp","group":"Sp","n":1}"#;
    let out = adreal(
        &[
            "witness", "--ctx", ctx, "--matrix", "N.json", "--out", "c.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        adreal(&["verify", "c.json"], dir.path()).status.code(),
        Some(0)
    );
}

#[test]
fn search_exhausts_for_sp1_involutions() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("H.json"), "[[2,0],[0,-2]]").unwrap();
    let ctx = r#"{"algebra":"sp","group":"Sp","n":1}"#;
    let out = adreal(
        &["search", "--ctx", ctx, "--matrix", "H.json", "--involution"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["status"], "exhausted");
}
