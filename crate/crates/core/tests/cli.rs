//! Command-line behaviour: exit codes, payloads and schema conformance.

use serde_json::Value;
use spin7_torsion::cli::{dispatch, CommandResult};
use std::path::{Path, PathBuf};
use std::process::Command;

fn run(args: &[&str]) -> CommandResult {
    dispatch(std::iter::once("spin7").chain(args.iter().copied()))
}

fn schema_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("schema")
}

/// Parses the payload and validates it against `schema/<name>.schema.json`.
fn validated(name: &str, r: &CommandResult) -> Value {
    let text = std::fs::read_to_string(schema_dir().join(format!("{name}.schema.json"))).unwrap();
    let schema: Value = serde_json::from_str(&text).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let payload: Value = serde_json::from_str(&r.payload).unwrap();
    let errors: Vec<String> = validator.iter_errors(&payload).map(|e| format!("{} at {}", e, e.instance_path)).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
    payload
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("spin7-{tag}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn ricci_example() {
    let r = run(&["ricci", "--family", "5.1", "--set", "a1=1,b1=0,b2=0", "--hol", "R+su2c"]);
    assert_eq!(r.exit_code, 0, "{}", r.diagnostics);
    let v = validated("ricci", &r);
    let diag: Vec<&str> = v["ricci_diag"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(diag, ["12", "12", "12", "12", "12", "12", "12", "0"]);
    assert_eq!(v["matches_printed_formula"], true);
}

#[test]
fn ricci_inconsistent_and_markdown() {
    let r = run(&["ricci", "--family", "5.1", "--set", "a1=1,b1=0,b2=0", "--hol", "su3"]);
    assert_eq!(r.exit_code, 0);
    assert_eq!(validated("ricci", &r)["consistent"], false);
    let md = run(&["--format", "markdown", "ricci", "--family", "5.4", "--set", "b1=1", "--hol", "R+su2"]);
    assert_eq!(md.exit_code, 0);
    assert!(md.payload.starts_with("# Ric^c for family 5.4"));
}

#[test]
fn admissibility_table_markdown_and_json() {
    let md = run(&["table", "admissibility", "--format", "markdown"]);
    assert_eq!(md.exit_code, 0, "{}", md.diagnostics);
    let lines: Vec<&str> = md.payload.lines().collect();
    assert!(lines[0].starts_with("| iso(T^c) |"));
    assert_eq!(lines.iter().filter(|l| l.starts_with("| ")).count(), 1 + 8);
    assert!(md.payload.contains("| so_ir(3) |"));
    let js = run(&["table", "admissibility"]);
    assert_eq!(js.exit_code, 0);
    let v = validated("table_admissibility", &js);
    assert_eq!(v["rows"].as_array().unwrap().len(), 8);
}

#[test]
fn iso_reports() {
    // −(D₃ − D₄) = e_135 − e_245 + e_146 + e_236 has isotropy ℝ⊕su(2).
    let r = run(&["iso", "--form", "e_135 - e_245 + e_146 + e_236"]);
    assert_eq!(r.exit_code, 0);
    let v = validated("iso", &r);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["name"], "R+su2");
    // The same monomials with the other sign pattern form −D̄, fixed by su(3).
    let r = run(&["iso", "--form", "e_135 - e_245 - e_146 - e_236"]);
    assert_eq!(validated("iso", &r)["dim"], 8);
}

#[test]
fn invariants() {
    let r = run(&["invariants", "--algebra", "su3", "--space", "forms3"]);
    assert_eq!(validated("invariants", &r)["dim"], 4);
    let r = run(&["invariants", "--algebra", "zero", "--space", "spinors"]);
    assert_eq!(validated("invariants", &r)["dim"], 16);
    let r = run(&["invariants", "--algebra", "g2", "--space", "spinors"]);
    assert_eq!(validated("invariants", &r)["dim"], 2);
}

#[test]
fn curvature_cases() {
    let r = run(&["curvature", "--case", "5.1.1", "--set", "a1=1,b1=0,b2=0"]);
    assert_eq!(r.exit_code, 0, "{}", r.diagnostics);
    let v = validated("curvature", &r);
    assert_eq!(v["validation"]["bianchi_with_torsion"], true);
    let r = run(&["curvature", "--case", "5.2.1", "--family", "5.2-II", "--set", "a1=1,a2=2,b1=5"]);
    assert_eq!(r.exit_code, 0, "{}", r.diagnostics);
    validated("curvature", &r);
}

#[test]
fn reconstructions() {
    for ex in ["1", "2", "2-", "t2"] {
        let r = run(&["reconstruct", "--example", ex]);
        assert_eq!(r.exit_code, 0, "{ex}: {}", r.diagnostics);
        let v = validated("reconstruct", &r);
        assert_eq!(v["jacobi_holds"], true);
    }
    let v = validated("reconstruct", &run(&["reconstruct", "--example", "2"]));
    assert_eq!(v["su3_basis_match"], true);
    assert_eq!(v["killing_nondegenerate"], true);
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(run(&["frobnicate"]).exit_code, 2);
    assert_eq!(run(&["ricci", "--family", "5.1"]).exit_code, 2);
    assert_eq!(run(&["table", "admissibility", "--colour"]).exit_code, 2);
    assert_eq!(run(&["reconstruct", "--example", "3"]).exit_code, 2);
    let r = run(&["ricci", "--family", "9.9", "--set", "a1=1", "--hol", "g2"]);
    assert_eq!(r.exit_code, 2);
    assert!(r.payload.is_empty() && !r.diagnostics.is_empty());
    let r = run(&["iso", "--form", "e_12 + + e_34"]);
    assert_eq!(r.exit_code, 2);
    assert!(r.diagnostics.contains("offset"), "{}", r.diagnostics);
    let r = run(&["ricci", "--family", "5.1", "--set", "a1=1,b1=x", "--hol", "g2"]);
    assert_eq!(r.exit_code, 2);
    assert_eq!(run(&["--help"]).exit_code, 0);
}

#[test]
fn golden_regenerate_reproduces_committed_files() {
    let dir = temp_dir("regen");
    let r = run(&["golden", "regenerate", "--dir", dir.to_str().unwrap()]);
    assert_eq!(r.exit_code, 0);
    let v = validated("golden_regenerate", &r);
    assert_eq!(v["written"].as_array().unwrap().len(), 3);
    assert!(!dir.join("admissibility_table.json").exists());
    let committed = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    for name in ["constants.json", "curvature_cases.json", "families.json"] {
        let a = std::fs::read_to_string(dir.join(name)).unwrap();
        let b = std::fs::read_to_string(committed.join(name)).unwrap();
        assert_eq!(a, b, "{name}");
    }
    let r = run(&["golden", "check"]);
    assert_eq!(r.exit_code, 0, "{}", r.diagnostics);
    validated("golden_check", &r);
    std::fs::remove_dir_all(dir).unwrap();
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spin7"))
}

#[test]
fn binary_reports_golden_mismatch_with_exit_1() {
    let dir = temp_dir("mismatch");
    let committed = Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    for name in spin7_torsion::golden::FILES {
        std::fs::copy(committed.join(name), dir.join(name)).unwrap();
    }
    let table = dir.join("admissibility_table.json");
    let text = std::fs::read_to_string(&table).unwrap().replacen("\"so3ir\"", "\"so3\"", 1);
    std::fs::write(&table, text).unwrap();
    let out = bin()
        .args(["table", "admissibility"])
        .env(spin7_torsion::golden::ENV_DIR, &dir)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("golden mismatch"));
    let out = bin().arg("bogus").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Usage"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_all_is_deterministic() {
    let spawn = || {
        bin()
            .args(["verify-all", "--seed", "3"])
            .stdout(std::process::Stdio::piped())
            .stderr(std::process::Stdio::piped())
            .spawn()
            .unwrap()
    };
    let (a, b) = (spawn(), spawn());
    let first = a.wait_with_output().unwrap();
    let second = b.wait_with_output().unwrap();
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    assert_eq!(first.stdout, second.stdout);
    let r = CommandResult {
        exit_code: 0,
        payload: String::from_utf8(first.stdout).unwrap(),
        diagnostics: String::new(),
    };
    let v = validated("verify_all", &r);
    assert_eq!(v["seed"], 3);
    assert_eq!(v["passed"], true);
}
