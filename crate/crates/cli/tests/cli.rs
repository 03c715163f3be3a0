use std::path::Path;
use std::process::{Command, Output};

fn zerodiv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zerodiv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn classify_counts() {
    let o = zerodiv(&["classify", "--field", "2"]);
    assert_eq!(code(&o), 0);
    // header, column titles, then one row per class
    assert_eq!(stdout(&o).lines().count(), 2 + 9);

    let o = zerodiv(&["classify", "--field", "3", "--json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let classes = doc["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 16);
    assert!(classes.iter().all(|c| c["size"] == 2 && c["members"].as_array().unwrap().len() == 2));
    assert_eq!(doc["zero_divisors"], 32);
}

#[test]
fn invalid_fields_exit_2() {
    for field in ["6", "12", "2^3:f", "banana", "0"] {
        let o = zerodiv(&["classify", "--field", field]);
        assert_eq!(code(&o), 2, "{field}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    }
}

#[test]
fn spectrum_of_gf2_gamma() {
    let o = zerodiv(&["spectrum", "--field", "2", "--graph", "gamma"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("((3 + sqrt(41))/2)^1"));
    assert!(text.contains("-2^2"));
    assert!(text.contains("matches the worked example"));
}

#[test]
fn spectrum_json_uses_report_schema() {
    let o = zerodiv(&["spectrum", "--field", "5", "--graph", "H4", "--json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema_version"], 1);
    let results = doc["results"].as_array().unwrap();
    let closed = results.iter().find(|r| r["claim"] == "spectrum.H4.closed-form").unwrap();
    assert_eq!(closed["pass"], true);
    assert_eq!(closed["computed"], "{5^1, 1^6, -1^2, -3^3}");
}

#[test]
fn spectrum_out_of_domain_exit_3() {
    assert_eq!(code(&zerodiv(&["spectrum", "--field", "3", "--graph", "H4"])), 3);
    assert_eq!(code(&zerodiv(&["spectrum", "--field", "2", "--graph", "H1"])), 3);
    // over the exact cap
    assert_eq!(code(&zerodiv(&["spectrum", "--field", "9", "--graph", "gamma"])), 3);
    assert_eq!(code(&zerodiv(&["spectrum", "--field", "3", "--graph", "gamma", "--exact-cap", "10"])), 3);
}

#[test]
fn verify_exit_codes() {
    let o = zerodiv(&["verify", "--field", "4", "--scope", "regularity"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("pass regularity.H: expected 9-regular; computed 9-regular"));
    // the published corollary and three published spectra fail over GF(3)
    let o = zerodiv(&["verify", "--field", "3", "--scope", "all"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL spectra.H1.closed-form"));
    assert_eq!(code(&zerodiv(&["verify", "--field", "5", "--scope", "relations"])), 0);
}

#[test]
fn verify_gf2_spectra_compares_example() {
    let o = zerodiv(&["verify", "--field", "2", "--scope", "spectra", "--json"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ex = doc["results"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["claim"] == "spectra.gamma.example")
        .unwrap();
    assert_eq!(ex["pass"], true);
}

#[test]
fn golden_reports() {
    for (field, file) in [("2", "verify_gf2.json"), ("3", "verify_gf3.json")] {
        let o = zerodiv(&["verify", "--field", field, "--json"]);
        assert_eq!(stdout(&o), golden(file), "GF({field})");
    }
}

#[test]
fn seed_changes_only_seeded_claims() {
    let a = zerodiv(&["verify", "--field", "2", "--json", "--seed", "1"]);
    let b = zerodiv(&["verify", "--field", "2", "--json", "--seed", "1"]);
    assert_eq!(a.stdout, b.stdout);
    let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(doc["seed"], 1);
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("gamma.dot");
    let o = zerodiv(&["export", "--field", "2", "--graph", "gamma", "--format", "dot", "--out", dot.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert_eq!(text.lines().filter(|l| l.contains(" [label=")).count(), 9);
    assert_eq!(text.matches(" -- ").count(), 21);

    let mtx = dir.path().join("h.mtx");
    let o = zerodiv(&["export", "--field", "3", "--graph", "H", "--format", "matrixmarket", "--out", mtx.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let text = std::fs::read_to_string(&mtx).unwrap();
    assert!(text.starts_with("%%MatrixMarket matrix coordinate pattern symmetric"));
    let size = text.lines().find(|l| !l.starts_with('%')).unwrap();
    assert!(size.starts_with("16 16 "));

    // byte-identical on a second run
    let again = zerodiv(&["export", "--field", "3", "--graph", "H", "--format", "matrixmarket"]);
    assert_eq!(again.stdout, text.as_bytes());
}

#[test]
fn export_dot_labels_are_canonical_forms() {
    let o = zerodiv(&["export", "--field", "3", "--graph", "H", "--format", "dot"]);
    let text = stdout(&o);
    assert!(text.contains("label=\"E_0\""));
    assert!(text.contains("label=\"N\""));
}

#[test]
fn unwritable_path_exit_4() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("no/such/dir/out.dot");
    let o = zerodiv(&["export", "--field", "2", "--graph", "H", "--out", missing.to_str().unwrap()]);
    assert_eq!(code(&o), 4);
    let o = zerodiv(&["verify", "--field", "2", "--scope", "counts", "--out", missing.to_str().unwrap()]);
    assert_eq!(code(&o), 4);
}

#[test]
fn export_out_of_domain() {
    assert_eq!(code(&zerodiv(&["export", "--field", "2", "--graph", "H4"])), 3);
}
