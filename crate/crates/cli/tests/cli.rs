use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::NamedTempFile;

use qtspec_core::bounds::{replay_spectral, BoundWitness, SpectralOptions};
use qtspec_core::codefile::parse_code_file;
use qtspec_core::Distance;

fn qtspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtspec")).args(args).env_remove("QTSPEC_ORACLE_BUDGET").output().unwrap()
}

fn code_file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("bad JSON ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

const HAMMING: &str = "# [7,4] Hamming\nq 2\nlambda 1\nm 7\nell 1\ngen 1,1,0,1\n";
const TERNARY: &str = "q 3\nlambda 1\nm 8\nell 2\ngen 1,1 1,2,1\n";
const TWISTED: &str = "q 3\nlambda 2\nm 8\nell 2\ngen 1,1 2,0,1\n";

#[test]
fn mindist_of_hamming_code() {
    let f = code_file(HAMMING);
    let out = qtspec(&["mindist", "--code", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["distance"], 3);
    assert_eq!(v["code"]["dimension"], 4);
}

#[test]
fn bounds_report_replays() {
    for text in [HAMMING, TERNARY, TWISTED] {
        let f = code_file(text);
        let path = f.path().to_str().unwrap();
        let out = qtspec(&["bounds", "--code", path, "--dp-source", "oracle", "--caps", "max_m_prime=12"]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        let v = json(&out);
        let code = parse_code_file(f.path()).unwrap();
        let opts = SpectralOptions::default();
        let d = qtspec_core::oracle::qt_min_distance(&code, &opts.oracle).unwrap();
        let bounds = v["bounds"].as_array().unwrap();
        assert_eq!(bounds.len(), 5);
        for b in bounds {
            let w: BoundWitness = serde_json::from_value(b["witness"].clone()).unwrap();
            assert!(w.value <= Distance::Finite(d));
            assert_eq!(replay_spectral(&code, &w, &opts).unwrap(), w.value);
        }
    }
}

#[test]
fn bounds_method_selection_and_bad_caps() {
    let f = code_file(HAMMING);
    let path = f.path().to_str().unwrap();
    let v = json(&qtspec(&["bounds", "--code", path, "--methods", "bch,roos", "--stride-policy", "coprime"]));
    let methods: Vec<&str> = v["bounds"].as_array().unwrap().iter().map(|b| b["method"].as_str().unwrap()).collect();
    assert_eq!(methods, ["bch", "roos"]);
    assert!(!qtspec(&["bounds", "--code", path, "--caps", "nonsense=1"]).status.success());
    assert!(!qtspec(&["bounds", "--code", path, "--methods", "magic"]).status.success());
}

#[test]
fn malformed_file_names_the_line() {
    let f = code_file("q 2\nlambda 1\nm 7\nell 1\ngen 1,z,1\n");
    let out = qtspec(&["mindist", "--code", f.path().to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 5"));
}

#[test]
fn eigen_of_zero_code() {
    let f = code_file("q 3\nlambda 2\nm 4\nell 2\n");
    let out = qtspec(&["eigen", "--code", f.path().to_str().unwrap()]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["omega_bar"].as_array().unwrap().len(), 4);
    for e in v["eigenvalues"].as_array().unwrap() {
        assert_eq!(e["multiplicity"], 2);
        assert_eq!(e["eigenspace_dim"], 2);
        assert_eq!(e["eigencode_distance"]["kind"], "infinite");
    }
    assert_eq!(v["parity_check"]["rank"], 8);
}

#[test]
fn constacyclic_example_code() {
    let out = qtspec(&["constacyclic", "--q", "3", "--m", "26", "--lambda", "1", "--defset", "0,13,14,16,17,22,23,25"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["distance"], 6);
    assert_eq!(v["dimension"], 18);
    assert_eq!(v["bounds"]["roos"]["value"]["value"], 6);
    assert_eq!(v["bounds"]["shift"]["value"]["value"], 5);
    assert_eq!(v["bounds"]["bch"]["value"]["value"], 3);
}

#[test]
fn constacyclic_negative_lambda_and_unclosed_set() {
    let out = qtspec(&["constacyclic", "--q", "3", "--m", "4", "--lambda", "-1", "--defset", "0,1"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(!qtspec(&["constacyclic", "--q", "2", "--m", "7", "--lambda", "1", "--defset", "1"]).status.success());
    assert!(!qtspec(&["constacyclic", "--q", "6", "--m", "7", "--lambda", "1"]).status.success());
}

#[test]
fn budget_override_is_honoured() {
    let f = code_file(HAMMING);
    let out = Command::new(env!("CARGO_BIN_EXE_qtspec"))
        .args(["mindist", "--code", f.path().to_str().unwrap()])
        .env("QTSPEC_ORACLE_BUDGET", "2")
        .output()
        .unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn table1_reports_every_row() {
    let out = qtspec(&["table1"]);
    let v = json(&out);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 15);
    let passing = rows.iter().filter(|r| r["pass"] == true).count();
    assert_eq!(passing, 14);
    assert_eq!(rows[14]["d_sp"], 12);
    assert_eq!(out.status.success(), v["all_pass"] == true);
    assert!(String::from_utf8_lossy(&out.stderr).contains("PASS"));
}

#[test]
fn examples_report() {
    let out = qtspec(&["examples"]);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    let failed: Vec<&str> = checks.iter().filter(|c| c["pass"] == false).map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(failed, ["shift bound", "quoted set A is independent", "spectral shift bound"]);
    assert!(!out.status.success());
}
