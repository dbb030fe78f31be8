//! End-to-end tests of the binary: exit codes, determinism, golden
//! comparisons, JSON schema, and the full verification run.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_siegel"))
}

fn repo_root() -> PathBuf {
    // crates/cli -> workspace root
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .ancestors()
        .nth(2)
        .unwrap()
        .to_path_buf()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn normal_form_matches_golden() {
    let out = run(&["humbert", "normal-form", "--disc", "5"]);
    assert!(out.status.success());
    let golden = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/normal_form_disc5.json"),
    )
    .unwrap();
    assert_eq!(stdout(&out), golden);
}

#[test]
fn golden_flag_compares_and_fails_on_mismatch() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/fock_wedge.json");
    let ok = run(&["fock", "wedge", "--golden", golden.to_str().unwrap()]);
    assert!(ok.status.success());
    // mismatching golden: reuse the other golden file
    let wrong = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/normal_form_disc5.json");
    let bad = run(&["fock", "wedge", "--golden", wrong.to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn identical_inputs_are_byte_identical() {
    let a = run(&["fock", "decompose", "--degree", "2"]);
    let b = run(&["fock", "decompose", "--degree", "2"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn exit_codes_follow_the_contract() {
    let tau = repo_root().join("data/diag_i_2i.json");
    let tau = tau.to_str().unwrap();
    // passing check
    let ok = run(&["humbert", "member", "--tau", tau, "--rel", "0,1,0,0,0"]);
    assert_eq!(ok.status.code(), Some(0));
    // failing check
    let fail = run(&["humbert", "member", "--tau", tau, "--rel", "1,0,-1,0,0"]);
    assert_eq!(fail.status.code(), Some(1));
    // usage errors
    let usage = run(&["humbert", "member", "--tau", tau, "--rel", "1,2"]);
    assert_eq!(usage.status.code(), Some(2));
    let unknown = run(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    let bad_disc = run(&["humbert", "normal-form", "--disc", "7"]);
    assert_eq!(bad_disc.status.code(), Some(2));
}

#[test]
fn ns_rank_report_has_the_expected_values() {
    let tau = repo_root().join("data/diag_i_2i.json");
    let out = run(&["humbert", "ns", "--tau", tau.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["ns_rank"], 4);
    assert_eq!(v["results"]["kernel_dim"], 3);
    assert_eq!(v["version"], "report-v1");
}

#[test]
fn ns_rank_of_the_biquadratic_point() {
    let tau = repo_root().join("data/diag_i_sqrtm2.json");
    let out = run(&["humbert", "ns", "--tau", tau.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["ns_rank"], 2);
    assert_eq!(v["results"]["kernel_dim"], 1);
}

#[test]
fn harmonics_of_the_five_type_reports_five_quadratics() {
    let out = run(&["fock", "harmonics", "--ktype", "5x1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["dim"], 5);
    assert_eq!(v["results"]["degree"], 2);
    assert_eq!(v["results"]["basis"].as_array().unwrap().len(), 5);
}

#[test]
fn cycles_report_certifies_single_primitive_orbit() {
    // squarefree discriminant: every vector is primitive, one orbit
    let out = run(&[
        "cycles", "report", "--disc", "5", "--box", "2", "--height", "12",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["orbit_count"], 1);
    assert_eq!(v["results"]["exact"], true);
    assert_eq!(v["results"]["normal_form_class"], 0);
}

#[test]
fn cycles_report_separates_imprimitive_vectors() {
    // discriminant 4 carries both the primitive orbit and twice the
    // discriminant-1 vectors; content separates them even though the
    // height bound is escaped.
    let out = run(&[
        "cycles", "report", "--disc", "4", "--box", "2", "--height", "12",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["orbit_count"], 2);
    assert_eq!(v["results"]["exact"], true);
    assert_eq!(v["results"]["normal_form_class"], 1);
}

#[test]
fn verify_all_passes_and_is_thread_invariant() {
    let single = bin()
        .args(["verify-all"])
        .env("HUMBERT_KERNEL_THREADS", "1")
        .output()
        .expect("binary runs");
    assert!(single.status.success(), "verify-all failed: {}", stdout(&single));
    let multi = bin()
        .args(["verify-all"])
        .env("HUMBERT_KERNEL_THREADS", "4")
        .output()
        .expect("binary runs");
    assert!(multi.status.success());
    let a: serde_json::Value = serde_json::from_str(&stdout(&single)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&multi)).unwrap();
    // identical check outcomes regardless of the worker count
    assert_eq!(a["checks"], b["checks"]);
    assert_eq!(a["checks"].as_array().unwrap().len(), 14);
}

#[test]
fn harmonics_matches_golden() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/harmonics_3x1.json");
    let out = run(&["fock", "harmonics", "--ktype", "3x1", "--golden", golden.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn plucker_rho_of_the_weyl_element() {
    let g = repo_root().join("data/g_weyl.json");
    let out = run(&["plucker", "rho", "--g", g.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // J sends (a, b, c, d, e) to (-c, b, -a, -e, -d)
    assert_eq!(v["results"]["rho"][0], serde_json::json!(["0", "0", "-1", "0", "0"]));
    assert_eq!(v["results"]["rho"][1], serde_json::json!(["0", "1", "0", "0", "0"]));
}

#[test]
fn level_two_report_is_honest_about_bounds() {
    let out = run(&[
        "cycles", "report", "--disc", "4", "--h", "1,0,1,0,0", "--level", "2", "--box", "2",
        "--height", "10",
    ]);
    // classes share all invariants and the bound was escaped: the
    // partition must come back flagged inexact, which is a failing
    // exactness check (exit 1), not a silent success.
    assert_eq!(out.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["results"]["vector_count"], 10);
    assert_eq!(v["results"]["exact"], false);
    assert_eq!(v["results"]["escaped_height_bound"], true);
    assert!(v["results"]["congruence_words"].as_array().unwrap().len() > 0);
}

#[test]
fn text_format_renders_status() {
    let out = run(&["lie", "roots", "--format", "text"]);
    assert!(out.status.success());
    let s = stdout(&out);
    assert!(s.contains("status: pass"));
    assert!(s.contains("eigenrelations"));
}
