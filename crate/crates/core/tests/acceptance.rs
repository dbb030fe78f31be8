//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line.  Run with `cargo test --test acceptance -- --nocapture` to see
//! the lines; the same checks back the CLI `verify-all` subcommand.

use siegel_core::verify::{self, Check, VerifyConfig};

fn run(check: Check) {
    let status = if check.passed { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {:<28} {} - {}", check.name, status, check.detail);
    assert!(check.passed, "{}: {}", check.name, check.detail);
}

fn cfg() -> VerifyConfig {
    VerifyConfig::default()
}

#[test]
fn c01_harmonic_dimensions() {
    run(verify::c01_harmonic_dimensions(&cfg()));
}

#[test]
fn c02_sl2_and_dual_pair_relations() {
    run(verify::c02_sl2_and_dual_pair(&cfg()));
}

#[test]
fn c03_omega_bracket_homomorphism() {
    run(verify::c03_omega_bracket_homomorphism(&cfg()));
}

#[test]
fn c04_closedness() {
    run(verify::c04_closedness(&cfg()));
}

#[test]
fn c05_wedge_p11_multiplicities() {
    run(verify::c05_wedge_multiplicities(&cfg()));
}

#[test]
fn c06_lowest_degree_span() {
    run(verify::c06_lowest_degree_span(&cfg()));
}

#[test]
fn c07_weight_bookkeeping() {
    run(verify::c07_weight_bookkeeping(&cfg()));
}

#[test]
fn c08_parabolic_tables() {
    run(verify::c08_parabolic_tables(&cfg()));
}

#[test]
fn c09_isogeny_dictionary() {
    run(verify::c09_isogeny_dictionary(&cfg()));
}

#[test]
fn c10_neron_severi_ranks() {
    run(verify::c10_neron_severi_ranks(&cfg()));
}

#[test]
fn c11_discriminant_congruence() {
    run(verify::c11_discriminant_congruence(&cfg()));
}

#[test]
fn c12_single_orbit_certification() {
    run(verify::c12_single_orbit_certification(&cfg()));
}

#[test]
fn c13_frame_classification() {
    run(verify::c13_frame_classification(&cfg()));
}

#[test]
fn c14_fiber_equivariance() {
    run(verify::c14_fiber_equivariance(&cfg()));
}
