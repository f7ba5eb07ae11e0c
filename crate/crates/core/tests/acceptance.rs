//! End-to-end acceptance battery. Each test drives one headline result of the
//! library and prints the check's summary line on success; a failure panics
//! with the first violated equality.

use stablemap_core::verify;

#[test]
fn acceptance_1_poincare_tables() {
    println!("pass: {}", verify::poincare_tables());
}

#[test]
fn acceptance_2_fixed_point_census() {
    println!("pass: {}", verify::fixed_point_census());
}

#[test]
fn acceptance_3_euler_classes() {
    println!("pass: {}", verify::euler_classes());
}

#[test]
fn acceptance_4_localization_integrals() {
    println!("pass: {}", verify::localization_integrals());
}

#[test]
fn acceptance_5_presentations() {
    println!("pass: {}", verify::presentations());
}

#[test]
fn acceptance_6_cotangent_normal_forms() {
    println!("pass: {}", verify::cotangent_normal_forms());
}

#[test]
fn acceptance_7_relations_from_integrals() {
    println!("pass: {}", verify::relations_from_integrals());
}

#[test]
fn acceptance_8_correlator_table() {
    println!("pass: {}", verify::correlator_table());
}

#[test]
fn acceptance_9_algebra_invariants() {
    println!("pass: {}", verify::algebra_invariants());
}

#[test]
fn acceptance_summary_runs_every_check() {
    let checks = verify::run_all();
    assert_eq!(checks.len(), 9);
    for c in &checks {
        println!("{}: {}", if c.passed { "pass" } else { "FAIL" }, c.name);
    }
    assert!(checks.iter().all(|c| c.passed), "some checks failed");
}
