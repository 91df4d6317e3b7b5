//! The seven end-to-end acceptance checks, one test per check.
//!
//! Each test prints the one-line pass/fail report for its check and then
//! asserts it passed; a check also fails when it runs over its pinned
//! wall-clock budget (see `hcprim::verify::BUDGETS_MS`).  Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

use hcprim::verify::{
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
    CriterionReport,
};

const SEED: u64 = 0;

fn check(report: CriterionReport) {
    println!("{}", report.line());
    assert!(
        report.passed,
        "criterion {} failed after {} ms: {}",
        report.id, report.millis, report.details
    );
}

#[test]
fn criterion_1_shape_vs_normalizer_agreement() {
    check(criterion_1());
}

#[test]
fn criterion_2_parabolic_induction_reducible() {
    check(criterion_2(SEED));
}

#[test]
fn criterion_3_orbital_vs_hecke_structure_constants() {
    check(criterion_3());
}

#[test]
fn criterion_4_induction_diagram_commutes() {
    check(criterion_4(SEED));
}

#[test]
fn criterion_5_classify_vs_oracle_agreement() {
    check(criterion_5(SEED));
}

#[test]
fn criterion_6_functor_identities() {
    check(criterion_6(SEED));
}

#[test]
fn criterion_7_meataxe_vs_exhaustive_agreement() {
    check(criterion_7(SEED));
}
