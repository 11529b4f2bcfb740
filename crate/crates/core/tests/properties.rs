mod common;

use common::SuiteReport;

fn assert_suite(r: SuiteReport) {
    assert!(r.cases >= 500);
    assert!(
        r.passed(),
        "{}: {} of {} cases failed\n{}",
        r.name,
        r.failures.len(),
        r.cases,
        r.failures.join("\n")
    );
}

#[test]
fn ft_involution() {
    assert_suite(common::ft_involution());
}

#[test]
fn mul_associative() {
    assert_suite(common::mul_associative());
}

#[test]
fn theta_delta_roundtrip() {
    assert_suite(common::theta_delta_roundtrip());
}

#[test]
fn pullback_multiplicative() {
    assert_suite(common::pullback_multiplicative());
}

#[test]
fn twist_action() {
    assert_suite(common::twist_action());
}

#[test]
fn exponent_scaling() {
    assert_suite(common::exponent_scaling());
}

#[test]
fn slope_multiplicity() {
    assert_suite(common::slope_multiplicity());
}

#[test]
fn profile_point_independence() {
    assert_suite(common::profile_point_independence());
}

#[test]
fn cli_roundtrip() {
    assert_suite(common::cli_roundtrip());
}

#[test]
fn ring_axioms() {
    let r = common::ring_axioms();
    assert_eq!(r.cases, 1000);
    assert_suite(r);
}
