use rigid_calc::algebra::ThetaPoly;
use rigid_calc::fixtures::{self, all_fixtures, get_fixture, validate_all, Payload};
use rigid_calc::Error;
use sha2::{Digest, Sha256};

/// The printed rank-7 scheme for the `b ∈ ℤ` case lists `±(1/2 + a)` at `±1`; the operator
/// has `±(a − 1/2)` there. That column is the only disagreement.
#[test]
fn only_the_misprinted_column_fails() {
    let report = validate_all(all_fixtures());
    assert_eq!(report.checked, all_fixtures().len());
    assert_eq!(report.failures.len(), 3, "{:#?}", report.failures);
    for (id, msg) in &report.failures {
        assert_eq!(id, "scheme.Pprime.E2");
        assert!(
            msg.contains("at -1") || msg.contains("at 1:") || msg.contains("-a - 1/2"),
            "{msg}"
        );
    }
}

#[test]
fn sign_flip_is_caught() {
    let mut set = all_fixtures().to_vec();
    let f = set.iter_mut().find(|f| f.id == "op.P13").unwrap();
    let Payload::Operator(op) = &f.payload else {
        panic!()
    };
    let flipped = op.map_coeffs(|i, p| if i == 2 { -p.clone() } else { p.clone() });
    f.payload = Payload::Operator(flipped);
    assert!(!validate_all(&set).passed());
}

#[test]
fn empty_set_passes_with_warning() {
    let r = validate_all(&[]);
    assert!(r.passed());
    assert_eq!(r.warnings.len(), 1);
}

#[test]
fn lookup() {
    assert!(matches!(
        get_fixture("nosuch"),
        Err(Error::UnknownFixture(_))
    ));
    assert_eq!(
        fixtures::operator("op.L.E1E3")
            .unwrap()
            .coeff(3)
            .to_string(),
        ThetaPoly::linear(-4, -6).to_string()
    );
    assert!(matches!(
        fixtures::profile("op.P2"),
        Err(Error::FixtureKind { .. })
    ));
    let p = fixtures::profile("profile.P13.case_b_half").unwrap();
    let c = rigid_calc::hodge::derive_counts(p).unwrap();
    assert_eq!(
        (c.h, c.omega, p.delta.clone()),
        (vec![2, 2], vec![5, 3], Some(vec![-2, -1]))
    );
}

#[test]
fn export_is_stable() {
    let a = Sha256::digest(fixtures::export_json());
    let b = Sha256::digest(serde_json::to_string_pretty(all_fixtures()).unwrap());
    assert_eq!(a, b);
}
