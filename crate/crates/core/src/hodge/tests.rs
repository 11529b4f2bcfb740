use std::collections::BTreeMap;

use super::*;
use crate::algebra::{ratio, Symbol};
use crate::monodromy::{ExponentClass, JordanBlock, LocalType};

fn z() -> ExponentClass {
    ExponentClass::zero()
}

/// Rank 2: unipotent J(2) at 0 and 4, eigenvalues `a, −a` at 1, trivial at ∞.
fn rank_two() -> HodgeProfile {
    let a = ExponentClass::symbol(Symbol::A);
    let unip = NearbyData::new([(z(), 1, 1, 1)]);
    HodgeProfile::new(
        2,
        Some(vec![-1, 0]),
        [
            ("0".to_string(), unip.clone()),
            (
                "1".to_string(),
                NearbyData::new([(a.neg(), 0, 0, 1), (a, 0, 1, 1)]),
            ),
            ("4".to_string(), unip),
            (
                "inf".to_string(),
                NearbyData::new([(z(), 0, 0, 1), (z(), 0, 1, 1)]),
            ),
        ],
    )
    .unwrap()
}

fn squares() -> BTreeMap<String, Vec<String>> {
    [("1", ["1", "-1"]), ("4", ["2", "-2"])]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.iter().map(|s| s.to_string()).collect()))
        .collect()
}

#[test]
fn counts_and_degrees() {
    let p = rank_two();
    let c = derive_counts(&p).unwrap();
    assert_eq!(c.h, vec![1, 1]);
    assert_eq!(c.omega, vec![3, 1]);
    assert_eq!(
        parabolic_rigidity_solve(&c.h, &c.omega).unwrap(),
        vec![-1, 0]
    );
    assert!(parabolic_rigidity_solve(&c.h, &[3, 2]).is_err());
}

#[test]
fn pullback_then_convolution() {
    let sq = pullback_profile(&rank_two(), 2, &squares(), None).unwrap();
    assert_eq!(sq.delta, Some(vec![-2, 0]));
    let c = derive_counts(&sq).unwrap();
    assert_eq!(c.omega, vec![5, 2]);
    let mc = mc_profile(&sq, &ExponentClass::half()).unwrap();
    assert_eq!(mc.rank, 7);
    let inf = mc.infinity().unwrap();
    let h = ExponentClass::half();
    assert_eq!(inf.full(), vec![2, 3, 2]);
    for p in 0..3 {
        assert_eq!(inf.count(&h, 0, p), 1);
    }
    assert_eq!(inf.count(&h, 1, 1), 1);
    assert_eq!(inf.count(&h, 1, 2), 1);
    let t = stationary_phase_table(&mc, &ratio(0, 1), None).unwrap();
    assert_eq!(
        t,
        IrregularHodgeTable::new([(ratio(1, 2), 2), (ratio(3, 2), 3), (ratio(5, 2), 2)])
    );
    assert_eq!(
        parabolic_cohomology_hodge(&[1, 1], &[-3, -1], &[7, 4]).unwrap(),
        vec![2, 3, 2]
    );
}

#[test]
fn missing_inputs() {
    let mut p = rank_two();
    p.delta = None;
    assert_eq!(
        pullback_profile(&p, 2, &squares(), None),
        Err(crate::Error::MissingDelta)
    );
    let half = HodgeProfile::new(
        1,
        Some(vec![0]),
        [(
            "0".to_string(),
            NearbyData::new([(ExponentClass::symbol(Symbol::B), 0, 0, 1)]),
        )],
    )
    .unwrap();
    assert!(matches!(
        pullback_profile(&half, 2, &BTreeMap::new(), None),
        Err(crate::Error::WitnessRequired(_))
    ));
}

#[test]
fn selfdual_solver() {
    let h = ExponentClass::half();
    let local = LocalType::new([
        JordanBlock::new(h.clone(), 2),
        JordanBlock::new(h.clone(), 3),
        JordanBlock::new(h.clone(), 2),
    ]);
    let (v, nu) = selfdual_completion_solve(
        7,
        3,
        Some(&local),
        &[SelfDualConstraint::Nu {
            class: h.clone(),
            level: 2,
            p: 2,
            count: 1,
        }],
    )
    .unwrap();
    assert_eq!(v, vec![2, 3, 2]);
    let nu = nu.unwrap();
    assert_eq!((nu.count(&h, 1, 1), nu.count(&h, 1, 2)), (1, 1));
    assert_eq!(
        selfdual_completion_solve(2, 2, None, &[]).unwrap().0,
        vec![1, 1]
    );
    assert_eq!(
        selfdual_completion_solve(7, 3, None, &[SelfDualConstraint::Total { p: 0, count: 4 }]),
        Err(crate::Error::NoSolution)
    );
    assert!(matches!(
        selfdual_completion_solve(7, 3, None, &[]),
        Err(crate::Error::Ambiguous(3))
    ));
}

#[test]
fn shifts() {
    let a = IrregularHodgeTable::new([(ratio(1, 2), 2), (ratio(3, 2), 3)]);
    let b = a.shift(&ratio(1, 1));
    assert_eq!(tables_equal_up_to_shift(&b, &a), Some(ratio(1, 1)));
    assert_eq!(
        tables_equal_up_to_shift(&a, &IrregularHodgeTable::new([(ratio(0, 1), 5)])),
        None
    );
}
