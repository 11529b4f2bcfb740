use super::*;
use crate::algebra::Symbol;

fn lt(blocks: &[(ExponentClass, usize)]) -> LocalType {
    LocalType::new(blocks.iter().map(|(c, s)| JordanBlock::new(c.clone(), *s)))
}

fn tuple(rank: usize, finite: &[(&str, LocalType)], inf: LocalType) -> MonodromyTuple {
    MonodromyTuple::new(
        rank,
        finite.iter().map(|(l, t)| (l.to_string(), t.clone())),
        inf,
    )
    .unwrap()
}

fn a() -> ExponentClass {
    ExponentClass::symbol(Symbol::A)
}

fn b() -> ExponentClass {
    ExponentClass::symbol(Symbol::B)
}

fn z() -> ExponentClass {
    ExponentClass::zero()
}

#[test]
fn rank_one_chain_to_rank_four() {
    let m = tuple(
        1,
        &[
            ("0", lt(&[(a().neg(), 1)])),
            ("1", lt(&[(a().add(&b()), 1)])),
            ("4", lt(&[(a().neg(), 1)])),
        ],
        lt(&[(a().sub(&b()), 1)]),
    );
    let lambda = a().sub(&b());
    let l = mc_local(&m, &lambda).unwrap();
    assert_eq!(l.rank(), 2);
    assert_eq!(l.local("0").unwrap(), &lt(&[(z(), 1), (b().neg(), 1)]));
    assert_eq!(l.local("1").unwrap(), &lt(&[(z(), 1), (a().times(2), 1)]));
    assert_eq!(l.infinity(), &lt(&[(b().sub(&a()), 1), (b().sub(&a()), 1)]));

    let m2 = tuple(
        1,
        &[("1", lt(&[(a().add(&b()).neg(), 1)]))],
        lt(&[(a().add(&b()), 1)]),
    );
    let l2 = tensor_rank_one(&l, &m2).unwrap();
    assert_eq!(l2.infinity(), &lt(&[(b().times(2), 1), (b().times(2), 1)]));

    let p = mc_local(&l2, &b()).unwrap();
    assert_eq!(p.rank(), 4);
    assert_eq!(p.local("0").unwrap(), &lt(&[(z(), 2), (z(), 1), (z(), 1)]));
    assert_eq!(
        p.local("1").unwrap(),
        &lt(&[(a(), 1), (a().neg(), 1), (z(), 1), (z(), 1)])
    );
    assert_eq!(
        p.infinity(),
        &lt(&[(b(), 1), (b(), 1), (b().neg(), 1), (b().neg(), 1)])
    );
    assert_eq!(rigidity_index(&m), 2);
    assert_eq!(rigidity_index(&l), 2);
    assert_eq!(rigidity_index(&p), 2);
}

#[test]
fn mc_inverse_restores_tuple() {
    let t = tuple(
        2,
        &[
            ("0", lt(&[(z(), 1), (b().neg(), 1)])),
            ("1", lt(&[(z(), 1), (a().times(2), 1)])),
            ("4", lt(&[(z(), 1), (b().neg(), 1)])),
        ],
        lt(&[(b().sub(&a()), 1), (b().sub(&a()), 1)]),
    );
    let lambda = ExponentClass::symbol(Symbol::Mu);
    let back = mc_local(&mc_local(&t, &lambda).unwrap(), &lambda.neg()).unwrap();
    assert_eq!(back, t);
}

#[test]
fn trivial_class_and_missing_labels() {
    let t = tuple(
        1,
        &[("0", lt(&[(ExponentClass::half(), 1)]))],
        lt(&[(ExponentClass::half(), 1)]),
    );
    assert_eq!(mc_rank(&t, &z()), Err(crate::Error::NotApplicable));
    let u = tuple(
        1,
        &[("0", lt(&[(a(), 1)])), ("1", lt(&[(a().neg(), 1)]))],
        lt(&[(z(), 1)]),
    );
    let pre = std::collections::BTreeMap::new();
    assert!(matches!(
        kummer_pullback_tuple(&u, 2, &pre),
        Err(crate::Error::MissingPreimageLabels(_))
    ));
}

#[test]
fn determinant_condition() {
    let bad = MonodromyTuple::new(1, [("0".to_string(), lt(&[(a(), 1)]))], lt(&[(z(), 1)]));
    assert!(matches!(bad, Err(crate::Error::InvalidTuple(_))));
}
