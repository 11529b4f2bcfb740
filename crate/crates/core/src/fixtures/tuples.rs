//! Local monodromy as printed. Eigenvalue `exp(−2πi·e)` is stored as the class `e`,
//! so `α ↦ a`, `β ↦ b`, `−1 ↦ 1/2`.

use crate::algebra::Symbol;
use crate::monodromy::{ExponentClass, JordanBlock, LocalType, MonodromyTuple};

pub struct TupleData {
    pub id: &'static str,
    pub anchor: &'static str,
}

pub const TUPLES: &[TupleData] = &[
    TupleData {
        id: "tuple.katz.M",
        anchor: "M: α⁻¹ | αβ | α⁻¹ | αβ⁻¹",
    },
    TupleData {
        id: "tuple.katz.M2",
        anchor: "M₂: 1 | α⁻¹β⁻¹ | 1 | αβ",
    },
    TupleData {
        id: "tuple.katz.MC",
        anchor: "MC_{β⁻¹α}M: (1,β⁻¹) | (1,α²) | (1,β⁻¹) | (α⁻¹β,α⁻¹β)",
    },
    TupleData {
        id: "tuple.katz.MC_M2",
        anchor: "⊗M₂: (1,β⁻¹) | (α⁻¹β⁻¹,αβ⁻¹) | (1,β⁻¹) | (β²,β²)",
    },
    TupleData {
        id: "tuple.P13",
        anchor: "(J(2),1,1) | (α,α⁻¹,1,1) | (J(2),1,1) | (β,β,β⁻¹,β⁻¹)",
    },
    TupleData {
        id: "tuple.P13.alpha_minus_one",
        anchor: "(J(2),1,1) | (−J(2),1,1) | (J(2),1,1) | (β,β,β⁻¹,β⁻¹)",
    },
    TupleData {
        id: "tuple.P13.b_half",
        anchor: "(J(2),1,1) | (α,α⁻¹,1,1) | (J(2),1,1) | (−J(2),−J(2))",
    },
    TupleData {
        id: "tuple.P2",
        anchor: "J(2) | (α,α⁻¹) | J(2) | (1,1)",
    },
    TupleData {
        id: "tuple.E4.M",
        anchor: "−1 | −1 | −1 | −1 | 1",
    },
    TupleData {
        id: "tuple.P4",
        anchor: "(J(2),1,1) ×4 | (−J(2),−1,−1)",
    },
];

pub struct LocalTypeData {
    pub id: &'static str,
    pub anchor: &'static str,
}

pub const LOCAL_TYPES: &[LocalTypeData] = &[
    LocalTypeData {
        id: "local.Pprime.E2.inf",
        anchor: "(−J(2),−J(2),−1,−1,−1)",
    },
    LocalTypeData {
        id: "local.Pprime.E4.inf",
        anchor: "(−J(2),−J(3),−J(2))",
    },
];

fn a() -> ExponentClass {
    ExponentClass::symbol(Symbol::A)
}

fn b() -> ExponentClass {
    ExponentClass::symbol(Symbol::B)
}

fn z() -> ExponentClass {
    ExponentClass::zero()
}

fn h() -> ExponentClass {
    ExponentClass::half()
}

fn lt(blocks: &[(ExponentClass, usize)]) -> LocalType {
    LocalType::new(blocks.iter().map(|(c, s)| JordanBlock::new(c.clone(), *s)))
}

fn unipotent_transvection() -> LocalType {
    lt(&[(z(), 2), (z(), 1), (z(), 1)])
}

fn tuple(rank: usize, finite: Vec<(&str, LocalType)>, inf: LocalType) -> MonodromyTuple {
    MonodromyTuple::new(
        rank,
        finite.into_iter().map(|(l, t)| (l.to_string(), t)),
        inf,
    )
    .expect("fixture tuple is valid")
}

pub fn build_tuple(id: &str) -> MonodromyTuple {
    let p13_inf = lt(&[(b(), 1), (b(), 1), (b().neg(), 1), (b().neg(), 1)]);
    let p13_one = lt(&[(a(), 1), (a().neg(), 1), (z(), 1), (z(), 1)]);
    match id {
        "tuple.katz.M" => tuple(
            1,
            vec![
                ("0", lt(&[(a().neg(), 1)])),
                ("1", lt(&[(a().add(&b()), 1)])),
                ("4", lt(&[(a().neg(), 1)])),
            ],
            lt(&[(a().sub(&b()), 1)]),
        ),
        "tuple.katz.M2" => tuple(
            1,
            vec![
                ("0", lt(&[(z(), 1)])),
                ("1", lt(&[(a().add(&b()).neg(), 1)])),
                ("4", lt(&[(z(), 1)])),
            ],
            lt(&[(a().add(&b()), 1)]),
        ),
        "tuple.katz.MC" => tuple(
            2,
            vec![
                ("0", lt(&[(z(), 1), (b().neg(), 1)])),
                ("1", lt(&[(z(), 1), (a().times(2), 1)])),
                ("4", lt(&[(z(), 1), (b().neg(), 1)])),
            ],
            lt(&[(b().sub(&a()), 1), (b().sub(&a()), 1)]),
        ),
        "tuple.katz.MC_M2" => tuple(
            2,
            vec![
                ("0", lt(&[(z(), 1), (b().neg(), 1)])),
                ("1", lt(&[(a().add(&b()).neg(), 1), (a().sub(&b()), 1)])),
                ("4", lt(&[(z(), 1), (b().neg(), 1)])),
            ],
            lt(&[(b().times(2), 1), (b().times(2), 1)]),
        ),
        "tuple.P13" => tuple(
            4,
            vec![
                ("0", unipotent_transvection()),
                ("1", p13_one),
                ("4", unipotent_transvection()),
            ],
            p13_inf,
        ),
        "tuple.P13.alpha_minus_one" => tuple(
            4,
            vec![
                ("0", unipotent_transvection()),
                ("1", lt(&[(h(), 2), (z(), 1), (z(), 1)])),
                ("4", unipotent_transvection()),
            ],
            p13_inf,
        ),
        "tuple.P13.b_half" => tuple(
            4,
            vec![
                ("0", unipotent_transvection()),
                ("1", p13_one),
                ("4", unipotent_transvection()),
            ],
            lt(&[(h(), 2), (h(), 2)]),
        ),
        "tuple.P2" => tuple(
            2,
            vec![
                ("0", lt(&[(z(), 2)])),
                ("1", lt(&[(a(), 1), (a().neg(), 1)])),
                ("4", lt(&[(z(), 2)])),
            ],
            lt(&[(z(), 1), (z(), 1)]),
        ),
        "tuple.E4.M" => tuple(
            1,
            ["0", "1", "t^2", "(t+1)^2"]
                .into_iter()
                .map(|p| (p, lt(&[(h(), 1)])))
                .collect(),
            lt(&[(z(), 1)]),
        ),
        "tuple.P4" => tuple(
            4,
            ["0", "1", "t^2", "(t+1)^2"]
                .into_iter()
                .map(|p| (p, unipotent_transvection()))
                .collect(),
            lt(&[(h(), 2), (h(), 1), (h(), 1)]),
        ),
        other => panic!("no tuple `{other}`"),
    }
}

pub fn build_local_type(id: &str) -> LocalType {
    match id {
        "local.Pprime.E2.inf" => lt(&[(h(), 2), (h(), 2), (h(), 1), (h(), 1), (h(), 1)]),
        "local.Pprime.E4.inf" => lt(&[(h(), 2), (h(), 3), (h(), 2)]),
        other => panic!("no local type `{other}`"),
    }
}

/// Labels of the square roots of each finite point other than 0.
pub fn square_root_labels(id: &str) -> Vec<(&'static str, [&'static str; 2])> {
    match id {
        "P4" => vec![
            ("1", ["1", "-1"]),
            ("t^2", ["t", "-t"]),
            ("(t+1)^2", ["t+1", "-t-1"]),
        ],
        _ => vec![("1", ["1", "-1"]), ("4", ["2", "-2"])],
    }
}
