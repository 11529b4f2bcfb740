//! Rational parameter points, one per case, with the hypotheses they satisfy.

use crate::algebra::{ratio, sym, Constraint, ParamPoly, ParameterWitness, Rational, Symbol};

fn not_integer(p: ParamPoly) -> Constraint {
    Constraint::NotInteger(p)
}

fn two(p: ParamPoly) -> ParamPoly {
    p.scale(&crate::algebra::rat(2))
}

fn three(p: ParamPoly) -> ParamPoly {
    p.scale(&crate::algebra::rat(3))
}

fn mu_near_one() -> Vec<Constraint> {
    vec![
        Constraint::less(sym::q(9, 10), sym::mu()),
        Constraint::less(sym::mu(), sym::c(1)),
    ]
}

/// `α ≠ ±1`, `α ≠ β^{±1}`, `β³ ≠ 1`.
fn generic_ab() -> Vec<Constraint> {
    vec![
        not_integer(two(sym::a())),
        not_integer(&sym::a() - &sym::b()),
        not_integer(&sym::a() + &sym::b()),
        not_integer(three(sym::b())),
    ]
}

fn base(a: Rational, b: Rational) -> Vec<(Symbol, Rational)> {
    vec![
        (Symbol::A, a),
        (Symbol::B, b),
        (Symbol::T, ratio(2, 1)),
        (Symbol::Mu, ratio(97, 100)),
    ]
}

pub struct WitnessData {
    pub id: &'static str,
    pub anchor: &'static str,
}

pub const WITNESSES: &[WitnessData] = &[
    WitnessData {
        id: "case.E1",
        anchor: "b = 1/2",
    },
    WitnessData {
        id: "case.E2",
        anchor: "b ∈ ℤ",
    },
    WitnessData {
        id: "case.E3.b_lt_a",
        anchor: "1/2 < b < a, b ≠ 3/4",
    },
    WitnessData {
        id: "case.E3.b_eq_3_4_lt_a",
        anchor: "3/4 = b < a",
    },
    WitnessData {
        id: "case.E3.b_gt_a",
        anchor: "b > a, b ≠ 3/4",
    },
    WitnessData {
        id: "case.E3.b_eq_3_4_gt_a",
        anchor: "3/4 = b > a",
    },
    WitnessData {
        id: "case.E4",
        anchor: "t generic",
    },
];

pub fn build_witness(id: &str) -> ParameterWitness {
    let half = sym::q(1, 2);
    let (assignment, mut cs) = match id {
        "case.E1" => (
            base(ratio(2, 3), ratio(1, 2)),
            vec![
                Constraint::less(half, sym::a()),
                Constraint::less(sym::a(), sym::c(1)),
                not_integer(two(sym::a())),
            ],
        ),
        "case.E2" => (
            base(ratio(2, 3), ratio(1, 1)),
            vec![
                Constraint::less(half, sym::a()),
                Constraint::less(sym::a(), sym::c(1)),
                not_integer(two(sym::a())),
            ],
        ),
        "case.E3.b_lt_a" | "case.E3.b_eq_3_4_lt_a" => {
            let b = if id == "case.E3.b_lt_a" {
                ratio(3, 5)
            } else {
                ratio(3, 4)
            };
            let mut cs = vec![
                Constraint::less(half, sym::b()),
                Constraint::less(sym::b(), sym::a()),
                Constraint::less(sym::a(), sym::c(1)),
            ];
            cs.extend(generic_ab());
            (base(ratio(4, 5), b), cs)
        }
        "case.E3.b_gt_a" | "case.E3.b_eq_3_4_gt_a" => {
            let (a, b) = if id == "case.E3.b_gt_a" {
                (ratio(3, 5), ratio(4, 5))
            } else {
                (ratio(7, 10), ratio(3, 4))
            };
            let mut cs = vec![
                Constraint::less(half, sym::a()),
                Constraint::less(sym::a(), sym::b()),
                Constraint::less(sym::b(), sym::c(1)),
            ];
            cs.extend(generic_ab());
            (base(a, b), cs)
        }
        "case.E4" => (
            vec![(Symbol::T, ratio(2, 1)), (Symbol::Mu, ratio(97, 100))],
            // the seven finite points 0, ±1, ±t, ±(t+1) are distinct
            vec![
                Constraint::less(sym::c(1), sym::t()),
                Constraint::not_equal(two(sym::t()), sym::c(-1)),
            ],
        ),
        other => panic!("no witness `{other}`"),
    };
    match id {
        "case.E3.b_lt_a" | "case.E3.b_gt_a" => {
            cs.push(Constraint::not_equal(sym::b(), sym::q(3, 4)))
        }
        _ => {}
    }
    cs.extend(mu_near_one());
    ParameterWitness::new(id, assignment, cs).expect("shipped witness satisfies its constraints")
}
