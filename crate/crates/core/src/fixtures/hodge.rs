//! Hodge data: input profiles (with reconstructed interior data), printed tables and
//! irregular Hodge tables.
//!
//! Interior points only carry `ω`-aggregates in the printed tables. The per-`p`
//! placement stored here is the one forced by those aggregates: a transvection
//! `(J(2),1,1)` has its `J(2)` primitive at `p = 1` and one trivial block at each `p`;
//! at the point with eigenvalues `(α, α⁻¹, 1, 1)` the class `1−a` sits at `p = 0`.

use crate::algebra::ParamPoly;
use crate::expr::parse_param;
use crate::hodge::{HodgeProfile, HodgeTable, NearbyData, NuColumn, SymbolicIrregularTable};
use crate::monodromy::ExponentClass;

pub struct HodgeData {
    pub id: &'static str,
    pub anchor: &'static str,
}

pub const PROFILES: &[HodgeData] = &[
    HodgeData {
        id: "profile.P13.case_b_half",
        anchor: "h = (2,2), δ = (−2,−1), ω = (5,3), ν¹_{∞,1/2,1} = 2",
    },
    HodgeData {
        id: "profile.P13.b_lt_a",
        anchor: "ν_{∞,b,0} = (2,0), ν_{∞,1−b,0} = (0,2)",
    },
    HodgeData {
        id: "profile.P13.b_gt_a",
        anchor: "ν_{∞,b,0} = (1,1), ν_{∞,1−b,0} = (1,1)",
    },
    HodgeData {
        id: "profile.P2",
        anchor: "h = (1,1), δ = (−1,0), ω = (3,1), ν_{∞,0,0} = (1,1)",
    },
    HodgeData {
        id: "profile.P4",
        anchor: "(J(2),1,1) ×4 | (−J(2),−1,−1)",
    },
    HodgeData {
        id: "profile.Pprime.E1",
        anchor: "h = (2,3,2), ν_{∞,1−μ,2} = (0,0,2), ν_{∞,1−μ,0} = (0,1,0)",
    },
    HodgeData {
        id: "profile.Pprime.E3.b_lt_a",
        anchor: "h = (2,5), ν_{∞,2b−μ,0} = (2,0), ν_{∞,2(1−b)+1−μ,0} = (0,2), ν_{∞,1−μ,0} = (0,3)",
    },
    HodgeData {
        id: "profile.Pprime.E3.b_eq_3_4_lt_a",
        anchor: "h = (2,5), ν_{∞,2b−μ,0} = (2,2), ν_{∞,1−μ,0} = (0,3)",
    },
    HodgeData {
        id: "profile.Pprime.E3.b_gt_a",
        anchor: "h = (3,3,1), ν columns (1,1,0), (1,1,0), (1,1,1)",
    },
    HodgeData {
        id: "profile.Pprime.E3.b_eq_3_4_gt_a",
        anchor: "h = (3,3,1), ν_{∞,2b−μ,0} = (2,2,0), ν_{∞,1−μ,0} = (1,1,1)",
    },
    HodgeData {
        id: "profile.Pprime.E2",
        anchor: "h = (2,3,2), ν_{∞,1/2,0} = (1,1,1), ν_{∞,1/2,1} = (0,1,1)",
    },
    HodgeData {
        id: "profile.Pprime.E4",
        anchor: "h = (2,3,2), ν_{∞,1/2,1} = (0,1,1), ν_{∞,1/2,2} = (0,0,1)",
    },
];

pub const TABLES: &[HodgeData] = &[
    HodgeData {
        id: "table.P13.b_half",
        anchor: "h = (2,2), δ = (−2,−1), ω = (5,3), ν_{∞,b,1} = (0,2)",
    },
    HodgeData {
        id: "table.P13.b_lt_a",
        anchor: "ν_{∞,b,0} = (2,0), ν_{∞,1−b,0} = (0,2)",
    },
    HodgeData {
        id: "table.P13.b_gt_a",
        anchor: "ν_{∞,b,0} = (1,1), ν_{∞,1−b,0} = (1,1)",
    },
    HodgeData {
        id: "table.P2",
        anchor: "h = (1,1), δ = (−1,0), ω = (3,1), ν_{∞,0,0} = (1,1)",
    },
    HodgeData {
        id: "table.P2sq",
        anchor: "h = (1,1), δ = (−2,0), ν_{∞,0,0} = (1,1)",
    },
    HodgeData {
        id: "table.P2sqM",
        anchor: "h = (1,1), δ = (−3,−1), ω = (7,4)",
    },
    HodgeData {
        id: "table.P13sq.b_half",
        anchor: "δ = (−2,0), ω = (7,2), ω_{≠∞} = (5,2), ν_{∞,0,1} = (0,2)",
    },
    HodgeData {
        id: "table.P13sq.b_lt_a",
        anchor: "δ = (−2,−2), ω = (7,4), ν_{∞,2b−1,0} = (2,0), ν_{∞,2(1−b),0} = (0,2)",
    },
    HodgeData {
        id: "table.P13sq.b_eq_3_4_lt_a",
        anchor: "δ = (−2,−2), ω = (7,4), ν_{∞,2b−1,0} = (2,2)",
    },
    HodgeData {
        id: "table.P13sq.b_gt_a",
        anchor: "δ = (−3,−1), ω = (7,4), ν_{∞,2b−1,0} = (1,1), ν_{∞,2(1−b),0} = (1,1)",
    },
    HodgeData {
        id: "table.P13sq.b_eq_3_4_gt_a",
        anchor: "δ = (−3,−1), ω = (7,4), ν_{∞,2b−1,0} = (2,2)",
    },
];

pub const IRREGULAR: &[HodgeData] = &[
    HodgeData {
        id: "irregular.E1_E2_E4",
        anchor: "d_{1/2} = (2,3,2)",
    },
    HodgeData {
        id: "irregular.E3.b_lt_a",
        anchor: "d_{2b} = (2,0), d_{2(1−b)+1} = (0,2), d_1 = (0,3)",
    },
    HodgeData {
        id: "irregular.E3.b_eq_3_4_lt_a",
        anchor: "d_{2b} = (2,2), d_1 = (0,3)",
    },
    HodgeData {
        id: "irregular.E3.b_gt_a",
        anchor: "d_{2b} = (1,1,0), d_{2(1−b)+1} = (1,1,0), d_1 = (1,1,1)",
    },
    HodgeData {
        id: "irregular.E3.b_eq_3_4_gt_a",
        anchor: "d_{2b} = (2,2,0), d_1 = (1,1,1)",
    },
];

fn class(src: &str) -> ExponentClass {
    ExponentClass::from_param(&parse_param(src).expect("fixture class parses"))
        .expect("affine class")
}

/// `(class, level, p, count)`
type Entry = (&'static str, usize, i64, u64);

fn nu(entries: &[Entry]) -> NearbyData {
    NearbyData::new(entries.iter().map(|(c, l, p, n)| (class(c), *l, *p, *n)))
}

const TRANSVECTION: &[Entry] = &[("0", 1, 1, 1), ("0", 0, 0, 1), ("0", 0, 1, 1)];
const ALPHA_PAIR: &[Entry] = &[
    ("1-a", 0, 0, 1),
    ("a", 0, 1, 1),
    ("0", 0, 0, 1),
    ("0", 0, 1, 1),
];

fn profile(rank: usize, delta: Option<Vec<i64>>, points: &[(&str, &[Entry])]) -> HodgeProfile {
    HodgeProfile::new(
        rank,
        delta,
        points.iter().map(|(l, e)| (l.to_string(), nu(e))),
    )
    .expect("fixture profile is consistent")
}

fn p13(inf: &[Entry]) -> HodgeProfile {
    profile(
        4,
        Some(vec![-2, -1]),
        &[
            ("0", TRANSVECTION),
            ("1", ALPHA_PAIR),
            ("4", TRANSVECTION),
            ("inf", inf),
        ],
    )
}

fn at_infinity(inf: &[Entry]) -> HodgeProfile {
    let n = nu(inf);
    HodgeProfile::new(n.rank() as usize, None, [("inf".to_string(), n)])
        .expect("fixture profile is consistent")
}

pub fn build_profile(id: &str) -> HodgeProfile {
    match id {
        "profile.P13.case_b_half" => p13(&[("1/2", 1, 1, 2)]),
        "profile.P13.b_lt_a" => p13(&[("b", 0, 0, 2), ("1-b", 0, 1, 2)]),
        "profile.P13.b_gt_a" => p13(&[
            ("b", 0, 0, 1),
            ("b", 0, 1, 1),
            ("1-b", 0, 0, 1),
            ("1-b", 0, 1, 1),
        ]),
        "profile.P2" => profile(
            2,
            Some(vec![-1, 0]),
            &[
                ("0", &[("0", 1, 1, 1)]),
                ("1", &[("1-a", 0, 0, 1), ("a", 0, 1, 1)]),
                ("4", &[("0", 1, 1, 1)]),
                ("inf", &[("0", 0, 0, 1), ("0", 0, 1, 1)]),
            ],
        ),
        "profile.P4" => profile(
            4,
            Some(vec![-2, 0]),
            &[
                ("0", TRANSVECTION),
                ("1", TRANSVECTION),
                ("t^2", TRANSVECTION),
                ("(t+1)^2", TRANSVECTION),
                (
                    "inf",
                    &[("1/2", 1, 1, 1), ("1/2", 0, 0, 1), ("1/2", 0, 1, 1)],
                ),
            ],
        ),
        "profile.Pprime.E1" => at_infinity(&[("1-mu", 2, 2, 2), ("1-mu", 0, 1, 1)]),
        "profile.Pprime.E3.b_lt_a" => at_infinity(&[
            ("2*b-mu", 0, 0, 2),
            ("3-2*b-mu", 0, 1, 2),
            ("1-mu", 0, 1, 3),
        ]),
        "profile.Pprime.E3.b_eq_3_4_lt_a" => {
            at_infinity(&[("2*b-mu", 0, 0, 2), ("2*b-mu", 0, 1, 2), ("1-mu", 0, 1, 3)])
        }
        "profile.Pprime.E3.b_gt_a" => at_infinity(&[
            ("2*b-mu", 0, 0, 1),
            ("2*b-mu", 0, 1, 1),
            ("3-2*b-mu", 0, 0, 1),
            ("3-2*b-mu", 0, 1, 1),
            ("1-mu", 0, 0, 1),
            ("1-mu", 0, 1, 1),
            ("1-mu", 0, 2, 1),
        ]),
        "profile.Pprime.E3.b_eq_3_4_gt_a" => at_infinity(&[
            ("2*b-mu", 0, 0, 2),
            ("2*b-mu", 0, 1, 2),
            ("1-mu", 0, 0, 1),
            ("1-mu", 0, 1, 1),
            ("1-mu", 0, 2, 1),
        ]),
        "profile.Pprime.E2" => at_infinity(&[
            ("1/2", 0, 0, 1),
            ("1/2", 0, 1, 1),
            ("1/2", 0, 2, 1),
            ("1/2", 1, 1, 1),
            ("1/2", 1, 2, 1),
        ]),
        "profile.Pprime.E4" => at_infinity(&[("1/2", 1, 1, 1), ("1/2", 1, 2, 1), ("1/2", 2, 2, 1)]),
        other => panic!("no profile `{other}`"),
    }
}

fn col(c: &str, level: usize, values: &[i64]) -> NuColumn {
    NuColumn {
        point: "inf".into(),
        class: class(c),
        level,
        values: values.to_vec(),
    }
}

fn table(
    h: &[i64],
    delta: Option<&[i64]>,
    omega: Option<&[i64]>,
    omega_finite: Option<&[i64]>,
    columns: Vec<NuColumn>,
) -> HodgeTable {
    HodgeTable {
        h: h.to_vec(),
        delta: delta.map(<[i64]>::to_vec),
        omega: omega.map(<[i64]>::to_vec),
        omega_finite: omega_finite.map(<[i64]>::to_vec),
        columns,
    }
}

pub fn build_table(id: &str) -> HodgeTable {
    let p13 = |cols| table(&[2, 2], Some(&[-2, -1]), Some(&[5, 3]), None, cols);
    let sq = |delta: &[i64], cols| table(&[2, 2], Some(delta), Some(&[7, 4]), Some(&[5, 2]), cols);
    match id {
        "table.P13.b_half" => p13(vec![col("b", 1, &[0, 2])]),
        "table.P13.b_lt_a" => p13(vec![col("b", 0, &[2, 0]), col("1-b", 0, &[0, 2])]),
        "table.P13.b_gt_a" => p13(vec![col("b", 0, &[1, 1]), col("1-b", 0, &[1, 1])]),
        "table.P2" => table(
            &[1, 1],
            Some(&[-1, 0]),
            Some(&[3, 1]),
            None,
            vec![col("0", 0, &[1, 1])],
        ),
        "table.P2sq" => table(
            &[1, 1],
            Some(&[-2, 0]),
            None,
            None,
            vec![col("0", 0, &[1, 1])],
        ),
        "table.P2sqM" => table(&[1, 1], Some(&[-3, -1]), Some(&[7, 4]), None, vec![]),
        "table.P13sq.b_half" => table(
            &[2, 2],
            Some(&[-2, 0]),
            Some(&[7, 2]),
            Some(&[5, 2]),
            vec![col("0", 1, &[0, 2])],
        ),
        "table.P13sq.b_lt_a" => sq(
            &[-2, -2],
            vec![col("2*b-1", 0, &[2, 0]), col("2*(1-b)", 0, &[0, 2])],
        ),
        "table.P13sq.b_eq_3_4_lt_a" => sq(&[-2, -2], vec![col("2*b-1", 0, &[2, 2])]),
        "table.P13sq.b_gt_a" => sq(
            &[-3, -1],
            vec![col("2*b-1", 0, &[1, 1]), col("2*(1-b)", 0, &[1, 1])],
        ),
        "table.P13sq.b_eq_3_4_gt_a" => sq(&[-3, -1], vec![col("2*b-1", 0, &[2, 2])]),
        other => panic!("no table `{other}`"),
    }
}

/// Columns `d^p_α` as `(α, [d⁰, d¹, …])`.
fn irregular(columns: &[(&str, &[u64])]) -> SymbolicIrregularTable {
    let mut entries = Vec::new();
    for (alpha, dims) in columns {
        let alpha = parse_param(alpha).expect("fixture jump parses");
        for (p, d) in dims.iter().enumerate() {
            if *d > 0 {
                entries.push((&alpha + &ParamPoly::int(p as i64), *d));
            }
        }
    }
    SymbolicIrregularTable { entries }
}

pub fn build_irregular(id: &str) -> SymbolicIrregularTable {
    match id {
        "irregular.E1_E2_E4" => irregular(&[("1/2", &[2, 3, 2])]),
        "irregular.E3.b_lt_a" => {
            irregular(&[("2*b", &[2, 0]), ("2*(1-b)+1", &[0, 2]), ("1", &[0, 3])])
        }
        "irregular.E3.b_eq_3_4_lt_a" => irregular(&[("2*b", &[2, 2]), ("1", &[0, 3])]),
        "irregular.E3.b_gt_a" => irregular(&[
            ("2*b", &[1, 1, 0]),
            ("2*(1-b)+1", &[1, 1, 0]),
            ("1", &[1, 1, 1]),
        ]),
        "irregular.E3.b_eq_3_4_gt_a" => irregular(&[("2*b", &[2, 2, 0]), ("1", &[1, 1, 1])]),
        other => panic!("no irregular table `{other}`"),
    }
}
