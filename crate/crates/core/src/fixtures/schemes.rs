//! Riemann schemes as printed, with the operator they describe and the witnesses
//! under which they are checked.

use crate::expr::parse_param;
use crate::weyl::{Point, RiemannScheme};

pub struct SchemeData {
    pub id: &'static str,
    pub anchor: &'static str,
    pub operator: &'static str,
    pub witnesses: &'static [&'static str],
    pub columns: &'static [(&'static str, &'static [&'static str])],
}

const E1E3: &[&str] = &[
    "case.E1",
    "case.E3.b_lt_a",
    "case.E3.b_eq_3_4_lt_a",
    "case.E3.b_gt_a",
    "case.E3.b_eq_3_4_gt_a",
];

const INT6: [&str; 6] = ["5", "4", "3", "2", "1", "0"];

macro_rules! with_int6 {
    ($($e:expr),*) => { &[$($e,)* INT6[0], INT6[1], INT6[2], INT6[3], INT6[4], INT6[5]] };
}

pub const SCHEMES: &[SchemeData] = &[
    SchemeData {
        id: "scheme.P13",
        anchor: "0 | 1 | 4 | ∞: (−1,0,0,1) (0,1,a,1−a) (0,1,1,2) (2−b,1−b,1+b,2+b)",
        operator: "op.P13",
        witnesses: E1E3,
        columns: &[
            ("0", &["-1", "0", "0", "1"]),
            ("1", &["0", "1", "a", "1-a"]),
            ("4", &["0", "1", "1", "2"]),
            ("inf", &["2-b", "1-b", "1+b", "2+b"]),
        ],
    },
    SchemeData {
        id: "scheme.P2",
        anchor: "0 | 1 | 4 | ∞: (0,0) (−a,a−1) (0,0) (1,2)",
        operator: "op.P2",
        witnesses: &["case.E2"],
        columns: &[
            ("0", &["0", "0"]),
            ("1", &["-a", "a-1"]),
            ("4", &["0", "0"]),
            ("inf", &["1", "2"]),
        ],
    },
    SchemeData {
        id: "scheme.P4",
        anchor: "0 | 1 | t² | (t+1)² | ∞: (−1,0,0,1) (0,1,1,2)³ (1/2,3/2,3/2,5/2)",
        operator: "op.P4",
        witnesses: &["case.E4"],
        columns: &[
            ("0", &["-1", "0", "0", "1"]),
            ("1", &["0", "1", "1", "2"]),
            ("t^2", &["0", "1", "1", "2"]),
            ("(t+1)^2", &["0", "1", "1", "2"]),
            ("inf", &["1/2", "3/2", "3/2", "5/2"]),
        ],
    },
    SchemeData {
        id: "scheme.Pprime.E1E3",
        anchor: "∞: 2b+4−μ, 2b+2−μ, 5−μ, 3−μ, 1−μ, −2b+2−μ, −2b+4−μ",
        operator: "op.Pprime.E1E3",
        witnesses: E1E3,
        columns: &[
            ("-2", with_int6!("mu")),
            ("-1", &["mu-a", "mu+a-1", "4", "3", "2", "1", "0"]),
            ("0", with_int6!("mu")),
            ("1", &["mu-a", "mu+a-1", "4", "3", "2", "1", "0"]),
            ("2", with_int6!("mu")),
            (
                "inf",
                &[
                    "2*b+4-mu",
                    "2*b+2-mu",
                    "5-mu",
                    "3-mu",
                    "1-mu",
                    "-2*b+2-mu",
                    "-2*b+4-mu",
                ],
            ),
        ],
    },
    SchemeData {
        id: "scheme.Pprime.E2",
        anchor: "∞: 9/2, 7/2, 7/2, 5/2, 3/2, 3/2, 1/2",
        operator: "op.Pprime.E2",
        witnesses: &["case.E2"],
        columns: &[
            ("-2", with_int6!("1/2")),
            ("-1", &["1/2+a", "-1/2-a", "4", "3", "2", "1", "0"]),
            ("0", with_int6!("1/2")),
            ("1", &["1/2+a", "-1/2-a", "4", "3", "2", "1", "0"]),
            ("2", with_int6!("1/2")),
            ("inf", &["9/2", "7/2", "7/2", "5/2", "3/2", "3/2", "1/2"]),
        ],
    },
    SchemeData {
        id: "scheme.Pprime.E2.corrected",
        anchor: "±1 column recomputed from the operator: a−1/2, 1/2−a",
        operator: "op.Pprime.E2",
        witnesses: &["case.E2"],
        columns: &[
            ("-2", with_int6!("1/2")),
            ("-1", &["a-1/2", "1/2-a", "4", "3", "2", "1", "0"]),
            ("0", with_int6!("1/2")),
            ("1", &["a-1/2", "1/2-a", "4", "3", "2", "1", "0"]),
            ("2", with_int6!("1/2")),
            ("inf", &["9/2", "7/2", "7/2", "5/2", "3/2", "3/2", "1/2"]),
        ],
    },
    SchemeData {
        id: "scheme.Pprime.E4",
        anchor: "±(t+1) | ±t | ±1 | 0: 5,4,3,5/2,2,1,0; ∞: 5/2,5/2,1/2,1/2,1/2,−3/2,−3/2",
        operator: "op.Pprime.E4",
        witnesses: &["case.E4"],
        columns: &[
            ("-t-1", with_int6!("5/2")),
            ("-t", with_int6!("5/2")),
            ("-1", with_int6!("5/2")),
            ("0", with_int6!("5/2")),
            ("1", with_int6!("5/2")),
            ("t", with_int6!("5/2")),
            ("t+1", with_int6!("5/2")),
            ("inf", &["5/2", "5/2", "1/2", "1/2", "1/2", "-3/2", "-3/2"]),
        ],
    },
];

impl SchemeData {
    pub fn build(&self) -> RiemannScheme {
        RiemannScheme::new(self.columns.iter().map(|(pt, es)| {
            let point = if *pt == "inf" {
                Point::Infinity
            } else {
                Point::finite(parse_param(pt).expect("fixture point parses"))
            };
            (
                point,
                es.iter()
                    .map(|e| parse_param(e).expect("fixture exponent parses"))
                    .collect(),
            )
        }))
    }
}
