//! Operators as printed, one θ-coefficient per x-power.

use crate::expr::parse_operator;
use crate::weyl::ThetaFormOperator;

pub struct OperatorData {
    pub id: &'static str,
    pub anchor: &'static str,
    pub terms: &'static [(usize, &'static str)],
}

pub const OPERATORS: &[OperatorData] = &[
    OperatorData {
        id: "op.L.E1E3",
        anchor: "L_3(ϑ) = −6−4ϑ",
        terms: &[
            (0, "4*T*(T-1)*(T+1)*(2*T+1-2*b)*(-2*b-1+2*T)*(2*b+1+2*T)*(2*b-1+2*T)"),
            (1, "-12*T*(T+1)*(2*T+1)*(2*b+1+2*T)*(2*T+1-2*b)"),
            (2, "(T+1)*(36*T^2+12*a^2-16*b^2+72*T-12*a+43)"),
            (3, "-6-4*T"),
        ],
    },
    OperatorData {
        id: "op.L.E4",
        anchor: "L_3(ϑ) = −t²(t+1)²(2ϑ+1)",
        terms: &[
            (0, "128*T^2*(T-2)^2*(T-1)^3"),
            (1, "-32*T^2*(t^2+t+1)*(2*T-1)*(T-1)^2"),
            (2, "8*(t^2+t+1)^2*T^3"),
            (3, "-t^2*(t+1)^2*(2*T+1)"),
        ],
    },
    OperatorData {
        id: "op.P13",
        anchor: "P_0(ϑ) = −4096ϑ²(ϑ−1)(ϑ+1)",
        terms: &[
            (0, "-4096*T^2*(T-1)*(T+1)"),
            (1, "1024*T*(T+1)*(9*T^2+3*a^2-4*b^2+9*T-3*a+4)"),
            (2, "-6144*(T+1)^2*(T+1+b)*(T+1-b)"),
            (3, "1024*(T+1+b)*(T+1-b)*(T+2+b)*(T+2-b)"),
        ],
    },
    OperatorData {
        id: "op.P2",
        anchor: "P_0(ϑ) = −4ϑ²",
        terms: &[
            (0, "-4*T^2"),
            (1, "9*T^2+3*a^2+9*T-3*a+4"),
            (2, "-6*(T+1)^2"),
            (3, "(T+2)*(T+1)"),
        ],
    },
    OperatorData {
        id: "op.P4",
        anchor: "P_3(ϑ) = (2ϑ+5)(2ϑ+1)(2ϑ+3)²",
        terms: &[
            (0, "-16*T^2*t^2*(t+1)^2*(T-1)*(T+1)"),
            (1, "4*T*(t^2+t+1)^2*(T+1)*(2*T+1)^2"),
            (2, "-8*(t^2+t+1)*(2*T+3)*(2*T+1)*(T+1)^2"),
            (3, "(2*T+5)*(2*T+1)*(2*T+3)^2"),
        ],
    },
    OperatorData {
        id: "op.Pprime.E1E3",
        anchor: "P_0(ϑ) = −4ϑ(ϑ−5)(ϑ−1)(ϑ−2)(ϑ−3)(ϑ−4)(ϑ−μ)",
        terms: &[
            (0, "-4*T*(T-5)*(T-1)*(T-2)*(T-3)*(T-4)*(T-mu)"),
            (2, "T*(T-1)*(T-2)*(T-3)*(T-mu+1)*(9*T^2-18*T*mu+12*a^2-16*b^2+9*mu^2+18*T-12*a-18*mu+16)"),
            (4, "-6*T*(T-1)*(T-mu+3)*(T-mu+2)*(T-mu+1)*(-mu+2+2*b+T)*(-mu+2-2*b+T)"),
            (6, "(T-mu+1)*(-mu+5+T)*(T-mu+3)*(-mu+2+2*b+T)*(-mu+2-2*b+T)*(-mu+4+2*b+T)*(-mu+4-2*b+T)"),
        ],
    },
    OperatorData {
        id: "op.Pprime.E2",
        anchor: "P_0(ϑ) = 256ϑ(ϑ−1)⋯(ϑ−5)(2ϑ−1)",
        terms: &[
            (0, "256*T*(T-1)*(T-2)*(T-3)*(T-4)*(T-5)*(2*T-1)"),
            (2, "-16*T*(T-1)*(T-2)*(T-3)*(2*T+1)*(36*T^2+48*a^2+36*T-48*a+37)"),
            (4, "24*T*(2*T+5)*(T-1)*(2*T+1)*(2*T+3)^3"),
            (6, "-(2*T+5)*(2*T+1)*(2*T+9)*(2*T+7)^2*(2*T+3)^2"),
        ],
    },
    OperatorData {
        id: "op.Pprime.E4",
        anchor: "P_6(ϑ) = (2ϑ+5)²(2ϑ−3)²(2ϑ+1)³",
        terms: &[
            (0, "-64*T*t^2*(t+1)^2*(T-1)*(T-2)*(T-3)*(T-4)*(T-5)*(2*T-5)"),
            (2, "16*T*(t^2+t+1)^2*(T-1)*(T-2)*(T-3)*(2*T-3)^3"),
            (4, "-8*T*(t^2+t+1)*(2*T-1)*(T-1)*(2*T+1)^2*(2*T-3)^2"),
            (6, "(2*T+5)^2*(2*T-3)^2*(2*T+1)^3"),
        ],
    },
    OperatorData {
        id: "op.H.E1E3",
        anchor: "H_6(ϑ) = 4(ϑ+μ+1)",
        terms: &[
            (0, "-(mu-4+T)*(mu+T)*(mu-2+T)*(mu-3-2*b+T)*(mu-3+2*b+T)*(mu-1-2*b+T)*(mu-1+2*b+T)"),
            (2, "6*(mu-2+T)*(mu+T)*(mu-1+T)*(mu-1-2*b+T)*(mu-1+2*b+T)"),
            (4, "-(mu+T)*(9*T^2+18*T*mu+12*a^2-16*b^2+9*mu^2-12*a+7)"),
            (6, "4*(T+mu+1)"),
        ],
    },
    OperatorData {
        id: "op.H.E2",
        anchor: "H_6(ϑ) = −256(2ϑ+3)",
        terms: &[
            (0, "(2*T-3)*(2*T+1)*(2*T-7)*(2*T-5)^2*(2*T-1)^2"),
            (2, "-24*(2*T-3)*(2*T+1)*(2*T-1)^3"),
            (4, "16*(2*T+1)*(36*T^2+48*a^2+36*T-48*a+37)"),
            (6, "-256*(2*T+3)"),
        ],
    },
    OperatorData {
        id: "op.H.E4",
        anchor: "H_6(ϑ) = 64t²(t+1)²(7+2ϑ)",
        terms: &[
            (0, "-(2*T+5)^2*(2*T-3)^2*(2*T+1)^3"),
            (2, "8*(t^2+t+1)*(3+2*T)*(2*T+1)^2*(2*T+5)^2"),
            (4, "-16*(t^2+t+1)^2*(2*T+5)^3"),
            (6, "64*t^2*(t+1)^2*(7+2*T)"),
        ],
    },
];

impl OperatorData {
    pub fn build(&self) -> ThetaFormOperator {
        let mut out = ThetaFormOperator::zero();
        for (i, src) in self.terms {
            let coeff = parse_operator(src).expect("fixture operator parses");
            out = &out + &ThetaFormOperator::x_pow(*i).op_mul(&coeff);
        }
        out
    }
}
