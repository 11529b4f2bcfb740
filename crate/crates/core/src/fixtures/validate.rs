use serde::Serialize;

use super::{Fixture, Payload};
use crate::algebra::{fmt_rational, ParamPoly, ParameterWitness, Rational};
use crate::error::Result;
use crate::expr::{parse_operator, parse_param};
use crate::hodge::{derive_counts, parabolic_rigidity_solve};
use crate::monodromy::{rigidity_index, ExponentClass, MonodromyTuple, INFINITY_LABEL};
use crate::weyl::{certify_scheme, riemann_scheme, Point, RiemannScheme, ThetaFormOperator};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checked: usize,
    pub failures: Vec<(String, String)>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, id: &str, msg: impl Into<String>) {
        self.failures.push((id.to_string(), msg.into()));
    }
}

/// Differences between the scheme computed from `op` at `w` and the printed one.
pub fn scheme_mismatches(
    op: &ThetaFormOperator,
    scheme: &RiemannScheme,
    w: &ParameterWitness,
) -> Result<Vec<String>> {
    let computed = riemann_scheme(op, &scheme.points(), w)?.evaluate(w)?;
    let printed = scheme.evaluate(w)?;
    let mut out = Vec::new();
    for (pt, want) in &printed {
        match computed.get(pt) {
            Some(got) if got == want => {}
            got => out.push(format!(
                "at {pt}: printed [{}], computed [{}]",
                show(want),
                got.map_or_else(|| "none".to_string(), |g| show(g))
            )),
        }
    }
    Ok(out)
}

fn show(v: &[Rational]) -> String {
    v.iter().map(fmt_rational).collect::<Vec<_>>().join(", ")
}

/// Exponent classes of a scheme column with multiplicity.
fn column_classes(es: &[ParamPoly]) -> Result<Vec<ExponentClass>> {
    let mut v = es
        .iter()
        .map(ExponentClass::from_param)
        .collect::<Result<Vec<_>>>()?;
    v.sort();
    Ok(v)
}

fn tuple_classes(t: &MonodromyTuple, label: &str) -> Vec<ExponentClass> {
    let mut v: Vec<ExponentClass> = t
        .local(label)
        .map(|l| {
            l.blocks()
                .iter()
                .flat_map(|b| std::iter::repeat_n(b.class.clone(), b.size))
                .collect()
        })
        .unwrap_or_default();
    v.sort();
    v
}

/// Scheme exponents agree with the tuple's eigenvalue classes point by point.
pub fn tuple_scheme_mismatches(t: &MonodromyTuple, scheme: &RiemannScheme) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (pt, es) in scheme.columns() {
        let label = match pt {
            Point::Infinity => INFINITY_LABEL.to_string(),
            Point::Finite(s) => t
                .finite()
                .keys()
                .find(|l| parse_param(l).is_ok_and(|p| p == *s))
                .cloned()
                .unwrap_or_else(|| s.to_string()),
        };
        let want = column_classes(es)?;
        let got = tuple_classes(t, &label);
        if want != got {
            let show = |v: &[ExponentClass]| {
                v.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            out.push(format!(
                "at {pt}: scheme classes [{}], tuple classes [{}]",
                show(&want),
                show(&got)
            ));
        }
    }
    Ok(out)
}

const COHERENT: &[(&str, &str)] = &[
    ("tuple.P13", "scheme.P13"),
    ("tuple.P2", "scheme.P2"),
    ("tuple.P4", "scheme.P4"),
];

const PROFILE_TABLES: &[(&str, &str, &str)] = &[
    ("profile.P13.case_b_half", "table.P13.b_half", "case.E1"),
    ("profile.P13.b_lt_a", "table.P13.b_lt_a", "case.E3.b_lt_a"),
    ("profile.P13.b_gt_a", "table.P13.b_gt_a", "case.E3.b_gt_a"),
    ("profile.P2", "table.P2", "case.E2"),
];

fn find<'a>(set: &'a [Fixture], id: &str) -> Option<&'a Fixture> {
    set.iter().find(|f| f.id == id)
}

fn find_witness<'a>(set: &'a [Fixture], id: &str) -> Option<&'a ParameterWitness> {
    match &find(set, id)?.payload {
        Payload::Witness(w) => Some(w),
        _ => None,
    }
}

/// Checks every fixture against its type invariants and the fixtures it refers to.
pub fn validate_all(set: &[Fixture]) -> ValidationReport {
    let mut r = ValidationReport::default();
    if set.is_empty() {
        r.warnings.push("empty fixture set".into());
        return r;
    }
    for f in set {
        r.checked += 1;
        if f.anchor.is_empty() {
            r.fail(&f.id, "empty anchor");
        }
        match &f.payload {
            Payload::Operator(op) => {
                if op.is_zero() {
                    r.fail(&f.id, "zero operator");
                }
                match parse_operator(&op.to_string()) {
                    Ok(back) if back == *op => {}
                    _ => r.fail(&f.id, "print/parse round trip"),
                }
            }
            Payload::Scheme {
                scheme,
                operator,
                witnesses,
            } => {
                let Some(Payload::Operator(op)) = find(set, operator).map(|o| &o.payload) else {
                    r.fail(&f.id, format!("operator {operator} missing"));
                    continue;
                };
                if let Err(e) = certify_scheme(op, scheme) {
                    r.fail(&f.id, e.to_string());
                }
                for wid in witnesses {
                    let Some(w) = find_witness(set, wid) else {
                        r.fail(&f.id, format!("witness {wid} missing"));
                        continue;
                    };
                    match scheme_mismatches(op, scheme, w) {
                        Ok(m) => m
                            .into_iter()
                            .for_each(|m| r.fail(&f.id, format!("{wid}: {m}"))),
                        Err(e) => r.fail(&f.id, format!("{wid}: {e}")),
                    }
                }
            }
            Payload::Tuple(t) => {
                let idx = rigidity_index(t);
                if idx != 2 {
                    r.fail(&f.id, format!("rigidity index {idx}"));
                }
            }
            Payload::LocalType(l) => {
                if l.dim() == 0 {
                    r.fail(&f.id, "empty local type");
                }
            }
            Payload::Profile(p) => match derive_counts(p) {
                Err(e) => r.fail(&f.id, e.to_string()),
                Ok(c) => {
                    if let Some(d) = &p.delta {
                        match parabolic_rigidity_solve(&c.h, &c.omega) {
                            Ok(solved) if solved == *d => {}
                            Ok(solved) => r.fail(
                                &f.id,
                                format!("delta {d:?}, parabolic rigidity gives {solved:?}"),
                            ),
                            Err(e) => r.fail(&f.id, e.to_string()),
                        }
                    }
                }
            },
            Payload::HodgeTable(t) => {
                if t.h.iter().any(|v| *v < 0)
                    || t.columns.iter().any(|c| c.values.iter().any(|v| *v < 0))
                {
                    r.fail(&f.id, "negative entry");
                }
            }
            Payload::IrregularTable(t) => {
                if t.entries.iter().map(|(_, d)| d).sum::<u64>() != 7 {
                    r.fail(&f.id, "dimensions do not sum to 7");
                }
            }
            Payload::Witness(w) => {
                for c in w.constraints() {
                    if !c.holds(w.assignment()).unwrap_or(false) {
                        r.fail(&f.id, format!("violates {c}"));
                    }
                }
            }
        }
    }
    for (tid, sid) in COHERENT {
        let (Some(t), Some(s)) = (find(set, tid), find(set, sid)) else {
            continue;
        };
        if let (Payload::Tuple(t), Payload::Scheme { scheme, .. }) = (&t.payload, &s.payload) {
            match tuple_scheme_mismatches(t, scheme) {
                Ok(m) => m.into_iter().for_each(|m| r.fail(tid, m)),
                Err(e) => r.fail(tid, e.to_string()),
            }
        }
    }
    for (pid, tid, wid) in PROFILE_TABLES {
        let (Some(p), Some(t), Some(w)) = (find(set, pid), find(set, tid), find_witness(set, wid))
        else {
            continue;
        };
        if let (Payload::Profile(p), Payload::HodgeTable(t)) = (&p.payload, &t.payload) {
            match t.mismatches(p, Some(w)) {
                Ok(m) => m
                    .into_iter()
                    .for_each(|m| r.fail(pid, format!("vs {tid}: {m}"))),
                Err(e) => r.fail(pid, e.to_string()),
            }
        }
    }
    r
}
