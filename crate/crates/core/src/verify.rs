//! The fixture-replay battery behind `rigid-calc verify` and the acceptance test.
//!
//! Each criterion is a list of named checks. A check is tagged with the cases
//! (`E1`..`E4`) it concerns, so the battery can be narrowed to one case.

use serde::Serialize;

use crate::algebra::{ratio, ParamPoly, ParameterWitness, Rational, Symbol};
use crate::error::{Error, Result};
use crate::fixtures::{self, scheme_mismatches, SCHEMES};
use crate::hodge::{
    derive_counts, mc_profile, parabolic_cohomology_hodge, parabolic_rigidity_solve,
    pullback_profile, selfdual_completion_solve, stationary_phase_table, tables_equal_up_to_shift,
    HodgeProfile, SelfDualConstraint,
};
use crate::monodromy::{
    kummer_pullback_tuple, mc_local, rigidity_index, tensor_rank_one, ExponentClass, MonodromyTuple,
};
use crate::weyl::{
    ft_quotient, kummer_pullback, match_up_to_twist, minimality_certificate,
    minimality_under_witness, ThetaFormOperator,
};

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: Vec<&'static str>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionReport {
    pub criterion: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Group {
    All,
    Operators,
    Monodromy,
    Hodge,
    Case(&'static str),
}

impl Group {
    pub fn parse(s: &str) -> Option<Group> {
        Some(match s {
            "all" => Group::All,
            "operators" => Group::Operators,
            "monodromy" => Group::Monodromy,
            "hodge" => Group::Hodge,
            "E1" => Group::Case("E1"),
            "E2" => Group::Case("E2"),
            "E3" => Group::Case("E3"),
            "E4" => Group::Case("E4"),
            _ => return None,
        })
    }

    fn criteria(self) -> &'static [u8] {
        match self {
            Group::Operators => &[1, 2, 3],
            Group::Monodromy => &[4],
            Group::Hodge => &[5, 6],
            Group::All | Group::Case(_) => &[1, 2, 3, 4, 5, 6],
        }
    }
}

pub const TITLES: [&str; 7] = [
    "Fourier quotient matches the twisted pullback",
    "Riemann schemes under witnesses",
    "minimality certificates",
    "middle convolution of local monodromy",
    "Hodge data through pullback and convolution",
    "irregular Hodge numbers by stationary phase",
    "algebraic invariants (property suites)",
];

/// Runs the criteria of `group`. A case group keeps only checks tagged with that case.
pub fn run(group: Group) -> Vec<CriterionReport> {
    group
        .criteria()
        .iter()
        .map(|&n| {
            let mut r = criterion(n);
            if let Group::Case(c) = group {
                r.checks.retain(|k| k.cases.contains(&c));
            }
            r
        })
        .filter(|r| !r.checks.is_empty())
        .collect()
}

pub fn criterion(n: u8) -> CriterionReport {
    let checks = match n {
        1 => operators_match(),
        2 => schemes(),
        3 => minimality(),
        4 => monodromy(),
        5 => hodge(),
        6 => irregular(),
        _ => Vec::new(),
    };
    CriterionReport {
        criterion: n,
        title: TITLES[(n as usize).saturating_sub(1).min(6)],
        checks,
    }
}

fn check(
    name: impl Into<String>,
    cases: &[&'static str],
    f: impl FnOnce() -> Result<(bool, String)>,
) -> Check {
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    Check {
        name: name.into(),
        cases: cases.to_vec(),
        passed,
        detail,
    }
}

fn mu() -> ParamPoly {
    ParamPoly::symbol(Symbol::Mu)
}

fn half() -> ExponentClass {
    ExponentClass::half()
}

/// One row per witnessed case of the E₁/E₃ family.
struct Case {
    tag: &'static str,
    witness: &'static str,
    p13: &'static str,
    p13sq: &'static str,
    pprime: &'static str,
    irregular: &'static str,
}

const E13: [Case; 5] = [
    Case {
        tag: "E1",
        witness: "case.E1",
        p13: "profile.P13.case_b_half",
        p13sq: "table.P13sq.b_half",
        pprime: "profile.Pprime.E1",
        irregular: "irregular.E1_E2_E4",
    },
    Case {
        tag: "E3",
        witness: "case.E3.b_lt_a",
        p13: "profile.P13.b_lt_a",
        p13sq: "table.P13sq.b_lt_a",
        pprime: "profile.Pprime.E3.b_lt_a",
        irregular: "irregular.E3.b_lt_a",
    },
    Case {
        tag: "E3",
        witness: "case.E3.b_eq_3_4_lt_a",
        p13: "profile.P13.b_lt_a",
        p13sq: "table.P13sq.b_eq_3_4_lt_a",
        pprime: "profile.Pprime.E3.b_eq_3_4_lt_a",
        irregular: "irregular.E3.b_eq_3_4_lt_a",
    },
    Case {
        tag: "E3",
        witness: "case.E3.b_gt_a",
        p13: "profile.P13.b_gt_a",
        p13sq: "table.P13sq.b_gt_a",
        pprime: "profile.Pprime.E3.b_gt_a",
        irregular: "irregular.E3.b_gt_a",
    },
    Case {
        tag: "E3",
        witness: "case.E3.b_eq_3_4_gt_a",
        p13: "profile.P13.b_gt_a",
        p13sq: "table.P13sq.b_eq_3_4_gt_a",
        pprime: "profile.Pprime.E3.b_eq_3_4_gt_a",
        irregular: "irregular.E3.b_eq_3_4_gt_a",
    },
];

fn case_tag(scheme_or_witness: &str) -> Vec<&'static str> {
    let mut out = Vec::new();
    for tag in ["E1", "E2", "E3", "E4"] {
        if scheme_or_witness.contains(tag) {
            out.push(tag);
        }
    }
    out
}

// ---- criterion 1 ----

/// `(c, s)` with `A = c·twist(B, s)`.
pub type ScaleShift = (ParamPoly, ParamPoly);

/// Operator P, operator L, expected quotient, substitution, label, c, s, cases.
type FtRow<'a> = (
    &'a str,
    &'a str,
    &'a str,
    Option<&'a ParameterWitness>,
    &'a str,
    ParamPoly,
    ParamPoly,
    &'a [&'static str],
);

/// Divides `FT(P)` by `[ϑ]_n` and matches the quotient against `[k]^*L` up to a twist.
pub fn ft_match(
    p: &ThetaFormOperator,
    l: &ThetaFormOperator,
    k: usize,
) -> Result<(usize, ThetaFormOperator, Option<ScaleShift>)> {
    let (n, h) = ft_quotient(p)?;
    let pulled = kummer_pullback(l, k)?;
    let m = match_up_to_twist(&h, &pulled).map(|m| (m.scale, m.shift));
    Ok((n, h, m))
}

fn operators_match() -> Vec<Check> {
    let b_zero = ParameterWitness::bare("b=0", [(Symbol::B, Rational::from_integer(0.into()))]);
    let rows: [FtRow; 3] = [
        (
            "op.Pprime.E1E3",
            "op.L.E1E3",
            "op.H.E1E3",
            None,
            "1a",
            ParamPoly::int(-2),
            &mu() - &ParamPoly::int(2),
            &["E1", "E3"],
        ),
        (
            "op.Pprime.E2",
            "op.L.E1E3",
            "op.H.E2",
            Some(&b_zero),
            "1b",
            ParamPoly::int(-256),
            ParamPoly::constant(ratio(-3, 2)),
            &["E2"],
        ),
        (
            "op.Pprime.E4",
            "op.L.E4",
            "op.H.E4",
            None,
            "1c",
            ParamPoly::int(-128),
            ParamPoly::constant(ratio(5, 2)),
            &["E4"],
        ),
    ];
    let mut out = Vec::new();
    for (p, l, h, sub, label, c, s, cases) in rows {
        out.push(check(
            format!("{label} FT({p}) = [ϑ]_6·{h}"),
            cases,
            || {
                let (n, q) = ft_quotient(fixtures::operator(p)?)?;
                let want = fixtures::operator(h)?;
                Ok((
                    n == 6 && q == *want,
                    format!(
                        "n = {n}, quotient {}",
                        if q == *want { "matches" } else { "differs" }
                    ),
                ))
            },
        ));
        out.push(check(
            format!("{label} quotient = c·twist([2]^*{l}, s)"),
            cases,
            || {
                let mut lop = fixtures::operator(l)?.clone();
                if let Some(w) = sub {
                    lop = lop.map_coeffs(|_, q| q.substitute(w));
                }
                let (_, _, m) = ft_match(fixtures::operator(p)?, &lop, 2)?;
                Ok(match m {
                    None => (false, "no twist relates the two operators".into()),
                    Some((gc, gs)) => (
                        gc == c && gs == s,
                        format!("c = {gc}, s = {gs} (expected c = {c}, s = {s})"),
                    ),
                })
            },
        ));
    }
    out
}

// ---- criterion 2 ----

fn schemes() -> Vec<Check> {
    let mut out = Vec::new();
    for s in SCHEMES.iter().filter(|s| !s.id.ends_with(".corrected")) {
        for w in s.witnesses {
            let cases = case_tag(w);
            out.push(check(format!("{} under {w}", s.id), &cases, || {
                let mism = scheme_mismatches(
                    fixtures::operator(s.operator)?,
                    fixtures::scheme(s.id)?,
                    fixtures::witness(w)?,
                )?;
                Ok(if mism.is_empty() {
                    (true, "all columns match".into())
                } else {
                    (false, mism.join("; "))
                })
            }));
        }
    }
    out
}

// ---- criterion 3 ----

fn minimality() -> Vec<Check> {
    let rows: [(&str, &str, &[&str]); 3] = [
        (
            "op.Pprime.E1E3",
            "scheme.Pprime.E1E3",
            &[
                "case.E1",
                "case.E3.b_lt_a",
                "case.E3.b_eq_3_4_lt_a",
                "case.E3.b_gt_a",
                "case.E3.b_eq_3_4_gt_a",
            ],
        ),
        ("op.Pprime.E2", "scheme.Pprime.E2.corrected", &["case.E2"]),
        ("op.Pprime.E4", "scheme.Pprime.E4", &["case.E4"]),
    ];
    let mut out = Vec::new();
    for (op, sch, witnesses) in rows {
        let all_cases: Vec<&'static str> = {
            let mut v: Vec<&'static str> = witnesses.iter().flat_map(|w| case_tag(w)).collect();
            v.dedup();
            v
        };
        out.push(check(
            format!("{op} symbolic certificate"),
            &all_cases,
            || {
                let r = minimality_certificate(fixtures::operator(op)?, fixtures::scheme(sch)?)?;
                let roots: Vec<String> = r.quotient_roots.iter().map(|x| x.to_string()).collect();
                Ok((
                    r.holds(),
                    format!(
                        "exponents {}, quotient roots [{}] {}",
                        if r.exponents_ok {
                            "ok"
                        } else {
                            "forced negative"
                        },
                        roots.join(", "),
                        if r.quotient_ok {
                            "non-integral"
                        } else {
                            "contain an integer"
                        }
                    ),
                ))
            },
        ));
        for w in witnesses {
            out.push(check(format!("{op} under {w}"), &case_tag(w), || {
                let (e, q) = minimality_under_witness(
                    fixtures::operator(op)?,
                    fixtures::scheme(sch)?,
                    fixtures::witness(w)?,
                )?;
                Ok((e && q, format!("exponents ok: {e}, quotient ok: {q}")))
            }));
        }
    }
    out
}

// ---- criterion 4 ----

fn tuple_equal(got: &MonodromyTuple, want: &MonodromyTuple) -> (bool, String) {
    if got == want {
        (true, format!("rank {}", got.rank()))
    } else {
        (
            false,
            format!(
                "got {}; expected {}",
                got.to_string().replace('\n', " "),
                want.to_string().replace('\n', " ")
            ),
        )
    }
}

/// `M → MC_{a−b} → ⊗M₂ → MC_b`, each step as in the table of rank-one data.
pub fn katz_chain() -> Result<[MonodromyTuple; 3]> {
    let a = ExponentClass::symbol(Symbol::A);
    let b = ExponentClass::symbol(Symbol::B);
    let m = fixtures::tuple("tuple.katz.M")?;
    let row2 = mc_local(m, &a.sub(&b))?;
    let row3 = tensor_rank_one(&row2, fixtures::tuple("tuple.katz.M2")?)?;
    let row4 = mc_local(&row3, &b)?;
    Ok([row2, row3, row4])
}

fn monodromy() -> Vec<Check> {
    let e13: &[&'static str] = &["E1", "E3"];
    let mut out = Vec::new();
    let a = ExponentClass::symbol(Symbol::A);
    let b = ExponentClass::symbol(Symbol::B);
    let expected = ["tuple.katz.MC", "tuple.katz.MC_M2", "tuple.P13"];
    for (i, want) in expected.iter().enumerate() {
        out.push(check(format!("Katz row {} = {want}", i + 2), e13, || {
            Ok(tuple_equal(&katz_chain()?[i], fixtures::tuple(want)?))
        }));
    }
    for c in &E13 {
        let cases = [c.tag];
        out.push(check(
            format!("Katz chain under {}", c.witness),
            &cases,
            || {
                let w = fixtures::witness(c.witness)?;
                let lambda =
                    ExponentClass::from_param(&ParamPoly::constant(a.sub(&b).evaluate(w)?))?;
                let beta = ExponentClass::from_param(&ParamPoly::constant(b.evaluate(w)?))?;
                let m = fixtures::tuple("tuple.katz.M")?.specialize(w)?;
                let m2 = fixtures::tuple("tuple.katz.M2")?.specialize(w)?;
                let got = mc_local(&tensor_rank_one(&mc_local(&m, &lambda)?, &m2)?, &beta)?;
                let target = if c.tag == "E1" {
                    "tuple.P13.b_half"
                } else {
                    "tuple.P13"
                };
                Ok(tuple_equal(&got, &fixtures::tuple(target)?.specialize(w)?))
            },
        ));
    }
    out.push(check("tuple.P4 = MC_{-1}(tuple.E4.M)", &["E4"], || {
        Ok(tuple_equal(
            &mc_local(fixtures::tuple("tuple.E4.M")?, &half())?,
            fixtures::tuple("tuple.P4")?,
        ))
    }));
    for (system, tup, local, tag) in [
        ("P2", "tuple.P2", "local.Pprime.E2.inf", "E2"),
        ("P4", "tuple.P4", "local.Pprime.E4.inf", "E4"),
    ] {
        out.push(check(
            format!("∞ of MC_{{-1}}([2]^*{tup}) = {local}"),
            &[tag],
            || {
                let pulled =
                    kummer_pullback_tuple(fixtures::tuple(tup)?, 2, &fixtures::preimages(system))?;
                let mc = mc_local(&pulled, &half())?;
                let want = fixtures::local_type(local)?;
                Ok(if mc.infinity() == want {
                    (true, format!("rank {}, {}", mc.rank(), mc.infinity()))
                } else {
                    (false, format!("got {}, expected {want}", mc.infinity()))
                })
            },
        ));
    }
    for (id, tags) in [
        ("tuple.katz.M", e13),
        ("tuple.katz.MC", e13),
        ("tuple.katz.MC_M2", e13),
        ("tuple.P13", e13),
        ("tuple.P13.b_half", &["E1"][..]),
        ("tuple.P2", &["E2"][..]),
        ("tuple.E4.M", &["E4"][..]),
        ("tuple.P4", &["E4"][..]),
    ] {
        out.push(check(format!("rigidity index of {id}"), tags, || {
            let r = rigidity_index(fixtures::tuple(id)?);
            Ok((r == 2, format!("{r}")))
        }));
    }
    for (system, tup, lambda, tag) in [
        (
            "P13",
            "tuple.P13",
            ExponentClass::symbol(Symbol::Mu),
            &["E1", "E3"][..],
        ),
        ("P2", "tuple.P2", half(), &["E2"][..]),
        ("P4", "tuple.P4", half(), &["E4"][..]),
    ] {
        out.push(check(
            format!("MC preserves the rigidity index of [2]^*{tup}"),
            tag,
            || {
                let pulled =
                    kummer_pullback_tuple(fixtures::tuple(tup)?, 2, &fixtures::preimages(system))?;
                let mc = mc_local(&pulled, &lambda)?;
                let (before, after) = (rigidity_index(&pulled), rigidity_index(&mc));
                Ok((
                    before == after,
                    format!(
                        "{before} → {after} (rank {} → {})",
                        pulled.rank(),
                        mc.rank()
                    ),
                ))
            },
        ));
    }
    let mut inversions: Vec<(&str, ExponentClass, &[&'static str])> = vec![
        ("tuple.katz.M", a.sub(&b), e13),
        ("tuple.katz.MC_M2", b.clone(), e13),
        ("tuple.E4.M", half(), &["E4"]),
    ];
    for id in [
        "tuple.katz.M",
        "tuple.katz.M2",
        "tuple.katz.MC",
        "tuple.katz.MC_M2",
        "tuple.P13",
        "tuple.P2",
        "tuple.E4.M",
        "tuple.P4",
    ] {
        inversions.push((id, ExponentClass::symbol(Symbol::Mu), &[]));
    }
    for (id, lambda, tags) in inversions {
        out.push(check(
            format!("MC_{{-λ}}∘MC_λ = id on {id}, λ = {lambda}"),
            tags,
            || {
                let t = fixtures::tuple(id)?;
                Ok(tuple_equal(
                    &mc_local(&mc_local(t, &lambda)?, &lambda.neg())?,
                    t,
                ))
            },
        ));
    }
    out
}

// ---- criterion 5 ----

fn nearby_at_infinity_equal(
    got: &HodgeProfile,
    want: &HodgeProfile,
    w: &ParameterWitness,
) -> Result<(bool, String)> {
    let (g, e) = (got.specialize(w)?, want.specialize(w)?);
    let (gi, ei) = (g.infinity(), e.infinity());
    let ok = g.rank == e.rank && gi == ei;
    let show = |p: &HodgeProfile| {
        p.infinity()
            .map_or("-".to_string(), |n| format!("{:?}", n.full()))
    };
    Ok((
        ok,
        format!(
            "rank {} h {} (expected rank {} h {})",
            g.rank,
            show(&g),
            e.rank,
            show(&e)
        ),
    ))
}

/// `[2]^*P` followed by `MC_μ`, with `μ` as given.
pub fn pullback_mc(
    profile: &HodgeProfile,
    system: &str,
    mu: &ExponentClass,
    w: Option<&ParameterWitness>,
) -> Result<(HodgeProfile, HodgeProfile)> {
    let sq = pullback_profile(profile, 2, &fixtures::preimages(system), w)?;
    let mc = mc_profile(&sq, mu)?;
    Ok((sq, mc))
}

fn hodge() -> Vec<Check> {
    let mut out = Vec::new();
    let mu_class = ExponentClass::symbol(Symbol::Mu);
    for (id, want, tags) in [
        ("profile.P13.case_b_half", vec![-2, -1], &["E1"][..]),
        ("profile.P13.b_lt_a", vec![-2, -1], &["E3"][..]),
        ("profile.P13.b_gt_a", vec![-2, -1], &["E3"][..]),
        ("profile.P2", vec![-1, 0], &["E2"][..]),
        ("profile.P4", vec![-2, 0], &["E4"][..]),
    ] {
        out.push(check(
            format!("δ solves parabolic rigidity for {id}"),
            tags,
            || {
                let c = derive_counts(fixtures::profile(id)?)?;
                let d = parabolic_rigidity_solve(&c.h, &c.omega)?;
                Ok((d == want, format!("h {:?}, ω {:?}, δ {d:?}", c.h, c.omega)))
            },
        ));
    }
    for c in &E13 {
        let cases = [c.tag];
        out.push(check(
            format!("[2]^*{} vs {} under {}", c.p13, c.p13sq, c.witness),
            &cases,
            || {
                let w = fixtures::witness(c.witness)?;
                let sq = pullback_profile(
                    fixtures::profile(c.p13)?,
                    2,
                    &fixtures::preimages("P13"),
                    Some(w),
                )?;
                let m = fixtures::hodge_table(c.p13sq)?.mismatches(&sq, Some(w))?;
                Ok(if m.is_empty() {
                    (true, "table reproduced".into())
                } else {
                    (false, m.join("; "))
                })
            },
        ));
        out.push(check(
            format!("MC_μ[2]^*{} vs {} under {}", c.p13, c.pprime, c.witness),
            &cases,
            || {
                let w = fixtures::witness(c.witness)?;
                let (_, mc) = pullback_mc(fixtures::profile(c.p13)?, "P13", &mu_class, Some(w))?;
                nearby_at_infinity_equal(&mc, fixtures::profile(c.pprime)?, w)
            },
        ));
    }
    out.push(check(
        "[2]^*profile.P2 vs table.P2sq under case.E2",
        &["E2"],
        || {
            let w = fixtures::witness("case.E2")?;
            let sq = pullback_profile(
                fixtures::profile("profile.P2")?,
                2,
                &fixtures::preimages("P2"),
                Some(w),
            )?;
            let m = fixtures::hodge_table("table.P2sq")?.mismatches(&sq, Some(w))?;
            Ok(if m.is_empty() {
                (true, "table reproduced".into())
            } else {
                (false, m.join("; "))
            })
        },
    ));
    for (system, prof, target, w, tag) in [
        ("P2", "profile.P2", "profile.Pprime.E2", "case.E2", "E2"),
        ("P4", "profile.P4", "profile.Pprime.E4", "case.E4", "E4"),
    ] {
        out.push(check(
            format!("MC_{{-1}}[2]^*{prof} vs {target}"),
            &[tag],
            || {
                let w = fixtures::witness(w)?;
                let (_, mc) = pullback_mc(fixtures::profile(prof)?, system, &half(), Some(w))?;
                nearby_at_infinity_equal(&mc, fixtures::profile(target)?, w)
            },
        ));
    }
    out.push(check(
        "H¹ of table.P2sqM gives h = (2,3,2)",
        &["E2"],
        || {
            let t = fixtures::hodge_table("table.P2sqM")?;
            let omega = t
                .omega
                .clone()
                .ok_or_else(|| Error::InconsistentProfile("table has no ω".into()))?;
            let delta = t.delta.clone().ok_or(Error::MissingDelta)?;
            let h = parabolic_cohomology_hodge(&t.h, &delta, &omega)?;
            Ok((h == [2, 3, 2], format!("{h:?}")))
        },
    ));
    out.push(check(
        "self-dual completion of local.Pprime.E4.inf",
        &["E4"],
        || {
            let local = fixtures::local_type("local.Pprime.E4.inf")?;
            let (h, nu) = selfdual_completion_solve(
                7,
                3,
                Some(local),
                &[SelfDualConstraint::Nu {
                    class: half(),
                    level: 2,
                    p: 2,
                    count: 1,
                }],
            )?;
            let want = fixtures::profile("profile.Pprime.E4")?;
            let nu_ok = nu.as_ref() == want.infinity();
            Ok((
                h == [2, 3, 2] && nu_ok,
                format!(
                    "h {h:?}, ν {}",
                    if nu_ok { "as printed" } else { "differs" }
                ),
            ))
        },
    ));
    out
}

// ---- criterion 6 ----

/// Stationary-phase shift: the untwist `μ` for the E₁/E₃ family, 0 otherwise.
pub fn phase_shift(case: &str, w: &ParameterWitness) -> Result<Rational> {
    if case == "E1" || case == "E3" {
        mu().evaluate(w)
    } else {
        Ok(Rational::from_integer(0.into()))
    }
}

fn irregular() -> Vec<Check> {
    let mut out = Vec::new();
    let mu_class = ExponentClass::symbol(Symbol::Mu);
    let mut rows: Vec<(
        &'static str,
        &'static str,
        &'static str,
        &'static str,
        ExponentClass,
        &'static str,
    )> = E13
        .iter()
        .map(|c| {
            (
                c.tag,
                c.witness,
                c.p13,
                "P13",
                mu_class.clone(),
                c.irregular,
            )
        })
        .collect();
    rows.push((
        "E2",
        "case.E2",
        "profile.P2",
        "P2",
        half(),
        "irregular.E1_E2_E4",
    ));
    rows.push((
        "E4",
        "case.E4",
        "profile.P4",
        "P4",
        half(),
        "irregular.E1_E2_E4",
    ));
    for (tag, wid, prof, system, mu, irr) in rows {
        out.push(check(
            format!("stationary phase for {wid} vs {irr}"),
            &[tag],
            || {
                let w = fixtures::witness(wid)?;
                let (_, mc) = pullback_mc(fixtures::profile(prof)?, system, &mu, Some(w))?;
                let got = stationary_phase_table(&mc, &phase_shift(tag, w)?, Some(w))?;
                let want = fixtures::irregular_table(irr)?.evaluate(w)?;
                Ok(match tables_equal_up_to_shift(&got, &want) {
                    Some(s) if s == Rational::from_integer(0.into()) => (true, format!("{got}")),
                    Some(s) => (true, format!("{got} (printed table shifted by {s})")),
                    None => (false, format!("got {got}, expected {want} up to shift")),
                })
            },
        ));
    }
    out
}
