//! The `rigid-calc` command line.
//!
//! Exit codes: 0 success, 1 a verification or comparison failed, 2 usage or input error.

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    fmt_rational, parse_rational, ParamPoly, ParameterWitness, Rational, Symbol, ThetaPoly,
};
use crate::error::{Error, Result};
use crate::expr::{parse_operator, parse_param};
use crate::fixtures::{self, scheme_mismatches, Payload};
use crate::hodge::{
    at, derive_counts, mc_profile, parabolic_rigidity_solve, pullback_profile,
    selfdual_completion_solve, stationary_phase_table, tables_equal_up_to_shift, HodgeProfile,
    IrregularHodgeTable, SelfDualConstraint,
};
use crate::monodromy::{
    kummer_pullback_tuple, mc_local, rigidity_index, tensor_rank_one, ExponentClass, MonodromyTuple,
};
use crate::verify::{self, Group};
use crate::weyl::{
    ft_quotient, ft_theta, indicial_at, inversion_normalized, kummer_pullback, left_factor_divide,
    match_up_to_twist, newton_slopes_at_infinity, riemann_scheme, twist_shift, Point,
    ThetaFormOperator,
};

#[derive(Parser, Debug)]
#[command(
    name = "rigid-calc",
    version,
    about = "Exact operator calculus, middle convolution and Hodge bookkeeping"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Operator arithmetic and transforms.
    #[command(subcommand)]
    Op(OpCmd),
    /// Local monodromy tuples.
    #[command(subcommand)]
    Mono(MonoCmd),
    /// Hodge profiles and irregular Hodge tables.
    #[command(subcommand)]
    Hodge(HodgeCmd),
    /// Embedded fixtures.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
    /// Replay the fixture checks.
    Verify {
        #[arg(value_parser = ["all", "operators", "monodromy", "hodge", "E1", "E2", "E3", "E4"])]
        group: String,
    },
}

/// Inputs shared by most subcommands. Operands are taken from `--fixture` first, then `--expr`.
#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// Fixture id (repeatable).
    #[arg(long)]
    pub fixture: Vec<String>,
    /// Operator expression (repeatable).
    #[arg(long, allow_hyphen_values = true)]
    pub expr: Vec<String>,
    /// Witness fixture id.
    #[arg(long)]
    pub witness: Option<String>,
    /// Parameter values `sym=value`; added to the witness and substituted into operators.
    #[arg(long = "set")]
    pub set: Vec<String>,
    /// Pullback degree.
    #[arg(long)]
    pub k: Option<usize>,
    /// Exponent class, e.g. `1/2`, `mu`, `a-b`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum OpCmd {
    /// Parse and print in canonical θ-form.
    Parse(Common),
    /// Product of two operators.
    Mul(Common),
    /// Fourier transform, optionally divided by [ϑ]_n and matched against a pullback.
    Ft(FtArgs),
    /// Pullback along x ↦ x^k.
    Pullback(Common),
    /// Twist: every Pᵢ(ϑ) becomes Pᵢ(ϑ+s).
    Twist {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        shift: String,
    },
    /// Normalized pullback along x ↦ 1/x.
    Invert(Common),
    /// Left division by an x-free factor.
    Divide {
        #[command(flatten)]
        common: Common,
        /// Divisor as an expression in T.
        #[arg(long)]
        by: Option<String>,
        /// Divide by ϑ(ϑ−1)⋯(ϑ−n+1).
        #[arg(long)]
        theta_factorial: Option<usize>,
    },
    /// Indicial polynomial at a point.
    Indicial {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        point: String,
    },
    /// Riemann scheme under a witness; with a scheme fixture, compared to the printed one.
    Scheme {
        #[command(flatten)]
        common: Common,
        /// Comma-separated points, `inf` for ∞.
        #[arg(long, allow_hyphen_values = true)]
        points: Option<String>,
    },
    /// Newton slopes at ∞.
    Slopes(Common),
    /// Find (c, s) with A = c·twist(B, s).
    Match(Common),
}

#[derive(Args, Debug)]
pub struct FtArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub divide_theta_factorial: Option<usize>,
    /// Operator fixture whose `--k` pullback the quotient is matched against.
    #[arg(long)]
    pub match_pullback: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum MonoCmd {
    /// Middle convolution with `--lambda`.
    Mc(Common),
    /// Tensor with a rank-one tuple (second fixture).
    Tensor(Common),
    /// Pullback along x ↦ x^2.
    Pullback {
        #[command(flatten)]
        common: Common,
        /// Square-root labels: P13, P2 or P4 (inferred from the fixture id).
        #[arg(long)]
        labels: Option<String>,
    },
    Rigidity(Common),
}

#[derive(Args, Debug, Clone, Default)]
pub struct Chain {
    #[command(flatten)]
    pub common: Common,
    /// Pull back along x ↦ x^K before anything else.
    #[arg(long)]
    pub pullback: Option<usize>,
    /// Square-root labels for the pullback: P13, P2 or P4.
    #[arg(long)]
    pub labels: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum HodgeCmd {
    /// h, ω and ν columns of a profile.
    Derive(Chain),
    /// δ from parabolic rigidity.
    SolveDelta {
        #[command(flatten)]
        chain: Chain,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        h: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        omega: Option<Vec<i64>>,
    },
    /// Pullback along x ↦ x^k.
    Pullback(Chain),
    /// Middle convolution with kernel class `--lambda`.
    Mc(Chain),
    /// Self-dual completion of a local type at ∞.
    Selfdual {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        length: usize,
        /// `class,level,p,count` (repeatable).
        #[arg(long)]
        nu: Vec<String>,
        /// `p,count` (repeatable).
        #[arg(long)]
        total: Vec<String>,
    },
    /// Irregular Hodge numbers by stationary phase.
    Phase {
        #[command(flatten)]
        chain: Chain,
        /// Global shift; defaults to μ when the data depends on μ.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// Compare a (transformed) profile with a table, profile or irregular table fixture.
    Compare {
        #[command(flatten)]
        chain: Chain,
        #[arg(long)]
        against: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum FixturesCmd {
    List,
    Export,
}

/// A finished command: what to print and how to exit.
struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Self {
        Outcome {
            text: text.into(),
            json,
            ok: true,
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
            return code;
        }
    };
    match dispatch(&cli.command) {
        Ok(o) => {
            let _ = match cli.format {
                Format::Text => writeln!(out, "{}", o.text.trim_end()),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&o.json).expect("json")
                ),
            };
            if o.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Op(c) => op(c),
        Command::Mono(c) => mono(c),
        Command::Hodge(c) => hodge(c),
        Command::Fixtures(FixturesCmd::List) => {
            let list = fixtures::list_fixtures();
            let text = list
                .iter()
                .map(|(id, kind, anchor)| format!("{id:<34} {kind:<16} {anchor}"))
                .collect::<Vec<_>>()
                .join("\n");
            let json = list
                .iter()
                .map(|(id, kind, anchor)| json!({"id": id, "kind": kind, "anchor": anchor}))
                .collect();
            Ok(Outcome::ok(text, Value::Array(json)))
        }
        Command::Fixtures(FixturesCmd::Export) => {
            let text = fixtures::export_json();
            let json = serde_json::from_str(&text).expect("export is json");
            Ok(Outcome::ok(text, json))
        }
        Command::Verify { group } => {
            let group = Group::parse(group)
                .ok_or_else(|| Error::Input(format!("unknown group `{group}`")))?;
            let reports = verify::run(group);
            let mut text = String::new();
            for r in &reports {
                text += &format!(
                    "{} {}. {}\n",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.criterion,
                    r.title
                );
                for c in &r.checks {
                    text += &format!(
                        "    {} {} :: {}\n",
                        if c.passed { "ok  " } else { "FAIL" },
                        c.name,
                        c.detail
                    );
                }
            }
            let ok = reports.iter().all(|r| r.passed());
            Ok(Outcome {
                text,
                json: to_json(&reports),
                ok,
            })
        }
    }
}

// ---- shared input handling ----

fn witness(c: &Common) -> Result<Option<ParameterWitness>> {
    let mut w = match &c.witness {
        Some(id) => Some(fixtures::witness(id)?.clone()),
        None => None,
    };
    for kv in &c.set {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| Error::Input(format!("`--set {kv}` is not of the form sym=value")))?;
        let sym = Symbol::from_name(k.trim())
            .ok_or_else(|| Error::Input(format!("unknown symbol `{k}`")))?;
        let value = parse_rational(v.trim())?;
        w = Some(match w {
            Some(w) => w.with(sym, value),
            None => ParameterWitness::bare("set", [(sym, value)]),
        });
    }
    Ok(w)
}

/// `--set` values substituted into an operator; `--witness` is not applied here.
fn substitute_set(c: &Common, p: ThetaFormOperator) -> Result<ThetaFormOperator> {
    if c.set.is_empty() {
        return Ok(p);
    }
    let only_set = Common {
        set: c.set.clone(),
        ..Common::default()
    };
    let w = witness(&only_set)?.expect("non-empty --set");
    Ok(p.map_coeffs(|_, q| q.substitute(&w)))
}

fn operands(c: &Common) -> Result<Vec<ThetaFormOperator>> {
    let mut out = Vec::new();
    for id in &c.fixture {
        out.push(substitute_set(c, fixtures::operator(id)?.clone())?);
    }
    for e in &c.expr {
        out.push(substitute_set(c, parse_operator(e)?)?);
    }
    Ok(out)
}

fn exactly<const N: usize>(c: &Common) -> Result<[ThetaFormOperator; N]> {
    let v = operands(c)?;
    let n = v.len();
    v.try_into().map_err(|_| {
        Error::Input(format!(
            "expected {N} operand(s) from --fixture/--expr, got {n}"
        ))
    })
}

fn class(s: &str) -> Result<ExponentClass> {
    ExponentClass::from_param(&parse_param(s)?)
}

fn lambda(c: &Common) -> Result<ExponentClass> {
    class(
        c.lambda
            .as_deref()
            .ok_or_else(|| Error::Input("--lambda is required".into()))?,
    )
}

fn point(s: &str) -> Result<Point> {
    let s = s.trim();
    if s == "inf" || s == "∞" {
        Ok(Point::Infinity)
    } else {
        Ok(Point::finite(parse_param(s)?))
    }
}

fn op_outcome(p: &ThetaFormOperator) -> Outcome {
    Outcome::ok(
        p.to_string(),
        json!({"operator": p.to_string(), "terms": to_json(p)}),
    )
}

// ---- op ----

fn op(cmd: &OpCmd) -> Result<Outcome> {
    match cmd {
        OpCmd::Parse(c) => {
            let [p] = exactly::<1>(c)?;
            Ok(op_outcome(&p))
        }
        OpCmd::Mul(c) => {
            let [a, b] = exactly::<2>(c)?;
            Ok(op_outcome(&a.op_mul(&b)))
        }
        OpCmd::Ft(args) => ft(args),
        OpCmd::Pullback(c) => {
            let [p] = exactly::<1>(c)?;
            Ok(op_outcome(&kummer_pullback(&p, c.k.unwrap_or(2))?))
        }
        OpCmd::Twist { common, shift } => {
            let [p] = exactly::<1>(common)?;
            Ok(op_outcome(&twist_shift(&p, &parse_param(shift)?)))
        }
        OpCmd::Invert(c) => {
            let [p] = exactly::<1>(c)?;
            Ok(op_outcome(&inversion_normalized(&p)))
        }
        OpCmd::Divide {
            common,
            by,
            theta_factorial,
        } => {
            let [p] = exactly::<1>(common)?;
            let q = match (by, theta_factorial) {
                (Some(e), None) => theta_only(&parse_operator(e)?)?,
                (None, Some(n)) => ThetaPoly::falling(*n),
                _ => {
                    return Err(Error::Input(
                        "give exactly one of --by and --theta-factorial".into(),
                    ))
                }
            };
            Ok(op_outcome(&left_factor_divide(&p, &q)?))
        }
        OpCmd::Indicial { common, point: pt } => {
            let [p] = exactly::<1>(common)?;
            let w = witness(common)?;
            let pt = point(pt)?;
            let ind = indicial_at(&p, &pt, w.as_ref())?;
            Ok(Outcome::ok(
                format!("indicial polynomial at {pt}: {ind}"),
                json!({"point": to_json(&pt), "indicial": ind.to_string()}),
            ))
        }
        OpCmd::Scheme { common, points } => scheme(common, points.as_deref()),
        OpCmd::Slopes(c) => {
            let [p] = exactly::<1>(c)?;
            let slopes = newton_slopes_at_infinity(&p)?;
            let text = slopes
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            Ok(Outcome::ok(
                format!("slopes at inf (slope, multiplicity): {text}"),
                to_json(&slopes),
            ))
        }
        OpCmd::Match(c) => {
            let [a, b] = exactly::<2>(c)?;
            Ok(match_outcome(&a, &b, String::new()))
        }
    }
}

fn theta_only(p: &ThetaFormOperator) -> Result<ThetaPoly> {
    if p.x_degrees().iter().any(|&i| i != 0) {
        return Err(Error::Input("divisor must not contain x".into()));
    }
    Ok(p.coeff(0))
}

fn match_outcome(a: &ThetaFormOperator, b: &ThetaFormOperator, prefix: String) -> Outcome {
    match match_up_to_twist(a, b) {
        Some(m) => Outcome::ok(
            format!("{prefix}(c={}, s={})", m.scale, m.shift),
            json!({"matched": true, "c": m.scale.to_string(), "s": m.shift.to_string()}),
        ),
        None => Outcome {
            text: format!("{prefix}no (c, s) with A = c·twist(B, s)"),
            json: json!({"matched": false}),
            ok: false,
        },
    }
}

fn ft(args: &FtArgs) -> Result<Outcome> {
    let [p] = exactly::<1>(&args.common)?;
    let (n, h) = match (args.divide_theta_factorial, &args.match_pullback) {
        (Some(n), _) => (
            n,
            left_factor_divide(&ft_theta(&p), &ThetaPoly::falling(n))?,
        ),
        (None, Some(_)) => ft_quotient(&p)?,
        (None, None) => return Ok(op_outcome(&ft_theta(&p))),
    };
    let head = format!("FT = [T]_{n} * H\nH = {h}\n");
    let Some(target) = &args.match_pullback else {
        return Ok(Outcome::ok(
            head,
            json!({"n": n, "quotient": h.to_string()}),
        ));
    };
    let k = args.common.k.unwrap_or(2);
    let l = substitute_set(&args.common, fixtures::operator(target)?.clone())?;
    let pulled = kummer_pullback(&l, k)?;
    let mut o = match_outcome(&h, &pulled, head);
    o.json = json!({"n": n, "quotient": h.to_string(), "k": k, "match": o.json});
    Ok(o)
}

fn scheme(c: &Common, points: Option<&str>) -> Result<Outcome> {
    let printed = match c.fixture.first() {
        Some(id) if matches!(fixtures::get_fixture(id)?.payload, Payload::Scheme { .. }) => {
            let f = fixtures::get_fixture(id)?;
            let Payload::Scheme {
                scheme,
                operator,
                witnesses,
            } = &f.payload
            else {
                unreachable!()
            };
            Some((scheme, operator.clone(), witnesses.clone()))
        }
        _ => None,
    };
    let (p, pts, w) = match &printed {
        Some((s, op_id, ws)) => {
            let w = match witness(c)? {
                Some(w) => w,
                None => fixtures::witness(&ws[0])?.clone(),
            };
            (fixtures::operator(op_id)?.clone(), s.points(), w)
        }
        None => {
            let [p] = exactly::<1>(c)?;
            let pts = points
                .ok_or_else(|| {
                    Error::Input("--points is required without a scheme fixture".into())
                })?
                .split(',')
                .map(point)
                .collect::<Result<Vec<_>>>()?;
            let w =
                witness(c)?.ok_or_else(|| Error::Input("--witness or --set is required".into()))?;
            (p, pts, w)
        }
    };
    let computed = riemann_scheme(&p, &pts, &w)?;
    let mut text = format!("under {}:\n", w.id());
    let mut cols = Vec::new();
    for (pt, es) in computed.evaluate(&w)? {
        let shown: Vec<String> = es.iter().map(fmt_rational).collect();
        text += &format!("  {pt}: {}\n", shown.join(", "));
        cols.push(json!({"point": pt.to_string(), "exponents": shown}));
    }
    let mut json = json!({"witness": w.id(), "columns": cols});
    let mut ok = true;
    if let Some((s, _, _)) = printed {
        let mism = scheme_mismatches(&p, s, &w)?;
        ok = mism.is_empty();
        text += if ok {
            "matches the printed scheme\n"
        } else {
            "differs from the printed scheme:\n"
        };
        for m in &mism {
            text += &format!("  {m}\n");
        }
        json["mismatches"] = to_json(&mism);
    }
    Ok(Outcome { text, json, ok })
}

// ---- mono ----

fn one_tuple(c: &Common) -> Result<&'static MonodromyTuple> {
    let id = c
        .fixture
        .first()
        .ok_or_else(|| Error::Input("--fixture is required".into()))?;
    fixtures::tuple(id)
}

fn tuple_outcome(t: &MonodromyTuple, extra: &str) -> Outcome {
    Outcome::ok(format!("{extra}{t}"), to_json(t))
}

fn labels_for(id: &str, explicit: Option<&str>) -> BTreeMap<String, Vec<String>> {
    let system = explicit.unwrap_or(if id.contains("P4") || id.contains("E4") {
        "P4"
    } else {
        "P13"
    });
    fixtures::preimages(system)
}

fn mono(cmd: &MonoCmd) -> Result<Outcome> {
    match cmd {
        MonoCmd::Mc(c) => {
            let t = one_tuple(c)?;
            let out = mc_local(t, &lambda(c)?)?;
            Ok(tuple_outcome(
                &out,
                &format!("rigidity index {}\n", rigidity_index(&out)),
            ))
        }
        MonoCmd::Tensor(c) => {
            let [a, b] = match c.fixture.as_slice() {
                [a, b] => [fixtures::tuple(a)?, fixtures::tuple(b)?],
                _ => return Err(Error::Input("tensor takes two --fixture tuples".into())),
            };
            Ok(tuple_outcome(&tensor_rank_one(a, b)?, ""))
        }
        MonoCmd::Pullback { common, labels } => {
            let t = one_tuple(common)?;
            let pre = labels_for(&common.fixture[0], labels.as_deref());
            let out = kummer_pullback_tuple(t, common.k.unwrap_or(2), &pre)?;
            Ok(tuple_outcome(
                &out,
                &format!("rigidity index {}\n", rigidity_index(&out)),
            ))
        }
        MonoCmd::Rigidity(c) => {
            let r = rigidity_index(one_tuple(c)?);
            Ok(Outcome::ok(format!("{r}"), json!({"rigidity_index": r})))
        }
    }
}

// ---- hodge ----

/// Loads the profile and applies `--pullback` then `--lambda` when given.
fn chain_profile(ch: &Chain, apply_mc: bool) -> Result<HodgeProfile> {
    let c = &ch.common;
    let id = c
        .fixture
        .first()
        .ok_or_else(|| Error::Input("--fixture is required".into()))?;
    let mut p = fixtures::profile(id)?.clone();
    let w = witness(c)?;
    if let Some(k) = ch.pullback {
        p = pullback_profile(&p, k, &labels_for(id, ch.labels.as_deref()), w.as_ref())?;
    }
    if apply_mc && c.lambda.is_some() {
        p = mc_profile(&p, &lambda(c)?)?;
    }
    Ok(p)
}

fn rows(headers: &[String], cols: &[Vec<i64>]) -> String {
    let n = cols
        .iter()
        .map(|c| c.iter().rposition(|&v| v != 0).map_or(0, |i| i + 1))
        .max()
        .unwrap_or(0);
    let mut s = format!("{:>3}", "p");
    for h in headers {
        s += &format!("  {h}");
    }
    s.push('\n');
    for p in 0..n {
        s += &format!("{p:>3}");
        for (h, c) in headers.iter().zip(cols) {
            s += &format!("  {:>w$}", at(c, p as i64), w = h.chars().count());
        }
        s.push('\n');
    }
    s
}

fn profile_table(p: &HodgeProfile) -> Result<(String, Value)> {
    let counts = derive_counts(p)?;
    let mut headers = vec!["h".to_string()];
    let mut cols = vec![counts.h.clone()];
    if let Some(d) = &p.delta {
        headers.push("delta".into());
        cols.push(d.clone());
    }
    headers.push("omega".into());
    cols.push(counts.omega.clone());
    headers.push("omega_fin".into());
    cols.push(counts.omega_finite.clone());
    for (label, nu) in &p.points {
        let mut seen = BTreeMap::new();
        for (cl, l, _, _) in nu.entries() {
            seen.insert((cl.clone(), l), ());
        }
        for (cl, l) in seen.keys() {
            headers.push(format!("nu[{label},{cl},{l}]"));
            cols.push(
                (0..counts.h.len().max(1) as i64 + *l as i64)
                    .map(|q| nu.count(cl, *l, q) as i64)
                    .collect(),
            );
        }
    }
    let text = format!("rank {}\n{}", p.rank, rows(&headers, &cols));
    Ok((
        text,
        json!({"profile": to_json(p), "counts": to_json(&counts)}),
    ))
}

fn default_shift(p: &HodgeProfile, w: Option<&ParameterWitness>) -> Result<Rational> {
    let uses_mu = p.infinity().is_some_and(|n| {
        n.classes()
            .iter()
            .any(|c| c.coeffs().contains_key(&Symbol::Mu))
    });
    if uses_mu {
        let w = w.ok_or_else(|| Error::WitnessRequired("the shift μ needs a value".into()))?;
        ParamPoly::symbol(Symbol::Mu).evaluate(w)
    } else {
        Ok(Rational::from_integer(0.into()))
    }
}

fn phase_text(t: &IrregularHodgeTable, shift: &Rational) -> String {
    let mut s = format!(
        "shift {}\n{:>8} {:>4}\n",
        fmt_rational(shift),
        "jump",
        "dim"
    );
    for (j, d) in t.entries() {
        s += &format!("{:>8} {d:>4}\n", fmt_rational(j));
    }
    s
}

fn hodge(cmd: &HodgeCmd) -> Result<Outcome> {
    match cmd {
        HodgeCmd::Derive(ch) => {
            let (text, json) = profile_table(&chain_profile(ch, true)?)?;
            Ok(Outcome::ok(text, json))
        }
        HodgeCmd::SolveDelta { chain, h, omega } => {
            let (h, omega) = match (h, omega) {
                (Some(h), Some(o)) => (h.clone(), o.clone()),
                (None, None) => {
                    let c = derive_counts(&chain_profile(chain, true)?)?;
                    (c.h, c.omega)
                }
                _ => {
                    return Err(Error::Input(
                        "give both --h and --omega, or a profile".into(),
                    ))
                }
            };
            let delta = parabolic_rigidity_solve(&h, &omega)?;
            let text = rows(
                &["h".into(), "omega".into(), "delta".into()],
                &[h.clone(), omega.clone(), delta.clone()],
            );
            Ok(Outcome::ok(
                text,
                json!({"h": h, "omega": omega, "delta": delta}),
            ))
        }
        HodgeCmd::Pullback(ch) => {
            let mut ch = ch.clone();
            ch.pullback = Some(ch.pullback.or(ch.common.k).unwrap_or(2));
            let (text, json) = profile_table(&chain_profile(&ch, false)?)?;
            Ok(Outcome::ok(text, json))
        }
        HodgeCmd::Mc(ch) => {
            if ch.common.lambda.is_none() {
                return Err(Error::Input("--lambda is required".into()));
            }
            let (text, json) = profile_table(&chain_profile(ch, true)?)?;
            Ok(Outcome::ok(text, json))
        }
        HodgeCmd::Selfdual {
            common,
            rank,
            length,
            nu,
            total,
        } => {
            let local = match common.fixture.first() {
                Some(id) => Some(fixtures::local_type(id)?),
                None => None,
            };
            let mut cons = Vec::new();
            for s in nu {
                let parts: Vec<&str> = s.split(',').map(str::trim).collect();
                let [c, l, p, n] = parts[..] else {
                    return Err(Error::Input(format!(
                        "--nu `{s}` is not class,level,p,count"
                    )));
                };
                cons.push(SelfDualConstraint::Nu {
                    class: class(c)?,
                    level: int(l)?,
                    p: int(p)?,
                    count: int(n)?,
                });
            }
            for s in total {
                let Some((p, n)) = s.split_once(',') else {
                    return Err(Error::Input(format!("--total `{s}` is not p,count")));
                };
                cons.push(SelfDualConstraint::Total {
                    p: int(p)?,
                    count: int(n)?,
                });
            }
            let (h, nu) = selfdual_completion_solve(*rank, *length, local, &cons)?;
            let mut text = format!("h = {h:?}\n");
            if let Some(nu) = &nu {
                for (c, l, p, n) in nu.entries() {
                    text += &format!("  nu^{p}[{c}, l={l}] = {n}\n");
                }
            }
            let entries: Vec<Value> = nu
                .iter()
                .flat_map(|n| {
                    n.entries().map(
                        |(c, l, p, k)| json!({"class": to_json(c), "level": l, "p": p, "count": k}),
                    )
                })
                .collect();
            Ok(Outcome::ok(text, json!({"h": h, "nu": entries})))
        }
        HodgeCmd::Phase { chain, shift } => {
            let p = chain_profile(chain, true)?;
            let w = witness(&chain.common)?;
            let shift = match shift {
                Some(s) => parse_param(s)?
                    .evaluate(w.as_ref().unwrap_or(&ParameterWitness::bare("none", [])))?,
                None => default_shift(&p, w.as_ref())?,
            };
            let t = stationary_phase_table(&p, &shift, w.as_ref())?;
            Ok(Outcome::ok(
                phase_text(&t, &shift),
                json!({"shift": fmt_rational(&shift), "table": to_json(&t)}),
            ))
        }
        HodgeCmd::Compare { chain, against } => compare(chain, against),
    }
}

fn int<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Input(format!("`{s}` is not an integer")))
}

fn compare(ch: &Chain, against: &str) -> Result<Outcome> {
    let p = chain_profile(ch, true)?;
    let w = witness(&ch.common)?;
    let (ok, detail) = match &fixtures::get_fixture(against)?.payload {
        Payload::HodgeTable(t) => {
            let m = t.mismatches(&p, w.as_ref())?;
            (m.is_empty(), m)
        }
        Payload::Profile(q) => {
            let (a, b) = match &w {
                Some(w) => (p.specialize(w)?, q.specialize(w)?),
                None => (p.clone(), q.clone()),
            };
            let ok = a.rank == b.rank && a.infinity() == b.infinity();
            (
                ok,
                if ok {
                    vec![]
                } else {
                    vec![format!("at inf: got\n{a}expected\n{b}")]
                },
            )
        }
        Payload::IrregularTable(t) => {
            let w = w.ok_or_else(|| {
                Error::WitnessRequired("irregular tables are evaluated at a witness".into())
            })?;
            let got = stationary_phase_table(&p, &default_shift(&p, Some(&w))?, Some(&w))?;
            let want = t.evaluate(&w)?;
            match tables_equal_up_to_shift(&got, &want) {
                Some(s) => (
                    true,
                    vec![format!("equal up to shift {}", fmt_rational(&s))],
                ),
                None => (false, vec![format!("got {got}, expected {want}")]),
            }
        }
        other => {
            return Err(Error::Input(format!(
                "cannot compare against a {}",
                other.kind()
            )))
        }
    };
    let mut text = format!("{}: {against}\n", if ok { "match" } else { "MISMATCH" });
    for d in &detail {
        text += &format!("  {d}\n");
    }
    Ok(Outcome {
        text,
        json: json!({"against": against, "match": ok, "details": detail}),
        ok,
    })
}
