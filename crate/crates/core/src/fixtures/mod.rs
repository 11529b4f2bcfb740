//! Embedded fixture data: operators, Riemann schemes, monodromy tuples, Hodge
//! profiles and tables, irregular Hodge tables and parameter witnesses.
//!
//! Every fixture carries an `anchor`, a verbatim fragment of the displayed data it
//! transcribes.

mod hodge;
mod operators;
mod schemes;
mod tuples;
mod validate;
mod witnesses;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::Serialize;

pub use hodge::{build_irregular, build_profile, build_table};
pub use operators::{OperatorData, OPERATORS};
pub use schemes::{SchemeData, SCHEMES};
pub use tuples::{build_local_type, build_tuple, square_root_labels};
pub use validate::{scheme_mismatches, tuple_scheme_mismatches, validate_all, ValidationReport};
pub use witnesses::build_witness;

use crate::algebra::ParameterWitness;
use crate::error::{Error, Result};
use crate::hodge::{HodgeProfile, HodgeTable, SymbolicIrregularTable};
use crate::monodromy::{LocalType, MonodromyTuple};
use crate::weyl::{RiemannScheme, ThetaFormOperator};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Operator(ThetaFormOperator),
    Scheme {
        scheme: RiemannScheme,
        operator: String,
        witnesses: Vec<String>,
    },
    Tuple(MonodromyTuple),
    LocalType(LocalType),
    Profile(HodgeProfile),
    HodgeTable(HodgeTable),
    IrregularTable(SymbolicIrregularTable),
    Witness(ParameterWitness),
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Operator(_) => "operator",
            Payload::Scheme { .. } => "scheme",
            Payload::Tuple(_) => "tuple",
            Payload::LocalType(_) => "local-type",
            Payload::Profile(_) => "profile",
            Payload::HodgeTable(_) => "hodge-table",
            Payload::IrregularTable(_) => "irregular-table",
            Payload::Witness(_) => "witness",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Fixture {
    pub id: String,
    pub kind: &'static str,
    pub anchor: String,
    pub payload: Payload,
}

impl Fixture {
    fn new(id: &str, anchor: &str, payload: Payload) -> Self {
        Self {
            id: id.to_string(),
            kind: payload.kind(),
            anchor: anchor.to_string(),
            payload,
        }
    }
}

fn build_all() -> Vec<Fixture> {
    let mut out = Vec::new();
    for o in OPERATORS {
        out.push(Fixture::new(o.id, o.anchor, Payload::Operator(o.build())));
    }
    for s in SCHEMES {
        out.push(Fixture::new(
            s.id,
            s.anchor,
            Payload::Scheme {
                scheme: s.build(),
                operator: s.operator.to_string(),
                witnesses: s.witnesses.iter().map(|w| w.to_string()).collect(),
            },
        ));
    }
    for t in tuples::TUPLES {
        out.push(Fixture::new(
            t.id,
            t.anchor,
            Payload::Tuple(build_tuple(t.id)),
        ));
    }
    for t in tuples::LOCAL_TYPES {
        out.push(Fixture::new(
            t.id,
            t.anchor,
            Payload::LocalType(build_local_type(t.id)),
        ));
    }
    for p in hodge::PROFILES {
        out.push(Fixture::new(
            p.id,
            p.anchor,
            Payload::Profile(build_profile(p.id)),
        ));
    }
    for t in hodge::TABLES {
        out.push(Fixture::new(
            t.id,
            t.anchor,
            Payload::HodgeTable(build_table(t.id)),
        ));
    }
    for t in hodge::IRREGULAR {
        out.push(Fixture::new(
            t.id,
            t.anchor,
            Payload::IrregularTable(build_irregular(t.id)),
        ));
    }
    for w in witnesses::WITNESSES {
        out.push(Fixture::new(
            w.id,
            w.anchor,
            Payload::Witness(build_witness(w.id)),
        ));
    }
    out
}

/// All fixtures, built once.
pub fn all_fixtures() -> &'static [Fixture] {
    static ALL: OnceLock<Vec<Fixture>> = OnceLock::new();
    ALL.get_or_init(build_all)
}

/// `(id, kind, anchor)` for every fixture.
pub fn list_fixtures() -> Vec<(&'static str, &'static str, &'static str)> {
    all_fixtures()
        .iter()
        .map(|f| (f.id.as_str(), f.kind, f.anchor.as_str()))
        .collect()
}

pub fn get_fixture(id: &str) -> Result<&'static Fixture> {
    all_fixtures()
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| Error::UnknownFixture(id.to_string()))
}

fn wrong(f: &Fixture, expected: &'static str) -> Error {
    Error::FixtureKind {
        id: f.id.clone(),
        expected,
        found: f.kind,
    }
}

pub fn operator(id: &str) -> Result<&'static ThetaFormOperator> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::Operator(o) => Ok(o),
        _ => Err(wrong(f, "operator")),
    }
}

pub fn scheme(id: &str) -> Result<&'static RiemannScheme> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::Scheme { scheme, .. } => Ok(scheme),
        _ => Err(wrong(f, "scheme")),
    }
}

pub fn tuple(id: &str) -> Result<&'static MonodromyTuple> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::Tuple(t) => Ok(t),
        _ => Err(wrong(f, "tuple")),
    }
}

pub fn local_type(id: &str) -> Result<&'static LocalType> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::LocalType(t) => Ok(t),
        _ => Err(wrong(f, "local-type")),
    }
}

pub fn profile(id: &str) -> Result<&'static HodgeProfile> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::Profile(p) => Ok(p),
        _ => Err(wrong(f, "profile")),
    }
}

pub fn hodge_table(id: &str) -> Result<&'static HodgeTable> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::HodgeTable(t) => Ok(t),
        _ => Err(wrong(f, "hodge-table")),
    }
}

pub fn irregular_table(id: &str) -> Result<&'static SymbolicIrregularTable> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::IrregularTable(t) => Ok(t),
        _ => Err(wrong(f, "irregular-table")),
    }
}

pub fn witness(id: &str) -> Result<&'static ParameterWitness> {
    let f = get_fixture(id)?;
    match &f.payload {
        Payload::Witness(w) => Ok(w),
        _ => Err(wrong(f, "witness")),
    }
}

/// Square-root labels for the Kummer pullback of the named system (`P13`, `P2`, `P4`).
pub fn preimages(system: &str) -> BTreeMap<String, Vec<String>> {
    square_root_labels(system)
        .into_iter()
        .map(|(k, v)| (k.to_string(), v.iter().map(|s| s.to_string()).collect()))
        .collect()
}

/// JSON array of every fixture with its kind and anchor.
pub fn export_json() -> String {
    serde_json::to_string_pretty(all_fixtures()).expect("fixtures serialize")
}
