use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::profile::HodgeProfile;
use crate::algebra::{fmt_rational, ParameterWitness, Rational};
use crate::error::{Error, Result};
use crate::monodromy::ExponentClass;

/// Jumps of an irregular Hodge filtration with the dimensions of the graded pieces.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IrregularHodgeTable {
    entries: BTreeMap<Rational, u64>,
}

impl IrregularHodgeTable {
    /// Equal jumps are merged; zero dimensions dropped.
    pub fn new(entries: impl IntoIterator<Item = (Rational, u64)>) -> Self {
        let mut out = Self::default();
        for (j, d) in entries {
            if d > 0 {
                *out.entries.entry(j).or_insert(0) += d;
            }
        }
        out
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.entries.iter().map(|(j, d)| (j, *d))
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn shift(&self, s: &Rational) -> Self {
        Self::new(self.entries.iter().map(|(j, d)| (j + s, *d)))
    }

    pub fn min_jump(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }
}

/// The shift `s` with `a = b + s`, if one exists.
pub fn tables_equal_up_to_shift(
    a: &IrregularHodgeTable,
    b: &IrregularHodgeTable,
) -> Option<Rational> {
    match (a.min_jump(), b.min_jump()) {
        (None, None) => Some(Rational::from_integer(0.into())),
        (Some(x), Some(y)) => {
            let s = x - y;
            (b.shift(&s) == *a).then_some(s)
        }
        _ => None,
    }
}

/// `dim gr^{α+p+shift} = Σ_ℓ Σ_{k=0..ℓ} ν^{p+k}_{∞,α,ℓ}` with `α ∈ [0,1)`.
pub fn stationary_phase_table(
    profile: &HodgeProfile,
    shift: &Rational,
    w: Option<&ParameterWitness>,
) -> Result<IrregularHodgeTable> {
    let inf = profile
        .infinity()
        .ok_or_else(|| Error::InconsistentProfile("profile has no data at infinity".into()))?;
    let value = |c: &ExponentClass| -> Result<Rational> {
        if c.is_constant() {
            Ok(c.constant_part().clone())
        } else {
            c.evaluate(
                w.ok_or_else(|| Error::WitnessRequired(format!("the class {c} is symbolic")))?,
            )
        }
    };
    let mut entries = Vec::new();
    for (c, l, p, n) in inf.entries() {
        let alpha = value(c)?;
        // a primitive piece at p with level ℓ contributes to p−ℓ, …, p
        for q in p - l as i64..=p {
            entries.push((&alpha + Rational::from_integer(q.into()) + shift, n));
        }
    }
    Ok(IrregularHodgeTable::new(entries))
}

impl fmt::Display for IrregularHodgeTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(j, d)| format!("{}:{d}", fmt_rational(j)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize)]
struct Entry {
    jump: String,
    dim: u64,
}

impl Serialize for IrregularHodgeTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<Entry> = self
            .entries
            .iter()
            .map(|(j, d)| Entry {
                jump: fmt_rational(j),
                dim: *d,
            })
            .collect();
        v.serialize(s)
    }
}

/// A printed table of jumps `α + p` with parameter-dependent `α`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicIrregularTable {
    pub entries: Vec<(crate::algebra::ParamPoly, u64)>,
}

impl SymbolicIrregularTable {
    pub fn evaluate(&self, w: &ParameterWitness) -> Result<IrregularHodgeTable> {
        let entries = self
            .entries
            .iter()
            .map(|(j, d)| Ok((j.evaluate(w)?, *d)))
            .collect::<Result<Vec<_>>>()?;
        Ok(IrregularHodgeTable::new(entries))
    }
}
