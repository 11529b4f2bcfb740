use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::param::{fmt_rational, ParamPoly, Rational, Symbol};
use crate::error::{Error, Result};

/// A declared hypothesis on the parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    /// `lhs < rhs`
    Less(ParamPoly, ParamPoly),
    /// `lhs ≠ rhs`
    NotEqual(ParamPoly, ParamPoly),
    /// the value is not an integer
    NotInteger(ParamPoly),
}

impl Constraint {
    pub fn less(lhs: impl Into<ParamPoly>, rhs: impl Into<ParamPoly>) -> Self {
        Constraint::Less(lhs.into(), rhs.into())
    }

    pub fn not_equal(lhs: impl Into<ParamPoly>, rhs: impl Into<ParamPoly>) -> Self {
        Constraint::NotEqual(lhs.into(), rhs.into())
    }

    pub fn holds(&self, w: &BTreeMap<Symbol, Rational>) -> Result<bool> {
        let eval = |p: &ParamPoly| {
            let v = p.substitute(w);
            v.as_constant()
                .ok_or_else(|| Error::UnassignedSymbol(v.symbols()[0].name().to_string()))
        };
        Ok(match self {
            Constraint::Less(l, r) => eval(l)? < eval(r)?,
            Constraint::NotEqual(l, r) => eval(l)? != eval(r)?,
            Constraint::NotInteger(p) => !eval(p)?.is_integer(),
        })
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::Less(l, r) => write!(f, "{l} < {r}"),
            Constraint::NotEqual(l, r) => write!(f, "{l} != {r}"),
            Constraint::NotInteger(p) => write!(f, "{p} not in Z"),
        }
    }
}

/// A rational point in parameter space satisfying a case's hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterWitness {
    id: String,
    assignment: BTreeMap<Symbol, Rational>,
    constraints: Vec<Constraint>,
}

impl ParameterWitness {
    /// Validates every constraint against the assignment.
    pub fn new(
        id: impl Into<String>,
        assignment: impl IntoIterator<Item = (Symbol, Rational)>,
        constraints: Vec<Constraint>,
    ) -> Result<Self> {
        let w = Self {
            id: id.into(),
            assignment: assignment.into_iter().collect(),
            constraints,
        };
        for c in &w.constraints {
            if !c.holds(&w.assignment)? {
                return Err(Error::WitnessViolation {
                    id: w.id.clone(),
                    constraint: c.to_string(),
                });
            }
        }
        Ok(w)
    }

    /// A witness without declared constraints.
    pub fn bare(
        id: impl Into<String>,
        assignment: impl IntoIterator<Item = (Symbol, Rational)>,
    ) -> Self {
        Self {
            id: id.into(),
            assignment: assignment.into_iter().collect(),
            constraints: Vec::new(),
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn assignment(&self) -> &BTreeMap<Symbol, Rational> {
        &self.assignment
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn get(&self, s: Symbol) -> Option<&Rational> {
        self.assignment.get(&s)
    }

    /// Same witness with one more symbol bound.
    pub fn with(&self, s: Symbol, v: Rational) -> Self {
        let mut out = self.clone();
        out.assignment.insert(s, v);
        out
    }

    /// Is `p` nonzero at this point?
    pub fn separates(&self, p: &ParamPoly) -> Result<bool> {
        Ok(!p.evaluate(self)?.is_zero())
    }
}

impl serde::Serialize for ParameterWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let assignment: BTreeMap<&str, String> = self
            .assignment
            .iter()
            .map(|(k, v)| (k.name(), fmt_rational(v)))
            .collect();
        let constraints: Vec<String> = self.constraints.iter().map(|c| c.to_string()).collect();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("id", &self.id)?;
        m.serialize_entry("assignment", &assignment)?;
        m.serialize_entry("constraints", &constraints)?;
        m.end()
    }
}

impl fmt::Display for ParameterWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(s, v)| format!("{s}={}", fmt_rational(v)))
            .collect();
        write!(f, "{} {{{}}}", self.id, parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::param::{ratio, sym};

    #[test]
    fn constraints_are_checked() {
        let ok = ParameterWitness::new(
            "w",
            [(Symbol::A, ratio(4, 5)), (Symbol::B, ratio(3, 5))],
            vec![
                Constraint::less(sym::q(1, 2), sym::b()),
                Constraint::less(sym::b(), sym::a()),
            ],
        );
        assert!(ok.is_ok());
        let bad = ParameterWitness::new(
            "w",
            [(Symbol::A, ratio(3, 5)), (Symbol::B, ratio(4, 5))],
            vec![Constraint::less(sym::b(), sym::a())],
        );
        assert!(matches!(bad, Err(Error::WitnessViolation { .. })));
    }

    #[test]
    fn missing_symbol_is_reported() {
        let w = ParameterWitness::bare("w", [(Symbol::A, ratio(1, 3))]);
        assert_eq!(
            sym::b().evaluate(&w),
            Err(Error::UnassignedSymbol("b".into()))
        );
    }
}
