use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::{fmt_rational, ParamPoly, ParameterWitness, Rational, Symbol};
use crate::error::{Error, Result};

/// An eigenvalue `exp(−2πi·e)` recorded by its exponent `e` modulo ℤ.
///
/// `e` is affine in the parameters. The constant part is kept in `[0, 1)`; the linear
/// part is kept as is, so two classes are equal exactly when they agree for generic
/// parameter values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentClass {
    constant: Rational,
    coeffs: BTreeMap<Symbol, Rational>,
}

pub(crate) fn frac(r: &Rational) -> Rational {
    r - Rational::from_integer(r.numer().div_floor(r.denom()))
}

impl ExponentClass {
    pub fn new(constant: Rational, coeffs: impl IntoIterator<Item = (Symbol, Rational)>) -> Self {
        Self {
            constant: frac(&constant),
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn zero() -> Self {
        Self::new(Rational::zero(), [])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, [])
    }

    /// `−1`, the class of `1/2`.
    pub fn half() -> Self {
        Self::constant(Rational::new(1.into(), 2.into()))
    }

    pub fn symbol(s: Symbol) -> Self {
        Self::new(Rational::zero(), [(s, Rational::from_integer(1.into()))])
    }

    pub fn from_param(p: &ParamPoly) -> Result<Self> {
        let (c, lin) = p.affine_parts().ok_or_else(|| {
            Error::Input(format!("exponent `{p}` is not affine in the parameters"))
        })?;
        Ok(Self::new(c, lin))
    }

    /// Representative with constant part in `[0, 1)`.
    pub fn to_param(&self) -> ParamPoly {
        let lin: Vec<(Symbol, Rational)> =
            self.coeffs.iter().map(|(s, c)| (*s, c.clone())).collect();
        ParamPoly::affine(self.constant.clone(), &lin)
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn coeffs(&self) -> &BTreeMap<Symbol, Rational> {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Trivial for generic parameters, i.e. eigenvalue 1.
    pub fn is_trivial(&self) -> bool {
        self.coeffs.is_empty() && self.constant.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (s, c) in &other.coeffs {
            *coeffs.entry(*s).or_insert_with(Rational::zero) += c;
        }
        Self::new(&self.constant + &other.constant, coeffs)
    }

    pub fn neg(&self) -> Self {
        Self::new(-&self.constant, self.coeffs.iter().map(|(s, c)| (*s, -c)))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// `k·e`, the class of the `k`-th power of the eigenvalue.
    pub fn times(&self, k: i64) -> Self {
        let k = Rational::from_integer(k.into());
        Self::new(
            &self.constant * &k,
            self.coeffs.iter().map(|(s, c)| (*s, c * &k)),
        )
    }

    /// Value in `[0, 1)` at the witness.
    pub fn evaluate(&self, w: &ParameterWitness) -> Result<Rational> {
        Ok(frac(&self.to_param().evaluate(w)?))
    }

    /// The constant class obtained at the witness.
    pub fn specialize(&self, w: &ParameterWitness) -> Result<Self> {
        Ok(Self::constant(self.evaluate(w)?))
    }
}

impl fmt::Display for ExponentClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_param())
    }
}

impl Serialize for ExponentClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("const", &fmt_rational(&self.constant))?;
        let coeffs: BTreeMap<&str, String> = self
            .coeffs
            .iter()
            .map(|(s, c)| (s.name(), fmt_rational(c)))
            .collect();
        m.serialize_entry("coeffs", &coeffs)?;
        m.end()
    }
}

impl From<Symbol> for ExponentClass {
    fn from(s: Symbol) -> Self {
        Self::symbol(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratio, sym};

    #[test]
    fn reduction_mod_one() {
        let e = ExponentClass::from_param(&(&sym::b().scale(&ratio(2, 1)) - &sym::c(1))).unwrap();
        assert_eq!(e, ExponentClass::symbol(Symbol::B).times(2));
        assert_eq!(ExponentClass::constant(ratio(-1, 2)), ExponentClass::half());
        assert!(ExponentClass::half().times(2).is_trivial());
        let a = ExponentClass::symbol(Symbol::A);
        assert!(a.add(&a.neg()).is_trivial());
        assert!(!a.is_trivial());
    }

    #[test]
    fn evaluation_lands_in_unit_interval() {
        let w = ParameterWitness::bare("w", [(Symbol::B, ratio(3, 5))]);
        let e = ExponentClass::symbol(Symbol::B).neg();
        assert_eq!(e.evaluate(&w).unwrap(), ratio(2, 5));
        assert_eq!(
            ExponentClass::symbol(Symbol::B)
                .times(2)
                .evaluate(&w)
                .unwrap(),
            ratio(1, 5)
        );
    }
}
