//! Exact multivariate polynomials over ℚ in the fixed parameter symbols `a, b, t, mu`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::witness::ParameterWitness;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n / d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text for a rational: `n` or `n/d`.
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `n` or `n/d` (optionally signed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Input(format!("not a rational number: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::ZeroDivisor);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The parameter symbols. The set is fixed; extending it means adding a variant here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    A,
    B,
    T,
    Mu,
}

pub const SYMBOLS: [Symbol; 4] = [Symbol::A, Symbol::B, Symbol::T, Symbol::Mu];

impl Symbol {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::A => "a",
            Symbol::B => "b",
            Symbol::T => "t",
            Symbol::Mu => "mu",
        }
    }

    pub fn from_name(s: &str) -> Option<Symbol> {
        SYMBOLS.into_iter().find(|sym| sym.name() == s)
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`Symbol::index`].
pub type Monomial = [u32; 4];

/// A polynomial in `a, b, t, mu` with rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Rational>,
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    let mut out = [0; 4];
    for i in 0..4 {
        out[i] = a[i].checked_sub(b[i])?;
    }
    Some(out)
}

impl ParamPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0; 4], c);
        }
        Self { terms }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(rat(n))
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut m = [0; 4];
        m[s.index()] = 1;
        Self::monomial(m, Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// Builds `c0 + Σ cᵢ·symᵢ`.
    pub fn affine(c0: Rational, coeffs: &[(Symbol, Rational)]) -> Self {
        let mut p = Self::constant(c0);
        for (s, c) in coeffs {
            p += &(&Self::symbol(*s) * c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// `Some(c)` when the polynomial is the constant `c` (including 0).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&[0; 4]).cloned(),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&[0; 4])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        SYMBOLS
            .into_iter()
            .filter(|s| self.terms.keys().any(|m| m[s.index()] > 0))
            .collect()
    }

    /// Splits an affine polynomial into its constant and linear coefficients.
    /// Returns `None` when some term has total degree above one.
    pub fn affine_parts(&self) -> Option<(Rational, BTreeMap<Symbol, Rational>)> {
        let mut lin = BTreeMap::new();
        for (m, c) in &self.terms {
            match m.iter().sum::<u32>() {
                0 => {}
                1 => {
                    let i = m.iter().position(|&e| e == 1).unwrap();
                    lin.insert(SYMBOLS[i], c.clone());
                }
                _ => return None,
            }
        }
        Some((self.constant_term(), lin))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Lex-leading term (largest exponent vector in `a > b > t > mu` order).
    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Exact quotient `self / d`; fails when `d` does not divide `self`.
    pub fn exact_div(&self, d: &ParamPoly) -> Result<ParamPoly> {
        let (dm, dc) = d.leading().ok_or(Error::ZeroDivisor)?;
        if let Some(c) = d.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = ParamPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let m = mono_div(rm, dm).ok_or(Error::DivisionNotExact)?;
            let c = rc / dc;
            let t = ParamPoly::monomial(m, c);
            rem -= &(&t * d);
            quot += &t;
        }
        Ok(quot)
    }

    /// Substitutes every assigned symbol; unassigned ones stay symbolic.
    pub fn substitute(&self, values: &BTreeMap<Symbol, Rational>) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = *m;
            for s in SYMBOLS {
                if let Some(v) = values.get(&s) {
                    let e = m[s.index()];
                    if e > 0 {
                        coeff *= num_traits::pow(v.clone(), e as usize);
                        rest[s.index()] = 0;
                    }
                }
            }
            out.add_term(rest, coeff);
        }
        out
    }

    /// Replaces the symbol `s` by the polynomial `q`.
    pub fn compose(&self, s: Symbol, q: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut rest = *m;
            let e = rest[s.index()];
            rest[s.index()] = 0;
            out += &(&ParamPoly::monomial(rest, c.clone()) * &q.pow(e));
        }
        out
    }

    /// Exact value under a witness.
    pub fn evaluate(&self, w: &ParameterWitness) -> Result<Rational> {
        let p = self.substitute(w.assignment());
        p.as_constant().ok_or_else(|| {
            Error::UnassignedSymbol(
                p.symbols()
                    .first()
                    .map(|s| s.name().to_string())
                    .unwrap_or_default(),
            )
        })
    }

    /// Floating-point value, for diagnostics only.
    pub fn approx(&self, w: &ParameterWitness) -> Option<f64> {
        self.evaluate(w).ok().and_then(|r| r.to_f64())
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for ParamPoly {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<Symbol> for ParamPoly {
    fn from(s: Symbol) -> Self {
        Self::symbol(s)
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, rhs: &ParamPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c.clone());
        }
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mono_mul(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl Mul<&Rational> for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &Rational) -> ParamPoly {
        self.scale(rhs)
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for ParamPoly {
            type Output = ParamPoly;
            fn $f(self, rhs: ParamPoly) -> ParamPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&ParamPoly> for ParamPoly {
            type Output = ParamPoly;
            fn $f(self, rhs: &ParamPoly) -> ParamPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        -&self
    }
}

impl serde::Serialize for ParamPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for ParamPoly {
    /// Terms in descending lex order, e.g. `3*a^2 - 4*b^2 + 9/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let vars: Vec<String> = SYMBOLS
                .iter()
                .filter(|s| m[s.index()] > 0)
                .map(|s| match m[s.index()] {
                    1 => s.name().to_string(),
                    e => format!("{}^{}", s.name(), e),
                })
                .collect();
            if vars.is_empty() {
                f.write_str(&fmt_rational(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_rational(&abs))?;
                }
                f.write_str(&vars.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Convenience constructors used throughout fixtures and tests.
pub mod sym {
    use super::*;

    pub fn a() -> ParamPoly {
        ParamPoly::symbol(Symbol::A)
    }
    pub fn b() -> ParamPoly {
        ParamPoly::symbol(Symbol::B)
    }
    pub fn t() -> ParamPoly {
        ParamPoly::symbol(Symbol::T)
    }
    pub fn mu() -> ParamPoly {
        ParamPoly::symbol(Symbol::Mu)
    }
    pub fn c(n: i64) -> ParamPoly {
        ParamPoly::int(n)
    }
    pub fn q(n: i64, d: i64) -> ParamPoly {
        ParamPoly::constant(ratio(n, d))
    }
}

#[cfg(test)]
mod tests {
    use super::sym::*;
    use super::*;

    #[test]
    fn ring_basics() {
        let p = &a() + &b();
        let sq = &p * &p;
        let expect = &(&(&a() * &a()) + &(&(&a() * &b()) * &ratio(2, 1))) + &(&b() * &b());
        assert_eq!(sq, expect);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division() {
        let p = &a() - &b();
        let q = &(&a() + &c(3)) * &p;
        assert_eq!(q.exact_div(&p).unwrap(), &a() + &c(3));
        assert_eq!(q.exact_div(&(&a() + &b())), Err(Error::DivisionNotExact));
        assert_eq!(q.exact_div(&ParamPoly::zero()), Err(Error::ZeroDivisor));
    }

    #[test]
    fn display_is_lex_descending() {
        let p = &(&(&a() * &a()) * &ratio(12, 1)) - &(&(&b() * &b()) * &ratio(16, 1));
        let p = &(&p - &(&a() * &ratio(12, 1))) + &c(43);
        assert_eq!(p.to_string(), "12*a^2 - 12*a - 16*b^2 + 43");
        assert_eq!(q(-9, 2).to_string(), "-9/2");
        assert_eq!(ParamPoly::zero().to_string(), "0");
    }

    #[test]
    fn affine_parts_rejects_quadratic() {
        let p = &(&mu() - &(&b() * &ratio(2, 1))) + &c(4);
        let (c0, lin) = p.affine_parts().unwrap();
        assert_eq!(c0, rat(4));
        assert_eq!(lin[&Symbol::B], rat(-2));
        assert!((&a() * &a()).affine_parts().is_none());
    }

    #[test]
    fn compose_replaces_symbol() {
        // (t + 1)^2 with t -> 2
        let p = (&t() + &c(1)).pow(2);
        assert_eq!(p.compose(Symbol::T, &c(2)), c(9));
    }
}
