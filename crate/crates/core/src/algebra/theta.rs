//! Univariate polynomials in the Euler operator ϑ with [`ParamPoly`] coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::param::{fmt_rational, ParamPoly, Rational, Symbol, SYMBOLS};
use super::witness::ParameterWitness;
use crate::error::{Error, Result};

/// `Σ cₖ ϑᵏ`, index = power. The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ThetaPoly {
    coeffs: Vec<ParamPoly>,
}

/// Binary operations accepted by [`ThetaPoly::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    ExactDiv,
}

impl ThetaPoly {
    pub fn new(mut coeffs: Vec<ParamPoly>) -> Self {
        while coeffs.last().is_some_and(ParamPoly::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(ParamPoly::one())
    }

    pub fn constant(c: impl Into<ParamPoly>) -> Self {
        Self::new(vec![c.into()])
    }

    /// The monomial ϑ.
    pub fn theta() -> Self {
        Self::new(vec![ParamPoly::zero(), ParamPoly::one()])
    }

    /// `c1·ϑ + c0`.
    pub fn linear(c1: impl Into<ParamPoly>, c0: impl Into<ParamPoly>) -> Self {
        Self::new(vec![c0.into(), c1.into()])
    }

    /// `ϑ − r`.
    pub fn root_factor(r: impl Into<ParamPoly>) -> Self {
        Self::linear(1, -r.into())
    }

    /// `Π (ϑ − rᵢ)`.
    pub fn from_roots<I, P>(roots: I) -> Self
    where
        I: IntoIterator<Item = P>,
        P: Into<ParamPoly>,
    {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::root_factor(r))
    }

    /// `(ϑ − n + 1)⋯(ϑ − 1)ϑ`, the θ-form of `xⁿδⁿ`.
    pub fn falling(n: usize) -> Self {
        Self::from_roots((0..n as i64).map(ParamPoly::int))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ParamPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> ParamPoly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&ParamPoly> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scale(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Dispatches one of the four exact ring operations.
    pub fn arith(&self, rhs: &ThetaPoly, kind: ArithKind) -> Result<ThetaPoly> {
        Ok(match kind {
            ArithKind::Add => self + rhs,
            ArithKind::Sub => self - rhs,
            ArithKind::Mul => self * rhs,
            ArithKind::ExactDiv => self.exact_div(rhs)?,
        })
    }

    /// Long division. Each step divides leading coefficients exactly in the
    /// parameter ring; returns `(quotient, remainder)`.
    pub fn div_rem(&self, d: &ThetaPoly) -> Result<(ThetaPoly, ThetaPoly)> {
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        let lc = d.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![ParamPoly::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let top = rem.last().unwrap().clone();
            if !top.is_zero() {
                let q = top.exact_div(lc)?;
                for (i, c) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &(&q * c);
                }
                quot[k] = q;
            }
            rem.pop();
            while rem.last().is_some_and(ParamPoly::is_zero) {
                rem.pop();
            }
        }
        Ok((ThetaPoly::new(quot), ThetaPoly::new(rem)))
    }

    /// Exact quotient; `DivisionNotExact` on a nonzero remainder.
    pub fn exact_div(&self, d: &ThetaPoly) -> Result<ThetaPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::DivisionNotExact)
        }
    }

    /// Evaluation at a parameter-valued point.
    pub fn eval_at(&self, x: &ParamPoly) -> ParamPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(ParamPoly::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(u·ϑ + v)`. With `u = 0` this is the constant `p(v)`.
    pub fn substitute_affine(&self, u: &Rational, v: &ParamPoly) -> ThetaPoly {
        let arg = ThetaPoly::new(vec![v.clone(), ParamPoly::constant(u.clone())]);
        self.coeffs.iter().rev().fold(ThetaPoly::zero(), |acc, c| {
            &(&acc * &arg) + &ThetaPoly::constant(c.clone())
        })
    }

    /// `p(ϑ + s)`.
    pub fn shift(&self, s: &ParamPoly) -> ThetaPoly {
        self.substitute_affine(&Rational::one(), s)
    }

    /// Specializes parameters; unassigned symbols stay symbolic.
    pub fn substitute(&self, w: &ParameterWitness) -> ThetaPoly {
        ThetaPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.substitute(w.assignment()))
                .collect(),
        )
    }

    /// Full specialization: every coefficient must become rational.
    pub fn evaluate(&self, w: &ParameterWitness) -> Result<ThetaPoly> {
        let out = self.substitute(w);
        for c in &out.coeffs {
            if let Some(s) = c.symbols().first() {
                return Err(Error::UnassignedSymbol(s.name().to_string()));
            }
        }
        Ok(out)
    }

    /// Coefficients as rationals, when the polynomial is parameter-free.
    pub fn rational_coeffs(&self) -> Result<Vec<Rational>> {
        self.coeffs
            .iter()
            .map(|c| {
                c.as_constant()
                    .ok_or_else(|| Error::NotConstant(self.to_string()))
            })
            .collect()
    }

    pub fn derivative(&self) -> ThetaPoly {
        ThetaPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
                .collect(),
        )
    }

    /// Monic gcd, for parameter-free polynomials.
    pub fn gcd_rational(&self, other: &ThetaPoly) -> Result<ThetaPoly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Divides by the leading coefficient when it is a rational constant.
    pub fn monic(&self) -> ThetaPoly {
        match self.leading().and_then(ParamPoly::as_constant) {
            Some(c) if !c.is_zero() => self.scale_rat(&c.recip()),
            _ => self.clone(),
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        SYMBOLS
            .into_iter()
            .filter(|s| self.coeffs.iter().any(|c| c.symbols().contains(s)))
            .collect()
    }
}

impl Add for &ThetaPoly {
    type Output = ThetaPoly;
    fn add(self, rhs: &ThetaPoly) -> ThetaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ThetaPoly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &ThetaPoly {
    type Output = ThetaPoly;
    fn sub(self, rhs: &ThetaPoly) -> ThetaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ThetaPoly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &ThetaPoly {
    type Output = ThetaPoly;
    fn mul(self, rhs: &ThetaPoly) -> ThetaPoly {
        if self.is_zero() || rhs.is_zero() {
            return ThetaPoly::zero();
        }
        let mut out = vec![ParamPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        ThetaPoly::new(out)
    }
}

impl Neg for &ThetaPoly {
    type Output = ThetaPoly;
    fn neg(self) -> ThetaPoly {
        ThetaPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for ThetaPoly {
            type Output = ThetaPoly;
            fn $f(self, rhs: ThetaPoly) -> ThetaPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for ThetaPoly {
    type Output = ThetaPoly;
    fn neg(self) -> ThetaPoly {
        -&self
    }
}

impl fmt::Display for ThetaPoly {
    /// Fully expanded, ϑ-degree descending, written with `T` for ϑ.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            for (m, v) in c.terms().collect::<Vec<_>>().into_iter().rev() {
                let mut factors: Vec<String> = SYMBOLS
                    .iter()
                    .filter(|s| m[s.index()] > 0)
                    .map(|s| match m[s.index()] {
                        1 => s.name().to_string(),
                        e => format!("{}^{e}", s.name()),
                    })
                    .collect();
                match k {
                    0 => {}
                    1 => factors.push("T".into()),
                    _ => factors.push(format!("T^{k}")),
                }
                let abs = v.abs();
                match (first, v.is_negative()) {
                    (true, true) => f.write_str("-")?,
                    (true, false) => {}
                    (false, true) => f.write_str(" - ")?,
                    (false, false) => f.write_str(" + ")?,
                }
                first = false;
                if factors.is_empty() {
                    f.write_str(&fmt_rational(&abs))?;
                } else {
                    if !abs.is_one() {
                        write!(f, "{}*", fmt_rational(&abs))?;
                    }
                    f.write_str(&factors.join("*"))?;
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for ThetaPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::param::{rat, ratio, sym};

    fn t() -> ThetaPoly {
        ThetaPoly::theta()
    }

    #[test]
    fn difference_of_squares() {
        let lhs = ThetaPoly::root_factor(1);
        let rhs = ThetaPoly::root_factor(-1);
        let prod = lhs.arith(&rhs, ArithKind::Mul).unwrap();
        assert_eq!(prod, &t().pow(2) - &ThetaPoly::one());
        assert_eq!(prod.arith(&lhs, ArithKind::ExactDiv).unwrap(), rhs);
        assert_eq!(
            prod.arith(&t(), ArithKind::ExactDiv),
            Err(Error::DivisionNotExact)
        );
        assert_eq!(
            prod.arith(&ThetaPoly::zero(), ArithKind::ExactDiv),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn affine_substitution_examples() {
        // FT(ϑ) = −1 − ϑ
        let ft = t().substitute_affine(&rat(-1), &sym::c(-1));
        assert_eq!(ft, ThetaPoly::linear(-1, -1));
        // L₃(ϑ/2) for L₃ = −6 − 4ϑ
        let l3 = ThetaPoly::linear(-4, -6);
        assert_eq!(
            l3.substitute_affine(&ratio(1, 2), &ParamPoly::zero()),
            ThetaPoly::linear(-2, -6)
        );
        assert_eq!(l3.substitute_affine(&rat(1), &ParamPoly::zero()), l3);
        // u = 0 is constant evaluation
        assert_eq!(
            l3.substitute_affine(&rat(0), &sym::c(2)),
            ThetaPoly::constant(-14)
        );
    }

    #[test]
    fn evaluation_examples() {
        let w = ParameterWitness::bare("w", [(Symbol::A, ratio(2, 3)), (Symbol::B, ratio(3, 4))]);
        let p = &(&sym::b() * &rat(2)) - &sym::c(1);
        assert_eq!(p.evaluate(&w).unwrap(), ratio(1, 2));
        let q = ThetaPoly::linear(1, &sym::c(1) - &(&sym::b() * &rat(2)));
        assert_eq!(q.evaluate(&w).unwrap(), ThetaPoly::linear(1, sym::q(-1, 2)));
        let r = &(&(&(&sym::a() * &sym::a()) * &rat(12)) - &(&(&sym::b() * &sym::b()) * &rat(16)))
            - &(&sym::a() * &rat(12));
        let r = &r + &sym::c(43);
        assert_eq!(r.evaluate(&w).unwrap(), ratio(94, 3));
    }

    #[test]
    fn division_with_parametric_divisor() {
        let f = ThetaPoly::root_factor(sym::mu());
        let g = ThetaPoly::linear(sym::a(), sym::b());
        let p = &f * &g;
        assert_eq!(p.exact_div(&g).unwrap(), f);
        assert_eq!(p.exact_div(&f).unwrap(), g);
    }

    #[test]
    fn display() {
        let p = ThetaPoly::new(vec![sym::a(), sym::c(-3), sym::c(1)]);
        assert_eq!(p.to_string(), "T^2 - 3*T + a");
    }
}
