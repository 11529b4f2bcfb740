use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::{ParamPoly, Rational, ThetaPoly};

/// A differential operator `Σᵢ xⁱ Pᵢ(ϑ)` with `ϑ = x·d/dx`.
///
/// Only nonzero `Pᵢ` are stored, so equal operators have equal representations.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ThetaFormOperator {
    terms: BTreeMap<usize, ThetaPoly>,
}

impl ThetaFormOperator {
    pub fn new(terms: impl IntoIterator<Item = (usize, ThetaPoly)>) -> Self {
        let mut out = Self::default();
        for (i, p) in terms {
            out.add_term(i, p);
        }
        out
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_theta(ThetaPoly::one())
    }

    /// The x-free operator `P(ϑ)`.
    pub fn from_theta(p: ThetaPoly) -> Self {
        Self::new([(0, p)])
    }

    /// `xⁱ`.
    pub fn x_pow(i: usize) -> Self {
        Self::new([(i, ThetaPoly::one())])
    }

    fn add_term(&mut self, i: usize, p: ThetaPoly) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&i) {
            Some(q) => &q + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(i, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &ThetaPoly)> {
        self.terms.iter().map(|(i, p)| (*i, p))
    }

    /// `Pᵢ`, zero when absent.
    pub fn coeff(&self, i: usize) -> ThetaPoly {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn get(&self, i: usize) -> Option<&ThetaPoly> {
        self.terms.get(&i)
    }

    pub fn x_degrees(&self) -> Vec<usize> {
        self.terms.keys().copied().collect()
    }

    /// `deg_x`, the largest stored power of x.
    pub fn degree_x(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_x(&self) -> Option<usize> {
        self.terms.keys().next().copied()
    }

    /// Order of the operator as a differential operator: the largest ϑ-degree.
    pub fn order(&self) -> usize {
        self.terms
            .values()
            .filter_map(ThetaPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Rank of the associated equation, `deg P₀`.
    pub fn rank(&self) -> Option<usize> {
        self.terms.get(&0).and_then(ThetaPoly::degree)
    }

    pub fn map_coeffs(&self, f: impl Fn(usize, &ThetaPoly) -> ThetaPoly) -> Self {
        Self::new(self.terms.iter().map(|(i, p)| (*i, f(*i, p))))
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        self.map_coeffs(|_, p| p.scale(c))
    }

    pub fn scale_rat(&self, c: &Rational) -> Self {
        self.map_coeffs(|_, p| p.scale_rat(c))
    }

    /// Noncommutative product: `xⁱP(ϑ)·xʲQ(ϑ) = xⁱ⁺ʲ P(ϑ+j) Q(ϑ)`.
    pub fn op_mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (i, p) in &self.terms {
            for (j, q) in &rhs.terms {
                let shifted = p.shift(&ParamPoly::int(*j as i64));
                out.add_term(i + j, &shifted * q);
            }
        }
        out
    }
}

impl Add for &ThetaFormOperator {
    type Output = ThetaFormOperator;
    fn add(self, rhs: &ThetaFormOperator) -> ThetaFormOperator {
        let mut out = self.clone();
        for (i, p) in &rhs.terms {
            out.add_term(*i, p.clone());
        }
        out
    }
}

impl Sub for &ThetaFormOperator {
    type Output = ThetaFormOperator;
    fn sub(self, rhs: &ThetaFormOperator) -> ThetaFormOperator {
        self + &(-rhs)
    }
}

impl Neg for &ThetaFormOperator {
    type Output = ThetaFormOperator;
    fn neg(self) -> ThetaFormOperator {
        self.map_coeffs(|_, p| -p)
    }
}

impl Mul for &ThetaFormOperator {
    type Output = ThetaFormOperator;
    fn mul(self, rhs: &ThetaFormOperator) -> ThetaFormOperator {
        self.op_mul(rhs)
    }
}

impl fmt::Display for ThetaFormOperator {
    /// x-degree ascending, each coefficient ϑ-degree descending:
    /// `(P0) + x*(P1) + x^2*(P2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, p)| match i {
                0 => format!("({p})"),
                1 => format!("x*({p})"),
                _ => format!("x^{i}*({p})"),
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `{"terms": {"i": "P_i(T)"}}`
impl serde::Serialize for ThetaFormOperator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let terms: std::collections::BTreeMap<usize, String> =
            self.terms().map(|(i, p)| (i, p.to_string())).collect();
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("terms", &terms)?;
        m.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_times_x() {
        let theta = ThetaFormOperator::from_theta(ThetaPoly::theta());
        let x = ThetaFormOperator::x_pow(1);
        let prod = theta.op_mul(&x);
        assert_eq!(prod, ThetaFormOperator::new([(1, ThetaPoly::linear(1, 1))]));
        // (ϑ − 1)x = xϑ
        let lhs = ThetaFormOperator::from_theta(ThetaPoly::root_factor(1)).op_mul(&x);
        assert_eq!(lhs, ThetaFormOperator::new([(1, ThetaPoly::theta())]));
    }

    #[test]
    fn unit_and_cancellation() {
        let p = ThetaFormOperator::new([(0, ThetaPoly::theta()), (2, ThetaPoly::constant(3))]);
        assert_eq!(p.op_mul(&ThetaFormOperator::one()), p);
        assert_eq!(ThetaFormOperator::one().op_mul(&p), p);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn display_orders_terms() {
        let p = ThetaFormOperator::new([
            (2, ThetaPoly::linear(1, 1)),
            (0, &ThetaPoly::theta().pow(2) - &ThetaPoly::theta()),
        ]);
        assert_eq!(p.to_string(), "(T^2 - T) + x^2*(T + 1)");
    }
}
