//! Normal-ordered Weyl algebra elements `Σ c·xᵐδⁿ` and conversion to θ-form.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::operator::ThetaFormOperator;
use crate::algebra::{ParamPoly, Rational, ThetaPoly};

/// `Σ c_{m,n} xᵐ δⁿ` with every x to the left of every δ.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeltaFormOperator {
    terms: BTreeMap<(u32, u32), ParamPoly>,
}

fn binomial(n: u32, k: u32) -> Rational {
    let mut r = Rational::one();
    for i in 0..k {
        r = r * Rational::from_integer(BigInt::from(n - i))
            / Rational::from_integer(BigInt::from(i + 1));
    }
    r
}

fn falling_int(n: u32, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| {
        acc * Rational::from_integer(BigInt::from(n - i))
    })
}

impl DeltaFormOperator {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, ParamPoly::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, ParamPoly::one())
    }

    pub fn d() -> Self {
        Self::monomial(0, 1, ParamPoly::one())
    }

    pub fn constant(c: ParamPoly) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(m: u32, n: u32, c: ParamPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(m, n, c);
        out
    }

    pub fn new(terms: impl IntoIterator<Item = ((u32, u32), ParamPoly)>) -> Self {
        let mut out = Self::zero();
        for ((m, n), c) in terms {
            out.add_term(m, n, c);
        }
        out
    }

    fn add_term(&mut self, m: u32, n: u32, c: ParamPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((m, n)).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&(m, n));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ParamPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest δ-power.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|(_, n)| *n).max().unwrap_or(0)
    }

    /// Coefficient of `δ^order` as a polynomial in x: index = power of x.
    pub fn leading_coefficient(&self) -> Vec<ParamPoly> {
        let n = self.order();
        let deg = self
            .terms
            .keys()
            .filter(|(_, k)| *k == n)
            .map(|(m, _)| *m)
            .max()
            .unwrap_or(0);
        let mut out = vec![ParamPoly::zero(); deg as usize + 1];
        for ((m, k), c) in &self.terms {
            if *k == n {
                out[*m as usize] = c.clone();
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((m, n), c) in &rhs.terms {
            out.add_term(*m, *n, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &ParamPoly) -> Self {
        Self::new(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn neg(&self) -> Self {
        self.scale(&ParamPoly::int(-1))
    }

    /// Product, normal-ordered with `δᵇxᶜ = Σₖ C(b,k)·c!/(c−k)!·xᶜ⁻ᵏδᵇ⁻ᵏ`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &rhs.terms {
                let base = c1 * c2;
                for k in 0..=(*b).min(*c) {
                    let coeff = binomial(*b, k) * falling_int(*c, k);
                    out.add_term(a + c - k, b + d - k, base.scale(&coeff));
                }
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Substitutes the generators: `x ↦ X`, `δ ↦ Δ`, re-normal-ordering the result.
    pub fn substitute_generators(&self, x_img: &Self, d_img: &Self) -> Self {
        let mut out = Self::zero();
        for ((m, n), c) in &self.terms {
            let t = x_img.pow(*m).mul(&d_img.pow(*n)).scale(c);
            out = out.add(&t);
        }
        out
    }

    /// `x ↦ −x`, `δ ↦ −δ`.
    pub fn sign_inversion(&self) -> Self {
        Self::new(self.terms.iter().map(|((m, n), c)| {
            let c = if (m + n) % 2 == 1 { -c } else { c.clone() };
            ((*m, *n), c)
        }))
    }
}

/// Coefficients of `p` in the falling-factorial basis `[ϑ]ⱼ = ϑ(ϑ−1)⋯(ϑ−j+1)`.
fn falling_basis(p: &ThetaPoly) -> Vec<ParamPoly> {
    let Some(deg) = p.degree() else {
        return Vec::new();
    };
    // Newton forward differences at 0, 1, …, deg.
    let mut vals: Vec<ParamPoly> = (0..=deg)
        .map(|k| p.eval_at(&ParamPoly::int(k as i64)))
        .collect();
    let mut out = Vec::with_capacity(deg + 1);
    let mut fact = Rational::one();
    for j in 0..=deg {
        if j > 0 {
            fact *= Rational::from_integer(BigInt::from(j));
        }
        out.push(vals[0].scale(&fact.recip()));
        vals = vals.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    out
}

/// θ-form → δ-form, using `xʲδʲ = [ϑ]ⱼ`.
pub fn to_delta_form(p: &ThetaFormOperator) -> DeltaFormOperator {
    let mut out = DeltaFormOperator::zero();
    for (i, q) in p.terms() {
        for (j, c) in falling_basis(q).into_iter().enumerate() {
            out.add_term((i + j) as u32, j as u32, c);
        }
    }
    out
}

/// δ-form → θ-form. Returns `(k, P)` with `xᵏ·D = P`, `k` the least power making every
/// term polynomial in x.
pub fn to_theta_form(d: &DeltaFormOperator) -> (usize, ThetaFormOperator) {
    let k = d
        .terms
        .keys()
        .map(|(m, n)| n.saturating_sub(*m))
        .max()
        .unwrap_or(0) as usize;
    let mut out = ThetaFormOperator::zero();
    for ((m, n), c) in &d.terms {
        let i = k + *m as usize - *n as usize;
        out = &out + &ThetaFormOperator::new([(i, ThetaPoly::falling(*n as usize).scale(c))]);
    }
    (k, out)
}

/// Fourier transform on generators: `x ↦ δ`, `δ ↦ −x`.
pub fn ft_raw(d: &DeltaFormOperator) -> DeltaFormOperator {
    d.substitute_generators(&DeltaFormOperator::d(), &DeltaFormOperator::x().neg())
}

impl fmt::Display for DeltaFormOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((m, n), c)| {
                let mut s = format!("({c})");
                match m {
                    0 => {}
                    1 => s.push_str("*x"),
                    _ => s.push_str(&format!("*x^{m}")),
                }
                match n {
                    0 => {}
                    1 => s.push_str("*d"),
                    _ => s.push_str(&format!("*d^{n}")),
                }
                s
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta_op(p: ThetaPoly) -> ThetaFormOperator {
        ThetaFormOperator::from_theta(p)
    }

    #[test]
    fn theta_is_x_delta() {
        let d = to_delta_form(&theta_op(ThetaPoly::theta()));
        assert_eq!(d, DeltaFormOperator::x().mul(&DeltaFormOperator::d()));
        let d2 = to_delta_form(&theta_op(ThetaPoly::falling(2)));
        assert_eq!(d2, DeltaFormOperator::monomial(2, 2, ParamPoly::one()));
    }

    #[test]
    fn delta_needs_one_power_of_x() {
        let (k, p) = to_theta_form(&DeltaFormOperator::d());
        assert_eq!(k, 1);
        assert_eq!(p, theta_op(ThetaPoly::theta()));
    }

    #[test]
    fn commutation_rule() {
        let dx = DeltaFormOperator::d().mul(&DeltaFormOperator::x());
        let expect = DeltaFormOperator::x()
            .mul(&DeltaFormOperator::d())
            .add(&DeltaFormOperator::one());
        assert_eq!(dx, expect);
    }

    #[test]
    fn fourier_examples() {
        // FT(xδ) = −xδ − 1
        let xd = DeltaFormOperator::x().mul(&DeltaFormOperator::d());
        let expect = xd.neg().add(&DeltaFormOperator::one().neg());
        assert_eq!(ft_raw(&xd), expect);
        // FT(FT(x)) = −x
        assert_eq!(
            ft_raw(&ft_raw(&DeltaFormOperator::x())),
            DeltaFormOperator::x().neg()
        );
        // FT(δ² + x) = x² + δ
        let src = DeltaFormOperator::d().pow(2).add(&DeltaFormOperator::x());
        let expect = DeltaFormOperator::x().pow(2).add(&DeltaFormOperator::d());
        assert_eq!(ft_raw(&src), expect);
    }

    #[test]
    fn falling_basis_roundtrip() {
        let p = &ThetaPoly::theta().pow(3) - &ThetaPoly::constant(7);
        let back = falling_basis(&p)
            .into_iter()
            .enumerate()
            .fold(ThetaPoly::zero(), |acc, (j, c)| {
                &acc + &ThetaPoly::falling(j).scale(&c)
            });
        assert_eq!(back, p);
    }
}
