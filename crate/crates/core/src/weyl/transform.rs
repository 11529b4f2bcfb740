//! Fourier transform, Kummer pullback, inversion, twist, left division and twist matching
//! on θ-form operators.

use num_traits::{One, Zero};

use super::operator::ThetaFormOperator;
use crate::algebra::{ParamPoly, Rational, ThetaPoly};
use crate::error::{Error, Result};

/// `x^d·FT(P) = Σᵢ x^{d−i}·[ϑ]ᵢ·Pᵢ(−1−ϑ)` with `d = deg_x P`.
pub fn ft_theta(p: &ThetaFormOperator) -> ThetaFormOperator {
    let Some(d) = p.degree_x() else {
        return ThetaFormOperator::zero();
    };
    let minus_one = -Rational::one();
    ThetaFormOperator::new(p.terms().map(|(i, q)| {
        let reflected = q.substitute_affine(&minus_one, &ParamPoly::int(-1));
        (d - i, &ThetaPoly::falling(i) * &reflected)
    }))
}

/// Pullback along `x ↦ xᵏ`: `Σ x^{k·i} Pᵢ(ϑ/k)`.
pub fn kummer_pullback(p: &ThetaFormOperator, k: usize) -> Result<ThetaFormOperator> {
    if k == 0 {
        return Err(Error::Input("pullback degree must be at least 1".into()));
    }
    let inv = Rational::new(1.into(), (k as i64).into());
    Ok(ThetaFormOperator::new(p.terms().map(|(i, q)| {
        (k * i, q.substitute_affine(&inv, &ParamPoly::zero()))
    })))
}

/// `x^d·[1/x]^*P = Σ x^{d−i} Pᵢ(−ϑ)`; an involution.
pub fn inversion_normalized(p: &ThetaFormOperator) -> ThetaFormOperator {
    let Some(d) = p.degree_x() else {
        return ThetaFormOperator::zero();
    };
    let minus_one = -Rational::one();
    ThetaFormOperator::new(
        p.terms()
            .map(|(i, q)| (d - i, q.substitute_affine(&minus_one, &ParamPoly::zero()))),
    )
}

/// Conjugation by a power of x: every `Pᵢ(ϑ)` becomes `Pᵢ(ϑ + s)`.
pub fn twist_shift(p: &ThetaFormOperator, s: &ParamPoly) -> ThetaFormOperator {
    p.map_coeffs(|_, q| q.shift(s))
}

/// Multiplies `H` on the left by the x-free factor `Q(ϑ)`.
pub fn left_multiply(q: &ThetaPoly, h: &ThetaFormOperator) -> ThetaFormOperator {
    ThetaFormOperator::from_theta(q.clone()).op_mul(h)
}

/// Finds `H` with `Q(ϑ)·H = A`, using `Hᵢ = Aᵢ / Q(ϑ+i)`.
pub fn left_factor_divide(a: &ThetaFormOperator, q: &ThetaPoly) -> Result<ThetaFormOperator> {
    if q.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let mut terms = Vec::new();
    for (i, ai) in a.terms() {
        let shifted = q.shift(&ParamPoly::int(i as i64));
        let hi = ai
            .exact_div(&shifted)
            .map_err(|_| Error::NotLeftDivisible { degree: i })?;
        terms.push((i, hi));
    }
    Ok(ThetaFormOperator::new(terms))
}

/// A verified relation `A = c · twist_shift(B, s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistMatch {
    pub scale: ParamPoly,
    pub shift: ParamPoly,
}

/// Solves `A = c·twist_shift(B, s)` from the two top coefficients of one x-term
/// and verifies every coefficient. `None` when the shapes differ or no pair verifies.
pub fn match_up_to_twist(a: &ThetaFormOperator, b: &ThetaFormOperator) -> Option<TwistMatch> {
    if a.x_degrees() != b.x_degrees() || a.is_zero() {
        return None;
    }
    if a.terms().any(|(i, p)| p.degree() != b.coeff(i).degree()) {
        return None;
    }
    let degrees = a.x_degrees();
    let pick = degrees
        .iter()
        .copied()
        .find(|&i| a.coeff(i).degree().unwrap_or(0) >= 1)
        .unwrap_or(degrees[0]);
    let (ai, bi) = (a.coeff(pick), b.coeff(pick));

    let n = ai.degree()?;
    let c = ai.leading()?.exact_div(bi.leading()?).ok()?;
    let s = if n == 0 {
        ParamPoly::zero()
    } else {
        // A[n−1] = c·(B[n−1] + n·s·B[n])
        let lhs = &ai.coeff(n - 1).exact_div(&c).ok()? - &bi.coeff(n - 1);
        let denom = bi
            .leading()?
            .scale(&Rational::from_integer((n as i64).into()));
        lhs.exact_div(&denom).ok()?
    };
    let candidate = twist_shift(b, &s).scale(&c);
    (candidate == *a).then_some(TwistMatch { scale: c, shift: s })
}

/// Is `s` (affine in the parameters) generically not an integer?
pub fn generically_non_integer(s: &ParamPoly) -> bool {
    match s.as_constant() {
        Some(c) => !c.is_integer(),
        None => true,
    }
}

/// Is the affine quantity forced to be a negative integer?
pub fn forced_negative_integer(s: &ParamPoly) -> bool {
    s.as_constant()
        .is_some_and(|c| c.is_integer() && c < Rational::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sym;

    fn op(terms: &[(usize, ThetaPoly)]) -> ThetaFormOperator {
        ThetaFormOperator::new(terms.iter().cloned())
    }

    #[test]
    fn ft_of_theta() {
        // FT(ϑ) = −1 − ϑ, deg_x = 0
        let p = op(&[(0, ThetaPoly::theta())]);
        assert_eq!(ft_theta(&p), op(&[(0, ThetaPoly::linear(-1, -1))]));
        // x·FT(x) = x·δ = ϑ
        let x = ThetaFormOperator::x_pow(1);
        assert_eq!(ft_theta(&x), op(&[(0, ThetaPoly::theta())]));
    }

    #[test]
    fn pullback_and_inversion() {
        let l3 = ThetaPoly::linear(-4, -6);
        let p = op(&[(0, ThetaPoly::theta()), (3, l3)]);
        let pb = kummer_pullback(&p, 2).unwrap();
        assert_eq!(pb.coeff(6), ThetaPoly::linear(-2, -6));
        assert_eq!(kummer_pullback(&p, 1).unwrap(), p);
        assert!(kummer_pullback(&p, 0).is_err());
        assert_eq!(inversion_normalized(&inversion_normalized(&p)), p);
    }

    #[test]
    fn twist_group_action() {
        let p = op(&[
            (0, ThetaPoly::from_roots([sym::a(), sym::c(2)])),
            (1, ThetaPoly::theta()),
        ]);
        assert_eq!(twist_shift(&p, &ParamPoly::zero()), p);
        let s = &sym::mu() - &sym::c(2);
        assert_eq!(twist_shift(&twist_shift(&p, &s), &-&s), p);
    }

    #[test]
    fn left_division() {
        let q = ThetaPoly::falling(3);
        let h = op(&[
            (0, ThetaPoly::root_factor(sym::b())),
            (2, ThetaPoly::constant(5)),
        ]);
        let a = left_multiply(&q, &h);
        assert_eq!(left_factor_divide(&a, &q).unwrap(), h);
        // ϑ·x = x(ϑ+1); ϑ−5 shifted by 1 is ϑ−4 and does not divide ϑ+1.
        let theta_x = op(&[(1, ThetaPoly::linear(1, 1))]);
        assert_eq!(
            left_factor_divide(&theta_x, &ThetaPoly::root_factor(5)),
            Err(Error::NotLeftDivisible { degree: 1 })
        );
    }

    #[test]
    fn self_match_is_identity() {
        let p = op(&[
            (0, ThetaPoly::from_roots([sym::a(), sym::c(2)])),
            (1, ThetaPoly::theta()),
        ]);
        let m = match_up_to_twist(&p, &p).unwrap();
        assert!(m.scale.is_one());
        assert!(m.shift.is_zero());
        let twisted = twist_shift(&p, &sym::mu()).scale(&sym::c(-3));
        let m = match_up_to_twist(&twisted, &p).unwrap();
        assert_eq!(m.scale, sym::c(-3));
        assert_eq!(m.shift, sym::mu());
    }

    #[test]
    fn integrality() {
        assert!(generically_non_integer(&(&sym::mu() - &sym::c(4))));
        assert!(!generically_non_integer(&sym::c(3)));
        assert!(forced_negative_integer(&sym::c(-1)));
        assert!(!forced_negative_integer(&sym::q(-1, 2)));
    }
}
