//! Minimality certificates for Fourier transforms of Fuchsian operators.
//!
//! Two decidable conditions are checked: no exponent at a finite point is a negative
//! integer, and the indicial polynomial at 0 of the quotient `H` in
//! `FT(P) = ϑ(ϑ−1)⋯(ϑ−n+1)·H` has no integer roots.

use num_traits::Zero;
use serde::Serialize;

use super::local::{certify_scheme, indicial_at, Point, RiemannScheme};
use super::operator::ThetaFormOperator;
use super::transform::{
    forced_negative_integer, ft_theta, generically_non_integer, left_factor_divide,
};
use crate::algebra::{rational_roots, ParamPoly, ParameterWitness, ThetaPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    /// No finite-point exponent is forced into `ℤ<0`.
    pub exponents_ok: bool,
    /// The indicial polynomial of `H` at 0 has no integer roots.
    pub quotient_ok: bool,
    /// Largest `n` with `[ϑ]_n` a left factor of `FT(P)`.
    pub factor_order: usize,
    #[serde(skip)]
    pub quotient: ThetaFormOperator,
    /// Certified roots of `H₀`.
    pub quotient_roots: Vec<ParamPoly>,
    /// Exponents responsible for a failure of (i).
    pub offending: Vec<String>,
}

impl MinimalityReport {
    pub fn holds(&self) -> bool {
        self.exponents_ok && self.quotient_ok
    }
}

/// `FT(P) = [ϑ]_n·H` with `n` maximal.
pub fn ft_quotient(p: &ThetaFormOperator) -> Result<(usize, ThetaFormOperator)> {
    let ft = ft_theta(p);
    if ft.is_zero() {
        return Err(Error::ZeroOperator);
    }
    for n in (0..=ft.order()).rev() {
        if let Ok(h) = left_factor_divide(&ft, &ThetaPoly::falling(n)) {
            return Ok((n, h));
        }
    }
    unreachable!("[ϑ]_0 = 1 always divides")
}

/// Symbolic certificate. `FT(P)₀ = [ϑ]_d·P_d(−1−ϑ)`, so the roots of `H₀` are claimed
/// as `{e − 1 : e at ∞} ∪ {0, …, d−1}` minus `{0, …, n−1}`, then confirmed by exact
/// division.
pub fn minimality_certificate(
    p: &ThetaFormOperator,
    scheme: &RiemannScheme,
) -> Result<MinimalityReport> {
    certify_scheme(p, scheme)?;
    let mut offending = Vec::new();
    for (pt, es) in scheme.columns() {
        if pt.is_infinity() {
            continue;
        }
        for e in es {
            if forced_negative_integer(e) {
                offending.push(format!("{e} at {pt}"));
            }
        }
    }

    let (n, h) = ft_quotient(p)?;
    let d = p.degree_x().ok_or(Error::ZeroOperator)?;
    let h0 = indicial_at(&h, &Point::zero(), None)?;
    let inf = scheme
        .column(&Point::Infinity)
        .ok_or_else(|| Error::Input("scheme has no column at infinity".into()))?;
    let mut claimed: Vec<ParamPoly> = inf.iter().map(|e| e - &ParamPoly::one()).collect();
    claimed.extend((0..d).map(|k| ParamPoly::int(k as i64)));
    for k in 0..n {
        let k = ParamPoly::int(k as i64);
        if let Some(pos) = claimed.iter().position(|r| *r == k) {
            claimed.remove(pos);
        }
    }
    let mut rest = h0.clone();
    for r in &claimed {
        rest = rest
            .exact_div(&ThetaPoly::root_factor(r.clone()))
            .map_err(|_| Error::UncertifiedExponent {
                point: "0 (quotient)".into(),
                exponent: r.to_string(),
            })?;
    }
    if rest.degree() != Some(0) {
        return Err(Error::IrrationalExponent {
            point: "0 (quotient)".into(),
            found: claimed.len(),
            expected: h0.degree().unwrap_or(0),
        });
    }
    let quotient_ok = claimed.iter().all(generically_non_integer);
    claimed.sort();
    Ok(MinimalityReport {
        exponents_ok: offending.is_empty(),
        quotient_ok,
        factor_order: n,
        quotient: h,
        quotient_roots: claimed,
        offending,
    })
}

/// The same two conditions after specializing every parameter.
pub fn minimality_under_witness(
    p: &ThetaFormOperator,
    scheme: &RiemannScheme,
    w: &ParameterWitness,
) -> Result<(bool, bool)> {
    let exponents_ok = scheme
        .evaluate(w)?
        .iter()
        .filter(|(pt, _)| !pt.is_infinity())
        .flat_map(|(_, es)| es)
        .all(|e| !(e.is_integer() && *e < crate::algebra::Rational::zero()));
    let (_, h) = ft_quotient(&p.map_coeffs(|_, q| q.substitute(w)))?;
    let h0 = indicial_at(&h, &Point::zero(), None)?;
    let quotient_ok = rational_roots(&h0)?.iter().all(|r| !r.is_integer());
    Ok((exponents_ok, quotient_ok))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sym;

    #[test]
    fn negative_integer_exponent_fails() {
        // x-free part ϑ(ϑ+1), x-term (ϑ+2)(ϑ+3): exponent −1 at 0.
        let p = ThetaFormOperator::new([
            (0, ThetaPoly::from_roots([sym::c(0), sym::c(-1)])),
            (1, ThetaPoly::from_roots([sym::c(-2), sym::c(-3)])),
        ]);
        let scheme = RiemannScheme::new([
            (Point::zero(), vec![sym::c(0), sym::c(-1)]),
            (Point::Infinity, vec![sym::c(2), sym::c(3)]),
        ]);
        let report = minimality_certificate(&p, &scheme).unwrap();
        assert!(!report.exponents_ok);
        assert_eq!(report.offending.len(), 1);
    }

    #[test]
    fn wrong_exponent_is_rejected() {
        let p = ThetaFormOperator::new([
            (0, ThetaPoly::from_roots([sym::a()])),
            (1, ThetaPoly::from_roots([sym::b()])),
        ]);
        let scheme = RiemannScheme::new([(Point::zero(), vec![sym::b()])]);
        assert!(matches!(
            minimality_certificate(&p, &scheme),
            Err(Error::UncertifiedExponent { .. })
        ));
    }
}
