//! Rational roots of parameter-free ϑ-polynomials.
//!
//! The polynomial is reduced to its square-free part with integer coefficients.
//! When its extreme coefficients are small the rational root theorem is applied
//! exhaustively (every `±p/q` with `p | c₀`, `q | cₙ`). Otherwise candidates are the
//! continued-fraction convergents of numerically located roots, whose denominators the
//! same theorem bounds. Every candidate is confirmed by exact evaluation and every
//! multiplicity by exact division, so no root is ever reported without proof.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::param::{ParamPoly, Rational};
use super::theta::ThetaPoly;
use crate::error::{Error, Result};

const EXHAUSTIVE_LIMIT: u64 = 1_000_000;

/// All rational roots of `p` with multiplicity, ascending.
pub fn rational_roots(p: &ThetaPoly) -> Result<Vec<Rational>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    p.rational_coeffs()?;
    let mut rest = p.clone();
    let mut roots = Vec::new();
    while rest.coeff(0).is_zero() && !rest.is_zero() && rest.degree() > Some(0) {
        rest = rest.exact_div(&ThetaPoly::theta())?;
        roots.push(Rational::zero());
    }
    if rest.degree().unwrap_or(0) == 0 {
        roots.sort();
        return Ok(roots);
    }
    let g = rest.gcd_rational(&rest.derivative())?;
    let squarefree = rest.exact_div(&g)?;
    let ints = integer_coeffs(&squarefree)?;

    let mut distinct = candidates(&ints)
        .into_iter()
        .filter(|r| {
            squarefree
                .eval_at(&ParamPoly::constant(r.clone()))
                .is_zero()
        })
        .collect::<Vec<_>>();
    distinct.sort();
    distinct.dedup();

    for r in distinct {
        let factor = ThetaPoly::root_factor(ParamPoly::constant(r.clone()));
        while let Ok(q) = rest.exact_div(&factor) {
            rest = q;
            roots.push(r.clone());
        }
    }
    roots.sort();
    Ok(roots)
}

/// `rational_roots` plus a certificate that the cofactor has no rational root left.
pub fn split_rational(p: &ThetaPoly) -> Result<(Vec<Rational>, ThetaPoly)> {
    let roots = rational_roots(p)?;
    let lin = ThetaPoly::from_roots(roots.iter().cloned().map(ParamPoly::constant));
    Ok((roots, p.exact_div(&lin)?))
}

/// Primitive integer coefficient vector of a rational polynomial.
fn integer_coeffs(p: &ThetaPoly) -> Result<Vec<BigInt>> {
    let coeffs = p.rational_coeffs()?;
    let lcm = coeffs
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    Ok(ints.into_iter().map(|c| c / &g).collect())
}

fn candidates(ints: &[BigInt]) -> Vec<Rational> {
    let c0 = ints[0].abs();
    let cn = ints.last().unwrap().abs();
    let small = |n: &BigInt| n.to_u64().is_some_and(|v| v <= EXHAUSTIVE_LIMIT);
    if small(&c0) && small(&cn) {
        let ps = divisors(c0.to_u64().unwrap());
        let qs = divisors(cn.to_u64().unwrap());
        let mut out = Vec::with_capacity(ps.len() * qs.len() * 2);
        for &pv in &ps {
            for &qv in &qs {
                let r = Rational::new(BigInt::from(pv), BigInt::from(qv));
                out.push(-r.clone());
                out.push(r);
            }
        }
        return out;
    }
    numeric_candidates(ints)
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

fn numeric_candidates(ints: &[BigInt]) -> Vec<Rational> {
    let monic: Vec<f64> = ints
        .iter()
        .map(|c| {
            let r = Rational::new(c.clone(), ints.last().unwrap().clone());
            r.to_f64().unwrap_or(0.0)
        })
        .collect();
    let bound = ints.last().unwrap().abs();
    let mut out = Vec::new();
    for z in durand_kerner(&monic) {
        if z.im.abs() > 1e-4 * (1.0 + z.re.abs()) {
            continue;
        }
        out.extend(convergents(z.re, &bound));
    }
    out
}

/// Simultaneous iteration for all complex roots of a monic polynomial.
fn durand_kerner(monic: &[f64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    let radius = 1.0 + monic[..n].iter().map(|c| c.abs()).fold(0.0_f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| seed.powu(k as u32 + 1) * radius.min(1e6) / seed.norm().powi(k as i32 + 1))
        .collect();
    let eval = |x: Complex64| {
        monic
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c)
    };
    for _ in 0..2000 {
        let mut delta = 0.0_f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                denom = Complex64::new(1e-12, 0.0);
            }
            let step = eval(z[i]) / denom;
            z[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 {
            break;
        }
    }
    z
}

/// Continued-fraction convergents of `x` with denominator at most `bound`.
fn convergents(x: f64, bound: &BigInt) -> Vec<Rational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        let ai = BigInt::from(a as i64);
        let h2 = &ai * &h1 + &h0;
        let k2 = &ai * &k1 + &k0;
        if &k2 > bound {
            break;
        }
        out.push(Rational::new(h2.clone(), k2.clone()));
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-13 {
            break;
        }
        v = 1.0 / frac;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::param::{rat, ratio};

    fn from_roots(rs: &[Rational]) -> ThetaPoly {
        ThetaPoly::from_roots(rs.iter().cloned().map(ParamPoly::constant))
    }

    #[test]
    fn indicial_of_p13_at_zero() {
        // −4096 ϑ²(ϑ−1)(ϑ+1)
        let p = from_roots(&[rat(0), rat(0), rat(1), rat(-1)]).scale_rat(&rat(-4096));
        assert_eq!(
            rational_roots(&p).unwrap(),
            vec![rat(-1), rat(0), rat(0), rat(1)]
        );
    }

    #[test]
    fn no_rational_roots() {
        let p = &ThetaPoly::theta().pow(2) + &ThetaPoly::one();
        assert!(rational_roots(&p).unwrap().is_empty());
        let (roots, rest) = split_rational(&p).unwrap();
        assert!(roots.is_empty());
        assert_eq!(rest, p);
    }

    #[test]
    fn half_integer_roots() {
        // (2ϑ − 1)(ϑ − 3)
        let p = &ThetaPoly::linear(2, -1) * &ThetaPoly::root_factor(3);
        assert_eq!(rational_roots(&p).unwrap(), vec![ratio(1, 2), rat(3)]);
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(
            rational_roots(&ThetaPoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn large_denominators_use_numeric_candidates() {
        let rs = [
            ratio(423, 100),
            ratio(223, 100),
            ratio(403, 100),
            ratio(203, 100),
            ratio(3, 100),
            ratio(3, 100),
            ratio(-17, 100),
        ];
        let p = &from_roots(&rs) * &(&ThetaPoly::theta().pow(2) + &ThetaPoly::constant(2));
        let mut expect = rs.to_vec();
        expect.sort();
        assert_eq!(rational_roots(&p).unwrap(), expect);
    }
}
