//! Local analysis: indicial polynomials, Riemann schemes and Newton slopes at ∞.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::delta::to_delta_form;
use super::operator::ThetaFormOperator;
use crate::algebra::{
    fmt_rational, rational_roots, ParamPoly, ParameterWitness, Rational, ThetaPoly,
};
use crate::error::{Error, Result};

/// A point of the projective line; finite points may depend on parameters (e.g. `t^2`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Finite(ParamPoly),
    Infinity,
}

impl Point {
    pub fn zero() -> Self {
        Point::Finite(ParamPoly::zero())
    }

    pub fn finite(p: impl Into<ParamPoly>) -> Self {
        Point::Finite(p.into())
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn substitute(&self, w: &ParameterWitness) -> Point {
        match self {
            Point::Finite(s) => Point::Finite(s.substitute(w.assignment())),
            Point::Infinity => Point::Infinity,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(s) => write!(f, "{s}"),
            Point::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `Σ_k u^k·Q_k(ϑ_u)` with `k` possibly negative.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentLocalForm {
    terms: BTreeMap<i64, ThetaPoly>,
}

impl LaurentLocalForm {
    pub fn terms(&self) -> impl Iterator<Item = (i64, &ThetaPoly)> {
        self.terms.iter().map(|(k, p)| (*k, p))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// The coefficient of the lowest power of `u`.
    pub fn leading_term(&self) -> Option<&ThetaPoly> {
        self.terms.values().next()
    }

    fn add(&mut self, k: i64, p: ThetaPoly) {
        let sum = match self.terms.remove(&k) {
            Some(q) => &q + &p,
            None => p,
        };
        if !sum.is_zero() {
            self.terms.insert(k, sum);
        }
    }
}

fn binomial(n: u32, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| {
        acc * Rational::from_integer(BigInt::from(n - i))
            / Rational::from_integer(BigInt::from(i + 1))
    })
}

/// Expansion around `x = s` in the local coordinate `u = x − s`.
pub fn local_form_at(p: &ThetaFormOperator, s: &ParamPoly) -> LaurentLocalForm {
    let d = to_delta_form(p);
    let mut out = LaurentLocalForm::default();
    for ((m, n), c) in d.terms() {
        // (u+s)^m δ^n = Σ_j C(m,j) s^{m−j} u^j δ^n, and u^j δ^n = u^{j−n} [ϑ_u]_n.
        for j in 0..=*m {
            let coeff = &s.pow(m - j).scale(&binomial(*m, j)) * c;
            if coeff.is_zero() {
                continue;
            }
            out.add(
                j as i64 - *n as i64,
                ThetaPoly::falling(*n as usize).scale(&coeff),
            );
        }
    }
    out
}

/// Indicial polynomial at a point: the lowest x-term at 0, `P_d(−ϑ)` at ∞, and the
/// lowest term of the local expansion elsewhere.
pub fn indicial_at(
    p: &ThetaFormOperator,
    point: &Point,
    witness: Option<&ParameterWitness>,
) -> Result<ThetaPoly> {
    let owned;
    let (p, point) = match witness {
        Some(w) => {
            owned = (p.map_coeffs(|_, q| q.substitute(w)), point.substitute(w));
            (&owned.0, &owned.1)
        }
        None => (p, point),
    };
    if p.is_zero() {
        return Err(Error::ZeroOperator);
    }
    match point {
        Point::Infinity => {
            let d = p.degree_x().unwrap();
            Ok(p.coeff(d)
                .substitute_affine(&-Rational::one(), &ParamPoly::zero()))
        }
        Point::Finite(s) if s.is_zero() => Ok(p.coeff(p.min_x().unwrap())),
        Point::Finite(s) => Ok(local_form_at(p, s)
            .leading_term()
            .cloned()
            .unwrap_or_default()),
    }
}

/// Does the top δ-coefficient vanish at the finite point `s`?
pub fn is_singular_at(p: &ThetaFormOperator, s: &ParamPoly) -> bool {
    let lead = to_delta_form(p).leading_coefficient();
    let value = lead
        .iter()
        .rev()
        .fold(ParamPoly::zero(), |acc, c| &(&acc * s) + c);
    value.is_zero()
}

/// Exponent multisets per singular point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RiemannScheme {
    columns: BTreeMap<Point, Vec<ParamPoly>>,
}

impl RiemannScheme {
    pub fn new(columns: impl IntoIterator<Item = (Point, Vec<ParamPoly>)>) -> Self {
        let columns = columns
            .into_iter()
            .map(|(pt, mut es)| {
                es.sort();
                (pt, es)
            })
            .collect();
        Self { columns }
    }

    pub fn columns(&self) -> impl Iterator<Item = (&Point, &[ParamPoly])> {
        self.columns.iter().map(|(p, e)| (p, e.as_slice()))
    }

    pub fn points(&self) -> Vec<Point> {
        self.columns.keys().cloned().collect()
    }

    pub fn column(&self, p: &Point) -> Option<&[ParamPoly]> {
        self.columns.get(p).map(Vec::as_slice)
    }

    /// Specializes points and exponents; exponents of each column are re-sorted.
    pub fn substitute(&self, w: &ParameterWitness) -> RiemannScheme {
        RiemannScheme::new(self.columns.iter().map(|(pt, es)| {
            (
                pt.substitute(w),
                es.iter().map(|e| e.substitute(w.assignment())).collect(),
            )
        }))
    }

    /// Specialized exponents as rationals, sorted numerically.
    pub fn evaluate(&self, w: &ParameterWitness) -> Result<BTreeMap<Point, Vec<Rational>>> {
        let mut out = BTreeMap::new();
        for (pt, es) in &self.columns {
            let mut vals = es
                .iter()
                .map(|e| e.evaluate(w))
                .collect::<Result<Vec<_>>>()?;
            vals.sort();
            out.insert(pt.substitute(w), vals);
        }
        Ok(out)
    }
}

impl fmt::Display for RiemannScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (pt, es) in &self.columns {
            let es: Vec<String> = es.iter().map(ToString::to_string).collect();
            writeln!(f, "{pt}: {}", es.join(", "))?;
        }
        Ok(())
    }
}

/// Computes the Riemann scheme at the listed points after specializing by `witness`.
pub fn riemann_scheme(
    p: &ThetaFormOperator,
    points: &[Point],
    witness: &ParameterWitness,
) -> Result<RiemannScheme> {
    let pw = p.map_coeffs(|_, q| q.substitute(witness));
    let mut columns = Vec::new();
    for point in points {
        let pt = point.substitute(witness);
        if let Point::Finite(s) = &pt {
            if !is_singular_at(&pw, s) {
                return Err(Error::NotSingular(pt.to_string()));
            }
        }
        let ind = indicial_at(&pw, &pt, None)?;
        let roots = rational_roots(&ind)?;
        let expected = ind.degree().unwrap_or(0);
        if roots.len() < expected {
            return Err(Error::IrrationalExponent {
                point: pt.to_string(),
                found: roots.len(),
                expected,
            });
        }
        columns.push((pt, roots.into_iter().map(ParamPoly::constant).collect()));
    }
    Ok(RiemannScheme::new(columns))
}

/// Checks symbolically that each column's exponents, with multiplicity, divide the
/// indicial polynomial at that point.
pub fn certify_scheme(p: &ThetaFormOperator, scheme: &RiemannScheme) -> Result<()> {
    for (pt, es) in scheme.columns() {
        let mut rest = indicial_at(p, pt, None)?;
        for e in es {
            rest = rest
                .exact_div(&ThetaPoly::root_factor(e.clone()))
                .map_err(|_| Error::UncertifiedExponent {
                    point: pt.to_string(),
                    exponent: e.to_string(),
                })?;
        }
    }
    Ok(())
}

/// A slope of the Newton polygon at ∞ together with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Slope {
    #[serde(serialize_with = "ser_rational")]
    pub slope: Rational,
    pub multiplicity: usize,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_rational(&self.slope), self.multiplicity)
    }
}

/// Slopes at ∞ from the upper convex hull of `(i, deg Pᵢ)`.
pub fn newton_slopes_at_infinity(p: &ThetaFormOperator) -> Result<Vec<Slope>> {
    if p.get(0).is_none() {
        return Err(Error::MissingConstantTerm);
    }
    let pts: Vec<(i64, i64)> = p
        .terms()
        .map(|(i, q)| (i as i64, q.degree().unwrap_or(0) as i64))
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // Drop b unless it lies strictly above the chord a → pt.
            let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
            if cross >= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut acc: BTreeMap<Rational, usize> = BTreeMap::new();
    for w in hull.windows(2) {
        let ((i1, d1), (i2, d2)) = (w[0], w[1]);
        if d2 < d1 {
            let s = Rational::new(BigInt::from(i2 - i1), BigInt::from(d1 - d2));
            *acc.entry(s).or_default() += (d1 - d2) as usize;
        }
    }
    let plateau = pts.last().unwrap().1 as usize;
    if plateau > 0 {
        *acc.entry(Rational::zero()).or_default() += plateau;
    }
    let mut out: Vec<Slope> = acc
        .into_iter()
        .map(|(slope, multiplicity)| Slope {
            slope,
            multiplicity,
        })
        .collect();
    out.sort_by(|a, b| b.slope.cmp(&a.slope));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio, sym, Symbol};

    fn p13() -> ThetaFormOperator {
        // Not the full operator; a Fuchsian stand-in with the same local form at 0.
        let p0 = ThetaPoly::from_roots([0, 0, 1, -1].map(ParamPoly::int)).scale_rat(&rat(-4096));
        ThetaFormOperator::new([
            (0, p0.clone()),
            (1, p0.shift(&sym::c(1))),
            (2, p0.shift(&sym::c(2))),
        ])
    }

    #[test]
    fn indicial_at_zero_and_infinity() {
        let p = p13();
        let i0 = indicial_at(&p, &Point::zero(), None).unwrap();
        assert_eq!(
            rational_roots(&i0).unwrap(),
            vec![rat(-1), rat(0), rat(0), rat(1)]
        );
        let inf = indicial_at(&p, &Point::Infinity, None).unwrap();
        assert_eq!(inf.degree(), Some(4));
    }

    #[test]
    fn translated_point() {
        // −ϑ + x(ϑ − a) = x·((x − 1)δ − a); at x = 1 the indicial polynomial is ϑ_u − a.
        let p = ThetaFormOperator::new([
            (0, ThetaPoly::linear(-1, ParamPoly::zero())),
            (1, ThetaPoly::linear(1, -sym::a())),
        ]);
        let ind = indicial_at(&p, &Point::finite(1), None).unwrap();
        let w = ParameterWitness::bare("w", [(Symbol::A, ratio(1, 3))]);
        assert!(is_singular_at(&p, &sym::c(1)));
        assert!(!is_singular_at(&p, &sym::c(2)));
        let specialized = ind.evaluate(&w).unwrap();
        assert_eq!(rational_roots(&specialized).unwrap(), vec![ratio(1, 3)]);
    }

    #[test]
    fn slopes() {
        let l = ThetaFormOperator::new([
            (0, ThetaPoly::theta().pow(7)),
            (1, ThetaPoly::theta().pow(5)),
            (2, ThetaPoly::theta().pow(3)),
            (3, ThetaPoly::theta()),
        ]);
        assert_eq!(
            newton_slopes_at_infinity(&l).unwrap(),
            vec![
                Slope {
                    slope: ratio(1, 2),
                    multiplicity: 6
                },
                Slope {
                    slope: rat(0),
                    multiplicity: 1
                }
            ]
        );
        assert_eq!(
            newton_slopes_at_infinity(&p13()).unwrap(),
            vec![Slope {
                slope: rat(0),
                multiplicity: 4
            }]
        );
    }
}
