//! Seeded random generators and the invariant suites shared by `properties` and
//! `acceptance`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rigid_calc::algebra::{rational_roots, ParamPoly, Rational, Symbol, ThetaPoly};
use rigid_calc::expr::parse_operator;
use rigid_calc::hodge::{derive_counts, HodgeProfile, NearbyData};
use rigid_calc::monodromy::ExponentClass;
use rigid_calc::weyl::{
    ft_raw, ft_theta, indicial_at, kummer_pullback, left_factor_divide, newton_slopes_at_infinity,
    to_delta_form, to_theta_form, twist_shift, DeltaFormOperator, Point, ThetaFormOperator,
};

pub const CASES: usize = 500;
pub const RING_CASES: usize = 1000;

pub struct Gen(ChaCha8Rng);

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.0.gen_range(lo..=hi)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.0.gen_bool(p)
    }

    pub fn rational(&mut self) -> Rational {
        Rational::new(self.int(-6, 6).into(), self.int(1, 4).into())
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let r = self.rational();
            if r != Rational::from_integer(0.into()) {
                return r;
            }
        }
    }

    /// Mostly constants; sometimes affine in `a`, `b` or `mu`.
    pub fn param(&mut self) -> ParamPoly {
        let mut p = ParamPoly::constant(self.rational());
        for s in [Symbol::A, Symbol::B, Symbol::Mu] {
            if self.chance(0.15) {
                p = &p + &ParamPoly::symbol(s).scale(&self.nonzero_rational());
            }
        }
        p
    }

    pub fn theta_poly(&mut self, max_deg: usize) -> ThetaPoly {
        let deg = self.int(0, max_deg as i64) as usize;
        let mut c: Vec<ParamPoly> = (0..deg).map(|_| self.param()).collect();
        c.push(ParamPoly::constant(self.nonzero_rational()));
        ThetaPoly::new(c)
    }

    /// Nonzero operator with x-degrees in `0..=3`; `with_p0` forces a nonzero `P₀`.
    pub fn operator(&mut self, with_p0: bool) -> ThetaFormOperator {
        let mut terms = Vec::new();
        for i in 0..=3usize {
            if (i == 0 && with_p0) || self.chance(0.5) {
                terms.push((i, self.theta_poly(3)));
            }
        }
        if terms.is_empty() {
            terms.push((self.int(0, 3) as usize, self.theta_poly(3)));
        }
        ThetaFormOperator::new(terms)
    }

    pub fn delta_operator(&mut self) -> DeltaFormOperator {
        let n = self.int(1, 4);
        DeltaFormOperator::new((0..n).map(|_| {
            (
                (self.int(0, 3) as u32, self.int(0, 3) as u32),
                ParamPoly::constant(self.nonzero_rational()),
            )
        }))
    }

    pub fn shuffle<T>(&mut self, v: &mut [T]) {
        v.shuffle(&mut self.0);
    }
}

pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn run(
    name: &'static str,
    seed: u64,
    cases: usize,
    mut case: impl FnMut(&mut Gen) -> Result<(), String>,
) -> SuiteReport {
    let mut g = Gen::new(seed);
    let mut failures = Vec::new();
    for i in 0..cases {
        if let Err(e) = case(&mut g) {
            failures.push(format!("case {i}: {e}"));
        }
    }
    SuiteReport {
        name,
        cases,
        failures,
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sign_inversion(p: &ThetaFormOperator) -> ThetaFormOperator {
    p.map_coeffs(|i, q| if i % 2 == 1 { -q } else { q.clone() })
}

/// `FT∘FT = [−1]^*`, in δ-form directly and in normalized θ-form.
pub fn ft_involution() -> SuiteReport {
    run("FT involution up to sign inversion", 0xF7, CASES, |g| {
        let d = g.delta_operator();
        expect(ft_raw(&ft_raw(&d)) == d.sign_inversion(), || {
            format!("δ-form: {d}")
        })?;
        let p = g.operator(true);
        let deg = p.degree_x().unwrap();
        let twice = ft_theta(&ft_theta(&p));
        let back = left_factor_divide(&twice, &ThetaPoly::falling(deg))
            .map_err(|e| format!("{p}: {e}"))?;
        expect(back == sign_inversion(&p), || format!("θ-form: {p}"))
    })
}

pub fn mul_associative() -> SuiteReport {
    run("op_mul associativity", 0xA5, CASES, |g| {
        let (a, b, c) = (g.operator(false), g.operator(false), g.operator(false));
        expect(a.op_mul(&b).op_mul(&c) == a.op_mul(&b.op_mul(&c)), || {
            format!("{a} | {b} | {c}")
        })
    })
}

pub fn theta_delta_roundtrip() -> SuiteReport {
    run("θ/δ round trip", 0x7D, CASES, |g| {
        let p = g.operator(false);
        expect(to_theta_form(&to_delta_form(&p)) == (0, p.clone()), || {
            format!("θ → δ → θ: {p}")
        })?;
        let d = g.delta_operator();
        let (k, t) = to_theta_form(&d);
        expect(
            to_delta_form(&t) == DeltaFormOperator::x().pow(k as u32).mul(&d),
            || format!("δ → θ → δ: {d}"),
        )
    })
}

pub fn pullback_multiplicative() -> SuiteReport {
    run("pullback multiplicativity", 0x9B, CASES, |g| {
        let (a, b) = (g.operator(false), g.operator(false));
        let k = g.int(1, 4) as usize;
        let m = g.int(1, 3) as usize;
        let pk = |p: &ThetaFormOperator| kummer_pullback(p, k).unwrap();
        expect(pk(&a.op_mul(&b)) == pk(&a).op_mul(&pk(&b)), || {
            format!("[{k}]^*(AB): {a} | {b}")
        })?;
        expect(pk(&(&a + &b)) == &pk(&a) + &pk(&b), || {
            format!("[{k}]^*(A+B): {a} | {b}")
        })?;
        let composed = kummer_pullback(&kummer_pullback(&a, m).unwrap(), k).unwrap();
        expect(composed == kummer_pullback(&a, k * m).unwrap(), || {
            format!("[{k}]^*[{m}]^*: {a}")
        })
    })
}

pub fn twist_action() -> SuiteReport {
    run("twist group action", 0x1F, CASES, |g| {
        let (a, b) = (g.operator(false), g.operator(false));
        let (s, t) = (g.param(), g.param());
        expect(twist_shift(&a, &ParamPoly::zero()) == a, || {
            format!("identity: {a}")
        })?;
        expect(
            twist_shift(&twist_shift(&a, &s), &t) == twist_shift(&a, &(&s + &t)),
            || format!("composition s = {s}, t = {t}: {a}"),
        )?;
        expect(
            twist_shift(&a.op_mul(&b), &s) == twist_shift(&a, &s).op_mul(&twist_shift(&b, &s)),
            || format!("multiplicative s = {s}: {a} | {b}"),
        )
    })
}

/// Exponents at 0 and ∞ are multiplied by `k` under `[k]^*`.
pub fn exponent_scaling() -> SuiteReport {
    run("exponent scaling under pullback", 0x5C, CASES, |g| {
        let n = g.int(1, 4) as usize;
        let roots0: Vec<Rational> = (0..n).map(|_| g.rational()).collect();
        let roots_inf: Vec<Rational> = (0..n).map(|_| g.rational()).collect();
        let d = g.int(1, 3) as usize;
        let lead = ParamPoly::constant(g.nonzero_rational());
        let mut terms = vec![
            (
                0,
                ThetaPoly::from_roots(roots0.iter().cloned().map(ParamPoly::constant)),
            ),
            (
                d,
                ThetaPoly::from_roots(roots_inf.iter().map(|r| ParamPoly::constant(-r)))
                    .scale(&lead),
            ),
        ];
        if d > 1 && g.chance(0.5) {
            terms.push((1, g.theta_poly(n)));
        }
        let p = ThetaFormOperator::new(terms);
        let k = g.int(1, 4) as usize;
        let pb = kummer_pullback(&p, k).unwrap();
        let scaled = |v: &[Rational]| {
            let mut out: Vec<Rational> = v
                .iter()
                .map(|r| r * Rational::from_integer((k as i64).into()))
                .collect();
            out.sort();
            out
        };
        for (pt, roots) in [(Point::zero(), &roots0), (Point::Infinity, &roots_inf)] {
            let before = rational_roots(&indicial_at(&p, &pt, None).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let after = rational_roots(&indicial_at(&pb, &pt, None).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            let mut want = roots.clone();
            want.sort();
            expect(before == want, || {
                format!("roots at {pt} of {p}: {before:?}")
            })?;
            expect(after == scaled(&before), || {
                format!("[{k}]^* at {pt} of {p}: {after:?}")
            })?;
        }
        Ok(())
    })
}

pub fn slope_multiplicity() -> SuiteReport {
    run(
        "Newton slope multiplicities sum to the order",
        0x3E,
        CASES,
        |g| {
            let p = g.operator(true);
            let slopes = newton_slopes_at_infinity(&p).map_err(|e| e.to_string())?;
            let total: usize = slopes.iter().map(|s| s.multiplicity).sum();
            expect(total == p.order(), || {
                format!("{p}: total {total}, order {}", p.order())
            })
        },
    )
}

/// Random nearby data realizing `h`, built from level-0 and level-1 pieces.
fn nearby(g: &mut Gen, h: &[i64], classes: &[ExponentClass]) -> NearbyData {
    let mut left = h.to_vec();
    let mut nu = NearbyData::default();
    for p in (0..left.len()).rev() {
        while left[p] > 0 {
            let c = classes[g.int(0, classes.len() as i64 - 1) as usize].clone();
            if p > 0 && left[p - 1] > 0 && g.chance(0.4) {
                nu.add(c, 1, p as i64, 1);
                left[p - 1] -= 1;
            } else {
                nu.add(c, 0, p as i64, 1);
            }
            left[p] -= 1;
        }
    }
    nu
}

/// `h` and `ω` do not depend on which point `h` is read from or on the point labels,
/// and a point disagreeing on `h` is rejected.
pub fn profile_point_independence() -> SuiteReport {
    let classes = [
        ExponentClass::zero(),
        ExponentClass::half(),
        ExponentClass::symbol(Symbol::A),
        ExponentClass::symbol(Symbol::B).neg(),
    ];
    run("profile point independence", 0x6D, CASES, |g| {
        let len = g.int(1, 3) as usize;
        let mut h: Vec<i64> = (0..len).map(|_| g.int(0, 3)).collect();
        h[len - 1] = h[len - 1].max(1);
        let rank: i64 = h.iter().sum();
        let npts = g.int(1, 4) as usize;
        let mut labels: Vec<String> = (0..npts).map(|i| format!("x{i}")).collect();
        labels.push("inf".into());
        let data: Vec<NearbyData> = labels.iter().map(|_| nearby(g, &h, &classes)).collect();
        let prof = HodgeProfile::new(
            rank as usize,
            None,
            labels.iter().cloned().zip(data.iter().cloned()),
        )
        .map_err(|e| e.to_string())?;
        let counts = derive_counts(&prof).map_err(|e| e.to_string())?;
        expect(counts.h == h, || format!("h {:?} vs {h:?}", counts.h))?;

        let mut finite: Vec<usize> = (0..npts).collect();
        g.shuffle(&mut finite);
        let relabel: BTreeMap<String, String> = finite
            .iter()
            .enumerate()
            .map(|(i, j)| (format!("x{i}"), format!("y{j}")))
            .collect();
        let moved = HodgeProfile::new(
            rank as usize,
            None,
            labels.iter().zip(&data).map(|(l, d)| {
                (
                    relabel.get(l).cloned().unwrap_or_else(|| l.clone()),
                    d.clone(),
                )
            }),
        )
        .map_err(|e| e.to_string())?;
        let c2 = derive_counts(&moved).map_err(|e| e.to_string())?;
        expect(
            c2.h == counts.h && c2.omega == counts.omega && c2.omega_finite == counts.omega_finite,
            || "relabeling changed the counts".into(),
        )?;
        for (old, new) in &relabel {
            expect(c2.omega_at.get(new) == counts.omega_at.get(old), || {
                format!("ω at {old} → {new}")
            })?;
        }

        // Move one Hodge index at one point: the profile is no longer consistent.
        if h.iter().any(|&x| x > 0) {
            let mut shifted = h.clone();
            let p = shifted.iter().position(|&x| x > 0).unwrap();
            shifted[p] -= 1;
            if p + 1 == shifted.len() {
                shifted.push(0);
            }
            shifted[p + 1] += 1;
            let bad = nearby(g, &shifted, &classes);
            let broken = HodgeProfile::new(
                rank as usize,
                None,
                labels
                    .iter()
                    .cloned()
                    .zip(data.iter().cloned())
                    .chain([("z".to_string(), bad)]),
            )
            .map_err(|e| e.to_string())?;
            expect(derive_counts(&broken).is_err(), || {
                format!("inconsistent h accepted: {h:?} vs {shifted:?}")
            })?;
        }
        Ok(())
    })
}

/// `rigid-calc op parse` prints a canonical form that parses back to the same operator.
pub fn cli_roundtrip() -> SuiteReport {
    run("CLI parse/print round trip", 0xC1, CASES, |g| {
        let p = g.operator(false);
        let printed = p.to_string();
        expect(parse_operator(&printed).ok().as_ref() == Some(&p), || {
            format!("library: {printed}")
        })?;
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = rigid_calc::cli::run(
            ["rigid-calc", "op", "parse", "--expr", &printed],
            &mut out,
            &mut err,
        );
        let shown = String::from_utf8(out).unwrap();
        expect(code == 0, || {
            format!("exit {code}: {}", String::from_utf8_lossy(&err))
        })?;
        expect(shown.trim() == printed, || {
            format!("cli printed `{}` for `{printed}`", shown.trim())
        })
    })
}

/// Ring axioms of the Weyl algebra in θ-form.
pub fn ring_axioms() -> SuiteReport {
    run("Weyl algebra ring axioms", 0x22, RING_CASES, |g| {
        let (a, b, c) = (g.operator(false), g.operator(false), g.operator(false));
        let one = ThetaFormOperator::one();
        let zero = ThetaFormOperator::zero();
        expect(&a + &b == &b + &a, || "addition commutes".into())?;
        expect(&(&a + &b) + &c == &a + &(&b + &c), || {
            "addition associates".into()
        })?;
        expect(&a + &(-&a) == zero, || "additive inverse".into())?;
        expect(a.op_mul(&one) == a && one.op_mul(&a) == a, || "unit".into())?;
        expect(
            a.op_mul(&(&b + &c)) == &a.op_mul(&b) + &a.op_mul(&c),
            || "left distributive".into(),
        )?;
        expect(
            (&a + &b).op_mul(&c) == &a.op_mul(&c) + &b.op_mul(&c),
            || "right distributive".into(),
        )?;
        expect(a.op_mul(&b).op_mul(&c) == a.op_mul(&b.op_mul(&c)), || {
            format!("associative: {a} | {b} | {c}")
        })?;
        // [δ, x] = 1 in δ-form
        let (x, d) = (DeltaFormOperator::x(), DeltaFormOperator::d());
        expect(
            d.mul(&x).add(&x.mul(&d).neg()) == DeltaFormOperator::one(),
            || "[δ, x] = 1".into(),
        )
    })
}

pub fn all_suites() -> Vec<SuiteReport> {
    vec![
        ft_involution(),
        mul_associative(),
        theta_delta_roundtrip(),
        pullback_multiplicative(),
        twist_action(),
        exponent_scaling(),
        slope_multiplicity(),
        profile_point_independence(),
        cli_roundtrip(),
        ring_axioms(),
    ]
}
