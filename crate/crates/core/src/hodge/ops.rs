use std::collections::BTreeMap;

use num_traits::ToPrimitive;
use serde::Serialize;

use super::profile::{at, trim, HodgeProfile, NearbyData};
use crate::algebra::{ParameterWitness, Rational};
use crate::error::{Error, Result};
use crate::monodromy::{ExponentClass, INFINITY_LABEL};

/// Hodge numbers and the aggregates `ω^p_x = h^p − Σ_ℓ ν^p_{x,0,ℓ}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeCounts {
    pub h: Vec<i64>,
    pub omega: Vec<i64>,
    /// `ω` summed over finite points only.
    pub omega_finite: Vec<i64>,
    pub omega_at: BTreeMap<String, Vec<i64>>,
}

fn zip(a: &[i64], b: &[i64], f: impl Fn(i64, i64) -> i64) -> Vec<i64> {
    let n = a.len().max(b.len()) as i64;
    trim((0..n).map(|p| f(at(a, p), at(b, p))).collect())
}

/// Reads `h` off the full nearby dimensions, which must agree at every point.
pub fn derive_counts(profile: &HodgeProfile) -> Result<HodgeCounts> {
    let mut h: Option<Vec<i64>> = None;
    for (label, nu) in &profile.points {
        let full = nu.full();
        match &h {
            None => h = Some(full),
            Some(h0) if *h0 != full => {
                return Err(Error::InconsistentProfile(format!(
                    "Hodge numbers {full:?} at {label} differ from {h0:?}"
                )))
            }
            _ => {}
        }
    }
    let h = h.ok_or_else(|| Error::InconsistentProfile("profile has no points".into()))?;
    let mut omega = Vec::new();
    let mut omega_finite = Vec::new();
    let mut omega_at = BTreeMap::new();
    for (label, nu) in &profile.points {
        let w = zip(&h, &nu.trivial_primitive(), |x, y| x - y);
        omega = zip(&omega, &w, |x, y| x + y);
        if label != INFINITY_LABEL {
            omega_finite = zip(&omega_finite, &w, |x, y| x + y);
        }
        omega_at.insert(label.clone(), w);
    }
    Ok(HodgeCounts {
        h,
        omega,
        omega_finite,
        omega_at,
    })
}

/// Solves `δ⁰ = −h⁰`, `δⁱ = δ^{i−1} − h^{i−1} − hⁱ + ω^{i−1}` and checks that the
/// recursion closes (`δ^L = 0` one step past the top).
pub fn parabolic_rigidity_solve(h: &[i64], omega: &[i64]) -> Result<Vec<i64>> {
    let len = h.len() as i64;
    let mut delta = Vec::with_capacity(h.len());
    let mut prev = 0;
    for i in 0..=len {
        let d = prev - at(h, i - 1) - at(h, i) + at(omega, i - 1);
        if i == len {
            if d != 0 {
                return Err(Error::InconsistentProfile(format!(
                    "parabolic degrees do not close: delta^{len} would be {d}"
                )));
            }
        } else {
            delta.push(d);
        }
        prev = d;
    }
    Ok(delta)
}

/// `h'^p = δ^{p−1} − δ^p − h^{p−1} − h^p + ω^{p−1}`.
pub fn parabolic_cohomology_hodge(h: &[i64], delta: &[i64], omega: &[i64]) -> Result<Vec<i64>> {
    let len = h.len().max(delta.len()).max(omega.len()) as i64;
    let mut out = Vec::new();
    for p in 0..=len {
        let v = at(delta, p - 1) - at(delta, p) - at(h, p - 1) - at(h, p) + at(omega, p - 1);
        if v < 0 {
            return Err(Error::NegativeCount { p, count: v });
        }
        out.push(v);
    }
    Ok(trim(out))
}

fn floor_times(class: &ExponentClass, k: usize, w: Option<&ParameterWitness>) -> Result<i64> {
    let v: Rational = if class.is_constant() {
        class.constant_part().clone()
    } else {
        let w =
            w.ok_or_else(|| Error::WitnessRequired(format!("the class {class} is symbolic")))?;
        class.evaluate(w)?
    };
    let scaled = v * Rational::from_integer((k as i64).into());
    Ok(scaled.floor().to_integer().to_i64().expect("small floor"))
}

/// Pullback along `x ↦ xᵏ`: classes at 0 and ∞ are multiplied by `k`, other points
/// are copied to their preimages, and
/// `δ' = k·δ + Σ_{x∈{0,∞}} Σ_a ⌊k·a⌋·ν_{x,a}` with `a ∈ [0,1)` and full dimensions.
pub fn pullback_profile(
    profile: &HodgeProfile,
    k: usize,
    preimages: &BTreeMap<String, Vec<String>>,
    w: Option<&ParameterWitness>,
) -> Result<HodgeProfile> {
    if k == 0 {
        return Err(Error::Input("pullback degree must be at least 1".into()));
    }
    let delta = profile.delta.as_ref().ok_or(Error::MissingDelta)?;
    let mut new_delta: Vec<i64> = delta.iter().map(|d| d * k as i64).collect();
    let mut points = Vec::new();
    for (label, nu) in &profile.points {
        if label == "0" || label == INFINITY_LABEL {
            for class in nu.classes() {
                let f = floor_times(&class, k, w)?;
                new_delta = zip(&new_delta, &nu.full_class(&class), |d, n| d + f * n);
            }
            points.push((label.clone(), nu.map_classes(|c| c.times(k as i64))));
        } else {
            let pre = preimages
                .get(label)
                .filter(|v| v.len() == k)
                .ok_or_else(|| Error::MissingPreimageLabels(label.clone()))?;
            points.extend(pre.iter().map(|p| (p.clone(), nu.clone())));
        }
    }
    let len = delta.len().max(new_delta.len());
    new_delta.resize(len, 0);
    HodgeProfile::new(profile.rank, Some(new_delta), points)
}

/// Local Hodge data at ∞ of the middle convolution with the class `μ`, where the
/// input has global degrees and the eigenvalue at ∞ of the convolution kernel is
/// `1 − μ`.
///
/// At ∞: `(a, ℓ, p) ↦ (a+1−μ, ℓ, p)` for `a ≠ 0`, `(0, ℓ, p) ↦ (1−μ, ℓ+1, p+1)`, and
/// `(1−μ, 0, p)` gains `δ^{p−1} − δ^p − h^{p−1} − h^p + ω^{p−1}`. Hodge numbers are
/// `δ^{p−1} − δ^p + ω^{p−1}_{≠∞}`; both descriptions must agree.
pub fn mc_profile(profile: &HodgeProfile, mu: &ExponentClass) -> Result<HodgeProfile> {
    let delta = profile.delta.as_ref().ok_or(Error::MissingDelta)?;
    let counts = derive_counts(profile)?;
    let inf = profile
        .infinity()
        .ok_or_else(|| Error::InconsistentProfile("profile has no data at infinity".into()))?;
    let kernel = mu.neg();
    let mut out = NearbyData::default();
    for (c, l, p, n) in inf.entries() {
        if c.is_trivial() {
            out.add(kernel.clone(), l + 1, p + 1, n);
        } else {
            out.add(c.add(&kernel), l, p, n);
        }
    }
    let (h, omega) = (&counts.h, &counts.omega);
    let len = h.len().max(delta.len()).max(omega.len()) as i64;
    let mut h_new = Vec::new();
    for p in 0..=len {
        let extra = at(delta, p - 1) - at(delta, p) - at(h, p - 1) - at(h, p) + at(omega, p - 1);
        if extra < 0 {
            return Err(Error::NegativeCount { p, count: extra });
        }
        out.add(kernel.clone(), 0, p, extra as u64);
        let hp = at(delta, p - 1) - at(delta, p) + at(&counts.omega_finite, p - 1);
        if hp < 0 {
            return Err(Error::NegativeCount { p, count: hp });
        }
        h_new.push(hp);
    }
    let h_new = trim(h_new);
    if out.full() != h_new {
        return Err(Error::InconsistentProfile(format!(
            "Hodge numbers {h_new:?} disagree with the data at infinity {:?}",
            out.full()
        )));
    }
    let rank = out.rank() as usize;
    HodgeProfile::new(rank, None, [(INFINITY_LABEL.to_string(), out)])
}
