use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::ParameterWitness;
use crate::error::{Error, Result};
use crate::monodromy::{ExponentClass, INFINITY_LABEL};

/// `ν^p_{a,ℓ}`: primitive nearby-cycle Hodge numbers at one point, keyed by
/// `(class a, nilpotency level ℓ, Hodge index p)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NearbyData {
    entries: BTreeMap<(ExponentClass, usize, i64), u64>,
}

/// Value at index `p` of a vector indexed from 0, zero outside.
pub fn at(v: &[i64], p: i64) -> i64 {
    usize::try_from(p)
        .ok()
        .and_then(|i| v.get(i))
        .copied()
        .unwrap_or(0)
}

pub(crate) fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl NearbyData {
    pub fn new(entries: impl IntoIterator<Item = (ExponentClass, usize, i64, u64)>) -> Self {
        let mut out = Self::default();
        for (c, l, p, n) in entries {
            out.add(c, l, p, n);
        }
        out
    }

    pub fn add(&mut self, class: ExponentClass, level: usize, p: i64, count: u64) {
        if count == 0 {
            return;
        }
        *self.entries.entry((class, level, p)).or_insert(0) += count;
    }

    pub fn entries(&self) -> impl Iterator<Item = (&ExponentClass, usize, i64, u64)> {
        self.entries.iter().map(|((c, l, p), n)| (c, *l, *p, *n))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, class: &ExponentClass, level: usize, p: i64) -> u64 {
        self.entries
            .get(&(class.clone(), level, p))
            .copied()
            .unwrap_or(0)
    }

    /// `Σ (ℓ+1)·ν`, the rank seen from this point.
    pub fn rank(&self) -> u64 {
        self.entries().map(|(_, l, _, n)| (l as u64 + 1) * n).sum()
    }

    pub fn classes(&self) -> Vec<ExponentClass> {
        let mut out: Vec<ExponentClass> = self.entries.keys().map(|(c, _, _)| c.clone()).collect();
        out.dedup();
        out
    }

    /// Full nearby dimension `ν^p_a = Σ_ℓ Σ_{k=0..ℓ} ν^{p+k}_{a,ℓ}` for one class, as a
    /// vector from `p = 0`.
    pub fn full_class(&self, class: &ExponentClass) -> Vec<i64> {
        let mut out: BTreeMap<i64, i64> = BTreeMap::new();
        for (c, l, p, n) in self.entries() {
            if c == class {
                for q in p - l as i64..=p {
                    *out.entry(q).or_insert(0) += n as i64;
                }
            }
        }
        dense(&out)
    }

    /// `ν^p = Σ_a ν^p_a`.
    pub fn full(&self) -> Vec<i64> {
        let mut out: BTreeMap<i64, i64> = BTreeMap::new();
        for (_, l, p, n) in self.entries() {
            for q in p - l as i64..=p {
                *out.entry(q).or_insert(0) += n as i64;
            }
        }
        dense(&out)
    }

    /// `Σ_ℓ ν^p_{0,ℓ}`, primitive counts of the trivial class.
    pub fn trivial_primitive(&self) -> Vec<i64> {
        let zero = ExponentClass::zero();
        let mut out: BTreeMap<i64, i64> = BTreeMap::new();
        for (c, _, p, n) in self.entries() {
            if *c == zero {
                *out.entry(p).or_insert(0) += n as i64;
            }
        }
        dense(&out)
    }

    pub fn map_classes(&self, f: impl Fn(&ExponentClass) -> ExponentClass) -> Self {
        Self::new(self.entries().map(|(c, l, p, n)| (f(c), l, p, n)))
    }

    /// Evaluates every class at the witness; classes that coincide there merge.
    pub fn specialize(&self, w: &ParameterWitness) -> Result<Self> {
        let mut out = Self::default();
        for (c, l, p, n) in self.entries() {
            out.add(c.specialize(w)?, l, p, n);
        }
        Ok(out)
    }
}

fn dense(m: &BTreeMap<i64, i64>) -> Vec<i64> {
    let len = m.keys().next_back().map_or(0, |&p| p as usize + 1);
    trim(
        (0..len as i64)
            .map(|p| m.get(&p).copied().unwrap_or(0))
            .collect(),
    )
}

/// Local Hodge data of a variation at its singular points, with optional global
/// degrees `δ^p` of the parabolic Hodge bundles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeProfile {
    pub rank: usize,
    pub delta: Option<Vec<i64>>,
    pub points: BTreeMap<String, NearbyData>,
}

impl HodgeProfile {
    /// Every point must account for the full rank.
    pub fn new(
        rank: usize,
        delta: Option<Vec<i64>>,
        points: impl IntoIterator<Item = (String, NearbyData)>,
    ) -> Result<Self> {
        let out = Self {
            rank,
            delta,
            points: points.into_iter().collect(),
        };
        for (label, nu) in &out.points {
            if let Some((_, l, p, _)) = nu.entries().find(|(_, l, p, _)| p - (*l as i64) < 0) {
                return Err(Error::InconsistentProfile(format!(
                    "at {label}: level {l} at p = {p} reaches a negative Hodge index"
                )));
            }
            if nu.rank() != rank as u64 {
                return Err(Error::InconsistentProfile(format!(
                    "nearby data at {label} has total dimension {}, expected {rank}",
                    nu.rank()
                )));
            }
        }
        Ok(out)
    }

    pub fn infinity(&self) -> Option<&NearbyData> {
        self.points.get(INFINITY_LABEL)
    }

    pub fn finite(&self) -> impl Iterator<Item = (&String, &NearbyData)> {
        self.points
            .iter()
            .filter(|(k, _)| k.as_str() != INFINITY_LABEL)
    }

    pub fn specialize(&self, w: &ParameterWitness) -> Result<Self> {
        let points = self
            .points
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.specialize(w)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.rank, self.delta.clone(), points)
    }
}

impl fmt::Display for HodgeProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        if let Some(d) = &self.delta {
            writeln!(f, "delta {d:?}")?;
        }
        for (label, nu) in &self.points {
            let parts: Vec<String> = nu
                .entries()
                .map(|(c, l, p, n)| format!("nu^{p}[{c}, l={l}] = {n}"))
                .collect();
            writeln!(f, "  {label}: {}", parts.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct NuJson<'a> {
    class: &'a ExponentClass,
    level: usize,
    p: i64,
    count: u64,
}

#[derive(Serialize)]
struct PointJson<'a> {
    label: &'a str,
    nu: Vec<NuJson<'a>>,
}

#[derive(Serialize)]
struct ProfileJson<'a> {
    rank: usize,
    delta: &'a Option<Vec<i64>>,
    points: Vec<PointJson<'a>>,
}

impl Serialize for HodgeProfile {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ProfileJson {
            rank: self.rank,
            delta: &self.delta,
            points: self
                .points
                .iter()
                .map(|(label, nu)| PointJson {
                    label,
                    nu: nu
                        .entries()
                        .map(|(class, level, p, count)| NuJson {
                            class,
                            level,
                            p,
                            count,
                        })
                        .collect(),
                })
                .collect(),
        }
        .serialize(s)
    }
}
