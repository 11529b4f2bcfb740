use serde::Serialize;

use super::ops::derive_counts;
use super::profile::{at, HodgeProfile};
use crate::algebra::ParameterWitness;
use crate::error::Result;
use crate::monodromy::ExponentClass;

/// One `ν^p_{x,a,ℓ}` column of a printed table, indexed by `p` from 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuColumn {
    pub point: String,
    pub class: ExponentClass,
    pub level: usize,
    pub values: Vec<i64>,
}

/// A printed Hodge table: `p` rows with `h, δ, ω, ω_{≠∞}` and some `ν` columns.
/// Columns given for a point are taken to exhaust the data at that point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeTable {
    pub h: Vec<i64>,
    pub delta: Option<Vec<i64>>,
    pub omega: Option<Vec<i64>>,
    pub omega_finite: Option<Vec<i64>>,
    pub columns: Vec<NuColumn>,
}

fn same(a: &[i64], b: &[i64]) -> bool {
    let n = a.len().max(b.len()) as i64;
    (0..n).all(|p| at(a, p) == at(b, p))
}

impl HodgeTable {
    /// Differences between the table and a profile, after specializing both at `w`.
    /// Empty when they agree.
    pub fn mismatches(
        &self,
        profile: &HodgeProfile,
        w: Option<&ParameterWitness>,
    ) -> Result<Vec<String>> {
        let profile = match w {
            Some(w) => profile.specialize(w)?,
            None => profile.clone(),
        };
        let counts = derive_counts(&profile)?;
        let mut out = Vec::new();
        let mut cmp = |name: &str, want: Option<&Vec<i64>>, got: Option<&Vec<i64>>| {
            if let Some(want) = want {
                match got {
                    Some(got) if same(want, got) => {}
                    got => out.push(format!("{name}: table {want:?}, computed {got:?}")),
                }
            }
        };
        cmp("h", Some(&self.h), Some(&counts.h));
        cmp("delta", self.delta.as_ref(), profile.delta.as_ref());
        cmp("omega", self.omega.as_ref(), Some(&counts.omega));
        cmp(
            "omega_finite",
            self.omega_finite.as_ref(),
            Some(&counts.omega_finite),
        );

        let mut listed: Vec<(String, ExponentClass, usize)> = Vec::new();
        for col in &self.columns {
            let class = match w {
                Some(w) => col.class.specialize(w)?,
                None => col.class.clone(),
            };
            let Some(nu) = profile.points.get(&col.point) else {
                out.push(format!("no data at {}", col.point));
                continue;
            };
            let len = col.values.len().max(4) as i64;
            let got: Vec<i64> = (0..len)
                .map(|p| nu.count(&class, col.level, p) as i64)
                .collect();
            if !same(&col.values, &got) {
                out.push(format!(
                    "nu[{}, {}, l={}]: table {:?}, computed {:?}",
                    col.point, col.class, col.level, col.values, got
                ));
            }
            listed.push((col.point.clone(), class, col.level));
        }
        for (label, nu) in &profile.points {
            if !listed.iter().any(|(p, _, _)| p == label) {
                continue;
            }
            for (c, l, p, n) in nu.entries() {
                if !listed
                    .iter()
                    .any(|(q, cl, ll)| q == label && cl == c && *ll == l)
                {
                    out.push(format!("unlisted entry nu^{p}[{label}, {c}, l={l}] = {n}"));
                }
            }
        }
        Ok(out)
    }
}
