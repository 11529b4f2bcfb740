use std::collections::BTreeSet;

use super::profile::NearbyData;
use crate::error::{Error, Result};
use crate::monodromy::LocalType;

type NuKey = (String, usize, i64, u64);

/// A constraint for [`selfdual_completion_solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SelfDualConstraint {
    /// `ν^p_{a,ℓ} = count` at the constrained point.
    Nu {
        class: crate::monodromy::ExponentClass,
        level: usize,
        p: i64,
        count: u64,
    },
    /// `h^p = count`.
    Total { p: i64, count: i64 },
}

/// The unique symmetric Hodge vector of the given rank and length, together with a
/// placement of the Jordan blocks of `local` (a block of size `s` is primitive at some
/// `p ≥ s−1`) whose full nearby dimensions equal it.
pub fn selfdual_completion_solve(
    rank: usize,
    length: usize,
    local: Option<&LocalType>,
    constraints: &[SelfDualConstraint],
) -> Result<(Vec<i64>, Option<NearbyData>)> {
    if length == 0 {
        return Err(Error::Input("length must be positive".into()));
    }
    if let Some(l) = local {
        if l.dim() != rank {
            return Err(Error::RankMismatch(format!(
                "local type has dimension {}, expected {rank}",
                l.dim()
            )));
        }
    } else if constraints
        .iter()
        .any(|c| matches!(c, SelfDualConstraint::Nu { .. }))
    {
        return Err(Error::Input(
            "nearby-cycle constraints need a local type".into(),
        ));
    }
    let totals_ok = |h: &[i64]| {
        constraints.iter().all(|c| match c {
            SelfDualConstraint::Total { p, count } => super::profile::at(h, *p) == *count,
            SelfDualConstraint::Nu { .. } => true,
        })
    };
    let mut found: BTreeSet<(Vec<i64>, Vec<NuKey>)> = BTreeSet::new();
    let mut sols: Vec<(Vec<i64>, Option<NearbyData>)> = Vec::new();
    for h in symmetric_vectors(rank as i64, length) {
        if !totals_ok(&h) {
            continue;
        }
        match local {
            None => sols.push((h, None)),
            Some(l) => {
                for nu in placements(l, length) {
                    if nu.full() != h {
                        continue;
                    }
                    let nu_ok = constraints.iter().all(|c| match c {
                        SelfDualConstraint::Nu {
                            class,
                            level,
                            p,
                            count,
                        } => nu.count(class, *level, *p) == *count,
                        SelfDualConstraint::Total { .. } => true,
                    });
                    let key: Vec<_> = nu
                        .entries()
                        .map(|(c, l, p, n)| (c.to_string(), l, p, n))
                        .collect();
                    if nu_ok && found.insert((h.clone(), key)) {
                        sols.push((h.clone(), Some(nu)));
                    }
                }
            }
        }
    }
    match sols.len() {
        0 => Err(Error::NoSolution),
        1 => Ok(sols.pop().unwrap()),
        n => Err(Error::Ambiguous(n)),
    }
}

/// `h^p = h^{L−1−p}`, `h⁰ ≥ 1`, `Σ h = rank`.
fn symmetric_vectors(rank: i64, length: usize) -> Vec<Vec<i64>> {
    let half = length.div_ceil(2);
    let mut out = Vec::new();
    let mut cur = vec![0; half];
    fn rec(i: usize, left: i64, length: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        let half = cur.len();
        if i == half {
            if left == 0 {
                let mut h = vec![0; length];
                for (p, v) in cur.iter().enumerate() {
                    h[p] = *v;
                    h[length - 1 - p] = *v;
                }
                out.push(h);
            }
            return;
        }
        let weight = if length % 2 == 1 && i == half - 1 {
            1
        } else {
            2
        };
        let lo = i64::from(i == 0);
        for v in lo..=left / weight {
            cur[i] = v;
            rec(i + 1, left - v * weight, length, cur, out);
        }
    }
    rec(0, rank, length, &mut cur, &mut out);
    out
}

fn placements(local: &LocalType, length: usize) -> Vec<NearbyData> {
    let mut out = vec![NearbyData::default()];
    for b in local.blocks() {
        let level = b.size - 1;
        let mut next = Vec::new();
        for nu in &out {
            for p in level..length {
                let mut n = nu.clone();
                n.add(b.class.clone(), level, p as i64, 1);
                next.push(n);
            }
        }
        out = next;
    }
    out
}
