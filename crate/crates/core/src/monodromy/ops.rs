use std::collections::BTreeMap;

use super::class::ExponentClass;
use super::tuple::{JordanBlock, LocalType, MonodromyTuple};
use crate::error::{Error, Result};

/// `(2 − #points)·n² + Σ dim Z(Aₓ)`; equals 2 for an irreducible rigid system.
pub fn rigidity_index(t: &MonodromyTuple) -> i64 {
    let n = t.rank() as i64;
    let z: i64 = t.points().map(|(_, l)| l.centralizer_dim() as i64).sum();
    (2 - t.num_points() as i64) * n * n + z
}

/// Tensor product with a rank-one system. Points of `t` absent from `l` carry the
/// trivial class; a point of `l` absent from `t` must be trivial.
pub fn tensor_rank_one(t: &MonodromyTuple, l: &MonodromyTuple) -> Result<MonodromyTuple> {
    if l.rank() != 1 {
        return Err(Error::RankMismatch(format!(
            "second factor has rank {}, expected 1",
            l.rank()
        )));
    }
    let class_of = |lt: &LocalType| lt.blocks()[0].class.clone();
    for (label, lt) in l.finite() {
        if !t.finite().contains_key(label) && !class_of(lt).is_trivial() {
            return Err(Error::PointSetMismatch(format!(
                "rank-one factor is nontrivial at `{label}`, which is not a point of the tuple"
            )));
        }
    }
    let shift = |label: &str, lt: &LocalType| {
        let c = l
            .local(label)
            .map(class_of)
            .unwrap_or_else(ExponentClass::zero);
        lt.map_classes(|e| e.add(&c))
    };
    MonodromyTuple::new(
        t.rank(),
        t.finite().iter().map(|(k, lt)| (k.clone(), shift(k, lt))),
        shift(super::tuple::INFINITY_LABEL, t.infinity()),
    )
}

/// Rank of `MC_λ`: `Σ_finite (n − #blocks of class 0) + (n − #blocks of class λ at ∞) − n`.
pub fn mc_rank(t: &MonodromyTuple, lambda: &ExponentClass) -> Result<usize> {
    if lambda.is_trivial() {
        return Err(Error::NotApplicable);
    }
    let n = t.rank() as i64;
    let zero = ExponentClass::zero();
    let finite: i64 = t
        .finite()
        .values()
        .map(|l| n - l.count_blocks(&zero) as i64)
        .sum();
    let r = finite + (n - t.infinity().count_blocks(lambda) as i64) - n;
    usize::try_from(r)
        .map_err(|_| Error::RankMismatch(format!("middle convolution has negative rank {r}")))
}

fn fill(
    blocks: Vec<JordanBlock>,
    rank: usize,
    class: &ExponentClass,
    at: &str,
) -> Result<LocalType> {
    let used: usize = blocks.iter().map(|b| b.size).sum();
    if used > rank {
        return Err(Error::RankMismatch(format!(
            "at {at}: transformed blocks have dimension {used} > {rank}"
        )));
    }
    Ok(LocalType::new(blocks.into_iter().chain(
        (used..rank).map(|_| JordanBlock::new(class.clone(), 1)),
    )))
}

/// Local types of `MC_λ(t)`.
pub fn mc_local(t: &MonodromyTuple, lambda: &ExponentClass) -> Result<MonodromyTuple> {
    let rank = mc_rank(t, lambda)?;
    let zero = ExponentClass::zero();
    let neg = lambda.neg();
    let mut finite = Vec::new();
    for (label, lt) in t.finite() {
        let blocks = lt
            .blocks()
            .iter()
            .map(|b| {
                if b.class == zero {
                    JordanBlock::new(lambda.clone(), b.size - 1)
                } else if b.class == neg {
                    JordanBlock::new(zero.clone(), b.size + 1)
                } else {
                    JordanBlock::new(b.class.add(lambda), b.size)
                }
            })
            .collect();
        finite.push((label.clone(), fill(blocks, rank, &zero, label)?));
    }
    let blocks = t
        .infinity()
        .blocks()
        .iter()
        .map(|b| {
            if b.class == *lambda {
                JordanBlock::new(zero.clone(), b.size - 1)
            } else if b.class == zero {
                JordanBlock::new(neg.clone(), b.size + 1)
            } else {
                JordanBlock::new(b.class.sub(lambda), b.size)
            }
        })
        .collect();
    let infinity = fill(blocks, rank, &neg, super::tuple::INFINITY_LABEL)?;
    MonodromyTuple::new(rank, finite, infinity)
}

/// Pullback along `x ↦ xᵏ`. Each finite point other than 0 is replaced by its `k`
/// preimages, named by `preimages`; classes at 0 and ∞ are multiplied by `k`.
pub fn kummer_pullback_tuple(
    t: &MonodromyTuple,
    k: usize,
    preimages: &BTreeMap<String, Vec<String>>,
) -> Result<MonodromyTuple> {
    if k == 0 {
        return Err(Error::Input("pullback degree must be at least 1".into()));
    }
    let origin = t
        .finite()
        .get("0")
        .ok_or_else(|| Error::Input("the tuple has no point `0`".into()))?;
    let mut finite = vec![("0".to_string(), origin.map_classes(|e| e.times(k as i64)))];
    for (label, lt) in t.finite() {
        if label == "0" {
            continue;
        }
        let pre = preimages
            .get(label)
            .filter(|v| v.len() == k)
            .ok_or_else(|| Error::MissingPreimageLabels(label.clone()))?;
        finite.extend(pre.iter().map(|p| (p.clone(), lt.clone())));
    }
    MonodromyTuple::new(
        t.rank(),
        finite,
        t.infinity().map_classes(|e| e.times(k as i64)),
    )
}
