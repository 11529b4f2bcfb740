use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::class::ExponentClass;
use crate::algebra::ParameterWitness;
use crate::error::{Error, Result};

/// A Jordan block `J(size)` with eigenvalue of the given class.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct JordanBlock {
    pub class: ExponentClass,
    pub size: usize,
}

impl JordanBlock {
    pub fn new(class: ExponentClass, size: usize) -> Self {
        Self { class, size }
    }
}

/// Conjugacy class of a local monodromy matrix, as a multiset of Jordan blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LocalType {
    blocks: Vec<JordanBlock>,
}

impl LocalType {
    /// Drops empty blocks and sorts.
    pub fn new(blocks: impl IntoIterator<Item = JordanBlock>) -> Self {
        let mut blocks: Vec<JordanBlock> = blocks.into_iter().filter(|b| b.size > 0).collect();
        blocks.sort();
        Self { blocks }
    }

    /// `n` blocks of size 1 and the same class.
    pub fn scalar(class: ExponentClass, n: usize) -> Self {
        Self::new((0..n).map(|_| JordanBlock::new(class.clone(), 1)))
    }

    pub fn blocks(&self) -> &[JordanBlock] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.size).sum()
    }

    pub fn count_blocks(&self, class: &ExponentClass) -> usize {
        self.blocks.iter().filter(|b| &b.class == class).count()
    }

    /// `dim Z(A) = Σ_class Σ_{i,j} min(lᵢ, lⱼ)`.
    pub fn centralizer_dim(&self) -> usize {
        let mut total = 0;
        for b in &self.blocks {
            for c in &self.blocks {
                if b.class == c.class {
                    total += b.size.min(c.size);
                }
            }
        }
        total
    }

    /// `Σ size·class`, the class of the determinant.
    pub fn det_class(&self) -> ExponentClass {
        self.blocks.iter().fold(ExponentClass::zero(), |acc, b| {
            acc.add(&b.class.times(b.size as i64))
        })
    }

    pub fn map_classes(&self, f: impl Fn(&ExponentClass) -> ExponentClass) -> Self {
        Self::new(
            self.blocks
                .iter()
                .map(|b| JordanBlock::new(f(&b.class), b.size)),
        )
    }

    pub fn specialize(&self, w: &ParameterWitness) -> Result<Self> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| Ok(JordanBlock::new(b.class.specialize(w)?, b.size)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(blocks))
    }
}

impl fmt::Display for LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| match b.size {
                1 => format!("[{}]", b.class),
                n => format!("J{n}[{}]", b.class),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for LocalType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks.serialize(s)
    }
}

pub const INFINITY_LABEL: &str = "inf";

/// Local monodromy types at finite points and at ∞, with a common rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonodromyTuple {
    rank: usize,
    finite: BTreeMap<String, LocalType>,
    infinity: LocalType,
}

impl MonodromyTuple {
    /// Checks that every local type has dimension `rank` and that the product of all
    /// determinants is 1.
    pub fn new(
        rank: usize,
        finite: impl IntoIterator<Item = (String, LocalType)>,
        infinity: LocalType,
    ) -> Result<Self> {
        let t = Self::unchecked(rank, finite, infinity)?;
        let det = t
            .points()
            .fold(ExponentClass::zero(), |acc, (_, l)| acc.add(&l.det_class()));
        if !det.is_trivial() {
            return Err(Error::InvalidTuple(format!(
                "product of determinants has class {det}"
            )));
        }
        Ok(t)
    }

    /// Only checks dimensions. Used for intermediate results under specialization.
    pub fn unchecked(
        rank: usize,
        finite: impl IntoIterator<Item = (String, LocalType)>,
        infinity: LocalType,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, l) in finite {
            if label == INFINITY_LABEL {
                return Err(Error::InvalidTuple(
                    "`inf` is reserved for the point at infinity".into(),
                ));
            }
            if map.insert(label.clone(), l).is_some() {
                return Err(Error::InvalidTuple(format!(
                    "point `{label}` appears twice"
                )));
            }
        }
        let t = Self {
            rank,
            finite: map,
            infinity,
        };
        for (label, l) in t.points() {
            if l.dim() != rank {
                return Err(Error::RankMismatch(format!(
                    "local type at {label} has dimension {}, expected {rank}",
                    l.dim()
                )));
            }
        }
        Ok(t)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn finite(&self) -> &BTreeMap<String, LocalType> {
        &self.finite
    }

    pub fn infinity(&self) -> &LocalType {
        &self.infinity
    }

    pub fn local(&self, label: &str) -> Option<&LocalType> {
        if label == INFINITY_LABEL {
            Some(&self.infinity)
        } else {
            self.finite.get(label)
        }
    }

    /// Finite points first, then ∞.
    pub fn points(&self) -> impl Iterator<Item = (&str, &LocalType)> {
        self.finite
            .iter()
            .map(|(k, v)| (k.as_str(), v))
            .chain(std::iter::once((INFINITY_LABEL, &self.infinity)))
    }

    pub fn num_points(&self) -> usize {
        self.finite.len() + 1
    }

    pub fn specialize(&self, w: &ParameterWitness) -> Result<Self> {
        let finite = self
            .finite
            .iter()
            .map(|(k, l)| Ok((k.clone(), l.specialize(w)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::unchecked(self.rank, finite, self.infinity.specialize(w)?)
    }
}

impl fmt::Display for MonodromyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rank {}", self.rank)?;
        for (label, l) in self.points() {
            writeln!(f, "  {label}: {l}")?;
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct PointJson<'a> {
    label: &'a str,
    blocks: &'a [JordanBlock],
}

#[derive(Serialize)]
struct InfinityJson<'a> {
    blocks: &'a [JordanBlock],
}

#[derive(Serialize)]
struct TupleJson<'a> {
    rank: usize,
    points: Vec<PointJson<'a>>,
    infinity: InfinityJson<'a>,
}

impl Serialize for MonodromyTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TupleJson {
            rank: self.rank,
            points: self
                .finite
                .iter()
                .map(|(label, l)| PointJson {
                    label,
                    blocks: l.blocks(),
                })
                .collect(),
            infinity: InfinityJson {
                blocks: self.infinity.blocks(),
            },
        }
        .serialize(s)
    }
}
