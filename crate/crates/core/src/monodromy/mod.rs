//! Local monodromy data, middle convolution, rank-one twists, Kummer pullback and
//! the rigidity index.

mod class;
mod ops;
mod tuple;

pub use class::ExponentClass;
pub use ops::{kummer_pullback_tuple, mc_local, mc_rank, rigidity_index, tensor_rank_one};
pub use tuple::{JordanBlock, LocalType, MonodromyTuple, INFINITY_LABEL};

#[cfg(test)]
mod tests;
