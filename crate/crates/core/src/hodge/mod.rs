//! Hodge numbers of rigid local systems: local nearby-cycle data, parabolic degrees,
//! Kummer pullback, middle convolution and the irregular Hodge filtration at ∞ of a
//! Fourier transform.

mod irregular;
mod ops;
mod profile;
mod selfdual;
mod table;

pub use irregular::{
    stationary_phase_table, tables_equal_up_to_shift, IrregularHodgeTable, SymbolicIrregularTable,
};
pub use ops::{
    derive_counts, mc_profile, parabolic_cohomology_hodge, parabolic_rigidity_solve,
    pullback_profile, HodgeCounts,
};
pub use profile::{at, HodgeProfile, NearbyData};
pub use selfdual::{selfdual_completion_solve, SelfDualConstraint};
pub use table::{HodgeTable, NuColumn};

#[cfg(test)]
mod tests;
