pub mod algebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod fixtures;
pub mod hodge;
pub mod monodromy;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
