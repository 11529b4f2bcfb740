//! Exact rational and polynomial arithmetic over the parameter field.

pub mod param;
pub mod roots;
pub mod theta;
pub mod witness;

pub use param::{
    fmt_rational, parse_rational, rat, ratio, sym, ParamPoly, Rational, Symbol, SYMBOLS,
};
pub use roots::{rational_roots, split_rational};
pub use theta::{ArithKind, ThetaPoly};
pub use witness::{Constraint, ParameterWitness};
