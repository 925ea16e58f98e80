//! Exact arithmetic in cyclotomic fields Q(ζ_N).

mod field;
mod number;
mod parse;
mod roots;
mod serde_impl;

pub use field::{euler_phi, Field};
pub use number::{unify, CycNum, Rational};
pub use roots::{nth_root_in_field, roots_of_unity};
