//! Exact dense linear algebra over a cyclotomic field.

mod elim;
mod matrix;
mod poly;
mod serde_impl;
mod spectral;

pub use elim::{LinearSolution, Span};
pub use matrix::CMatrix;
pub use poly::FieldPoly;
pub use spectral::{algebra_basis, algebra_dimension};
