//! Exact construction and analysis of braid group and loop braid group
//! representations over cyclotomic fields.

pub mod catalog;
pub mod cyclotomic;
pub mod error;
pub mod extend;
pub mod linalg;
pub mod rep;

pub use cyclotomic::{CycNum, Field, Rational};
pub use error::{Error, Result};
pub use linalg::{CMatrix, FieldPoly};
pub use rep::{GroupKind, LBRep, Relation, RelationReport};
