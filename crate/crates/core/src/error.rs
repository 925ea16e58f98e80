use thiserror::Error;

use crate::rep::GroupKind;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(u32, u32),
    #[error("conductor {from} does not divide {to}")]
    NotASubfield { from: u32, to: u32 },
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix does not satisfy S^3 = I")]
    NotOrderThree,
    #[error("conductor {0} has no primitive cube root of unity; promote to a multiple of 3")]
    NoCubeRootOfUnity(u32),
    #[error("representation has no image for {0}")]
    MissingGenerator(&'static str),
    #[error("{from:?} is not a weakening of {to:?}")]
    NotAWeakening { from: GroupKind, to: GroupKind },
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("eigenvalue must be nonzero")]
    ZeroEigenvalue,
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("invalid block combination: {0}")]
    InvalidBlockCombination(String),
    #[error("supplied square root does not square to mu")]
    NotASquareRoot,
    #[error("basis change does not diagonalize S as diag(I, wI, w^2 I)")]
    BadBasisChange,
    #[error("k is not a standard candidate: {0}")]
    BadCandidate(String),
    #[error("line is an eigenline of S for w or w^2")]
    EigenlineChosen,
    #[error("Tr(AB) vanishes")]
    TraceZero,
    #[error("minimal and characteristic polynomial of B differ")]
    MinPolyMismatch,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("input not in the required form: {0}")]
    WrongForm(String),
    #[error("hypothesis unmet: {0}")]
    HypothesisUnmet(String),
    #[error("candidate {index} invalid: {reason}")]
    CandidateInvalid { index: usize, reason: String },
    #[error("relations fail for {kind:?}: {failing:?}")]
    RelationsFail { kind: GroupKind, failing: Vec<String> },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
