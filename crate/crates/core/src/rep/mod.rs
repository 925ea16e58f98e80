//! Representation data model and relation verification for B₃, 𝔖₃, VB₃,
//! LB₃ and SLB₃.

mod relations;
mod serde_impl;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::{CycNum, Field};
use crate::error::{Error, Result};
use crate::linalg::{algebra_dimension, CMatrix};

pub use relations::{Relation, RelationReport, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupKind {
    B3,
    S3,
    VB3,
    LB3,
    SLB3,
}

impl GroupKind {
    pub const ALL: [GroupKind; 5] = [GroupKind::B3, GroupKind::S3, GroupKind::VB3, GroupKind::LB3, GroupKind::SLB3];

    pub fn relations(self) -> &'static [Relation] {
        use Relation::*;
        match self {
            GroupKind::B3 => &[B1],
            GroupKind::S3 => &[Sigma1, Sigma2],
            GroupKind::VB3 => &[B1, Sigma1, Sigma2, L1],
            GroupKind::LB3 => &[B1, Sigma1, Sigma2, L1, L2],
            GroupKind::SLB3 => &[B1, Sigma1, Sigma2, L1, L2, L2Prime],
        }
    }

    pub fn needs_braid_generators(self) -> bool {
        self != GroupKind::S3
    }

    pub fn needs_swap_generators(self) -> bool {
        self != GroupKind::B3
    }

    /// Whether every relation of `self` is also a relation of `other`.
    pub fn is_weakening_of(self, other: GroupKind) -> bool {
        self.relations().iter().all(|r| other.relations().contains(r))
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::B3 => "B3",
            GroupKind::S3 => "S3",
            GroupKind::VB3 => "VB3",
            GroupKind::LB3 => "LB3",
            GroupKind::SLB3 => "SLB3",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroupKind> {
        GroupKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown group {s:?}")))
    }
}

/// Images of σ₁, σ₂, s₁, s₂ tagged with the group they are meant to
/// represent.
#[derive(Clone, PartialEq, Eq)]
pub struct LBRep {
    target: GroupKind,
    a: Option<CMatrix>,
    b: Option<CMatrix>,
    s1: Option<CMatrix>,
    s2: Option<CMatrix>,
}

impl LBRep {
    /// # Errors
    /// `MissingGenerator` when the target needs an absent image,
    /// `DimMismatch`/`ConductorMismatch` when the images disagree.
    pub fn new(
        target: GroupKind,
        a: Option<CMatrix>,
        b: Option<CMatrix>,
        s1: Option<CMatrix>,
        s2: Option<CMatrix>,
    ) -> Result<LBRep> {
        if target.needs_braid_generators() {
            if a.is_none() {
                return Err(Error::MissingGenerator("A"));
            }
            if b.is_none() {
                return Err(Error::MissingGenerator("B"));
            }
        }
        if target.needs_swap_generators() {
            if s1.is_none() {
                return Err(Error::MissingGenerator("S1"));
            }
            if s2.is_none() {
                return Err(Error::MissingGenerator("S2"));
            }
        } else if s1.is_some() || s2.is_some() {
            return Err(Error::WrongForm("a B3 representation carries no S1, S2".into()));
        }
        let present: Vec<&CMatrix> = [&a, &b, &s1, &s2].into_iter().flatten().collect();
        let Some(first) = present.first() else {
            return Err(Error::MissingGenerator("A"));
        };
        if !first.is_square() {
            return Err(Error::DimMismatch("generator images must be square".into()));
        }
        for m in &present {
            if m.field() != first.field() {
                return Err(Error::ConductorMismatch(first.conductor(), m.conductor()));
            }
            if !m.is_square() || m.rows() != first.rows() {
                return Err(Error::DimMismatch("generator images must share a dimension".into()));
            }
        }
        Ok(LBRep { target, a, b, s1, s2 })
    }

    pub fn braid(a: CMatrix, b: CMatrix) -> Result<LBRep> {
        LBRep::new(GroupKind::B3, Some(a), Some(b), None, None)
    }

    pub fn full(target: GroupKind, a: CMatrix, b: CMatrix, s1: CMatrix, s2: CMatrix) -> Result<LBRep> {
        LBRep::new(target, Some(a), Some(b), Some(s1), Some(s2))
    }

    /// The representation sending every generator to the identity.
    pub fn trivial(field: &Field, dim: usize, target: GroupKind) -> LBRep {
        let i = CMatrix::identity(field, dim);
        let braid = target.needs_braid_generators().then(|| i.clone());
        let swap = target.needs_swap_generators().then(|| i.clone());
        LBRep { target, a: braid.clone(), b: braid, s1: swap.clone(), s2: swap }
    }

    pub fn target(&self) -> GroupKind {
        self.target
    }

    fn any(&self) -> &CMatrix {
        [&self.a, &self.b, &self.s1, &self.s2].into_iter().flatten().next().expect("at least one image")
    }

    pub fn dim(&self) -> usize {
        self.any().rows()
    }

    pub fn field(&self) -> &Field {
        self.any().field()
    }

    pub fn conductor(&self) -> u32 {
        self.field().conductor()
    }

    pub fn a(&self) -> Option<&CMatrix> {
        self.a.as_ref()
    }

    pub fn b(&self) -> Option<&CMatrix> {
        self.b.as_ref()
    }

    pub fn s1(&self) -> Option<&CMatrix> {
        self.s1.as_ref()
    }

    pub fn s2(&self) -> Option<&CMatrix> {
        self.s2.as_ref()
    }

    /// Image of σ₁; panics when absent.
    pub fn a_mat(&self) -> &CMatrix {
        self.a.as_ref().expect("representation has no image for A")
    }

    /// Image of σ₂; panics when absent.
    pub fn b_mat(&self) -> &CMatrix {
        self.b.as_ref().expect("representation has no image for B")
    }

    /// S = S₁S₂, recomputed on every call.
    pub fn s(&self) -> Option<CMatrix> {
        Some(self.s1.as_ref()? * self.s2.as_ref()?)
    }

    /// AB.
    pub fn ab(&self) -> Option<CMatrix> {
        Some(self.a.as_ref()? * self.b.as_ref()?)
    }

    pub fn generators(&self) -> Vec<&CMatrix> {
        [&self.a, &self.b, &self.s1, &self.s2].into_iter().flatten().collect()
    }

    pub fn with_target(&self, target: GroupKind) -> Result<LBRep> {
        LBRep::new(target, self.a.clone(), self.b.clone(), self.s1.clone(), self.s2.clone())
    }

    pub fn promote(&self, m: u32) -> Result<LBRep> {
        let p = |x: &Option<CMatrix>| x.as_ref().map(|m2| m2.promote(m)).transpose();
        Ok(LBRep { target: self.target, a: p(&self.a)?, b: p(&self.b)?, s1: p(&self.s1)?, s2: p(&self.s2)? })
    }

    /// Conjugates every image by `p`: X ↦ P X P⁻¹.
    pub fn conjugate(&self, p: &CMatrix) -> Result<LBRep> {
        let pinv = p.inverse()?;
        let c = |x: &Option<CMatrix>| x.as_ref().map(|m| &(p * m) * &pinv);
        Ok(LBRep { target: self.target, a: c(&self.a), b: c(&self.b), s1: c(&self.s1), s2: c(&self.s2) })
    }

    /// Checks the relations of `kind` exactly.
    ///
    /// # Errors
    /// `MissingGenerator` when an image the relations need is absent.
    pub fn verify(&self, kind: GroupKind) -> Result<RelationReport> {
        relations::verify(self, kind)
    }

    /// Absolute irreducibility by Burnside: the images generate all of M_d.
    /// A `false` answer means "not absolutely irreducible".
    pub fn is_irreducible(&self) -> bool {
        let d = self.dim();
        algebra_dimension(&self.generators()) == d * d
    }

    /// Generator-wise Kronecker product.
    ///
    /// # Errors
    /// `ConductorMismatch`; `WrongForm` when the targets differ.
    pub fn tensor_product(&self, other: &LBRep) -> Result<LBRep> {
        if self.conductor() != other.conductor() {
            return Err(Error::ConductorMismatch(self.conductor(), other.conductor()));
        }
        if self.target != other.target {
            return Err(Error::WrongForm(format!("targets differ: {} vs {}", self.target, other.target)));
        }
        let k = |x: &Option<CMatrix>, y: &Option<CMatrix>| -> Result<Option<CMatrix>> {
            match (x, y) {
                (Some(x), Some(y)) => Ok(Some(x.kron(y)?)),
                (None, None) => Ok(None),
                _ => Err(Error::WrongForm("generator present in only one factor".into())),
            }
        };
        Ok(LBRep {
            target: self.target,
            a: k(&self.a, &other.a)?,
            b: k(&self.b, &other.b)?,
            s1: k(&self.s1, &other.s1)?,
            s2: k(&self.s2, &other.s2)?,
        })
    }

    /// Forgets the relations (and images) not needed by `kind`.
    ///
    /// # Errors
    /// `NotAWeakening` unless the relations of `kind` are among those of the
    /// current target.
    pub fn restrict(&self, kind: GroupKind) -> Result<LBRep> {
        if !kind.is_weakening_of(self.target) {
            return Err(Error::NotAWeakening { from: kind, to: self.target });
        }
        let (s1, s2) = if kind.needs_swap_generators() { (self.s1.clone(), self.s2.clone()) } else { (None, None) };
        LBRep::new(kind, self.a.clone(), self.b.clone(), s1, s2)
    }

    /// The four conditions of the L2 equivalence lemma, in order:
    /// (a) ABS₁ = S₂AB, (b) S₂ commutes with ABS⁻¹,
    /// (c) S₁ commutes with (AB)⁻¹S, (d) ABS = S₂ABS₂.
    pub fn l2_conditions(&self) -> Result<[bool; 4]> {
        let (a, b) = (self.a.as_ref().ok_or(Error::MissingGenerator("A"))?, self.b.as_ref().ok_or(Error::MissingGenerator("B"))?);
        let s1 = self.s1.as_ref().ok_or(Error::MissingGenerator("S1"))?;
        let s2 = self.s2.as_ref().ok_or(Error::MissingGenerator("S2"))?;
        let ab = a * b;
        let s = s1 * s2;
        let s_inv = s.inverse()?;
        let ab_inv = ab.inverse()?;
        Ok([
            &ab * s1 == s2 * &ab,
            s2.commutes_with(&(&ab * &s_inv)),
            s1.commutes_with(&(&ab_inv * &s)),
            &ab * &s == &(s2 * &ab) * s2,
        ])
    }

    /// Trace of S when present.
    pub fn s_trace(&self) -> Option<CycNum> {
        self.s().map(|s| s.trace())
    }
}

impl fmt::Debug for LBRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "LBRep target {} dim {} conductor {}", self.target, self.dim(), self.conductor())?;
        for (name, m) in [("A", &self.a), ("B", &self.b), ("S1", &self.s1), ("S2", &self.s2)] {
            if let Some(m) = m {
                write!(f, "{name}: {m:?}")?;
            }
        }
        Ok(())
    }
}
