use std::fmt;

use serde::{Deserialize, Serialize};

use super::{GroupKind, LBRep};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    /// σ₁σ₂σ₁ = σ₂σ₁σ₂
    B1,
    /// s₁s₂s₁ = s₂s₁s₂
    Sigma1,
    /// s₁² = s₂² = 1
    Sigma2,
    /// s₁s₂σ₁ = σ₂s₁s₂
    L1,
    /// σ₁σ₂s₁ = s₂σ₁σ₂
    L2,
    /// σ₂σ₁s₂ = s₁σ₂σ₁
    L2Prime,
}

impl Relation {
    pub const ALL: [Relation; 6] =
        [Relation::B1, Relation::Sigma1, Relation::Sigma2, Relation::L1, Relation::L2, Relation::L2Prime];

    pub fn name(self) -> &'static str {
        match self {
            Relation::B1 => "B1",
            Relation::Sigma1 => "Sigma1",
            Relation::Sigma2 => "Sigma2",
            Relation::L1 => "L1",
            Relation::L2 => "L2",
            Relation::L2Prime => "L2'",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub kind: GroupKind,
    pub verdicts: Vec<(Relation, Verdict)>,
}

impl RelationReport {
    pub fn verdict(&self, r: Relation) -> Verdict {
        self.verdicts.iter().find(|(x, _)| *x == r).map_or(Verdict::NotApplicable, |(_, v)| *v)
    }

    pub fn failing(&self) -> Vec<Relation> {
        self.verdicts.iter().filter(|(_, v)| *v == Verdict::Fails).map(|(r, _)| *r).collect()
    }

    pub fn all_hold(&self) -> bool {
        self.failing().is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.all_hold() {
            Ok(())
        } else {
            Err(Error::RelationsFail {
                kind: self.kind,
                failing: self.failing().iter().map(|r| r.name().to_string()).collect(),
            })
        }
    }
}

fn need<'a>(m: Option<&'a CMatrix>, name: &'static str) -> Result<&'a CMatrix> {
    m.ok_or(Error::MissingGenerator(name))
}

pub(super) fn verify(rep: &LBRep, kind: GroupKind) -> Result<RelationReport> {
    let required = kind.relations();
    if kind.needs_braid_generators() {
        need(rep.a(), "A")?;
        need(rep.b(), "B")?;
    }
    if kind.needs_swap_generators() {
        need(rep.s1(), "S1")?;
        need(rep.s2(), "S2")?;
    }
    let verdicts = Relation::ALL
        .iter()
        .map(|&r| {
            let v = if required.contains(&r) {
                if check(rep, r)? {
                    Verdict::Holds
                } else {
                    Verdict::Fails
                }
            } else {
                Verdict::NotApplicable
            };
            Ok((r, v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport { kind, verdicts })
}

fn check(rep: &LBRep, r: Relation) -> Result<bool> {
    let a = || need(rep.a(), "A");
    let b = || need(rep.b(), "B");
    let s1 = || need(rep.s1(), "S1");
    let s2 = || need(rep.s2(), "S2");
    Ok(match r {
        Relation::B1 => {
            let (a, b) = (a()?, b()?);
            &(a * b) * a == &(b * a) * b
        }
        Relation::Sigma1 => {
            let (s1, s2) = (s1()?, s2()?);
            &(s1 * s2) * s1 == &(s2 * s1) * s2
        }
        Relation::Sigma2 => {
            let (s1, s2) = (s1()?, s2()?);
            (s1 * s1).is_identity() && (s2 * s2).is_identity()
        }
        Relation::L1 => {
            let (a, b, s1, s2) = (a()?, b()?, s1()?, s2()?);
            &(s1 * s2) * a == &(b * s1) * s2
        }
        Relation::L2 => {
            let (a, b, s1, s2) = (a()?, b()?, s1()?, s2()?);
            &(a * b) * s1 == &(s2 * a) * b
        }
        Relation::L2Prime => {
            let (a, b, s1, s2) = (a()?, b()?, s1()?, s2()?);
            &(b * a) * s2 == &(s1 * b) * a
        }
    })
}
