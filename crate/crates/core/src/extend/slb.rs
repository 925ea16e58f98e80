use serde::{Deserialize, Serialize};

use super::standard::{complete_swap_pair, standard_k_candidates};
use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};
use crate::rep::{GroupKind, LBRep, Relation, Verdict};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slb3Report {
    /// Direct check of the extra relation σ₂σ₁s₂ = s₁σ₂σ₁.
    pub direct: bool,
    /// [S₂, B²] = [S₁, A²] = 0, when its hypotheses hold.
    pub commutator: Option<bool>,
}

impl Slb3Report {
    pub fn factors(&self) -> bool {
        self.direct
    }
}

/// Whether an LB₃ representation factors through SLB₃, by both routes.
pub fn slb3_test(rep: &LBRep) -> Result<Slb3Report> {
    rep.verify(GroupKind::LB3)?.into_result()?;
    let direct = rep.verify(GroupKind::SLB3)?.verdict(Relation::L2Prime) == Verdict::Holds;
    let commutator = match slb3_commutator_test(rep) {
        Ok(v) => Some(v),
        Err(Error::HypothesisUnmet(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(Slb3Report { direct, commutator })
}

/// The commutator criterion, valid when A and B are cyclic and (AB)³ is scalar.
pub fn slb3_commutator_test(rep: &LBRep) -> Result<bool> {
    let (a, b) = (rep.a_mat(), rep.b_mat());
    let (s1, s2) = (rep.s1().ok_or(Error::MissingGenerator("S1"))?, rep.s2().ok_or(Error::MissingGenerator("S2"))?);
    let d = a.dim();
    if a.min_poly().degree() != Some(d) || b.min_poly().degree() != Some(d) {
        return Err(Error::HypothesisUnmet("minimal and characteristic polynomials differ".into()));
    }
    if (a * b).pow(3)?.as_scalar().is_none() {
        return Err(Error::HypothesisUnmet("(AB)^3 is not scalar".into()));
    }
    Ok(s2.commutator(&(b * b)).is_zero() && s1.commutator(&(a * a)).is_zero())
}

/// Replaces S′ = S₁S₂ by S = k·B²·S′ and completes it to a VB₃ representation.
pub fn vb3_lift(rep: &LBRep, k: &CycNum) -> Result<LBRep> {
    rep.verify(GroupKind::LB3)?.into_result()?;
    let search = standard_k_candidates(rep.a_mat(), rep.b_mat())?;
    let n = search.conductor;
    let k = k.promote(num_integer::Integer::lcm(&n, &k.conductor()))?;
    let n = k.conductor();
    if !search.candidates.iter().any(|c| c.k.promote(n).map(|x| x == k).unwrap_or(false)) {
        return Err(Error::BadCandidate(format!("{k} is not a standard k-candidate")));
    }
    let rep = rep.promote(n)?;
    let (a, b) = (rep.a_mat(), rep.b_mat());
    let s_old = rep.s().expect("LB3 representation has S1, S2");
    let s = (&(b * b) * &s_old).scale(&k);
    if !s.pow(3)?.is_identity() {
        return Err(Error::BadCandidate("k B^2 S' does not have order three".into()));
    }
    if s.trace().is_rational_integer().is_none() {
        return Err(Error::BadCandidate("Tr(k B^2 S') is not an integer".into()));
    }
    let (s1, s2) = complete_swap_pair(&s)?;
    LBRep::full(GroupKind::VB3, a.clone(), b.clone(), s1, s2)
}
