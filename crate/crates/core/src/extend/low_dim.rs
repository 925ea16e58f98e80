use serde::{Deserialize, Serialize};

use super::standard::promote_pair;
use crate::catalog::tw3;
use crate::cyclotomic::{nth_root_in_field, unify, CycNum};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::rep::{GroupKind, LBRep};

/// The extension of a 2-dimensional pair with S = −AB/Tr(AB) and S₁ the
/// involution fixing the given line, which swaps its ω and ω² components.
pub fn standard_extension_2d(a: &CMatrix, b: &CMatrix, line: &[CycNum]) -> Result<LBRep> {
    let (a, b) = promote_pair(a, b)?;
    if a.dim() != 2 || line.len() != 2 {
        return Err(Error::DimMismatch("the two-dimensional construction needs 2×2 input".into()));
    }
    let refs: Vec<&CycNum> = line.iter().collect();
    let v = unify(&refs, a.conductor());
    let n = v[0].conductor();
    let (a, b) = (a.promote(n)?, b.promote(n)?);
    let ab = &a * &b;
    let t = ab.trace();
    if t.is_zero() {
        return Err(Error::TraceZero);
    }
    let s = ab.scale(&-t.inv()?);
    let [_, pw, pw2] = s.eigenprojectors_order3()?;
    let col = CMatrix::column(a.field(), &v);
    let vw = (&pw * &col).col(0);
    let vw2 = (&pw2 * &col).col(0);
    if vw.iter().all(CycNum::is_zero) || vw2.iter().all(CycNum::is_zero) {
        return Err(Error::EigenlineChosen);
    }
    let q = CMatrix::from_columns(a.field(), 2, &[vw, vw2]);
    let swap = CMatrix::from_ints(a.field(), &[&[0, 1], &[1, 0]]);
    let s1 = &(&q * &swap) * &q.inverse()?;
    let s2 = &s1 * &s;
    LBRep::full(GroupKind::LB3, a, b, s1, s2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exists3d {
    pub exists: bool,
    /// Cube roots of Det(AB)⁻¹ in the working field.
    pub k_set: Vec<CycNum>,
}

/// A 3-dimensional pair extends iff Tr(AB) = Tr((AB)²) = 0.
pub fn extension_exists_3d(a: &CMatrix, b: &CMatrix) -> Result<Exists3d> {
    let (a, b) = promote_pair(a, b)?;
    if a.dim() != 3 {
        return Err(Error::DimMismatch("expected 3×3 matrices".into()));
    }
    let ab = &a * &b;
    let exists = ab.trace().is_zero() && (&ab * &ab).trace().is_zero();
    let det = ab.det();
    let k_set = if exists && !det.is_zero() { nth_root_in_field(&det.inv()?, 3) } else { vec![] };
    Ok(Exists3d { exists, k_set })
}

/// The non-standard SLB₃ family on tw3(λ₁, λ₂, −λ₂) with free parameter z.
pub fn nonstandard_3d(l1: &CycNum, l2: &CycNum, z: &CycNum) -> Result<LBRep> {
    nonstandard_3d_signed(l1, l2, z, false)
}

/// As [`nonstandard_3d`], with ρ(s₁) negated when `negate` is set.
pub fn nonstandard_3d_signed(l1: &CycNum, l2: &CycNum, z: &CycNum, negate: bool) -> Result<LBRep> {
    if z.is_zero() {
        return Err(Error::ZeroParameter("z"));
    }
    let [l1, l2, z]: [CycNum; 3] = unify(&[l1, l2, z], 1).try_into().unwrap();
    let base = tw3(&l1, &l2, &-&l2)?;
    let f = base.field().clone();
    let (zero, one) = (CycNum::zero(&f), CycNum::one(&f));
    let z2 = &z * &z;
    let z3 = &z2 * &z;
    let s = CMatrix::from_rows(
        &f,
        vec![
            vec![zero.clone(), zero.clone(), z.clone()],
            vec![zero.clone(), z.clone(), z.clone()],
            vec![-z2.inv()?, &(&one - &z3) / &z2, -&z],
        ],
    )?;
    let s1 = CMatrix::from_rows(
        &f,
        vec![
            vec![one.clone(), &z - &one, z.clone()],
            vec![zero.clone(), z.clone(), z.clone()],
            vec![zero, &(&one - &z2) / &z, -&z],
        ],
    )?;
    let s1 = if negate { -&s1 } else { s1 };
    let s2 = &s1 * &s;
    LBRep::full(GroupKind::SLB3, base.a_mat().clone(), base.b_mat().clone(), s1, s2)
}
