use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{nth_root_in_field, CycNum, Field};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::rep::{GroupKind, LBRep};

/// A scalar k with (kAB)³ = I and Tr(kAB) = m.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KCandidate {
    pub k: CycNum,
    pub m: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum KStatus {
    Found,
    /// (AB)³ is not a scalar matrix.
    NotScalarCube,
    /// The cube roots of the inverse scalar are not in the working field.
    RootsNotInField { suggested_conductor: u32 },
    /// Cube roots exist but none gives an integer trace.
    NoIntegerTrace,
}

impl KStatus {
    pub fn reason(&self) -> String {
        match self {
            KStatus::Found => "standard extension candidates found".into(),
            KStatus::NotScalarCube => "(AB)^3 is not a scalar matrix".into(),
            KStatus::RootsNotInField { suggested_conductor } => {
                format!("no cube root of the scalar lies in the working field; enlarge conductor to {suggested_conductor}")
            }
            KStatus::NoIntegerTrace => "no k gives integer trace".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KSearch {
    /// Conductor the search ran in: the input conductor with 3 adjoined.
    pub conductor: u32,
    /// c with (AB)³ = c·I, when scalar.
    pub cube_scalar: Option<CycNum>,
    pub ab_trace: CycNum,
    pub candidates: Vec<KCandidate>,
    #[serde(flatten)]
    pub status: KStatus,
}

impl KSearch {
    pub fn is_found(&self) -> bool {
        self.status == KStatus::Found
    }
}

/// The working conductor for extension problems: cube roots of unity are
/// always adjoined so that S can be diagonalized.
pub fn extension_conductor(n: u32) -> u32 {
    n.lcm(&3)
}

pub(crate) fn promote_pair(a: &CMatrix, b: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    if a.field() != b.field() {
        return Err(Error::ConductorMismatch(a.conductor(), b.conductor()));
    }
    if !a.is_square() || a.rows() != b.rows() || !b.is_square() {
        return Err(Error::DimMismatch("A and B must be square of equal size".into()));
    }
    let m = extension_conductor(a.conductor());
    Ok((a.promote(m)?, b.promote(m)?))
}

/// Searches for standard-extension scalars of the pair (A, B).
pub fn standard_k_candidates(a: &CMatrix, b: &CMatrix) -> Result<KSearch> {
    let (a, b) = promote_pair(a, b)?;
    let ab = &a * &b;
    let conductor = a.conductor();
    let ab_trace = ab.trace();
    let Some(c) = ab.pow(3)?.as_scalar() else {
        return Ok(KSearch { conductor, cube_scalar: None, ab_trace, candidates: vec![], status: KStatus::NotScalarCube });
    };
    let roots = if c.is_zero() { vec![] } else { nth_root_in_field(&c.inv()?, 3) };
    if roots.is_empty() {
        return Ok(KSearch {
            conductor,
            cube_scalar: Some(c),
            ab_trace,
            candidates: vec![],
            status: KStatus::RootsNotInField { suggested_conductor: 3 * conductor },
        });
    }
    let mut candidates: Vec<KCandidate> = roots
        .into_iter()
        .filter_map(|k| {
            let m = (&k * &ab_trace).is_rational_integer()?;
            Some(KCandidate { k, m: i64::try_from(m).ok()? })
        })
        .collect();
    candidates.sort_by_key(|c| c.k.to_string());
    let status = if candidates.is_empty() { KStatus::NoIntegerTrace } else { KStatus::Found };
    Ok(KSearch { conductor, cube_scalar: Some(c), ab_trace, candidates, status })
}

/// Diagonalizability of AB plus the power-trace conditions
/// Tr((kAB)^ℓ) = m for 3 ∤ ℓ and = dim V for 3 | ℓ, for 1 ≤ ℓ ≤ dim V.
pub fn trace_power_test(a: &CMatrix, b: &CMatrix, k: &CycNum) -> Result<bool> {
    let (a, b) = promote_pair(a, b)?;
    let n = a.conductor().lcm(&k.conductor());
    let (a, b, k) = (a.promote(n)?, b.promote(n)?, k.promote(n)?);
    let ab = &a * &b;
    if !ab.is_diagonalizable() {
        return Ok(false);
    }
    let s = ab.scale(&k);
    let d = s.dim();
    let Some(m) = s.trace().is_rational_integer() else {
        return Ok(false);
    };
    let mut p = s.clone();
    for l in 1..=d {
        let expected = if l % 3 == 0 { num_bigint::BigInt::from(d) } else { m.clone() };
        if p.trace().is_rational_integer() != Some(expected) {
            return Ok(false);
        }
        p = &p * &s;
    }
    Ok(true)
}

/// Free data of a standard extension: a basis change M diagonalizing S to
/// diag(I_ℓ, ωI_t, ω²I_t), an invertible t×t block G, and an involution
/// N·diag(I_a, −I_{ℓ−a})·N⁻¹ on the fixed space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionParams {
    #[serde(rename = "M")]
    pub m: CMatrix,
    #[serde(rename = "G")]
    pub g: CMatrix,
    pub a: usize,
    #[serde(rename = "N")]
    pub n: CMatrix,
}

impl ExtensionParams {
    /// Dimension ℓ of the fixed space of S.
    pub fn ell(&self) -> usize {
        self.n.rows()
    }

    /// Common dimension t of the ω and ω² eigenspaces.
    pub fn t(&self) -> usize {
        self.g.rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionCertificate {
    pub k: CycNum,
    #[serde(rename = "S")]
    pub s: CMatrix,
    pub params: ExtensionParams,
    pub trace_value: i64,
}

/// Eigenspace bases of an operator with S³ = I, in the order 1, ω, ω².
pub(crate) fn eigenbases(s: &CMatrix) -> Result<[Vec<Vec<CycNum>>; 3]> {
    let f = s.field();
    let w = CycNum::omega(f)?;
    if !s.pow(3)?.is_identity() {
        return Err(Error::NotOrderThree);
    }
    let d = s.dim();
    let basis = |ev: &CycNum| (s - &CMatrix::scalar(ev, d)).kernel();
    Ok([basis(&CycNum::one(f)), basis(&w), basis(&(&w * &w))])
}

/// Canonical parameters: M from eigenspace bases, G = I, N = I, a = ℓ.
pub fn default_params(s: &CMatrix) -> Result<ExtensionParams> {
    let [v1, vw, vw2] = eigenbases(s)?;
    if vw.len() != vw2.len() {
        return Err(Error::BadCandidate("the ω and ω² eigenspaces differ in dimension".into()));
    }
    let f = s.field();
    let cols: Vec<Vec<CycNum>> = v1.iter().chain(&vw).chain(&vw2).cloned().collect();
    let m = CMatrix::from_columns(f, s.dim(), &cols);
    Ok(ExtensionParams {
        m,
        g: CMatrix::identity(f, vw.len()),
        a: v1.len(),
        n: CMatrix::identity(f, v1.len()),
    })
}

/// The involution S₁ determined by `params` (in the original basis).
pub(crate) fn involution(s: &CMatrix, params: &ExtensionParams) -> Result<CMatrix> {
    let f = s.field().clone();
    let (l, t) = (params.ell(), params.t());
    let d = s.dim();
    if params.m.dim() != d || l + 2 * t != d || params.a > l || !params.g.is_square() || !params.n.is_square() {
        return Err(Error::BadBasisChange);
    }
    let m_inv = params.m.inverse().map_err(|_| Error::BadBasisChange)?;
    let w = CycNum::omega(&f)?;
    let mut diag = vec![CycNum::one(&f); l];
    diag.extend(std::iter::repeat(w.clone()).take(t));
    diag.extend(std::iter::repeat(&w * &w).take(t));
    if &(&m_inv * s) * &params.m != CMatrix::diag(&f, &diag) {
        return Err(Error::BadBasisChange);
    }
    let g_inv = params.g.inverse()?;
    let n_inv = params.n.inverse()?;
    let signs: Vec<CycNum> =
        (0..l).map(|i| if i < params.a { CycNum::one(&f) } else { -CycNum::one(&f) }).collect();
    let top = &(&params.n * &CMatrix::diag(&f, &signs)) * &n_inv;
    let mut s1 = CMatrix::zeros(&f, d, d);
    s1.set_block(0, 0, &top);
    s1.set_block(l, l + t, &params.g);
    s1.set_block(l + t, l, &g_inv);
    Ok(&(&params.m * &s1) * &m_inv)
}

fn check_candidate(s: &CMatrix) -> Result<i64> {
    if !s.pow(3)?.is_identity() {
        return Err(Error::BadCandidate("(kAB)^3 is not the identity".into()));
    }
    s.trace()
        .is_rational_integer()
        .and_then(|m| i64::try_from(m).ok())
        .ok_or_else(|| Error::BadCandidate("Tr(kAB) is not an integer".into()))
}

/// Builds ρ(s₁) = M·S₁·M⁻¹ and ρ(s₂) = ρ(s₁)·S for S = kAB.
pub fn build_standard_extension(a: &CMatrix, b: &CMatrix, k: &CycNum, params: &ExtensionParams) -> Result<LBRep> {
    let (a, b, k) = common_field(a, b, k, params.m.field())?;
    let s = (&a * &b).scale(&k);
    check_candidate(&s)?;
    let s1 = involution(&s, params)?;
    let s2 = &s1 * &s;
    LBRep::full(GroupKind::LB3, a, b, s1, s2)
}

fn common_field(a: &CMatrix, b: &CMatrix, k: &CycNum, target: &Field) -> Result<(CMatrix, CMatrix, CycNum)> {
    let n = target.conductor();
    if n % 3 != 0 {
        return Err(Error::NoCubeRootOfUnity(n));
    }
    Ok((a.promote(n)?, b.promote(n)?, k.promote(n)?))
}

/// Standard extension of a B₃ representation for a given k, with default parameters.
pub fn extend_with_k(rep: &LBRep, k: &CycNum) -> Result<(LBRep, ExtensionCertificate)> {
    let (a, b) = (rep.a().ok_or(Error::MissingGenerator("A"))?, rep.b().ok_or(Error::MissingGenerator("B"))?);
    let (a, b) = promote_pair(a, b)?;
    let n = a.conductor().lcm(&extension_conductor(k.conductor()));
    let (a, b, k) = (a.promote(n)?, b.promote(n)?, k.promote(n)?);
    let s = (&a * &b).scale(&k);
    let trace_value = check_candidate(&s)?;
    let params = default_params(&s)?;
    let ext = build_standard_extension(&a, &b, &k, &params)?;
    Ok((ext, ExtensionCertificate { k, s, params, trace_value }))
}

/// All standard extensions with default parameters, one per k-candidate.
pub fn standard_extensions(rep: &LBRep) -> Result<(KSearch, Vec<(LBRep, ExtensionCertificate)>)> {
    let (a, b) = (rep.a().ok_or(Error::MissingGenerator("A"))?, rep.b().ok_or(Error::MissingGenerator("B"))?);
    let search = standard_k_candidates(a, b)?;
    let built = search.candidates.iter().map(|c| extend_with_k(rep, &c.k)).collect::<Result<Vec<_>>>()?;
    Ok((search, built))
}

/// Dimension of the space of involutions completing S with fixed-space
/// dimension ℓ and eigenspace dimension m.
pub fn involution_param_dimension(ell: u64, m: u64) -> u64 {
    if ell > 1 {
        m * m * (ell * ell - 1).div_ceil(2)
    } else {
        m * m
    }
}

/// Whether S₁ completes S to a representation of 𝔖₃: S₁² = I, S₁ preserves
/// the fixed space of S and exchanges the ω and ω² eigenspaces.
pub fn s3_completion_check(s: &CMatrix, s1: &CMatrix) -> Result<bool> {
    if s.field() != s1.field() {
        return Err(Error::ConductorMismatch(s.conductor(), s1.conductor()));
    }
    let n = extension_conductor(s.conductor());
    let (s, s1) = (s.promote(n)?, s1.promote(n)?);
    let [p1, pw, pw2] = s.eigenprojectors_order3()?;
    Ok((&s1 * &s1).is_identity() && &s1 * &p1 == &p1 * &s1 && &s1 * &pw == &pw2 * &s1)
}

/// Completes an order-three S with integer trace to (S₁, S₂ = S₁S) using the
/// default involution.
pub(crate) fn complete_swap_pair(s: &CMatrix) -> Result<(CMatrix, CMatrix)> {
    let params = default_params(s)?;
    let s1 = involution(s, &params)?;
    let s2 = &s1 * s;
    Ok((s1, s2))
}
