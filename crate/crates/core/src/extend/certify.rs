use serde::{Deserialize, Serialize};

use super::oracle::{numeric_cubic_oracle, OracleConfig, OracleReport};
use super::polynomial::{check_cyclic, PolynomialS};
use super::standard::promote_pair;
use crate::cyclotomic::nth_root_in_field;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateVerdict {
    pub candidate: PolynomialS,
    /// SA = BS and S³ = I hold exactly.
    pub exact_relations: bool,
    pub trace: String,
    pub trace_complex: (f64, f64),
    pub trace_is_integer: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CertificateVerdict {
    NoExtension,
    ExtensionCandidateFound,
    OracleInconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub candidates: Vec<CandidateVerdict>,
    pub oracle: OracleReport,
    pub verdict: CertificateVerdict,
    /// Human-readable summary; the exhaustiveness step is numerical evidence.
    pub summary: String,
}

/// The candidates k·AB and k·B²AB with k ranging over cube roots of the
/// inverse scalar, for whichever of (AB)³, (B²AB)³ is scalar.
pub fn cube_root_candidates(a: &CMatrix, b: &CMatrix) -> Result<Vec<PolynomialS>> {
    let (a, b) = promote_pair(a, b)?;
    let d = a.dim();
    let ab = &a * &b;
    let b2ab = &(&b * &b) * &ab;
    let mut out = Vec::new();
    for (power, x) in [(0, ab), (2, b2ab)] {
        if power >= d {
            continue;
        }
        if let Some(c) = x.pow(3)?.as_scalar() {
            if c.is_zero() {
                continue;
            }
            for k in nth_root_in_field(&c.inv()?, 3) {
                out.push(PolynomialS::monomial(d, power, &k));
            }
        }
    }
    Ok(out)
}

/// Certifies that (A, B) has no LB₃ extension, given the exact candidates
/// for S: each must satisfy SA = BS and S³ = I, none may have integer
/// trace, and the numerical oracle must find no other solutions.
pub fn certify_no_extension(
    a: &CMatrix,
    b: &CMatrix,
    candidates: &[PolynomialS],
    config: &OracleConfig,
) -> Result<CertificateReport> {
    let (a, b) = promote_pair(a, b)?;
    check_cyclic(&b)?;
    let mut verdicts = Vec::with_capacity(candidates.len());
    for (index, c) in candidates.iter().enumerate() {
        if c.coeffs.len() != a.dim() {
            return Err(Error::CandidateInvalid { index, reason: "wrong number of coefficients".into() });
        }
        let s = c.assemble(&a, &b)?;
        let (ap, bp) = (a.promote(s.conductor())?, b.promote(s.conductor())?);
        if &s * &ap != &bp * &s {
            return Err(Error::CandidateInvalid { index, reason: "SA != BS".into() });
        }
        if !s.pow(3)?.is_identity() {
            return Err(Error::CandidateInvalid { index, reason: "S^3 != I".into() });
        }
        let t = s.trace();
        let tc = t.to_complex();
        verdicts.push(CandidateVerdict {
            candidate: c.clone(),
            exact_relations: true,
            trace: t.to_string(),
            trace_complex: (tc.re, tc.im),
            trace_is_integer: t.is_rational_integer().is_some(),
        });
    }
    let oracle = numeric_cubic_oracle(&a, &b, config, candidates);
    let (verdict, summary) = if let Some(i) = verdicts.iter().position(|v| v.trace_is_integer) {
        (CertificateVerdict::ExtensionCandidateFound, format!("candidate {i} has integer trace; an extension exists"))
    } else if oracle.all_matched() {
        (
            CertificateVerdict::NoExtension,
            format!(
                "no extension (exact steps pass; oracle exhaustive at {} starts, {} converged to {} clusters)",
                config.starts,
                oracle.converged,
                oracle.clusters.len()
            ),
        )
    } else {
        (
            CertificateVerdict::OracleInconclusive,
            "inconclusive: exact steps pass but the oracle found solutions outside the candidate list".into(),
        )
    };
    Ok(CertificateReport { candidates: verdicts, oracle, verdict, summary })
}
