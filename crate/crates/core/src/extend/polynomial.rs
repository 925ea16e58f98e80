use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{unify, CycNum};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

/// S = Σ aₙ·BⁿAB for n < d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialS {
    pub coeffs: Vec<CycNum>,
}

impl PolynomialS {
    /// The form k·BⁿAB.
    pub fn monomial(d: usize, n: usize, k: &CycNum) -> PolynomialS {
        let mut coeffs = vec![CycNum::zero(k.field()); d];
        coeffs[n] = k.clone();
        PolynomialS { coeffs }
    }

    pub fn assemble(&self, a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
        let refs: Vec<&CycNum> = self.coeffs.iter().collect();
        let coeffs = unify(&refs, a.conductor());
        let n = coeffs.first().map_or(a.conductor(), CycNum::conductor);
        let (a, b) = (a.promote(n)?, b.promote(n)?);
        let ab = &a * &b;
        let mut term = ab.clone();
        let mut out = CMatrix::zeros(a.field(), a.dim(), a.dim());
        for c in &coeffs {
            out = &out + &term.scale(c);
            term = &b * &term;
        }
        Ok(out)
    }

    /// True when only a₀ is nonzero.
    pub fn is_standard(&self) -> bool {
        !self.coeffs[0].is_zero() && self.coeffs[1..].iter().all(CycNum::is_zero)
    }
}

pub(crate) fn check_cyclic(b: &CMatrix) -> Result<()> {
    if b.min_poly().degree() != Some(b.dim()) {
        return Err(Error::MinPolyMismatch);
    }
    Ok(())
}

/// Powers BⁿAB for n < d.
pub(crate) fn krylov_terms(a: &CMatrix, b: &CMatrix) -> Vec<CMatrix> {
    let mut term = a * b;
    let mut out = Vec::with_capacity(a.dim());
    for _ in 0..a.dim() {
        let next = b * &term;
        out.push(term);
        term = next;
    }
    out
}

/// Writes S in the basis {BⁿAB} by an exact linear solve.
pub fn polynomial_s_solve(a: &CMatrix, b: &CMatrix, s: &CMatrix) -> Result<PolynomialS> {
    if a.field() != b.field() {
        return Err(Error::ConductorMismatch(a.conductor(), b.conductor()));
    }
    let n = a.conductor().lcm(&s.conductor());
    let (a, b, s) = (a.promote(n)?, b.promote(n)?, s.promote(n)?);
    check_cyclic(&b)?;
    let terms = krylov_terms(&a, &b);
    let cols: Vec<Vec<CycNum>> = terms.iter().map(CMatrix::flatten).collect();
    let sys = CMatrix::from_columns(a.field(), a.dim() * a.dim(), &cols);
    let sol = sys.solve(&s.flatten()).ok_or(Error::NoSolution)?;
    if !sol.kernel.is_empty() {
        return Err(Error::NoSolution);
    }
    Ok(PolynomialS { coeffs: sol.particular })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UniquenessVerdict {
    UniqueStandard,
    Indeterminate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearizedSystem {
    pub d: usize,
    /// Unknown bₘbₙ for each column, m ≤ n, m + n > 0.
    pub monomials: Vec<(usize, usize)>,
    #[serde(skip)]
    pub matrix: CMatrix,
    pub equations: usize,
    pub n_d: usize,
    pub rank: usize,
    pub verdict: UniquenessVerdict,
}

/// Linearizes the skew-upper-triangularity of S² and (BSA)² for
/// S = Σ bₙBⁿAB over the monomials bₘbₙ.
pub fn uniqueness_linearized(a: &CMatrix, b: &CMatrix) -> Result<LinearizedSystem> {
    if a.field() != b.field() {
        return Err(Error::ConductorMismatch(a.conductor(), b.conductor()));
    }
    let d = a.dim();
    if !(4..=5).contains(&d) {
        return Err(Error::WrongForm(format!("dimension {d} is not 4 or 5")));
    }
    if !(a * b).is_skew_lower() {
        return Err(Error::WrongForm("AB is not skew lower triangular".into()));
    }
    let x = krylov_terms(a, b);
    let bxa: Vec<CMatrix> = x.iter().map(|m| &(b * m) * a).collect();
    let monomials: Vec<(usize, usize)> =
        (0..d).flat_map(|m| (m..d).map(move |n| (m, n))).filter(|&(m, n)| m + n > 0).collect();
    let below: Vec<(usize, usize)> =
        (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).filter(|&(i, j)| i + j > d - 1).collect();
    let sym = |ms: &[CMatrix], m: usize, n: usize| {
        if m == n {
            &ms[m] * &ms[m]
        } else {
            &(&ms[m] * &ms[n]) + &(&ms[n] * &ms[m])
        }
    };
    let f = a.field();
    let mut matrix = CMatrix::zeros(f, 2 * below.len(), monomials.len());
    for (c, &(m, n)) in monomials.iter().enumerate() {
        let p = sym(&x, m, n);
        let q = sym(&bxa, m, n);
        for (r, &(i, j)) in below.iter().enumerate() {
            matrix[(r, c)] = p[(i, j)].clone();
            matrix[(below.len() + r, c)] = q[(i, j)].clone();
        }
    }
    let n_d = (d + 2) * (d - 1) / 2;
    let rank = matrix.rank();
    let verdict = if rank == n_d { UniquenessVerdict::UniqueStandard } else { UniquenessVerdict::Indeterminate };
    Ok(LinearizedSystem { d, monomials, equations: matrix.rows(), matrix, n_d, rank, verdict })
}
