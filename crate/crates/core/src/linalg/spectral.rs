use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

use super::elim::Span;
use super::matrix::CMatrix;
use super::poly::FieldPoly;

impl CMatrix {
    /// Monic characteristic polynomial det(xI − X) by Faddeev–LeVerrier.
    pub fn char_poly(&self) -> FieldPoly {
        let d = self.dim();
        let field = self.field();
        let mut coeffs = vec![CycNum::zero(field); d + 1];
        coeffs[d] = CycNum::one(field);
        let mut m = CMatrix::zeros(field, d, d);
        for k in 1..=d {
            m = &(self * &m) + &CMatrix::scalar(&coeffs[d + 1 - k], d);
            let t = (self * &m).trace();
            coeffs[d - k] = -(t * CycNum::from_ratio(field, 1, k as i64));
        }
        FieldPoly::new(field, coeffs)
    }

    /// Monic minimal polynomial, the lcm of the minimal polynomials of the
    /// standard basis vectors.
    pub fn min_poly(&self) -> FieldPoly {
        let d = self.dim();
        let field = self.field();
        let mut acc = FieldPoly::constant(&CycNum::one(field));
        for i in 0..d {
            let mut e = vec![CycNum::zero(field); d];
            e[i] = CycNum::one(field);
            let local = self.vector_min_poly(&e);
            if !local.divides(&acc) {
                acc = acc.lcm(&local);
            }
        }
        acc
    }

    /// Monic generator of the annihilator ideal of `v` under `self`.
    pub fn vector_min_poly(&self, v: &[CycNum]) -> FieldPoly {
        let field = self.field();
        let d = self.dim();
        let mut span = Span::new(field, d);
        let mut krylov: Vec<Vec<CycNum>> = Vec::new();
        let mut cur = v.to_vec();
        loop {
            if !span.insert(&cur) {
                break;
            }
            krylov.push(cur.clone());
            cur = mat_vec(self, &cur);
        }
        let k = krylov.len();
        if k == 0 {
            return FieldPoly::constant(&CycNum::one(field));
        }
        let basis = CMatrix::from_columns(field, d, &krylov);
        let sol = basis.solve(&cur).expect("dependent Krylov vector lies in the span");
        let mut coeffs: Vec<CycNum> = sol.particular.iter().map(|c| -c).collect();
        coeffs.push(CycNum::one(field));
        FieldPoly::new(field, coeffs)
    }

    pub fn is_diagonalizable(&self) -> bool {
        self.min_poly().is_squarefree()
    }

    /// Lagrange projectors (P_1, P_ω, P_ω²) of an operator with S³ = I.
    ///
    /// # Errors
    /// `NotOrderThree` when S³ ≠ I; `NoCubeRootOfUnity` when 3 ∤ N.
    pub fn eigenprojectors_order3(&self) -> Result<[CMatrix; 3]> {
        let d = self.dim();
        let field = self.field();
        let s3 = self * &(self * self);
        if !s3.is_identity() {
            return Err(Error::NotOrderThree);
        }
        let w = CycNum::omega(field)?;
        let eig = [CycNum::one(field), w.clone(), &w * &w];
        let id = CMatrix::identity(field, d);
        let projector = |l: usize| -> CMatrix {
            let mut p = id.clone();
            for (m, mu) in eig.iter().enumerate() {
                if m != l {
                    let factor = (&eig[l] - mu).inv().expect("distinct eigenvalues");
                    p = &p * &(self - &CMatrix::scalar(mu, d)).scale(&factor);
                }
            }
            p
        };
        Ok([projector(0), projector(1), projector(2)])
    }

    /// True when `self` and `other` are proportional, i.e. the 2×d² matrix of
    /// their flattenings has rank ≤ 1.
    pub fn is_proportional_to(&self, other: &CMatrix) -> bool {
        let rows = vec![self.flatten(), other.flatten()];
        CMatrix::from_rows(self.field(), rows).expect("same field").rank() < 2
    }
}

fn mat_vec(m: &CMatrix, v: &[CycNum]) -> Vec<CycNum> {
    (0..m.rows())
        .map(|i| {
            m.row(i).iter().zip(v).fold(CycNum::zero(m.field()), |acc, (a, b)| {
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    acc + a * b
                }
            })
        })
        .collect()
}

/// Dimension of the unital algebra generated by `gens`.
///
/// # Panics
/// Panics on an empty generator list or mixed dimensions.
pub fn algebra_dimension(gens: &[&CMatrix]) -> usize {
    algebra_basis(gens).len()
}

/// A basis of the unital algebra generated by `gens`, as matrices.
pub fn algebra_basis(gens: &[&CMatrix]) -> Vec<CMatrix> {
    assert!(!gens.is_empty(), "need at least one generator");
    let d = gens[0].dim();
    assert!(gens.iter().all(|g| g.dim() == d), "generators must share a dimension");
    let field = gens[0].field();
    let mut span = Span::new(field, d * d);
    let mut basis = Vec::new();
    let mut frontier = Vec::new();
    for m in std::iter::once(CMatrix::identity(field, d)).chain(gens.iter().map(|g| (*g).clone())) {
        if span.insert(&m.flatten()) {
            basis.push(m.clone());
            frontier.push(m);
        }
    }
    let mut rounds = 0;
    while !frontier.is_empty() && rounds <= d * d {
        rounds += 1;
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                if span.dim() == d * d {
                    return basis;
                }
                let y = x * *g;
                if span.insert(&y.flatten()) {
                    basis.push(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    basis
}
