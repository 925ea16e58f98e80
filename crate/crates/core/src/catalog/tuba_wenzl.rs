use serde::{Deserialize, Serialize};

use crate::cyclotomic::{unify, CycNum, Field};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::rep::LBRep;

/// The two 2-dimensional braid pairs with A ≠ B.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tw2Family {
    /// Upper triangular pair; needs −λ₁/λ₂ a primitive cube root of unity.
    Reducible,
    /// Needs λ₁² − λ₁λ₂ + λ₂² ≠ 0.
    Irreducible,
}

/// Parameters of the Tuba–Wenzl normal forms in dimensions 2 to 5.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwParams {
    Dim2 { family: Tw2Family, lambda: [CycNum; 2] },
    Dim3 { lambda: [CycNum; 3] },
    /// `gamma_sq` is γ² with γ⁴ = λ₁λ₂λ₃λ₄.
    Dim4 { lambda: [CycNum; 4], gamma_sq: CycNum },
    /// `gamma` with γ⁵ = λ₁⋯λ₅.
    Dim5 { lambda: [CycNum; 5], gamma: CycNum },
}

impl TwParams {
    pub fn dim(&self) -> usize {
        match self {
            TwParams::Dim2 { .. } => 2,
            TwParams::Dim3 { .. } => 3,
            TwParams::Dim4 { .. } => 4,
            TwParams::Dim5 { .. } => 5,
        }
    }
}

pub fn tuba_wenzl(params: &TwParams) -> Result<LBRep> {
    match params {
        TwParams::Dim2 { family, lambda: [l1, l2] } => tw2(*family, l1, l2),
        TwParams::Dim3 { lambda: [l1, l2, l3] } => tw3(l1, l2, l3),
        TwParams::Dim4 { lambda, gamma_sq } => tw4(lambda, gamma_sq),
        TwParams::Dim5 { lambda, gamma } => tw5(lambda, gamma),
    }
}

fn nonzero(values: &[CycNum]) -> Result<()> {
    if values.iter().any(CycNum::is_zero) {
        Err(Error::ZeroEigenvalue)
    } else {
        Ok(())
    }
}

fn matrix(field: &Field, rows: Vec<Vec<CycNum>>) -> CMatrix {
    CMatrix::from_rows(field, rows).expect("uniform field")
}

pub fn tw2(family: Tw2Family, l1: &CycNum, l2: &CycNum) -> Result<LBRep> {
    let [l1, l2]: [CycNum; 2] = unify(&[l1, l2], 1).try_into().unwrap();
    nonzero(&[l1.clone(), l2.clone()])?;
    let f = l1.field().clone();
    let z = CycNum::zero(&f);
    let disc = &(&l1 * &l1) - &(&l1 * &l2) + &l2 * &l2;
    let a = matrix(&f, vec![vec![l1.clone(), l1.clone()], vec![z.clone(), l2.clone()]]);
    let b = match family {
        Tw2Family::Reducible => {
            if !disc.is_zero() {
                return Err(Error::ConstraintViolated("-l1/l2 must be a primitive cube root of unity".into()));
            }
            matrix(&f, vec![vec![l1.clone(), -&l2], vec![z, l2.clone()]])
        }
        Tw2Family::Irreducible => {
            if disc.is_zero() {
                return Err(Error::ConstraintViolated("l1^2 - l1 l2 + l2^2 must be nonzero".into()));
            }
            matrix(&f, vec![vec![l2.clone(), z], vec![-&l2, l1.clone()]])
        }
    };
    LBRep::braid(a, b)
}

pub fn tw3(l1: &CycNum, l2: &CycNum, l3: &CycNum) -> Result<LBRep> {
    let [l1, l2, l3]: [CycNum; 3] = unify(&[l1, l2, l3], 1).try_into().unwrap();
    nonzero(&[l1.clone(), l2.clone(), l3.clone()])?;
    let f = l1.field().clone();
    let z = || CycNum::zero(&f);
    let t = &(&(&l1 * &l3) / &l2) + &l2;
    let a = matrix(
        &f,
        vec![
            vec![l1.clone(), t.clone(), l2.clone()],
            vec![z(), l2.clone(), l2.clone()],
            vec![z(), z(), l3.clone()],
        ],
    );
    let b = matrix(
        &f,
        vec![
            vec![l3.clone(), z(), z()],
            vec![-&l2, l2.clone(), z()],
            vec![l2.clone(), -&t, l1.clone()],
        ],
    );
    LBRep::braid(a, b)
}

pub fn tw4(lambda: &[CycNum; 4], gamma_sq: &CycNum) -> Result<LBRep> {
    let v = unify(&[&lambda[0], &lambda[1], &lambda[2], &lambda[3], gamma_sq], 1);
    let [l1, l2, l3, l4, g]: [CycNum; 5] = v.try_into().unwrap();
    nonzero(&[l1.clone(), l2.clone(), l3.clone(), l4.clone()])?;
    if &g * &g != &(&(&l1 * &l2) * &l3) * &l4 {
        return Err(Error::ConstraintViolated("gamma^4 must equal l1 l2 l3 l4".into()));
    }
    let f = l1.field().clone();
    let one = CycNum::one(&f);
    let z = || CycNum::zero(&f);
    let u = &(&l1 * &l4) / &g;
    let p1 = &(&one + &u) + &(&u * &u);
    let p2 = &one + &u;
    let a = matrix(
        &f,
        vec![
            vec![l1.clone(), &p1 * &l2, &p1 * &l3, l4.clone()],
            vec![z(), l2.clone(), &p2 * &l3, l4.clone()],
            vec![z(), z(), l3.clone(), l4.clone()],
            vec![z(), z(), z(), l4.clone()],
        ],
    );
    let r = &(&l2 * &l3) / &g;
    let r2 = &r * &r;
    let r3 = &r2 * &r;
    let b = matrix(
        &f,
        vec![
            vec![l4.clone(), z(), z(), z()],
            vec![-&l3, l3.clone(), z(), z()],
            vec![&(&l2 * &l2) * &l3 / &g, -(&(&r + &one) * &l2), l2.clone(), z()],
            vec![-(&l1 * &r3),&(&(&r3 + &r2) + &r) * &l1, -(&(&(&r2 + &r) + &one) * &l1), l1.clone()],
        ],
    );
    LBRep::braid(a, b)
}

pub fn tw5(lambda: &[CycNum; 5], gamma: &CycNum) -> Result<LBRep> {
    let v = unify(&[&lambda[0], &lambda[1], &lambda[2], &lambda[3], &lambda[4], gamma], 1);
    let [l1, l2, l3, l4, l5, g]: [CycNum; 6] = v.try_into().unwrap();
    nonzero(&[l1.clone(), l2.clone(), l3.clone(), l4.clone(), l5.clone()])?;
    let prod = [&l1, &l2, &l3, &l4, &l5].into_iter().fold(CycNum::one(l1.field()), |acc, x| acc * x);
    if g.pow(5)? != prod {
        return Err(Error::ConstraintViolated("gamma^5 must equal l1 l2 l3 l4 l5".into()));
    }
    let f = l1.field().clone();
    let one = CycNum::one(&f);
    let z = || CycNum::zero(&f);
    let g2 = &g * &g;
    let g3 = &g2 * &g;
    let c = &g3 / &(&l1 * &l5);
    let a = matrix(
        &f,
        vec![
            vec![
                l1.clone(),
                &(&one + &(&g2 / &(&l2 * &l4))) * &(&l2 + &(&g3 / &(&l3 * &l4))),
                &(&one + &(&(&l1 * &l5) / &g2)) * &(&(&l3 + &g) + &(&g2 / &l3)),
                &(&one + &(&(&l2 * &l4) / &g2)) * &(&l3 + &(&g3 / &(&l2 * &l4))),
                c.clone(),
            ],
            vec![z(), l2.clone(), &(&l3 + &g) + &(&g2 / &l3), &(&l3 + &g) + &c, c.clone()],
            vec![z(), z(), l3.clone(), &l3 + &c, c.clone()],
            vec![z(), z(), z(), l4.clone(), l4.clone()],
            vec![z(), z(), z(), z(), l5.clone()],
        ],
    );
    let b = CMatrix::from_fn(&f, 5, 5, |i, j| {
        let x = a[(4 - i, 4 - j)].clone();
        if (i + j) % 2 == 1 {
            -x
        } else {
            x
        }
    });
    LBRep::braid(a, b)
}
