use serde::{Deserialize, Serialize};

use crate::cyclotomic::{unify, CycNum, Field};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::rep::{GroupKind, LBRep};

const COUNTEREXAMPLE_A: [[&str; 6]; 6] = [
    ["1", "-w+1", "-w^2+1", "w-1", "w^2-1", "w-1"],
    ["w^2-1", "w^2", "0", "-w^2+1", "0", "0"],
    ["w^2-1", "w^2-1", "w^2", "-w^2+1", "-w^2+1", "0"],
    ["0", "w-1", "w^2-1", "-w", "-w^2+1", "-w+1"],
    ["-w^2+1", "-w^2+1", "0", "w^2-1", "-1", "0"],
    ["-w^2+1", "-w^2+1", "-w^2+1", "w^2-1", "w^2-1", "-1"],
];

const COUNTEREXAMPLE_B: [[&str; 6]; 6] = [
    ["1", "-w+1", "-w^2+1", "-w+1", "-w^2+1", "-w+1"],
    ["w^2-1", "w^2", "0", "w^2-1", "0", "0"],
    ["w^2-1", "w^2-1", "w^2", "w^2-1", "w^2-1", "0"],
    ["0", "-w+1", "-w^2+1", "-w", "-w^2+1", "-w+1"],
    ["w^2-1", "w^2-1", "0", "w^2-1", "-1", "0"],
    ["w^2-1", "w^2-1", "w^2-1", "w^2-1", "w^2-1", "-1"],
];

fn parse_table(field: &Field, table: &[[&str; 6]; 6]) -> CMatrix {
    CMatrix::from_fn(field, 6, 6, |i, j| {
        CycNum::parse_with_conductor(table[i][j], field.conductor())
            .and_then(|x| x.promote(field.conductor()))
            .expect("constant entry parses")
    })
}

/// The irreducible 6-dimensional B₃ representation over Z[ω] that admits no
/// extension to LB₃.
pub fn counterexample6() -> LBRep {
    let f = Field::new(3);
    let a = parse_table(&f, &COUNTEREXAMPLE_A);
    let b = parse_table(&f, &COUNTEREXAMPLE_B);
    LBRep::braid(a, b).expect("constant representation is well formed")
}

fn swap2(field: &Field) -> CMatrix {
    CMatrix::from_ints(field, &[&[0, 1], &[1, 0]])
}

/// A = B = [[λ, x], [0, −λ]] with S₁ = S₂ the coordinate swap.
pub fn v1_family(lambda: &CycNum, x: &CycNum) -> Result<LBRep> {
    let [l, x]: [CycNum; 2] = unify(&[lambda, x], 1).try_into().unwrap();
    if l.is_zero() {
        return Err(Error::ZeroEigenvalue);
    }
    let f = l.field().clone();
    let a = CMatrix::from_rows(&f, vec![vec![l.clone(), x], vec![CycNum::zero(&f), -&l]])?;
    let s = swap2(&f);
    LBRep::full(GroupKind::LB3, a.clone(), a, s.clone(), s)
}

/// Shape of the first diagonal block in the A = B family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockVariant {
    /// No trailing corner entry.
    Plain,
    /// With the trailing corner entry.
    Capped,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    fn apply(self, x: CycNum) -> CycNum {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }
}

/// The family with A = B = diag(A₁, A₂), S₂ the block swap and S = μ⁻¹ωA².
///
/// A₁ is √μ followed by 2×2 blocks [[0, μ], [1, 0]], closed by ∓√μ when
/// `a1` is `Capped` (the sign picks the corner). A₂ is a run of blocks
/// [[0, μω], [1, 0]], closed by √μω² when `a2` is `Capped`. Both blocks
/// must have size `n`.
pub fn abeq_family(
    n: usize,
    mu: &CycNum,
    sqrt_mu: &CycNum,
    a1: BlockVariant,
    a2: BlockVariant,
    sign: Sign,
) -> Result<LBRep> {
    if n == 0 {
        return Err(Error::InvalidBlockCombination("block size must be positive".into()));
    }
    let odd = n % 2 == 1;
    match (a1, a2) {
        (BlockVariant::Plain, BlockVariant::Capped) if odd => {}
        (BlockVariant::Capped, BlockVariant::Plain) if !odd => {}
        _ => {
            return Err(Error::InvalidBlockCombination(format!(
                "A1 {a1:?} with A2 {a2:?} does not give square blocks of size {n}"
            )))
        }
    }
    let [mu, r]: [CycNum; 2] = unify(&[mu, sqrt_mu], 3).try_into().unwrap();
    if mu.is_zero() {
        return Err(Error::ZeroParameter("mu"));
    }
    if &r * &r != mu {
        return Err(Error::NotASquareRoot);
    }
    let f = mu.field().clone();
    let w = CycNum::omega(&f)?;
    let mut a = CMatrix::zeros(&f, 2 * n, 2 * n);

    a[(0, 0)] = r.clone();
    let mut i = 1;
    while i + 1 < n {
        a[(i, i + 1)] = mu.clone();
        a[(i + 1, i)] = CycNum::one(&f);
        i += 2;
    }
    if a1 == BlockVariant::Capped {
        a[(n - 1, n - 1)] = sign.apply(-&r);
    }

    let mw = &mu * &w;
    let mut i = n;
    while i + 1 < 2 * n {
        a[(i, i + 1)] = mw.clone();
        a[(i + 1, i)] = CycNum::one(&f);
        i += 2;
    }
    if a2 == BlockVariant::Capped {
        a[(2 * n - 1, 2 * n - 1)] = &r * &(&w * &w);
    }

    let id = CMatrix::identity(&f, n);
    let mut s2 = CMatrix::zeros(&f, 2 * n, 2 * n);
    s2.set_block(0, n, &id);
    s2.set_block(n, 0, &id);
    let s = (&a * &a).scale(&(&w / &mu));
    let s1 = &s * &s2;
    LBRep::full(GroupKind::LB3, a.clone(), a, s1, s2)
}

fn lkb_params(q: &CycNum, t: &CycNum) -> Result<(CycNum, CycNum)> {
    let [q, t]: [CycNum; 2] = unify(&[q, t], 1).try_into().unwrap();
    if q.is_zero() {
        return Err(Error::ZeroParameter("q"));
    }
    if t.is_zero() {
        return Err(Error::ZeroParameter("t"));
    }
    Ok((q, t))
}

/// The Lawrence–Krammer–Bigelow representation of B₃.
pub fn lkb3(q: &CycNum, t: &CycNum) -> Result<LBRep> {
    let (q, t) = lkb_params(q, t)?;
    let f = q.field().clone();
    let one = CycNum::one(&f);
    let z = || CycNum::zero(&f);
    let tq = &t * &q;
    let tq2 = &tq * &q;
    let qm1 = &q - &one;
    let a = CMatrix::from_rows(
        &f,
        vec![
            vec![tq2.clone(), z(), &tq * &qm1],
            vec![z(), &one - &q, q.clone()],
            vec![z(), one.clone(), z()],
        ],
    )?;
    let b = CMatrix::from_rows(
        &f,
        vec![
            vec![&one - &q, z(), one.clone()],
            vec![z(), tq2.clone(), &tq2 * &qm1],
            vec![q.clone(), z(), z()],
        ],
    )?;
    LBRep::braid(a, b)
}

/// False on the locus tq² = −1, tq = 1 or q = 1.
pub fn lkb3_is_generic(q: &CycNum, t: &CycNum) -> bool {
    let Ok((q, t)) = lkb_params(q, t) else {
        return false;
    };
    let tq = &t * &q;
    !((&tq * &q) + CycNum::one(q.field())).is_zero() && !tq.is_one() && !q.is_one()
}

/// A 3-dimensional SLB₃ representation in which S₁S₂ is not a multiple of AB.
pub fn perm3(t: &CycNum) -> Result<LBRep> {
    if t.is_zero() {
        return Err(Error::ZeroParameter("t"));
    }
    if t.is_one() {
        return Err(Error::ConstraintViolated("t must differ from 1".into()));
    }
    let f = t.field().clone();
    let (z, o) = (CycNum::zero(&f), CycNum::one(&f));
    let a = CMatrix::from_rows(
        &f,
        vec![vec![z.clone(), t.clone(), z.clone()], vec![o.clone(), z.clone(), z.clone()], vec![z.clone(), z.clone(), o.clone()]],
    )?;
    let b = CMatrix::from_rows(
        &f,
        vec![vec![o.clone(), z.clone(), z.clone()], vec![z.clone(), z.clone(), t.clone()], vec![z.clone(), o.clone(), z]],
    )?;
    let s1 = CMatrix::from_ints(&f, &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
    let s2 = CMatrix::from_ints(&f, &[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
    LBRep::full(GroupKind::SLB3, a, b, s1, s2)
}
