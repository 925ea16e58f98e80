use num_bigint::BigInt;

use crate::cyclotomic::{CycNum, Field};
use crate::error::{Error, Result};
use crate::extend;
use crate::linalg::CMatrix;
use crate::rep::LBRep;

/// Eigenvalues λ₀..λ_d with λᵢλ_{d−i} = c for every i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialParams {
    pub lambda: Vec<CycNum>,
    pub c: CycNum,
}

impl BinomialParams {
    pub fn new(lambda: Vec<CycNum>, c: CycNum) -> Result<BinomialParams> {
        if lambda.is_empty() {
            return Err(Error::ConstraintViolated("need at least one eigenvalue".into()));
        }
        let mut refs: Vec<&CycNum> = lambda.iter().collect();
        refs.push(&c);
        let mut v = crate::cyclotomic::unify(&refs, 1);
        let c = v.pop().unwrap();
        let p = BinomialParams { lambda: v, c };
        p.check()?;
        Ok(p)
    }

    /// d, so that the matrices have size d + 1.
    pub fn degree(&self) -> usize {
        self.lambda.len() - 1
    }

    pub fn field(&self) -> &Field {
        self.c.field()
    }

    fn check(&self) -> Result<()> {
        if self.c.is_zero() {
            return Err(Error::ZeroParameter("c"));
        }
        let d = self.degree();
        for i in 0..=d {
            if &self.lambda[i] * &self.lambda[d - i] != self.c {
                return Err(Error::ConstraintViolated(format!("lambda_{i} * lambda_{} must equal c", d - i)));
            }
        }
        Ok(())
    }

    /// The scalar (−1)^d / c with S = k·AB of order three.
    pub fn k(&self) -> CycNum {
        let k = self.c.inv().expect("c is nonzero");
        if self.degree() % 2 == 1 {
            -k
        } else {
            k
        }
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// The ordered triangular pair A_ij = C(d−i, d−j)·λ_j, B_ij = (−1)^{i+j}C(i, j)·λ_{d−i}.
pub fn binomial_matrices(params: &BinomialParams) -> Result<LBRep> {
    params.check()?;
    let d = params.degree();
    let f = params.field().clone();
    let a = CMatrix::from_fn(&f, d + 1, d + 1, |i, j| {
        if j < i {
            return CycNum::zero(&f);
        }
        &CycNum::from_integer(&f, binom(d - i, d - j)) * &params.lambda[j]
    });
    let b = CMatrix::from_fn(&f, d + 1, d + 1, |i, j| {
        let x = &CycNum::from_integer(&f, binom(i, j)) * &params.lambda[d - i];
        if (i + j) % 2 == 1 {
            -x
        } else {
            x
        }
    });
    LBRep::braid(a, b)
}

/// The binomial representation together with its standard extension S = (−1)^d/c·AB.
pub fn binomial_rep(params: &BinomialParams) -> Result<LBRep> {
    let rep = binomial_matrices(params)?;
    let (ext, _) = extend::extend_with_k(&rep, &params.k())?;
    Ok(ext)
}
