//! Random parameter draws for the catalog families.
//!
//! Scalars are rationals of height at most 5 times a root of unity of the
//! working field. Constrained parameters (the last eigenvalue of a
//! Tuba–Wenzl family, the paired binomial eigenvalues, cube parameters) are
//! solved for so that every draw satisfies its family's hypotheses.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{
    abeq_family, binomial_rep, counterexample6, lkb3, perm3, tuba_wenzl, v1_family, BinomialParams, BlockVariant,
    Sign, Tw2Family, TwParams,
};
use crate::cyclotomic::{CycNum, Field};
use crate::error::{Error, Result};
use crate::rep::{GroupKind, LBRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Tw2,
    Tw3,
    Tw4,
    Tw5,
    Binomial,
    Counterexample6,
    V1,
    Abeq,
    Lkb3,
    Perm3,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Tw2,
        Family::Tw3,
        Family::Tw4,
        Family::Tw5,
        Family::Binomial,
        Family::Counterexample6,
        Family::V1,
        Family::Abeq,
        Family::Lkb3,
        Family::Perm3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tw2 => "tw2",
            Family::Tw3 => "tw3",
            Family::Tw4 => "tw4",
            Family::Tw5 => "tw5",
            Family::Binomial => "binomial",
            Family::Counterexample6 => "counterexample6",
            Family::V1 => "v1",
            Family::Abeq => "abeq",
            Family::Lkb3 => "lkb3",
            Family::Perm3 => "perm3",
        }
    }

    /// The group the constructor's output represents.
    pub fn target(self) -> GroupKind {
        match self {
            Family::Binomial | Family::V1 | Family::Abeq => GroupKind::LB3,
            Family::Perm3 => GroupKind::SLB3,
            _ => GroupKind::B3,
        }
    }

    /// Draws one representation of this family over `field` (promoted as needed).
    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R, field: &Field) -> Result<LBRep> {
        match self {
            Family::Tw2 | Family::Tw3 | Family::Tw4 | Family::Tw5 => {
                let dim = match self {
                    Family::Tw2 => 2,
                    Family::Tw3 => 3,
                    Family::Tw4 => 4,
                    _ => 5,
                };
                tuba_wenzl(&tw_params(rng, field, dim))
            }
            Family::Binomial => {
                let d = rng.gen_range(1..=5);
                binomial_rep(&binomial_params(rng, field, d))
            }
            Family::Counterexample6 => Ok(counterexample6()),
            Family::V1 => {
                let x = if rng.gen_bool(0.25) { CycNum::zero(field) } else { scalar(rng, field) };
                v1_family(&scalar(rng, field), &x)
            }
            Family::Abeq => {
                let n = rng.gen_range(1..=3);
                let r = scalar(rng, field);
                let mu = &r * &r;
                let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
                let (a1, a2) = if n % 2 == 1 {
                    (BlockVariant::Plain, BlockVariant::Capped)
                } else {
                    (BlockVariant::Capped, BlockVariant::Plain)
                };
                abeq_family(n, &mu, &r, a1, a2, sign)
            }
            Family::Lkb3 => {
                let s = scalar(rng, field);
                lkb3(&scalar(rng, field), &s.pow(3)?)
            }
            Family::Perm3 => loop {
                let t = scalar(rng, field).pow(3)?;
                if !t.is_one() {
                    return perm3(&t);
                }
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// A nonzero rational of height at most 5 times a root of unity of `field`.
pub fn scalar<R: Rng + ?Sized>(rng: &mut R, field: &Field) -> CycNum {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-5..=5);
    }
    let q = rng.gen_range(1..=5);
    let k = rng.gen_range(0..field.conductor().max(1)) as i64;
    &CycNum::from_ratio(field, p, q) * &CycNum::zeta_power(field, k)
}

/// Irreducible-family 2-dimensional parameters; with probability 1/3 the
/// eigenvalues are forced to satisfy λ₁ = −λ₂.
pub fn tw2_irreducible<R: Rng + ?Sized>(rng: &mut R, field: &Field) -> [CycNum; 2] {
    loop {
        let l2 = scalar(rng, field);
        let l1 = if rng.gen_bool(1.0 / 3.0) { -&l2 } else { scalar(rng, field) };
        let disc = &(&l1 * &l1) - &(&l1 * &l2) + &l2 * &l2;
        if !disc.is_zero() {
            return [l1, l2];
        }
    }
}

pub fn tw_params<R: Rng + ?Sized>(rng: &mut R, field: &Field, dim: usize) -> TwParams {
    match dim {
        2 => {
            if field.has_cube_roots_of_unity() && rng.gen_bool(0.25) {
                let l2 = scalar(rng, field);
                let w = CycNum::omega(field).expect("field contains omega");
                let w = if rng.gen_bool(0.5) { w.clone() } else { &w * &w };
                TwParams::Dim2 { family: Tw2Family::Reducible, lambda: [-(&w * &l2), l2] }
            } else {
                TwParams::Dim2 { family: Tw2Family::Irreducible, lambda: tw2_irreducible(rng, field) }
            }
        }
        3 => {
            let v = draw(rng, field, 3);
            let l3 = &v[2].pow(3).unwrap() / &(&v[0] * &v[1]);
            TwParams::Dim3 { lambda: [v[0].clone(), v[1].clone(), l3] }
        }
        4 => {
            let v = draw(rng, field, 4);
            let g = v[3].clone();
            let l4 = &(&g * &g) / &(&(&v[0] * &v[1]) * &v[2]);
            TwParams::Dim4 { lambda: [v[0].clone(), v[1].clone(), v[2].clone(), l4], gamma_sq: g }
        }
        5 => {
            let v = draw(rng, field, 5);
            let g = v[4].clone();
            let prod = &(&(&v[0] * &v[1]) * &v[2]) * &v[3];
            let l5 = &g.pow(5).unwrap() / &prod;
            TwParams::Dim5 { lambda: [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone(), l5], gamma: g }
        }
        _ => panic!("Tuba-Wenzl families exist in dimensions 2 to 5"),
    }
}

/// Parameters of degree `d`; for even `d` the middle eigenvalue is a square root of c.
pub fn binomial_params<R: Rng + ?Sized>(rng: &mut R, field: &Field, d: usize) -> BinomialParams {
    let mut lambda = vec![CycNum::zero(field); d + 1];
    let c = if d % 2 == 0 {
        let h = scalar(rng, field);
        let c = &h * &h;
        lambda[d / 2] = h;
        c
    } else {
        scalar(rng, field)
    };
    for i in 0..(d + 1) / 2 {
        let x = scalar(rng, field);
        lambda[d - i] = &c / &x;
        lambda[i] = x;
    }
    BinomialParams::new(lambda, c).expect("draw satisfies the pairing constraint")
}

fn draw<R: Rng + ?Sized>(rng: &mut R, field: &Field, n: usize) -> Vec<CycNum> {
    (0..n).map(|_| scalar(rng, field)).collect()
}
