#![allow(dead_code)]

use loopbraid::catalog::sample::scalar;
use loopbraid::{CMatrix, CycNum, Field, GroupKind, LBRep};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix<R: Rng>(rng: &mut R, field: &Field, d: usize) -> CMatrix {
    CMatrix::from_fn(field, d, d, |_, _| if rng.gen_bool(0.3) { CycNum::zero(field) } else { scalar(rng, field) })
}

pub fn random_invertible<R: Rng>(rng: &mut R, field: &Field, d: usize) -> CMatrix {
    loop {
        let m = random_matrix(rng, field, d);
        if m.is_invertible() {
            return m;
        }
    }
}

pub fn holds(rep: &LBRep, kind: GroupKind) -> bool {
    rep.verify(kind).map(|r| r.all_hold()).unwrap_or(false)
}

pub fn c(s: &str) -> CycNum {
    CycNum::parse(s).unwrap()
}
