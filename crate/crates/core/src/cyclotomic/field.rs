use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) struct FieldCtx {
    pub(crate) n: u32,
    pub(crate) phi: usize,
    /// `powers[k]` is ζ^k reduced modulo Φ_N, for 0 ≤ k < N.
    pub(crate) powers: Vec<Vec<BigInt>>,
    pub(crate) units: Vec<u32>,
}

/// Handle to the cyclotomic field Q(ζ_N). Cheap to clone.
#[derive(Clone)]
pub struct Field(pub(crate) Arc<FieldCtx>);

static CACHE: OnceLock<RwLock<HashMap<u32, Field>>> = OnceLock::new();

impl Field {
    /// # Panics
    /// Panics if `n == 0`.
    pub fn new(n: u32) -> Field {
        assert!(n >= 1, "conductor must be positive");
        let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
        if let Some(f) = cache.read().unwrap().get(&n) {
            return f.clone();
        }
        let field = Field(Arc::new(FieldCtx::build(n)));
        cache.write().unwrap().entry(n).or_insert(field).clone()
    }

    pub fn conductor(&self) -> u32 {
        self.0.n
    }

    pub fn degree(&self) -> usize {
        self.0.phi
    }

    pub fn has_cube_roots_of_unity(&self) -> bool {
        self.0.n % 3 == 0
    }

    /// Coefficients of Φ_N, lowest degree first.
    pub fn cyclotomic_polynomial(&self) -> Vec<BigInt> {
        cyclotomic_poly(self.0.n)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.n == other.0.n
    }
}

impl Eq for Field {}

impl std::hash::Hash for Field {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.n.hash(state);
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(z{})", self.0.n)
    }
}

impl FieldCtx {
    fn build(n: u32) -> FieldCtx {
        let phi_poly = cyclotomic_poly(n);
        let phi = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with the monic Φ_N
            let top = cur[phi - 1].clone();
            let mut next = vec![BigInt::zero(); phi];
            for i in (1..phi).rev() {
                next[i] = cur[i - 1].clone();
            }
            if !top.is_zero() {
                for (i, c) in phi_poly.iter().take(phi).enumerate() {
                    next[i] -= &top * c;
                }
            }
            cur = next;
        }
        let units = (1..=n.max(1)).filter(|k| k.gcd(&n) == 1).map(|k| k % n.max(1)).collect();
        FieldCtx { n, phi, powers, units }
    }
}

pub fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| k.gcd(&n) == 1).count()
}

fn mobius(mut n: u32) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic-up-to-sign polynomial with unit leading coefficient.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    debug_assert!(lead.abs().is_one());
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &rem[i + db] * &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in (1..=n).filter(|d| n % d == 0) {
        let mut xd = vec![BigInt::zero(); d as usize + 1];
        xd[0] = -BigInt::one();
        xd[d as usize] = BigInt::one();
        match mobius(n / d) {
            1 => num = poly_mul(&num, &xd),
            -1 => den = poly_mul(&den, &xd),
            _ => {}
        }
    }
    poly_div_exact(&num, &den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_poly(15).len(), 9);
        assert_eq!(cyclotomic_poly(60).len(), 17);
    }

    #[test]
    fn phi_matches_degree() {
        for n in 1..80 {
            assert_eq!(Field::new(n).degree(), euler_phi(n), "n = {n}");
        }
    }

    #[test]
    fn power_table_wraps() {
        let f = Field::new(5);
        let ctx = &f.0;
        assert_eq!(ctx.powers[0], ints(&[1, 0, 0, 0]));
        assert_eq!(ctx.powers[4], ints(&[-1, -1, -1, -1]));
    }
}
