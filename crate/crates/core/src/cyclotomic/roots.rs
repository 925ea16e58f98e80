use std::collections::HashSet;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Signed;

use super::field::Field;
use super::number::{CycNum, Rational};

/// Upper bound on the branch combinations tried by the embedding search.
const MAX_BRANCH_COMBINATIONS: u64 = 4_000_000;
const MAX_DENOMINATOR: i64 = 1_000_000;

/// All `y` in the field of `x` with `y^n = x`.
///
/// An empty result means the roots live in a larger cyclotomic field or in
/// no cyclotomic field at all.
pub fn nth_root_in_field(x: &CycNum, n: u32) -> Vec<CycNum> {
    assert!(n >= 1, "root order must be positive");
    let field = x.field().clone();
    if x.is_zero() {
        return vec![x.clone()];
    }
    let seed = root_times_unity(x, n).or_else(|| root_by_embeddings(x, n));
    let Some(y0) = seed else {
        return Vec::new();
    };
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for u in roots_of_unity(&field, n) {
        let y = &y0 * &u;
        if seen.insert(y.clone()) {
            out.push(y);
        }
    }
    out
}

/// The n-th roots of unity contained in the field.
pub fn roots_of_unity(field: &Field, n: u32) -> Vec<CycNum> {
    let m = u64::from(field.conductor());
    let n64 = u64::from(n);
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for i in 0..m {
        let z = CycNum::zeta_power(field, i as i64);
        if (i * n64) % m == 0 && seen.insert(z.clone()) {
            out.push(z.clone());
        }
        // -ζ^i is a new element only for odd conductors
        if m % 2 == 1 && n64 % 2 == 0 && (i * n64) % m == 0 {
            let w = -z;
            if seen.insert(w.clone()) {
                out.push(w);
            }
        }
    }
    out
}

fn rational_nth_root(r: &Rational, n: u32) -> Option<Rational> {
    if r.is_negative() && n % 2 == 0 {
        return None;
    }
    let root = |v: &BigInt| -> Option<BigInt> {
        let s = v.abs().nth_root(n);
        (num_traits::pow(s.clone(), n as usize) == v.abs()).then_some(s)
    };
    let p = root(r.numer())?;
    let q = root(r.denom())?;
    let s = Rational::new(p, q);
    Some(if r.is_negative() { -s } else { s })
}

/// Finds a root of the form s·ζ^i (s rational) when x is itself a rational
/// multiple of a root of unity.
fn root_times_unity(x: &CycNum, n: u32) -> Option<CycNum> {
    let field = x.field();
    let m = i64::from(field.conductor());
    let (r, j) = (0..m).find_map(|j| {
        let t = x * &CycNum::zeta_power(field, -j);
        t.to_rational().map(|r| (r, j))
    })?;
    let n64 = i64::from(n);
    for i in 0..m {
        let e = (n64 * i - j).rem_euclid(m);
        let target = if e == 0 {
            r.clone()
        } else if m % 2 == 0 && e == m / 2 {
            -r.clone()
        } else {
            continue;
        };
        if let Some(s) = rational_nth_root(&target, n) {
            let y = CycNum::zeta_power(field, i).scale(&s);
            debug_assert_eq!(y.pow(n64).unwrap(), *x);
            return Some(y);
        }
    }
    None
}

fn rational_approx(v: f64) -> Option<Rational> {
    if !v.is_finite() || v.abs() > 1e12 {
        return None;
    }
    let tol = 1e-8 * (1.0 + v.abs());
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut r = v;
    for _ in 0..64 {
        let a = r.floor();
        let ai = a as i128;
        let h2 = ai * h1 + h0;
        let k2 = ai * k1 + k0;
        if k2 > i128::from(MAX_DENOMINATOR) {
            return None;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if (h1 as f64 / k1 as f64 - v).abs() < tol {
            return Some(Rational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = r - a;
        if frac.abs() < 1e-15 {
            break;
        }
        r = 1.0 / frac;
    }
    None
}

/// Searches over branch choices of the root at each pair of complex
/// embeddings, reconstructs rational coefficients and verifies exactly.
fn root_by_embeddings(x: &CycNum, n: u32) -> Option<CycNum> {
    let field = x.field();
    let m = field.conductor();
    if m <= 2 {
        return None;
    }
    let phi = field.degree();
    let units: Vec<u32> = field.0.units.clone();
    let reps: Vec<u32> = units.iter().copied().filter(|&a| a < m - a).collect();
    let combos = u64::from(n).checked_pow(reps.len() as u32)?;
    if combos > MAX_BRANCH_COMBINATIONS {
        return None;
    }
    let tau = std::f64::consts::TAU;
    let v = DMatrix::from_fn(phi, phi, |r, t| {
        Complex64::from_polar(1.0, tau * f64::from(units[r]) * t as f64 / f64::from(m))
    });
    let w = v.try_inverse()?;
    let rep_cols: Vec<Vec<Complex64>> = reps
        .iter()
        .map(|a| {
            let r = units.iter().position(|u| u == a).unwrap();
            (0..phi).map(|t| w[(t, r)]).collect()
        })
        .collect();
    let branches: Vec<Vec<Complex64>> = reps
        .iter()
        .map(|&a| {
            let base = x.embed(a).powf(1.0 / f64::from(n));
            (0..n)
                .map(|j| base * Complex64::from_polar(1.0, tau * f64::from(j) / f64::from(n)))
                .collect()
        })
        .collect();

    fn search(
        depth: usize,
        acc: &mut Vec<f64>,
        cols: &[Vec<Complex64>],
        branches: &[Vec<Complex64>],
        check: &mut dyn FnMut(&[f64]) -> Option<CycNum>,
    ) -> Option<CycNum> {
        if depth == cols.len() {
            return check(acc);
        }
        for b in &branches[depth] {
            let contrib: Vec<f64> = cols[depth].iter().map(|c| 2.0 * (c * b).re).collect();
            for (a, c) in acc.iter_mut().zip(&contrib) {
                *a += c;
            }
            let found = search(depth + 1, acc, cols, branches, check);
            for (a, c) in acc.iter_mut().zip(&contrib) {
                *a -= c;
            }
            if found.is_some() {
                return found;
            }
        }
        None
    }

    let mut check = |coeffs: &[f64]| -> Option<CycNum> {
        let rats: Option<Vec<Rational>> = coeffs.iter().map(|&c| rational_approx(c)).collect();
        let y = CycNum::from_coeffs(field, &rats?).ok()?;
        (y.pow(i64::from(n)).ok()? == *x).then_some(y)
    };
    let mut acc = vec![0.0; phi];
    search(0, &mut acc, &rep_cols, &branches, &mut check)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: Vec<CycNum>) -> HashSet<CycNum> {
        v.into_iter().collect()
    }

    #[test]
    fn cube_roots_of_one() {
        let f = Field::new(3);
        let roots = nth_root_in_field(&CycNum::one(&f), 3);
        let expected = set((0..3).map(|k| CycNum::zeta_power(&f, k)).collect());
        assert_eq!(set(roots), expected);
    }

    #[test]
    fn square_roots_of_omega() {
        let w = CycNum::root_of_unity(3, 1);
        let roots = set(nth_root_in_field(&w, 2));
        let w2 = CycNum::root_of_unity(3, 2);
        assert_eq!(roots, set(vec![w2.clone(), -w2]));
        let w12 = w.promote(12).unwrap();
        let roots = nth_root_in_field(&w12, 2);
        assert_eq!(roots.len(), 2);
        for r in roots {
            assert_eq!(&r * &r, w12);
        }
    }

    #[test]
    fn square_roots_of_minus_one() {
        let f = Field::new(4);
        let roots = set(nth_root_in_field(&CycNum::from_integer(&f, -1), 2));
        let i = CycNum::zeta_power(&f, 1);
        assert_eq!(roots, set(vec![i.clone(), -i]));
    }

    #[test]
    fn irrational_square_roots() {
        let two = CycNum::from_integer(&Field::new(8), 2);
        let roots = nth_root_in_field(&two, 2);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert_eq!(r * r, two);
            assert!(r.to_rational().is_none());
        }
        let five = CycNum::from_integer(&Field::new(5), 5);
        assert_eq!(nth_root_in_field(&five, 2).len(), 2);
        let m3 = CycNum::from_integer(&Field::new(3), -3);
        assert_eq!(nth_root_in_field(&m3, 2).len(), 2);
    }

    #[test]
    fn no_root_in_any_cyclotomic() {
        let x = CycNum::from_ratio(&Field::new(3), 1, 36);
        assert!(nth_root_in_field(&x, 3).is_empty());
        let x = CycNum::from_ratio(&Field::new(12), 1, 36);
        assert!(nth_root_in_field(&x, 3).is_empty());
    }

    #[test]
    fn rational_multiples() {
        let f = Field::new(15);
        let x = CycNum::zeta_power(&f, 6).scale(&Rational::new((-8).into(), 27.into()));
        assert!(nth_root_in_field(&CycNum::zeta_power(&f, 4), 3).is_empty());
        let roots = nth_root_in_field(&x, 3);
        assert_eq!(roots.len(), 3);
        for r in roots {
            assert_eq!(r.pow(3).unwrap(), x);
        }
    }

    #[test]
    fn zero_and_identity_order() {
        let f = Field::new(7);
        assert_eq!(nth_root_in_field(&CycNum::zero(&f), 4), vec![CycNum::zero(&f)]);
        let x = CycNum::parse_with_conductor("3 - 2*z7^3", 7).unwrap();
        assert_eq!(nth_root_in_field(&x, 1), vec![x]);
    }

    #[test]
    fn odd_conductor_signs() {
        let f = Field::new(3);
        let roots = roots_of_unity(&f, 6);
        assert_eq!(roots.len(), 6);
        assert_eq!(nth_root_in_field(&CycNum::one(&f), 2).len(), 2);
    }
}
