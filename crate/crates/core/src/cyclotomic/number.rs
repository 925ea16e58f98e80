use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Field;
use crate::error::{Error, Result};

pub type Rational = BigRational;

/// An element of Q(ζ_N) stored as `num / den` over the power basis
/// 1, ζ, …, ζ^{φ(N)−1}, with `den > 0` and the content reduced.
#[derive(Clone)]
pub struct CycNum {
    field: Field,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycNum {
    pub fn zero(field: &Field) -> CycNum {
        CycNum { field: field.clone(), num: vec![BigInt::zero(); field.degree()], den: BigInt::one() }
    }

    pub fn one(field: &Field) -> CycNum {
        CycNum::from_integer(field, 1)
    }

    pub fn from_integer(field: &Field, v: impl Into<BigInt>) -> CycNum {
        let mut x = CycNum::zero(field);
        x.num[0] = v.into();
        x
    }

    pub fn from_ratio(field: &Field, p: i64, q: i64) -> CycNum {
        CycNum::from_rational(field, &Rational::new(p.into(), q.into()))
    }

    pub fn from_rational(field: &Field, r: &Rational) -> CycNum {
        let mut x = CycNum::zero(field);
        x.num[0] = r.numer().clone();
        x.den = r.denom().clone();
        x.normalize();
        x
    }

    /// Builds an element from rational coefficients over the power basis.
    ///
    /// # Errors
    /// `DimMismatch` unless `coeffs.len() == φ(N)`.
    pub fn from_coeffs(field: &Field, coeffs: &[Rational]) -> Result<CycNum> {
        if coeffs.len() != field.degree() {
            return Err(Error::DimMismatch(format!(
                "expected {} coefficients for conductor {}, got {}",
                field.degree(),
                field.conductor(),
                coeffs.len()
            )));
        }
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let mut x = CycNum { field: field.clone(), num, den };
        x.normalize();
        Ok(x)
    }

    /// ζ_N^k.
    pub fn root_of_unity(n: u32, k: i64) -> CycNum {
        CycNum::zeta_power(&Field::new(n), k)
    }

    pub fn zeta_power(field: &Field, k: i64) -> CycNum {
        let n = i64::from(field.conductor());
        let idx = k.rem_euclid(n) as usize;
        CycNum { field: field.clone(), num: field.0.powers[idx].clone(), den: BigInt::one() }
    }

    /// ω = ζ_N^{N/3}; requires 3 | N.
    pub fn omega(field: &Field) -> Result<CycNum> {
        let n = field.conductor();
        if n % 3 != 0 {
            return Err(Error::NoCubeRootOfUnity(n));
        }
        Ok(CycNum::zeta_power(field, i64::from(n / 3)))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn coeffs(&self) -> Vec<Rational> {
        self.num.iter().map(|c| Rational::new(c.clone(), self.den.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// The integer value when `self` is a rational integer.
    pub fn is_rational_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num[1..].iter().all(Zero::is_zero) {
            Some(self.num[0].clone())
        } else {
            None
        }
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Largest absolute numerator or denominator, a rough height measure.
    pub fn height(&self) -> BigInt {
        self.num.iter().map(Signed::abs).chain(std::iter::once(self.den.clone())).max().unwrap()
    }

    fn normalize(&mut self) {
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    fn check(&self, other: &CycNum) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::ConductorMismatch(self.conductor(), other.conductor()))
        }
    }

    pub fn checked_add(&self, other: &CycNum) -> Result<CycNum> {
        self.check(other)?;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &other.den + b * &self.den)
            .collect();
        let mut x = CycNum { field: self.field.clone(), num, den: &self.den * &other.den };
        x.normalize();
        Ok(x)
    }

    pub fn checked_sub(&self, other: &CycNum) -> Result<CycNum> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &CycNum) -> Result<CycNum> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(CycNum::zero(&self.field));
        }
        let ctx = &self.field.0;
        let phi = ctx.phi;
        let n = ctx.n as usize;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut num: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (t, p) in ctx.powers[k % n].iter().enumerate() {
                if !p.is_zero() {
                    num[t] += c * p;
                }
            }
        }
        let mut x = CycNum { field: self.field.clone(), num, den: &self.den * &other.den };
        x.normalize();
        Ok(x)
    }

    pub fn checked_div(&self, other: &CycNum) -> Result<CycNum> {
        self.check(other)?;
        self.checked_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> CycNum {
        let mut x = CycNum {
            field: self.field.clone(),
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        x.normalize();
        x
    }

    /// The Galois automorphism ζ ↦ ζ^k, `k` coprime to N.
    pub fn galois(&self, k: u32) -> CycNum {
        let ctx = &self.field.0;
        let n = ctx.n as usize;
        let mut num = vec![BigInt::zero(); ctx.phi];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in ctx.powers[(i * k as usize) % n].iter().enumerate() {
                if !p.is_zero() {
                    num[t] += c * p;
                }
            }
        }
        CycNum { field: self.field.clone(), num, den: self.den.clone() }
    }

    pub fn conj(&self) -> CycNum {
        let n = self.conductor();
        if n <= 2 {
            return self.clone();
        }
        self.galois(n - 1)
    }

    /// Field norm down to Q.
    pub fn norm(&self) -> Rational {
        (self * &self.conjugate_product()).to_rational().expect("norm is rational")
    }

    fn conjugate_product(&self) -> CycNum {
        let ctx = &self.field.0;
        let id = 1 % ctx.n;
        let mut p = CycNum::one(&self.field);
        for &k in ctx.units.iter().filter(|&&k| k != id) {
            p = &p * &self.galois(k);
        }
        p
    }

    pub fn inv(&self) -> Result<CycNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycNum::from_rational(&self.field, &r.recip()));
        }
        let p = self.conjugate_product();
        let nrm = (self * &p).to_rational().expect("norm is rational");
        Ok(p.scale(&nrm.recip()))
    }

    pub fn pow(&self, e: i64) -> Result<CycNum> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CycNum::one(&self.field);
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Re-expresses `self` in Q(ζ_M) via ζ_N = ζ_M^{M/N}.
    pub fn promote(&self, m: u32) -> Result<CycNum> {
        let n = self.conductor();
        if m == 0 || m % n != 0 {
            return Err(Error::NotASubfield { from: n, to: m });
        }
        if m == n {
            return Ok(self.clone());
        }
        let target = Field::new(m);
        let step = (m / n) as usize;
        let mut num = vec![BigInt::zero(); target.degree()];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in target.0.powers[(i * step) % m as usize].iter().enumerate() {
                if !p.is_zero() {
                    num[t] += c * p;
                }
            }
        }
        Ok(CycNum { field: target, num, den: self.den.clone() })
    }

    /// Value under the embedding ζ_N ↦ exp(2πi/N).
    pub fn to_complex(&self) -> Complex64 {
        let n = f64::from(self.conductor());
        let den = big_to_f64(&self.den);
        self.num.iter().enumerate().fold(Complex64::new(0.0, 0.0), |acc, (i, c)| {
            if c.is_zero() {
                acc
            } else {
                acc + Complex64::from_polar(big_to_f64(c) / den, std::f64::consts::TAU * i as f64 / n)
            }
        })
    }

    /// Value under the embedding ζ_N ↦ exp(2πi·a/N).
    pub fn embed(&self, a: u32) -> Complex64 {
        self.galois(a).to_complex()
    }
}

fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.den == other.den && self.num == other.num
    }
}

impl Eq for CycNum {}

impl Hash for CycNum {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

fn expect<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("cyclotomic arithmetic: {e}"),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                expect(self.$checked(rhs))
            }
        }
        impl $trait<CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                expect(self.$checked(&rhs))
            }
        }
        impl $trait<&CycNum> for CycNum {
            type Output = CycNum;
            fn $method(self, rhs: &CycNum) -> CycNum {
                expect(self.$checked(rhs))
            }
        }
        impl $trait<CycNum> for &CycNum {
            type Output = CycNum;
            fn $method(self, rhs: CycNum) -> CycNum {
                expect(self.$checked(&rhs))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycNum> for CycNum {
    fn mul_assign(&mut self, rhs: &CycNum) {
        *self = &*self * rhs;
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum { field: self.field.clone(), num: self.num.iter().map(|c| -c).collect(), den: self.den.clone() }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    /// Writes a literal accepted by `CycNum::parse`, e.g. `1/2 - 3*z12^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.conductor();
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = Rational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            let a = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "z{n}^{i}")?;
            } else {
                write!(f, "{a}*z{n}^{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.conductor(), self)
    }
}

/// Promotes all values to the lcm of their conductors (and of `extra`).
pub fn unify(values: &[&CycNum], extra: u32) -> Vec<CycNum> {
    let m = values.iter().fold(extra.max(1), |acc, v| acc.lcm(&v.conductor()));
    values.iter().map(|v| v.promote(m).expect("lcm is a multiple")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn trivial_root() {
        assert!(CycNum::root_of_unity(1, 0).is_one());
    }

    #[test]
    fn omega_minimal_polynomial() {
        let f = Field::new(3);
        let s = CycNum::zeta_power(&f, 1) + CycNum::zeta_power(&f, 2) + CycNum::one(&f);
        assert!(s.is_zero());
    }

    #[test]
    fn fourth_root_in_twelve() {
        let i = CycNum::root_of_unity(12, 3);
        assert_eq!(&i * &i, CycNum::from_integer(i.field(), -1));
    }

    #[test]
    fn zeta_order() {
        for n in [1, 2, 3, 5, 8, 12, 15, 60] {
            let z = CycNum::root_of_unity(n, 1);
            assert!(z.pow(i64::from(n)).unwrap().is_one(), "n = {n}");
        }
    }

    #[test]
    fn omega_inverse_and_conj() {
        let w = CycNum::root_of_unity(3, 1);
        let w2 = CycNum::root_of_unity(3, 2);
        assert_eq!(w.inv().unwrap(), w2);
        assert_eq!(w.conj(), w2);
    }

    #[test]
    fn division_by_zero() {
        let f = Field::new(5);
        assert_eq!(CycNum::zero(&f).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatch_is_reported() {
        let a = CycNum::root_of_unity(3, 1);
        let b = CycNum::root_of_unity(4, 1);
        assert_eq!(a.checked_add(&b), Err(Error::ConductorMismatch(3, 4)));
    }

    #[test]
    fn promotion() {
        let w = CycNum::root_of_unity(3, 1);
        let p = w.promote(15).unwrap();
        assert_eq!(p.conductor(), 15);
        assert!((p.to_complex() - w.to_complex()).norm() < 1e-12);
        assert!(CycNum::one(&Field::new(1)).promote(7).unwrap().is_one());
        assert_eq!(w.promote(3).unwrap(), w);
        assert_eq!(w.promote(10), Err(Error::NotASubfield { from: 3, to: 10 }));
    }

    #[test]
    fn integer_predicate() {
        let f = Field::new(3);
        let x = CycNum::zeta_power(&f, 1) + CycNum::zeta_power(&f, 2) + CycNum::from_integer(&f, 6);
        assert_eq!(x.is_rational_integer(), Some(BigInt::from(5)));
        assert_eq!(CycNum::zeta_power(&f, 1).is_rational_integer(), None);
        assert_eq!(CycNum::from_ratio(&f, 1, 2).is_rational_integer(), None);
    }

    #[test]
    fn coefficients_round_trip() {
        let f = Field::new(5);
        let c = vec![q(1, 2), q(-3, 4), q(0, 1), q(5, 1)];
        let x = CycNum::from_coeffs(&f, &c).unwrap();
        assert_eq!(x.coeffs(), c);
        assert!(CycNum::from_coeffs(&f, &c[..3]).is_err());
    }

    #[test]
    fn norm_of_one_minus_zeta_p() {
        let z = CycNum::root_of_unity(7, 1);
        let x = CycNum::one(z.field()) - z;
        assert_eq!(x.norm(), q(7, 1));
    }

    #[test]
    fn display_form() {
        let f = Field::new(12);
        let x = CycNum::from_ratio(&f, 1, 2) - CycNum::zeta_power(&f, 1).scale(&q(3, 1));
        assert_eq!(x.to_string(), "1/2 - 3*z12^1");
    }
}
