use std::fmt;

use crate::cyclotomic::{CycNum, Field};

use super::matrix::CMatrix;

/// Univariate polynomial over Q(ζ_N), coefficients lowest degree first.
/// The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldPoly {
    field: Field,
    coeffs: Vec<CycNum>,
}

impl FieldPoly {
    pub fn new(field: &Field, coeffs: Vec<CycNum>) -> FieldPoly {
        assert!(coeffs.iter().all(|c| c.field() == field), "coefficients must share the field");
        let mut p = FieldPoly { field: field.clone(), coeffs };
        p.trim();
        p
    }

    pub fn zero(field: &Field) -> FieldPoly {
        FieldPoly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(c: &CycNum) -> FieldPoly {
        FieldPoly::new(c.field(), vec![c.clone()])
    }

    pub fn x(field: &Field) -> FieldPoly {
        FieldPoly::new(field, vec![CycNum::zero(field), CycNum::one(field)])
    }

    /// `x − c`.
    pub fn linear(c: &CycNum) -> FieldPoly {
        FieldPoly::new(c.field(), vec![-c, CycNum::one(c.field())])
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(field: &Field, roots: &[CycNum]) -> FieldPoly {
        roots.iter().fold(FieldPoly::constant(&CycNum::one(field)), |acc, r| acc.mul(&FieldPoly::linear(r)))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(CycNum::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycNum> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> CycNum {
        self.coeffs.get(i).cloned().unwrap_or_else(|| CycNum::zero(&self.field))
    }

    pub fn monic(&self) -> FieldPoly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &CycNum) -> FieldPoly {
        FieldPoly::new(&self.field, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &FieldPoly) -> FieldPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FieldPoly::new(&self.field, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &FieldPoly) -> FieldPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        FieldPoly::new(&self.field, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &FieldPoly) -> FieldPoly {
        if self.is_zero() || other.is_zero() {
            return FieldPoly::zero(&self.field);
        }
        let mut out = vec![CycNum::zero(&self.field); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        FieldPoly::new(&self.field, out)
    }

    /// Quotient and remainder.
    ///
    /// # Panics
    /// Panics on division by the zero polynomial.
    pub fn div_rem(&self, divisor: &FieldPoly) -> (FieldPoly, FieldPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.leading().unwrap().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (FieldPoly::zero(&self.field), self.clone());
        }
        let mut quot = vec![CycNum::zero(&self.field); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &(&c * b);
                }
            }
            quot[i] = c;
        }
        (FieldPoly::new(&self.field, quot), FieldPoly::new(&self.field, rem))
    }

    pub fn divides(&self, other: &FieldPoly) -> bool {
        other.div_rem(self).1.is_zero()
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FieldPoly) -> FieldPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Monic lcm.
    pub fn lcm(&self, other: &FieldPoly) -> FieldPoly {
        if self.is_zero() || other.is_zero() {
            return FieldPoly::zero(&self.field);
        }
        let g = self.gcd(other);
        self.mul(other).div_rem(&g).0.monic()
    }

    pub fn derivative(&self) -> FieldPoly {
        FieldPoly::new(
            &self.field,
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * &CycNum::from_integer(&self.field, i as i64)).collect(),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.coeffs.iter().rev().fold(CycNum::zero(&self.field), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &CMatrix) -> CMatrix {
        let d = m.dim();
        let mut acc = CMatrix::zeros(&self.field, d, d);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &CMatrix::scalar(c, d);
        }
        acc
    }

    /// Multiplicity of `c` as a root.
    pub fn root_multiplicity(&self, c: &CycNum) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = FieldPoly::linear(c);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    pub fn promote(&self, m: u32) -> crate::Result<FieldPoly> {
        let coeffs = self.coeffs.iter().map(|c| c.promote(m)).collect::<crate::Result<Vec<_>>>()?;
        Ok(FieldPoly::new(&Field::new(m), coeffs))
    }
}

impl fmt::Debug for FieldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})x"),
                _ => format!("({c})x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Field, v: &[i64]) -> FieldPoly {
        FieldPoly::new(f, v.iter().map(|&x| CycNum::from_integer(f, x)).collect())
    }

    #[test]
    fn division() {
        let f = Field::new(1);
        let a = p(&f, &[-1, 0, 0, 1]);
        let b = p(&f, &[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, p(&f, &[1, 1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_and_lcm() {
        let f = Field::new(1);
        let a = p(&f, &[2, -3, 1]);
        let b = p(&f, &[-1, 0, 1]);
        assert_eq!(a.gcd(&b), p(&f, &[-1, 1]));
        assert_eq!(a.lcm(&b), p(&f, &[-2, 1, 2, -1]).scale(&CycNum::from_integer(&f, -1)));
    }

    #[test]
    fn squarefree() {
        let f = Field::new(3);
        assert!(p(&f, &[-1, 0, 0, 1]).is_squarefree());
        assert!(!p(&f, &[1, -2, 1]).is_squarefree());
    }

    #[test]
    fn multiplicity() {
        let f = Field::new(3);
        let w = CycNum::zeta_power(&f, 1);
        let q = FieldPoly::from_roots(&f, &[w.clone(), w.clone(), CycNum::one(&f)]);
        assert_eq!(q.root_multiplicity(&w), 2);
        assert_eq!(q.root_multiplicity(&CycNum::from_integer(&f, 2)), 0);
        assert!(q.eval(&w).is_zero());
    }
}
