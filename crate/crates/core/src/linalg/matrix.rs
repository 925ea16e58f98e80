use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::cyclotomic::{CycNum, Field};
use crate::error::{Error, Result};

/// Dense matrix over Q(ζ_N), row-major. Every entry lives in `field`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<CycNum>,
}

impl CMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> CMatrix {
        CMatrix { rows, cols, field: field.clone(), data: vec![CycNum::zero(field); rows * cols] }
    }

    pub fn identity(field: &Field, d: usize) -> CMatrix {
        CMatrix::scalar(&CycNum::one(field), d)
    }

    pub fn scalar(c: &CycNum, d: usize) -> CMatrix {
        let mut m = CMatrix::zeros(c.field(), d, d);
        for i in 0..d {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(field: &Field, entries: &[CycNum]) -> CMatrix {
        let mut m = CMatrix::zeros(field, entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycNum) -> CMatrix {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                assert!(v.field() == field, "entry ({i},{j}) has conductor {}", v.conductor());
                data.push(v);
            }
        }
        CMatrix { rows, cols, field: field.clone(), data }
    }

    /// # Errors
    /// `DimMismatch` for ragged rows, `ConductorMismatch` for mixed fields.
    pub fn from_rows(field: &Field, rows: Vec<Vec<CycNum>>) -> Result<CMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::DimMismatch("ragged rows".into()));
            }
            for v in row {
                if v.field() != field {
                    return Err(Error::ConductorMismatch(field.conductor(), v.conductor()));
                }
                data.push(v);
            }
        }
        Ok(CMatrix { rows: r, cols: c, field: field.clone(), data })
    }

    /// Builds a matrix from integer entries.
    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> CMatrix {
        CMatrix::from_fn(field, rows.len(), rows.first().map_or(0, |r| r.len()), |i, j| {
            CycNum::from_integer(field, rows[i][j])
        })
    }

    /// Column vector.
    pub fn column(field: &Field, v: &[CycNum]) -> CMatrix {
        CMatrix::from_fn(field, v.len(), 1, |i, _| v[i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Side length of a square matrix.
    ///
    /// # Panics
    /// Panics if the matrix is not square.
    pub fn dim(&self) -> usize {
        assert!(self.is_square(), "matrix is {}x{}", self.rows, self.cols);
        self.rows
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn entries(&self) -> &[CycNum] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major flattening.
    pub fn flatten(&self) -> Vec<CycNum> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| if i == j { self[(i, j)].is_one() } else { self[(i, j)].is_zero() })
            })
    }

    /// The scalar `c` when `self = c·I`.
    pub fn as_scalar(&self) -> Option<CycNum> {
        if !self.is_square() || self.rows == 0 {
            return None;
        }
        let c = self[(0, 0)].clone();
        (*self == CMatrix::scalar(&c, self.rows)).then_some(c)
    }

    fn same_shape(&self, other: &CMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::ConductorMismatch(self.conductor(), other.conductor()));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_shape(other)?;
        Ok(CMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.same_shape(other)?;
        Ok(CMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.field != other.field {
            return Err(Error::ConductorMismatch(self.conductor(), other.conductor()));
        }
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = CMatrix::zeros(&self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CycNum) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> CycNum {
        (0..self.dim()).fold(CycNum::zero(&self.field), |acc, i| acc + &self[(i, i)])
    }

    /// `self^e`; negative exponents invert first.
    ///
    /// # Errors
    /// `SingularMatrix` for a negative power of a singular matrix.
    pub fn pow(&self, e: i64) -> Result<CMatrix> {
        let d = self.dim();
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = CMatrix::identity(&self.field, d);
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

    pub fn kron(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.field != other.field {
            return Err(Error::ConductorMismatch(self.conductor(), other.conductor()));
        }
        Ok(CMatrix::from_fn(&self.field, self.rows * other.rows, self.cols * other.cols, |i, j| {
            &self[(i / other.rows, j / other.cols)] * &other[(i % other.rows, j % other.cols)]
        }))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.field != other.field {
            return Err(Error::ConductorMismatch(self.conductor(), other.conductor()));
        }
        let mut m = CMatrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, self.cols, other);
        Ok(m)
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &CMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r0 + i, c0 + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> CMatrix {
        CMatrix::from_fn(&self.field, rows, cols, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<CycNum>]) -> CMatrix {
        CMatrix::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn promote(&self, m: u32) -> Result<CMatrix> {
        let data = self.data.iter().map(|x| x.promote(m)).collect::<Result<Vec<_>>>()?;
        Ok(CMatrix { rows: self.rows, cols: self.cols, field: Field::new(m), data })
    }

    pub fn commutes_with(&self, other: &CMatrix) -> bool {
        self * other == other * self
    }

    /// Zero strictly above the anti-diagonal.
    pub fn is_skew_lower(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| i + j + 1 >= d || self[(i, j)].is_zero()))
    }

    /// Zero strictly below the anti-diagonal.
    pub fn is_skew_upper(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (0..d).all(|j| i + j < d || self[(i, j)].is_zero()))
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..self.rows).all(|i| (0..i.min(self.cols)).all(|j| self[(i, j)].is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)].is_zero()))
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.data.iter().map(CycNum::to_complex).collect()
    }

    /// Commutator `self·other − other·self`.
    pub fn commutator(&self, other: &CMatrix) -> CMatrix {
        &(self * other) - &(other * self)
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = CycNum;
    fn index(&self, (i, j): (usize, usize)) -> &CycNum {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut CycNum {
        &mut self.data[i * self.cols + j]
    }
}

fn expect<T>(r: Result<T>) -> T {
    match r {
        Ok(v) => v,
        Err(e) => panic!("matrix arithmetic: {e}"),
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CMatrix> for &CMatrix {
            type Output = CMatrix;
            fn $method(self, rhs: &CMatrix) -> CMatrix {
                expect(self.$checked(rhs))
            }
        }
        impl $trait<CMatrix> for CMatrix {
            type Output = CMatrix;
            fn $method(self, rhs: CMatrix) -> CMatrix {
                expect(self.$checked(&rhs))
            }
        }
        impl $trait<&CMatrix> for CMatrix {
            type Output = CMatrix;
            fn $method(self, rhs: &CMatrix) -> CMatrix {
                expect(self.$checked(rhs))
            }
        }
        impl $trait<CMatrix> for &CMatrix {
            type Output = CMatrix;
            fn $method(self, rhs: CMatrix) -> CMatrix {
                expect(self.$checked(&rhs))
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CMatrix {
    type Output = CMatrix;
    fn neg(self) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            field: self.field.clone(),
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} over Q(z{})", self.rows, self.cols, self.conductor())?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_laws() {
        let f = Field::new(3);
        let x = CMatrix::from_ints(&f, &[&[1, 2], &[3, 4]]);
        let i = CMatrix::identity(&f, 2);
        assert_eq!(&x * &i, x);
        assert_eq!(&i * &x, x);
        assert_eq!(&CMatrix::zeros(&f, 2, 2) + &x, x);
    }

    #[test]
    fn kron_shape() {
        let f = Field::new(1);
        let a = CMatrix::from_ints(&f, &[&[1, 2], &[3, 4]]);
        let b = CMatrix::from_ints(&f, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b).unwrap();
        assert_eq!(k.rows(), 4);
        assert_eq!(k[(1, 2)], CycNum::from_integer(&f, 2));
        assert_eq!(k[(3, 0)], CycNum::from_integer(&f, 3));
    }

    #[test]
    fn dimension_errors() {
        let f = Field::new(1);
        let a = CMatrix::zeros(&f, 2, 3);
        assert!(matches!(a.checked_mul(&a), Err(Error::DimMismatch(_))));
        let b = CMatrix::zeros(&Field::new(3), 2, 3);
        assert!(matches!(a.checked_add(&b), Err(Error::ConductorMismatch(1, 3))));
    }

    #[test]
    fn skew_shapes() {
        let f = Field::new(1);
        let lower = CMatrix::from_ints(&f, &[&[0, 0, 1], &[0, 2, 3], &[4, 5, 6]]);
        assert!(lower.is_skew_lower());
        assert!(!lower.is_skew_upper());
        assert!(lower.transpose().transpose() == lower);
        let upper = CMatrix::from_ints(&f, &[&[1, 2, 3], &[4, 5, 0], &[6, 0, 0]]);
        assert!(upper.is_skew_upper());
    }

    #[test]
    fn scalar_detection() {
        let f = Field::new(4);
        let c = CycNum::zeta_power(&f, 1);
        assert_eq!(CMatrix::scalar(&c, 3).as_scalar(), Some(c));
        assert_eq!(CMatrix::from_ints(&f, &[&[1, 0], &[0, 2]]).as_scalar(), None);
    }
}
