use crate::cyclotomic::{CycNum, Field};
use crate::error::{Error, Result};

use super::matrix::CMatrix;

/// A particular solution together with a basis of the homogeneous solutions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<CycNum>,
    pub kernel: Vec<Vec<CycNum>>,
}

impl CMatrix {
    /// Reduced row echelon form and pivot columns. The pivot is the first
    /// nonzero entry in each column.
    pub fn rref(&self) -> (CMatrix, Vec<usize>) {
        let mut m = self.clone();
        let (rows, cols) = (m.rows(), m.cols());
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            swap_rows(&mut m, r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..cols {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
            for i in 0..rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..cols {
                    if !m[(r, j)].is_zero() {
                        let t = &f * &m[(r, j)];
                        m[(i, j)] -= &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space.
    pub fn kernel(&self) -> Vec<Vec<CycNum>> {
        let (r, pivots) = self.rref();
        kernel_from_rref(&r, &pivots)
    }

    /// Solves `self · x = rhs`; `None` when inconsistent.
    pub fn solve(&self, rhs: &[CycNum]) -> Option<LinearSolution> {
        assert_eq!(rhs.len(), self.rows(), "right-hand side length");
        let n = self.cols();
        let mut aug = CMatrix::zeros(self.field(), self.rows(), n + 1);
        aug.set_block(0, 0, self);
        for (i, b) in rhs.iter().enumerate() {
            aug[(i, n)] = b.clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut particular = vec![CycNum::zero(self.field()); n];
        for (row, &p) in pivots.iter().enumerate() {
            particular[p] = r[(row, n)].clone();
        }
        let coef = r.block(0, 0, r.rows(), n);
        Some(LinearSolution { particular, kernel: kernel_from_rref(&coef, &pivots) })
    }

    pub fn det(&self) -> CycNum {
        let d = self.dim();
        let mut m = self.clone();
        let mut det = CycNum::one(self.field());
        for c in 0..d {
            let Some(p) = (c..d).find(|&i| !m[(i, c)].is_zero()) else {
                return CycNum::zero(self.field());
            };
            if p != c {
                swap_rows(&mut m, c, p);
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            let inv = piv.inv().expect("pivot is nonzero");
            for i in c + 1..d {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] * &inv;
                for j in c..d {
                    if !m[(c, j)].is_zero() {
                        let t = &f * &m[(c, j)];
                        m[(i, j)] -= &t;
                    }
                }
            }
        }
        det
    }

    /// # Errors
    /// `SingularMatrix` when not invertible.
    pub fn inverse(&self) -> Result<CMatrix> {
        let d = self.dim();
        if d == 0 {
            return Ok(self.clone());
        }
        let mut aug = CMatrix::zeros(self.field(), d, 2 * d);
        aug.set_block(0, 0, self);
        aug.set_block(0, d, &CMatrix::identity(self.field(), d));
        let (r, pivots) = aug.rref();
        if pivots.len() < d || pivots[d - 1] >= d {
            return Err(Error::SingularMatrix);
        }
        Ok(r.block(0, d, d, d))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows()
    }
}

fn swap_rows(m: &mut CMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let t = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = t;
    }
}

fn kernel_from_rref(r: &CMatrix, pivots: &[usize]) -> Vec<Vec<CycNum>> {
    let n = r.cols();
    let field = r.field();
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![CycNum::zero(field); n];
            v[free] = CycNum::one(field);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(row, free)];
            }
            v
        })
        .collect()
}

/// Incrementally grown echelon basis of a subspace of K^n.
#[derive(Clone, Debug)]
pub struct Span {
    field: Field,
    len: usize,
    rows: Vec<(usize, Vec<CycNum>)>,
}

impl Span {
    pub fn new(field: &Field, len: usize) -> Span {
        Span { field: field.clone(), len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The reduction of `v` modulo the current basis.
    pub fn reduce(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.len);
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.reduce(v).iter().all(CycNum::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[CycNum]) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero");
        let row = v.iter().map(|x| x * &inv).collect();
        self.rows.push((p, row));
        true
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
}
