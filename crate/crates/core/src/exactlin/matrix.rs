use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over an exact field.
///
/// Matrices act on column vectors. Shape mismatches in the arithmetic operators are
/// programming errors and panic; the checked entry points (`try_mul`, [`rref_solve`])
/// report them as [`Error::Shape`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    data: Vec<F::Elem>,
}

/// Output of [`rref_solve`].
#[derive(Clone, Debug)]
pub struct RrefSolve<F: Field> {
    pub rref: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// A particular solution of `A X = B`; `None` when no `B` was given or the system
    /// is inconsistent.
    pub solution: Option<Matrix<F>>,
    /// Whether the system `A X = B` was solvable (always true without `B`).
    pub solvable: bool,
    pub kernel: Subspace<F>,
    pub image: Subspace<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(field: &F, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: &F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: &F, cols: usize, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Shape(alloc::format!(
                    "row of length {} in a matrix with {} columns",
                    r.len(),
                    cols
                )));
            }
            data.extend(r);
        }
        Ok(Matrix {
            field: field.clone(),
            rows: n,
            cols,
            data,
        })
    }

    pub fn from_i64(field: &F, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, rows.len(), cols, |i, j| field.from_i64(rows[i][j]))
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: &F, rows: usize, columns: &[Vec<F::Elem>]) -> Self {
        Self::from_fn(field, rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }
    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.data[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn column(&self, j: usize) -> Vec<F::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }
    pub fn row_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }
    pub fn column_vectors(&self) -> Vec<Vec<F::Elem>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }
    pub fn entries(&self) -> &[F::Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                rhs.rows,
                rhs.cols
            )));
        }
        Ok(self.mul(rhs))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| {
                        if f.is_zero(a) || f.is_zero(b) {
                            acc
                        } else {
                            f.add(&acc, &f.mul(a, b))
                        }
                    })
            })
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "hstack row mismatch");
        Self::from_fn(&self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// `[self ; rhs]`.
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Matrix {
            field: self.field.clone(),
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(field: &F, blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(&self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), &inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                for j in c..m.cols {
                    let rj = m.get(r, j);
                    if f.is_zero(rj) {
                        continue;
                    }
                    let v = f.sub(m.get(i, j), &f.mul(&factor, rj));
                    m.set(i, j, v);
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

    /// Null space `{x : A x = 0}` inside `k^cols`.
    pub fn kernel(&self) -> Subspace<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let f = &self.field;
        let vectors = free.iter().map(|&fc| {
            let mut v = vec![f.zero(); self.cols];
            v[fc] = f.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(row, fc));
            }
            v
        });
        Subspace::from_vectors(f, self.cols, vectors)
    }

    /// Column space inside `k^rows`.
    pub fn image(&self) -> Subspace<F> {
        Subspace::from_vectors(&self.field, self.rows, self.column_vectors())
    }

    /// Some `X` with `A X = B`, if one exists.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows, "solve shape mismatch");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let f = &self.field;
        let mut x = Self::zeros(f, self.cols, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, r.get(row, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let id = Self::identity(&self.field, self.rows);
        if self.rank() != self.rows {
            return None;
        }
        self.solve(&id)
    }

    /// Characteristic polynomial `det(xI - A)`, coefficients from degree 0 upwards.
    ///
    /// Hessenberg reduction followed by the standard recurrence; division by field
    /// elements only, so it works in every characteristic.
    pub fn char_poly(&self) -> Vec<F::Elem> {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(i) = (j + 1..n).find(|&i| !f.is_zero(h.get(i, j))) else {
                continue;
            };
            if i != j + 1 {
                for c in 0..n {
                    h.data.swap(i * n + c, (j + 1) * n + c);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + j + 1);
                }
            }
            let inv = f.inv(h.get(j + 1, j)).expect("nonzero");
            for k in j + 2..n {
                let u = f.mul(h.get(k, j), &inv);
                if f.is_zero(&u) {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.get(k, c), &f.mul(&u, h.get(j + 1, c)));
                    h.set(k, c, v);
                }
                for r in 0..n {
                    let v = f.add(h.get(r, j + 1), &f.mul(&u, h.get(r, k)));
                    h.set(r, j + 1, v);
                }
            }
        }
        let mut polys: Vec<Vec<F::Elem>> = vec![vec![f.one()]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut p = vec![f.zero(); m + 1];
            let diag = h.get(m - 1, m - 1);
            for (d, c) in prev.iter().enumerate() {
                p[d + 1] = f.add(&p[d + 1], c);
                p[d] = f.sub(&p[d], &f.mul(diag, c));
            }
            let mut t = f.one();
            for i in 1..m {
                t = f.mul(&t, h.get(m - i, m - i - 1));
                let coef = f.mul(&t, h.get(m - i - 1, m - 1));
                if f.is_zero(&coef) {
                    continue;
                }
                for (d, c) in polys[m - i - 1].iter().enumerate() {
                    p[d] = f.sub(&p[d], &f.mul(&coef, c));
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }
}

/// Row reduction of `A`, optionally solving `A X = B` at the same time.
pub fn rref_solve<F: Field>(a: &Matrix<F>, b: Option<&Matrix<F>>) -> Result<RrefSolve<F>> {
    if let Some(b) = b {
        if b.rows() != a.rows() {
            return Err(Error::Shape(alloc::format!(
                "right-hand side has {} rows, matrix has {}",
                b.rows(),
                a.rows()
            )));
        }
    }
    let (rref, pivots) = a.rref();
    let solution = b.and_then(|b| a.solve(b));
    Ok(RrefSolve {
        rank: pivots.len(),
        solvable: b.is_none() || solution.is_some(),
        rref,
        pivots,
        solution,
        kernel: a.kernel(),
        image: a.image(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    #[test]
    fn identity_solve() {
        let q = Rationals;
        let a = Matrix::identity(&q, 2);
        let b = Matrix::from_i64(&q, &[&[3], &[5]]);
        let s = rref_solve(&a, Some(&b)).unwrap();
        assert_eq!(s.solution.unwrap(), b);
        assert_eq!(s.rank, 2);
        assert_eq!(s.kernel.dim(), 0);
    }

    #[test]
    fn rank_one_rational() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]);
        let s = rref_solve(&a, None).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.kernel.dim(), 1);
        assert!(s.kernel.contains_vector(&[q.from_i64(-2), q.from_i64(1)]));
        assert_eq!(s.pivots, [0]);
    }

    #[test]
    fn f2_kernel_matches_brute_force() {
        let f = PrimeField::new(2).unwrap();
        let a = Matrix::from_i64(&f, &[&[1, 1], &[1, 1]]);
        let brute: Vec<[u64; 2]> = (0..4u64)
            .map(|i| [i & 1, i >> 1])
            .filter(|v| a.apply(v).iter().all(|x| *x == 0))
            .collect();
        assert_eq!(brute, [[0, 0], [1, 1]]);
        let s = rref_solve(&a, None).unwrap();
        assert_eq!(s.rank, 1);
        assert_eq!(s.kernel.vectors(), [[1, 1]]);
    }

    #[test]
    fn inconsistent_system_is_not_an_error() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, &[&[1, 1], &[1, 1]]);
        let b = Matrix::from_i64(&q, &[&[1], &[2]]);
        let s = rref_solve(&a, Some(&b)).unwrap();
        assert!(!s.solvable);
        assert!(s.solution.is_none());
        let bad = Matrix::from_i64(&q, &[&[1]]);
        assert!(rref_solve(&a, Some(&bad)).is_err());
    }

    #[test]
    fn char_poly_examples() {
        let q = Rationals;
        // [[2,1],[0,3]] -> x^2 - 5x + 6
        let a = Matrix::from_i64(&q, &[&[2, 1], &[0, 3]]);
        assert_eq!(a.char_poly(), [q.from_i64(6), q.from_i64(-5), q.one()]);
        // companion matrix of x^3 - 2x + 5 (needs a row swap during reduction)
        let c = Matrix::from_i64(&q, &[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(c.char_poly(), [q.from_i64(5), q.from_i64(-2), q.zero(), q.one()]);
        let p = Matrix::from_i64(&q, &[&[0, 1, 0], &[0, 0, 0], &[1, 0, 0]]);
        assert_eq!(p.char_poly(), [q.zero(), q.zero(), q.zero(), q.one()]);
        let f = PrimeField::new(2).unwrap();
        let m = Matrix::from_i64(&f, &[&[1, 1], &[1, 0]]);
        assert_eq!(m.char_poly(), [1, 1, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let q = Rationals;
        let a = Matrix::from_i64(&q, &[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(&q, 2));
        assert!(Matrix::from_i64(&q, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
