use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `k^n`, stored as the nonzero rows of a reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F: Field> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

/// Sum, intersection and containment of two subspaces, computed together.
#[derive(Clone, Debug)]
pub struct SubspaceOps<F: Field> {
    pub sum: Subspace<F>,
    pub intersection: Subspace<F>,
    /// Whether the second argument lies in the first.
    pub contains: bool,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_vectors<I>(field: &F, ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<F::Elem>>,
    {
        let rows: Vec<Vec<F::Elem>> = vectors.into_iter().collect();
        let m = Matrix::from_rows(field, ambient, rows).expect("vector length equals ambient dimension");
        Self::from_row_space(&m)
    }

    /// Row space of `m`.
    pub fn from_row_space(m: &Matrix<F>) -> Self {
        let (r, pivots) = m.rref();
        let idx: Vec<usize> = (0..pivots.len()).collect();
        Subspace {
            ambient: m.cols(),
            basis: r.select_rows(&idx),
            pivots,
        }
    }

    pub fn field(&self) -> &F {
        self.basis.field()
    }
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }
    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ambient
    }
    /// Echelon basis, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn vectors(&self) -> Vec<Vec<F::Elem>> {
        self.basis.row_vectors()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Shape(alloc::format!(
                "subspaces of k^{} and k^{}",
                self.ambient,
                other.ambient
            )));
        }
        Ok(())
    }

    /// `v` minus its projection along the echelon basis; zero iff `v` is in the span.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.field();
        let mut out = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (j, b) in self.basis.row(row).iter().enumerate() {
                if !f.is_zero(b) {
                    out[j] = f.sub(&out[j], &f.mul(&c, b));
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[F::Elem]) -> bool {
        let f = self.field();
        v.len() == self.ambient && self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Coordinates with respect to the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok((0..other.dim()).all(|i| self.contains_vector(other.basis.row(i))))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let f = self.field();
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f, self.ambient));
        }
        // a·U = b·V  <=>  [U^T | -V^T] (a; b) = 0
        let stacked = self.basis.transpose().hstack(&other.basis.transpose().scale(&f.neg(&f.one())));
        let ker = stacked.kernel();
        let du = self.dim();
        let vecs = ker.vectors().into_iter().map(|k| {
            let a = Matrix::from_rows(f, du, vec![k[..du].to_vec()]).unwrap();
            a.mul(&self.basis).row(0).to_vec()
        });
        Ok(Self::from_vectors(f, self.ambient, vecs))
    }

    /// Indices of the standard basis vectors spanning a complement.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// The projection `k^n -> k^n / U` in the coordinates of [`complement_indices`],
    /// as a `(n - d) x n` matrix.
    ///
    /// [`complement_indices`]: Self::complement_indices
    pub fn quotient_map(&self) -> Matrix<F> {
        let f = self.field();
        let free = self.complement_indices();
        let mut q = Matrix::zeros(f, free.len(), self.ambient);
        for j in 0..self.ambient {
            let mut e = vec![f.zero(); self.ambient];
            e[j] = f.one();
            let r = self.reduce(&e);
            for (i, &c) in free.iter().enumerate() {
                q.set(i, j, r[c].clone());
            }
        }
        q
    }

    /// A right inverse of [`quotient_map`](Self::quotient_map): the inclusion of the
    /// complement coordinates.
    pub fn quotient_section(&self) -> Matrix<F> {
        let f = self.field();
        let free = self.complement_indices();
        let mut s = Matrix::zeros(f, self.ambient, free.len());
        for (i, &c) in free.iter().enumerate() {
            s.set(c, i, f.one());
        }
        s
    }

    /// Image of the subspace under a linear map `k^n -> k^m`.
    pub fn image_under(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.cols(), self.ambient);
        let vecs = (0..self.dim()).map(|i| m.apply(self.basis.row(i)));
        Self::from_vectors(self.field(), m.rows(), vecs)
    }

    /// `{x : m x ∈ self}` for a map `m : k^c -> k^n`.
    pub fn preimage_under(&self, m: &Matrix<F>) -> Self {
        assert_eq!(m.rows(), self.ambient);
        self.quotient_map().mul(m).kernel()
    }
}

/// Sum, intersection and the containment `v ⊆ u`.
pub fn subspace_ops<F: Field>(u: &Subspace<F>, v: &Subspace<F>) -> Result<SubspaceOps<F>> {
    Ok(SubspaceOps {
        sum: u.sum(v)?,
        intersection: u.intersection(v)?,
        contains: u.contains(v)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    fn q(v: &[i64]) -> Vec<num_rational::BigRational> {
        v.iter().map(|x| Rationals.from_i64(*x)).collect()
    }

    #[test]
    fn coordinate_axes() {
        let f = Rationals;
        let u = Subspace::from_vectors(&f, 2, [q(&[1, 0])]);
        let v = Subspace::from_vectors(&f, 2, [q(&[0, 1])]);
        let ops = subspace_ops(&u, &v).unwrap();
        assert_eq!(ops.sum.dim(), 2);
        assert_eq!(ops.intersection.dim(), 0);
        assert!(!ops.contains);
    }

    #[test]
    fn equal_subspaces() {
        let f = Rationals;
        let u = Subspace::from_vectors(&f, 3, [q(&[1, 2, 0]), q(&[0, 1, 1])]);
        let ops = subspace_ops(&u, &u).unwrap();
        assert_eq!(ops.sum, u);
        assert_eq!(ops.intersection, u);
        assert!(ops.contains);
    }

    #[test]
    fn diagonal_inside_plane() {
        let f = Rationals;
        let u = Subspace::from_vectors(&f, 3, [q(&[1, 1, 0])]);
        let v = Subspace::from_vectors(&f, 3, [q(&[1, 0, 0]), q(&[0, 1, 0])]);
        let ops = subspace_ops(&u, &v).unwrap();
        // Coordinates (a, b, 0) with a = b are exactly the diagonal.
        assert_eq!(ops.intersection, u);
        assert_eq!(ops.sum, v);
        assert!(!ops.contains);
        assert!(v.contains(&u).unwrap());
    }

    #[test]
    fn ambient_mismatch() {
        let f = Rationals;
        assert!(subspace_ops(&Subspace::zero(&f, 2), &Subspace::zero(&f, 3)).is_err());
    }

    #[test]
    fn quotient_map_and_section() {
        let f = PrimeField::new(5).unwrap();
        let u = Subspace::from_vectors(&f, 3, [vec![1, 2, 3]]);
        let qm = u.quotient_map();
        assert_eq!(qm.rows(), 2);
        assert!(qm.apply(&[1, 2, 3]).iter().all(|x| *x == 0));
        let s = u.quotient_section();
        assert_eq!(qm.mul(&s), Matrix::identity(&f, 2));
        assert_eq!(u.preimage_under(&Matrix::identity(&f, 3)), u);
    }
}
