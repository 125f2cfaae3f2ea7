//! Jacobson radicals of finite-dimensional algebras.
//!
//! Characteristic zero uses the trace form of a faithful representation. In
//! characteristic `p` the trace form only cuts out the radical when `p` exceeds the
//! degree of the representation, so the generalized forms
//! `g_i(a) = (Tr(ã^(p^i)) mod p^(i+1)) / p^i` on integer lifts are layered on top,
//! following Cohen, Ivanyos and Wales.

use alloc::vec;
use alloc::vec::Vec;

use super::field::Field;
use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Structure constants of a finite-dimensional unital algebra:
/// `b_i * b_j = Σ_k consts[i][j][k] b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultTable<F: Field> {
    field: F,
    dim: usize,
    consts: Vec<Vec<Vec<F::Elem>>>,
    one: Vec<F::Elem>,
}

impl<F: Field> MultTable<F> {
    /// Checks shapes, the unit and associativity on all basis triples.
    pub fn new(field: &F, consts: Vec<Vec<Vec<F::Elem>>>, one: Vec<F::Elem>) -> Result<Self> {
        let dim = one.len();
        let shaped = consts.len() == dim
            && consts
                .iter()
                .all(|r| r.len() == dim && r.iter().all(|c| c.len() == dim));
        if !shaped {
            return Err(Error::Shape(alloc::format!(
                "structure constants for an algebra of dimension {dim}"
            )));
        }
        let t = MultTable {
            field: field.clone(),
            dim,
            consts,
            one,
        };
        for i in 0..dim {
            let mut e = vec![field.zero(); dim];
            e[i] = field.one();
            if t.mul(&t.one, &e) != e || t.mul(&e, &t.one) != e {
                return Err(Error::NonAssociative);
            }
        }
        if !t.is_associative() {
            return Err(Error::NonAssociative);
        }
        Ok(t)
    }

    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn one(&self) -> &[F::Elem] {
        &self.one
    }
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[F::Elem] {
        &self.consts[i][j]
    }

    pub fn mul(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if f.is_zero(y) {
                    continue;
                }
                let xy = f.mul(x, y);
                for (k, c) in self.consts[i][j].iter().enumerate() {
                    if !f.is_zero(c) {
                        out[k] = f.add(&out[k], &f.mul(&xy, c));
                    }
                }
            }
        }
        out
    }

    fn is_associative(&self) -> bool {
        let f = &self.field;
        let basis = |i: usize| {
            let mut e = vec![f.zero(); self.dim];
            e[i] = f.one();
            e
        };
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| {
                let ij = &self.consts[i][j];
                (0..self.dim).all(|k| {
                    let left = self.mul(ij, &basis(k));
                    let right = self.mul(&basis(i), &self.consts[j][k]);
                    left == right
                })
            })
        })
    }

    /// Matrix of left multiplication by `a` (columns are `a * b_j`).
    pub fn left_mult(&self, a: &[F::Elem]) -> Matrix<F> {
        let f = &self.field;
        let mut m = Matrix::zeros(f, self.dim, self.dim);
        for j in 0..self.dim {
            let mut e = vec![f.zero(); self.dim];
            e[j] = f.one();
            for (i, v) in self.mul(a, &e).into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// The quotient algebra by a two-sided ideal, in the complement coordinates of
    /// the ideal.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<Self> {
        let q = ideal.quotient_map();
        let s = ideal.quotient_section();
        let n = q.rows();
        let cols = s.column_vectors();
        let consts = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| q.apply(&self.mul(&cols[i], &cols[j])))
                    .collect()
            })
            .collect();
        MultTable::new(&self.field, consts, q.apply(&self.one))
    }

    /// Whether the span `s` generates a nilpotent ideal power: `s^m = 0` for some
    /// `m <= dim + 1`.
    pub fn is_nilpotent(&self, s: &Subspace<F>) -> bool {
        let gens = s.vectors();
        let mut power = s.clone();
        for _ in 0..=self.dim {
            if power.is_zero() {
                return true;
            }
            let prods = power
                .vectors()
                .into_iter()
                .flat_map(|p| gens.iter().map(move |g| (p.clone(), g.clone())))
                .map(|(p, g)| self.mul(&p, &g))
                .collect::<Vec<_>>();
            power = Subspace::from_vectors(&self.field, self.dim, prods);
        }
        power.is_zero()
    }
}

/// Jacobson radical, as a subspace of the coordinate space of the basis.
pub fn algebra_radical<F: Field>(table: &MultTable<F>) -> Subspace<F> {
    let f = table.field();
    let mats: Vec<Matrix<F>> = (0..table.dim())
        .map(|i| {
            let mut e = vec![f.zero(); table.dim()];
            e[i] = f.one();
            table.left_mult(&e)
        })
        .collect();
    matrix_algebra_radical(f, &mats)
}

fn trace_of_product<F: Field>(f: &F, a: &Matrix<F>, b: &Matrix<F>) -> F::Elem {
    let n = a.rows();
    let mut acc = f.zero();
    for i in 0..n {
        for j in 0..n {
            let x = a.get(i, j);
            if f.is_zero(x) {
                continue;
            }
            acc = f.add(&acc, &f.mul(x, b.get(j, i)));
        }
    }
    acc
}

fn combine<F: Field>(f: &F, coeffs: &[F::Elem], mats: &[Matrix<F>], n: usize) -> Matrix<F> {
    let mut out = Matrix::zeros(f, n, n);
    for (c, m) in coeffs.iter().zip(mats) {
        if !f.is_zero(c) {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// Radical of the algebra spanned by the given square matrices (a faithful
/// representation of it). The result lives in coordinates with respect to `mats`,
/// which must be linearly independent and closed under products.
pub fn matrix_algebra_radical<F: Field>(f: &F, mats: &[Matrix<F>]) -> Subspace<F> {
    let d = mats.len();
    if d == 0 {
        return Subspace::zero(f, 0);
    }
    let n = mats[0].rows();
    // Stage 0: the ordinary trace form.
    let gram = Matrix::from_fn(f, d, d, |i, j| trace_of_product(f, &mats[i], &mats[j]));
    let mut ideal = gram.kernel();
    let p = f.characteristic();
    if p == 0 {
        return ideal;
    }
    let mut pi: u128 = p as u128;
    let mut level = 1;
    while pi <= n as u128 && !ideal.is_zero() {
        let modulus = pi * p as u128;
        let members: Vec<Matrix<F>> = ideal
            .vectors()
            .iter()
            .map(|c| combine(f, c, mats, n))
            .collect();
        // g(u_k b_j) for each ideal basis element u_k and algebra basis element b_j.
        let g = Matrix::from_fn(f, d, members.len(), |j, k| {
            let prod = members[k].mul(&mats[j]);
            let t = lifted_power_trace(f, &prod, pi, modulus);
            debug_assert_eq!(t % pi, 0);
            f.from_i64(((t / pi) % p as u128) as i64)
        });
        let coeffs = g.kernel();
        let basis = ideal.vectors();
        let next = coeffs.vectors().into_iter().map(|c| {
            let mut v = vec![f.zero(); d];
            for (ck, u) in c.iter().zip(&basis) {
                if f.is_zero(ck) {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(u) {
                    *x = f.add(x, &f.mul(ck, y));
                }
            }
            v
        });
        ideal = Subspace::from_vectors(f, d, next);
        pi *= p as u128;
        level += 1;
        debug_assert!(level < 64);
    }
    ideal
}

/// `Tr(ã^e) mod modulus` for the integer lift `ã` of a matrix over `F_p`.
fn lifted_power_trace<F: Field>(f: &F, m: &Matrix<F>, e: u128, modulus: u128) -> u128 {
    let n = m.rows();
    let lift: Vec<u128> = m
        .entries()
        .iter()
        .map(|x| f.lift(x).expect("prime field element") as u128)
        .collect();
    let mul = |a: &[u128], b: &[u128]| {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + x * b[k * n + j]) % modulus;
                }
            }
        }
        out
    };
    let mut acc: Vec<u128> = (0..n * n).map(|i| u128::from(i % (n + 1) == 0)).collect();
    let mut base = lift;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).fold(0, |t, i| (t + acc[i * n + i]) % modulus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::field::{PrimeField, Rationals};

    /// k[t]/(t^n) with basis 1, t, ..., t^(n-1).
    fn truncated<F: Field>(f: &F, n: usize) -> MultTable<F> {
        let consts = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut v = vec![f.zero(); n];
                        if i + j < n {
                            v[i + j] = f.one();
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut one = vec![f.zero(); n];
        one[0] = f.one();
        MultTable::new(f, consts, one).unwrap()
    }

    fn product<F: Field>(f: &F) -> MultTable<F> {
        let e = |k: usize| {
            let mut v = vec![f.zero(); 2];
            v[k] = f.one();
            v
        };
        let z = vec![f.zero(); 2];
        let consts = vec![vec![e(0), z.clone()], vec![z, e(1)]];
        MultTable::new(f, consts, vec![f.one(), f.one()]).unwrap()
    }

    #[test]
    fn dual_numbers() {
        let f = Rationals;
        let r = algebra_radical(&truncated(&f, 2));
        assert_eq!(r.vectors(), [[f.zero(), f.one()]]);
    }

    #[test]
    fn semisimple_product() {
        assert!(algebra_radical(&product(&Rationals)).is_zero());
        assert!(algebra_radical(&product(&PrimeField::new(2).unwrap())).is_zero());
    }

    #[test]
    fn small_characteristic_needs_the_higher_forms() {
        // Over F_2 the trace form of F_2[t]/(t^2) vanishes identically.
        for p in [2, 3] {
            let f = PrimeField::new(p).unwrap();
            for n in 2..6 {
                let t = truncated(&f, n);
                let r = algebra_radical(&t);
                assert_eq!(r.dim(), n - 1, "p = {p}, n = {n}");
                assert!(t.is_nilpotent(&r));
                assert!(algebra_radical(&t.quotient(&r).unwrap()).is_zero());
            }
        }
    }

    #[test]
    fn rejects_non_associative() {
        let f = Rationals;
        let mut consts = truncated(&f, 2).consts;
        // t * t = 1 but then (t*t)*t must be t; break it by t*1 = 0
        consts[1][0] = vec![f.zero(), f.zero()];
        assert!(MultTable::new(&f, consts, vec![f.one(), f.zero()]).is_err());
    }
}
