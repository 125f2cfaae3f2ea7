use alloc::vec;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::rep::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};

/// Basis of `Hom(M, N)`: solutions of `X_t M(a) = N(a) X_s` for every arrow.
pub fn hom_space<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<Vec<Morphism<F>>> {
    m.check_same_algebra(n)?;
    let a = m.algebra();
    let f = m.field();
    let nv = a.vertex_count();
    let mut offset = vec![0; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Ok(Vec::new());
    }
    // X_v[r][c] is unknown offset[v] + r * dim M(v) + c.
    let var = |v: usize, r: usize, c: usize| offset[v] + r * m.dim(v) + c;
    let mut rows: Vec<Vec<F::Elem>> = Vec::new();
    for arrow in a.arrows() {
        let (s, t) = (arrow.src, arrow.tgt);
        let ma = m.action(arrow.basis);
        let na = n.action(arrow.basis);
        for r in 0..n.dim(t) {
            for c in 0..m.dim(s) {
                let mut row = vec![f.zero(); unknowns];
                for k in 0..m.dim(t) {
                    let x = ma.get(k, c);
                    if !f.is_zero(x) {
                        let idx = var(t, r, k);
                        row[idx] = f.add(&row[idx], x);
                    }
                }
                for k in 0..n.dim(s) {
                    let x = na.get(r, k);
                    if !f.is_zero(x) {
                        let idx = var(s, k, c);
                        row[idx] = f.sub(&row[idx], x);
                    }
                }
                if row.iter().any(|x| !f.is_zero(x)) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(f, unknowns, rows)?;
    let ker = system.kernel();
    Ok(ker
        .vectors()
        .into_iter()
        .map(|x| {
            let comps = (0..nv)
                .map(|v| Matrix::from_fn(f, n.dim(v), m.dim(v), |r, c| x[var(v, r, c)].clone()))
                .collect();
            Morphism::unchecked(m.clone(), n.clone(), comps)
        })
        .collect())
}

pub fn hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    Ok(hom_space(m, n)?.len())
}

/// Upper limit on `|k|^dim Hom` for exhaustive searches over a finite field.
pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
/// Random combinations tried before giving up.
pub const RANDOM_TRIALS: usize = 200;
/// Upper limit on grid points for the definitive search over the rationals.
pub const GRID_LIMIT: u64 = 20_000;

/// An isomorphism `M -> N`, `Ok(None)` when none exists, or
/// [`Error::Inconclusive`] when the search could neither find one nor rule it out.
pub fn is_isomorphic<F: Field>(m: &Representation<F>, n: &Representation<F>, seed: u64) -> Result<Option<Morphism<F>>> {
    m.check_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m == n {
        return Ok(Some(Morphism::identity(m)));
    }
    let hom = hom_space(m, n)?;
    if hom.is_empty() {
        return Ok(if m.is_zero() { Some(Morphism::identity(m)) } else { None });
    }
    let end_m = hom_dim(m, m)?;
    if hom.len() != end_m || hom_dim(n, n)? != end_m || hom_dim(n, m)? != end_m {
        return Ok(None);
    }
    find_invertible(m, n, &hom, seed)
}

/// Searches the span of `basis` for an isomorphism. `Ok(None)` only when the search
/// was exhaustive or definitive.
pub(crate) fn find_invertible<F: Field>(
    m: &Representation<F>,
    n: &Representation<F>,
    basis: &[Morphism<F>],
    seed: u64,
) -> Result<Option<Morphism<F>>> {
    let f = m.field();
    let k = basis.len();
    for b in basis {
        if b.is_isomorphism() {
            return Ok(Some(b.clone()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let coeffs: Vec<F::Elem> = (0..k).map(|_| f.random(&mut rng)).collect();
        let c = Morphism::combination(m, n, &coeffs, basis);
        if c.is_isomorphism() {
            return Ok(Some(c));
        }
    }
    // A nonzero determinant polynomial of degree D has a non-root on any grid S^k
    // with |S| > D, so exhausting such a grid is definitive.
    let (size, exhaustive) = match f.order() {
        Some(q) => (q, true),
        None => (m.total_dim() as u64 + 1, false),
    };
    let limit = if exhaustive { EXHAUSTIVE_LIMIT } else { GRID_LIMIT };
    let points = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(size).filter(|p| *p <= limit));
    let Some(points) = points else {
        return Err(Error::Inconclusive);
    };
    for idx in 0..points {
        let mut rest = idx;
        let coeffs: Vec<F::Elem> = (0..k)
            .map(|_| {
                let e = f.element(rest % size);
                rest /= size;
                e
            })
            .collect();
        let c = Morphism::combination(m, n, &coeffs, basis);
        if c.is_isomorphism() {
            return Ok(Some(c));
        }
    }
    Ok(None)
}
