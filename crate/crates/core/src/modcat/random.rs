use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use super::rep::Representation;
use super::resolution::ProjectiveSum;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::presentation::AlgebraTable;

/// A random nonzero quotient of a projective, with total dimension at most
/// `max_dim`: `P / A·{g_1, ..., g_r}` for random tops and random relations.
pub fn random_module<F: Field, R: Rng + ?Sized>(
    a: &Arc<AlgebraTable<F>>,
    max_dim: usize,
    rng: &mut R,
) -> Representation<F> {
    let f = a.field();
    let n = a.vertex_count();
    let proj_dims: Vec<usize> = (0..n).map(|v| (0..n).map(|w| a.hom_block(v, w).len()).sum()).collect();
    loop {
        let summands = rng.gen_range(1..=3);
        let tops: Vec<usize> = (0..summands).map(|_| rng.gen_range(0..n)).collect();
        if tops.iter().map(|&v| proj_dims[v]).sum::<usize>() > 3 * max_dim.max(1) {
            continue;
        }
        let p = ProjectiveSum::new(a, tops);
        let m = p.module();
        let relations = rng.gen_range(0..=3);
        let gens: Vec<(usize, Vec<F::Elem>)> = (0..relations)
            .filter_map(|_| {
                let v = rng.gen_range(0..n);
                (m.dim(v) > 0).then(|| (v, (0..m.dim(v)).map(|_| f.random(rng)).collect()))
            })
            .collect();
        let (q, _) = m.quotient(&m.generated(&gens));
        if !q.is_zero() && q.total_dim() <= max_dim {
            return q;
        }
    }
}

/// All dimension vectors with total at most `max_total`.
pub fn dim_vectors(vertices: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0; vertices];
    fn rec(cur: &mut Vec<usize>, i: usize, left: usize, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur[i] = d;
            rec(cur, i + 1, left - d, out);
        }
        cur[i] = 0;
    }
    rec(&mut cur, 0, max_total, &mut out);
    out
}

/// Calls `visit` on every representation with the given dimension vector over a
/// finite field. Fails when the field is infinite or there are more than `budget`
/// candidate arrow tuples.
pub fn for_each_rep<F: Field>(
    a: &Arc<AlgebraTable<F>>,
    dims: &[usize],
    budget: u64,
    mut visit: impl FnMut(&Representation<F>) -> Result<()>,
) -> Result<u64> {
    let f = a.field();
    let q = f.order().ok_or(Error::InfiniteField)?;
    let shapes: Vec<(usize, usize)> = a.arrows().iter().map(|ar| (dims[ar.tgt], dims[ar.src])).collect();
    let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
    let total = (0..entries)
        .try_fold(1u64, |acc, _| acc.checked_mul(q).filter(|t| *t <= budget))
        .ok_or(Error::BudgetExceeded(budget))?;
    let mut digits = vec![0u64; entries];
    let mut found = 0;
    for _ in 0..total {
        let mut pos = 0;
        let maps: Vec<Matrix<F>> = shapes
            .iter()
            .map(|&(r, c)| {
                let m = Matrix::from_fn(f, r, c, |i, j| f.element(digits[pos + i * c + j]));
                pos += r * c;
                m
            })
            .collect();
        let rep = Representation::from_arrow_maps_unchecked(a, dims.to_vec(), maps)?;
        if rep.validate().is_ok() {
            found += 1;
            visit(&rep)?;
        }
        for d in digits.iter_mut() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
    }
    Ok(found)
}
