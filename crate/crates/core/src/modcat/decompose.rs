use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::hom::{hom_space, is_isomorphic};
use super::rep::{Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{matrix_algebra_radical, Field, Matrix};

const RANDOM_TRIALS: usize = 200;

/// `dim End(M) - dim rad End(M)`; equal to 1 exactly when a nonzero `M` is
/// indecomposable with split top.
pub fn end_top_dim<F: Field>(m: &Representation<F>) -> Result<usize> {
    let ends = hom_space(m, m)?;
    let mats: Vec<Matrix<F>> = ends.iter().map(Morphism::global_matrix).collect();
    Ok(ends.len() - matrix_algebra_radical(m.field(), &mats).dim())
}

pub fn is_indecomposable<F: Field>(m: &Representation<F>) -> Result<bool> {
    Ok(!m.is_zero() && end_top_dim(m)? == 1)
}

/// An indecomposable summand with its inclusion into the decomposed module.
#[derive(Clone, Debug)]
pub struct Summand<F: Field> {
    pub module: Representation<F>,
    pub incl: Morphism<F>,
}

#[derive(Clone, Debug)]
pub struct Decomposition<F: Field> {
    pub summands: Vec<Summand<F>>,
    /// Isomorphism classes: a representative and its multiplicity.
    pub classes: Vec<(Representation<F>, usize)>,
}

impl<F: Field> Decomposition<F> {
    /// The map `⊕ summands -> M` assembled from the inclusions, an isomorphism.
    pub fn reassembly(&self, m: &Representation<F>) -> Morphism<F> {
        let parts: Vec<_> = self.summands.iter().map(|s| s.module.clone()).collect();
        let (sum, _, projections) = Representation::direct_sum(m.algebra(), &parts);
        let mut out = Morphism::zero(&sum, m);
        for (s, p) in self.summands.iter().zip(&projections) {
            out = out.add(&s.incl.compose(p));
        }
        out
    }
}

/// Splits `m` into indecomposables by Fitting decompositions of endomorphisms.
pub fn decompose<F: Field>(m: &Representation<F>, seed: u64) -> Result<Decomposition<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = Vec::new();
    if !m.is_zero() {
        pending.push(Summand {
            module: m.clone(),
            incl: Morphism::identity(m),
        });
    }
    let mut done = Vec::new();
    while let Some(piece) = pending.pop() {
        let ends = hom_space(&piece.module, &piece.module)?;
        let mats: Vec<Matrix<F>> = ends.iter().map(Morphism::global_matrix).collect();
        let rad = matrix_algebra_radical(m.field(), &mats);
        if ends.len() - rad.dim() == 1 {
            done.push(piece);
            continue;
        }
        let (a, b) = split(&piece.module, &ends, &mut rng)?;
        for (sub, incl) in [a, b] {
            pending.push(Summand {
                module: sub,
                incl: piece.incl.compose(&incl),
            });
        }
    }
    done.reverse();
    let mut classes: Vec<(Representation<F>, usize)> = Vec::new();
    for s in &done {
        let mut found = false;
        for (rep, count) in classes.iter_mut() {
            if is_isomorphic(rep, &s.module, seed)?.is_some() {
                *count += 1;
                found = true;
                break;
            }
        }
        if !found {
            classes.push((s.module.clone(), 1));
        }
    }
    Ok(Decomposition { summands: done, classes })
}

type Piece<F> = (Representation<F>, Morphism<F>);

/// A nontrivial Fitting splitting `M = ker φ^n ⊕ im φ^n` for some `φ = e - λ`.
fn split<F: Field>(m: &Representation<F>, ends: &[Morphism<F>], rng: &mut ChaCha8Rng) -> Result<(Piece<F>, Piece<F>)> {
    let f = m.field();
    let k = ends.len();
    let mut candidates: Vec<Morphism<F>> = ends.to_vec();
    for i in 0..k {
        for j in i + 1..k {
            candidates.push(ends[i].add(&ends[j]));
        }
    }
    let mut tried = 0;
    let mut next = |idx: usize, rng: &mut ChaCha8Rng| -> Option<Morphism<F>> {
        if idx < candidates.len() {
            return Some(candidates[idx].clone());
        }
        if tried >= RANDOM_TRIALS {
            return None;
        }
        tried += 1;
        let coeffs: Vec<F::Elem> = (0..k).map(|_| f.random(rng)).collect();
        Some(Morphism::combination(m, m, &coeffs, ends))
    };
    let n = m.total_dim();
    let mut idx = 0;
    while let Some(phi) = next(idx, rng) {
        idx += 1;
        let g = phi.global_matrix();
        for lambda in f.roots(&g.char_poly()) {
            let shifted = phi.add(&Morphism::identity(m).scale(&f.neg(&lambda)));
            let comps: Vec<Matrix<F>> = shifted.comps().iter().map(|c| c.pow(n)).collect();
            let power = Morphism::unchecked(m.clone(), m.clone(), comps);
            let ker = power.kernel_spaces();
            let kd: usize = ker.iter().map(|s| s.dim()).sum();
            if kd == 0 || kd == n {
                continue;
            }
            return Ok((m.submodule(&ker), m.submodule(&power.image_spaces())));
        }
    }
    Err(Error::NonSplit(alloc::format!(
        "no endomorphism of a module of dimension {n} splits over {}; try a larger field",
        f.spec()
    )))
}
