use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::hom::hom_space;
use super::rep::{Morphism, Representation, VertexSpaces};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::presentation::AlgebraTable;

/// The indecomposable projective at `v`: `P_v(w) = A(v, w)`, acted on by left
/// multiplication.
pub fn projective<F: Field>(a: &Arc<AlgebraTable<F>>, v: usize) -> Representation<F> {
    let dims = (0..a.vertex_count()).map(|w| a.hom_block(v, w).len()).collect();
    let action = (0..a.dim()).map(|i| a.left_action_on_column(i, v)).collect();
    Representation::derived(a, dims, action)
}

/// The simple module at `v`.
pub fn simple<F: Field>(a: &Arc<AlgebraTable<F>>, v: usize) -> Representation<F> {
    let f = a.field();
    let mut dims = vec![0; a.vertex_count()];
    dims[v] = 1;
    let action = a
        .basis()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            if i == a.idempotent(v) {
                Matrix::identity(f, 1)
            } else {
                Matrix::zeros(f, dims[b.tgt], dims[b.src])
            }
        })
        .collect();
    Representation::derived(a, dims, action)
}

/// The indecomposable injective at `v`, dual to the projective at `v` of the
/// opposite algebra.
pub fn injective<F: Field>(a: &Arc<AlgebraTable<F>>, v: usize) -> Representation<F> {
    let op = Arc::new(a.opposite());
    dual_over(&projective(&op, v), a)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalReps<F: Field> {
    pub projective: Representation<F>,
    pub injective: Representation<F>,
    pub simple: Representation<F>,
}

pub fn canonical_reps<F: Field>(a: &Arc<AlgebraTable<F>>, v: usize) -> Result<CanonicalReps<F>> {
    if v >= a.vertex_count() {
        return Err(Error::UnknownVertex(alloc::format!("#{v}")));
    }
    Ok(CanonicalReps {
        projective: projective(a, v),
        injective: injective(a, v),
        simple: simple(a, v),
    })
}

/// `D M = Hom_k(M, k)` as a module over the opposite algebra.
pub fn dual_rep<F: Field>(m: &Representation<F>) -> Representation<F> {
    let op = Arc::new(m.algebra().opposite());
    dual_over(m, &op)
}

/// The dual of `m`, placed over `target`, which must be the opposite of `m`'s
/// algebra (basis indices are shared between an algebra and its opposite).
pub(crate) fn dual_over<F: Field>(m: &Representation<F>, target: &Arc<AlgebraTable<F>>) -> Representation<F> {
    let action = (0..m.algebra().dim()).map(|i| m.action(i).transpose()).collect();
    Representation::derived(target, m.dims().to_vec(), action)
}

/// Radical, top and socle of a module.
#[derive(Clone, Debug)]
pub struct Layers<F: Field> {
    pub radical: Representation<F>,
    pub radical_incl: Morphism<F>,
    pub top: Representation<F>,
    pub top_proj: Morphism<F>,
    pub socle: Representation<F>,
    pub socle_incl: Morphism<F>,
}

pub fn layers<F: Field>(m: &Representation<F>) -> Layers<F> {
    let rad = m.radical_spaces();
    let (radical, radical_incl) = m.submodule(&rad);
    let (top, top_proj) = m.quotient(&rad);
    let (socle, socle_incl) = m.submodule(&m.socle_spaces());
    Layers {
        radical,
        radical_incl,
        top,
        top_proj,
        socle,
        socle_incl,
    }
}

/// What to carve out of a module.
#[derive(Clone, Debug)]
pub enum CarveSpec<F: Field> {
    /// The submodule generated by `(vertex, vector)` pairs.
    Generators(Vec<(usize, Vec<F::Elem>)>),
    /// The trace of a module: the sum of the images of all maps from it.
    Trace(Representation<F>),
}

#[derive(Clone, Debug)]
pub struct Carve<F: Field> {
    pub sub: Representation<F>,
    pub quotient: Representation<F>,
    pub incl: Morphism<F>,
    pub proj: Morphism<F>,
}

/// Sum of the images of all homomorphisms `p -> m`.
pub fn trace_spaces<F: Field>(p: &Representation<F>, m: &Representation<F>) -> Result<VertexSpaces<F>> {
    let f = m.field();
    let maps = hom_space(p, m)?;
    Ok((0..m.dims().len())
        .map(|v| Subspace::from_vectors(f, m.dim(v), maps.iter().flat_map(|g| g.comp(v).column_vectors())))
        .collect())
}

pub fn carve<F: Field>(m: &Representation<F>, spec: &CarveSpec<F>) -> Result<Carve<F>> {
    let spaces = match spec {
        CarveSpec::Generators(gens) => {
            for (v, g) in gens {
                if *v >= m.dims().len() || g.len() != m.dim(*v) {
                    return Err(Error::OutsideModule(alloc::format!(
                        "generator of length {} at vertex #{v}",
                        g.len()
                    )));
                }
            }
            m.generated(gens)
        }
        CarveSpec::Trace(p) => trace_spaces(p, m)?,
    };
    let (sub, incl) = m.submodule(&spaces);
    let (quotient, proj) = m.quotient(&spaces);
    Ok(Carve {
        sub,
        quotient,
        incl,
        proj,
    })
}
