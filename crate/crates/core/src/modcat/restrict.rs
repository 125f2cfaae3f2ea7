use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::rep::{cokernel, kernel, Representation};
use super::resolution::{projective_cover, ProjectiveSum};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::presentation::AlgebraTable;

/// A full subcategory `B = eAe` of `A` on a set of vertices.
#[derive(Clone, Debug)]
pub struct Subcategory<F: Field> {
    ambient: Arc<AlgebraTable<F>>,
    algebra: Arc<AlgebraTable<F>>,
    /// Vertex `i` of `B` is vertex `vertices[i]` of `A`.
    vertices: Vec<usize>,
    /// Basis element `k` of `B` is basis element `embedding[k]` of `A`.
    embedding: Vec<usize>,
}

impl<F: Field> Subcategory<F> {
    pub fn new(ambient: &Arc<AlgebraTable<F>>, vertices: &[usize]) -> Result<Self> {
        let (sub, embedding) = ambient.full_subcategory(vertices)?;
        let mut vertices = vertices.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        Ok(Subcategory {
            ambient: ambient.clone(),
            algebra: Arc::new(sub),
            vertices,
            embedding,
        })
    }

    pub fn ambient(&self) -> &Arc<AlgebraTable<F>> {
        &self.ambient
    }
    pub fn algebra(&self) -> &Arc<AlgebraTable<F>> {
        &self.algebra
    }
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }
    pub fn embedding(&self) -> &[usize] {
        &self.embedding
    }

    /// `V ↦ e V`, a module over `B`.
    pub fn restrict(&self, m: &Representation<F>) -> Result<Representation<F>> {
        if !super::rep::same_algebra(m.algebra(), &self.ambient) {
            return Err(Error::AlgebraMismatch);
        }
        let dims = self.vertices.iter().map(|&v| m.dim(v)).collect();
        let action = self.embedding.iter().map(|&i| m.action(i).clone()).collect();
        Ok(Representation::derived(&self.algebra, dims, action))
    }

    /// `W ↦ A e ⊗_B W`, as the cokernel of the induced projective presentation.
    pub fn induce(&self, w: &Representation<F>) -> Result<Representation<F>> {
        if !super::rep::same_algebra(w.algebra(), &self.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let a = &self.ambient;
        let f = a.field();
        let (p0, cover) = projective_cover(w);
        let (k, incl) = kernel(&cover);
        let (p1, c1) = projective_cover(&k);
        let d = incl.compose(&c1);
        let lift = |p: &ProjectiveSum<F>| ProjectiveSum::new(a, p.tops().iter().map(|&v| self.vertices[v]).collect());
        let up0 = lift(&p0);
        let up1 = lift(&p1);
        let b = &self.algebra;
        let gens: Vec<Vec<F::Elem>> = (0..p1.tops().len())
            .map(|k| {
                let t = p1.tops()[k];
                let x = d.comp(t).column(p1.generator_index(k));
                let at = self.vertices[t];
                let mut y = vec![f.zero(); up0.module().dim(at)];
                let mut off_b = 0;
                let mut off_a = 0;
                for &s in p0.tops() {
                    for (pos, &bi) in b.hom_block(s, t).iter().enumerate() {
                        let ai = self.embedding[bi];
                        y[off_a + a.pos_in_block(ai)] = x[off_b + pos].clone();
                    }
                    off_b += b.hom_block(s, t).len();
                    off_a += a.hom_block(self.vertices[s], at).len();
                }
                y
            })
            .collect();
        let up_d = up1.map_from_generators(up0.module(), &gens);
        Ok(cokernel(&up_d).0)
    }
}
