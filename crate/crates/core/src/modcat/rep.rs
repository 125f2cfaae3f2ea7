use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Subspace};
use crate::presentation::AlgebraTable;

/// One subspace per vertex; a submodule when closed under the action.
pub type VertexSpaces<F> = Vec<Subspace<F>>;

/// A finite-dimensional module: a vector space per vertex and a matrix for every
/// basis element of the algebra, acting on column vectors.
#[derive(Clone, Debug)]
pub struct Representation<F: Field> {
    inner: Arc<RepInner<F>>,
}

#[derive(Debug)]
struct RepInner<F: Field> {
    algebra: Arc<AlgebraTable<F>>,
    dims: Vec<usize>,
    action: Vec<Matrix<F>>,
}

impl<F: Field> PartialEq for Representation<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (same_algebra(&self.inner.algebra, &other.inner.algebra)
                && self.inner.dims == other.inner.dims
                && self.inner.action == other.inner.action)
    }
}

impl<F: Field> Eq for Representation<F> {}

pub(crate) fn same_algebra<F: Field>(a: &Arc<AlgebraTable<F>>, b: &Arc<AlgebraTable<F>>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<F: Field> Representation<F> {
    /// Builds a module from the action of every basis element, checking shapes, the
    /// idempotents and `M(b_i) M(b_j) = M(b_i b_j)`.
    pub fn from_action(algebra: &Arc<AlgebraTable<F>>, dims: Vec<usize>, action: Vec<Matrix<F>>) -> Result<Self> {
        let m = Self::assemble(algebra, dims, action);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn assemble(algebra: &Arc<AlgebraTable<F>>, dims: Vec<usize>, action: Vec<Matrix<F>>) -> Self {
        Representation {
            inner: Arc::new(RepInner {
                algebra: algebra.clone(),
                dims,
                action,
            }),
        }
    }

    /// Internal constructor for modules derived from valid ones; checked in debug
    /// builds only.
    pub(crate) fn derived(algebra: &Arc<AlgebraTable<F>>, dims: Vec<usize>, action: Vec<Matrix<F>>) -> Self {
        let m = Self::assemble(algebra, dims, action);
        debug_assert_eq!(m.validate(), Ok(()));
        m
    }

    /// Builds a module from one matrix per arrow (`dim tgt x dim src`); every basis
    /// word acts by the product of its arrow matrices.
    pub fn from_arrow_maps(algebra: &Arc<AlgebraTable<F>>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self> {
        let m = Self::from_arrow_maps_unchecked(algebra, dims, maps)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_arrow_maps_unchecked(
        algebra: &Arc<AlgebraTable<F>>,
        dims: Vec<usize>,
        maps: Vec<Matrix<F>>,
    ) -> Result<Self> {
        let f = algebra.field();
        if !algebra.has_arrow_words() {
            return Err(Error::NoArrowWords);
        }
        if dims.len() != algebra.vertex_count() || maps.len() != algebra.arrows().len() {
            return Err(Error::Shape("one dimension per vertex and one map per arrow".into()));
        }
        for (a, m) in algebra.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.tgt], dims[a.src]) {
                return Err(Error::Shape(alloc::format!(
                    "map for `{}` must be {}x{}, got {}x{}",
                    a.name,
                    dims[a.tgt],
                    dims[a.src],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let action = algebra
            .basis()
            .iter()
            .map(|b| {
                let word = b.word.as_ref().unwrap();
                let mut m = Matrix::identity(f, dims[b.src]);
                for &a in word.iter().rev() {
                    m = maps[a].mul(&m);
                }
                m
            })
            .collect();
        Ok(Self::assemble(algebra, dims, action))
    }

    /// Checks the module axioms.
    pub fn validate(&self) -> Result<()> {
        let a = self.algebra();
        let f = a.field();
        let dims = &self.inner.dims;
        if dims.len() != a.vertex_count() || self.inner.action.len() != a.dim() {
            return Err(Error::NotAModule("shape".into()));
        }
        for (i, b) in a.basis().iter().enumerate() {
            if self.inner.action[i].shape() != (dims[b.tgt], dims[b.src]) {
                return Err(Error::NotAModule(alloc::format!("matrix for `{}` has the wrong shape", b.label)));
            }
        }
        for v in 0..a.vertex_count() {
            if self.inner.action[a.idempotent(v)] != Matrix::identity(f, dims[v]) {
                return Err(Error::NotAModule("idempotent does not act as the identity".into()));
            }
        }
        for (i, bi) in a.basis().iter().enumerate() {
            for (j, bj) in a.basis().iter().enumerate() {
                if bi.src != bj.tgt {
                    continue;
                }
                let lhs = self.inner.action[i].mul(&self.inner.action[j]);
                let mut rhs = Matrix::zeros(f, dims[bi.tgt], dims[bj.src]);
                for (k, c) in a.mul_basis(i, j) {
                    rhs = rhs.add(&self.inner.action[*k].scale(c));
                }
                if lhs != rhs {
                    return Err(Error::NotAModule(alloc::format!(
                        "{} * {} is not respected",
                        bi.label,
                        bj.label
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: &Arc<AlgebraTable<F>>) -> Self {
        let f = algebra.field();
        let dims = vec![0; algebra.vertex_count()];
        let action = algebra
            .basis()
            .iter()
            .map(|_| Matrix::zeros(f, 0, 0))
            .collect();
        Self::assemble(algebra, dims, action)
    }

    pub fn algebra(&self) -> &Arc<AlgebraTable<F>> {
        &self.inner.algebra
    }
    pub fn field(&self) -> &F {
        self.inner.algebra.field()
    }
    pub fn dims(&self) -> &[usize] {
        &self.inner.dims
    }
    pub fn dim(&self, v: usize) -> usize {
        self.inner.dims[v]
    }
    pub fn total_dim(&self) -> usize {
        self.inner.dims.iter().sum()
    }
    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
    pub fn support(&self) -> Vec<usize> {
        (0..self.inner.dims.len()).filter(|&v| self.inner.dims[v] > 0).collect()
    }
    /// Matrix of the basis element `i`.
    pub fn action(&self, i: usize) -> &Matrix<F> {
        &self.inner.action[i]
    }
    pub fn arrow_map(&self, arrow: usize) -> &Matrix<F> {
        &self.inner.action[self.algebra().arrows()[arrow].basis]
    }
    /// Start of each vertex block in global coordinates.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.inner
            .dims
            .iter()
            .map(|d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    pub fn check_same_algebra(&self, other: &Self) -> Result<()> {
        if same_algebra(self.algebra(), other.algebra()) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Splits a global vector into vertex components.
    pub fn split(&self, x: &[F::Elem]) -> Result<Vec<Vec<F::Elem>>> {
        if x.len() != self.total_dim() {
            return Err(Error::OutsideModule(alloc::format!(
                "vector of length {} in a module of dimension {}",
                x.len(),
                self.total_dim()
            )));
        }
        let mut out = Vec::new();
        let mut start = 0;
        for &d in self.dims() {
            out.push(x[start..start + d].to_vec());
            start += d;
        }
        Ok(out)
    }

    pub fn zero_spaces(&self) -> VertexSpaces<F> {
        self.dims().iter().map(|&d| Subspace::zero(self.field(), d)).collect()
    }

    pub fn full_spaces(&self) -> VertexSpaces<F> {
        self.dims().iter().map(|&d| Subspace::full(self.field(), d)).collect()
    }

    /// Submodule generated by vertex-local vectors `(vertex, vector)`.
    pub fn generated(&self, gens: &[(usize, Vec<F::Elem>)]) -> VertexSpaces<F> {
        let a = self.algebra();
        let f = self.field();
        let mut buckets: Vec<Vec<Vec<F::Elem>>> = vec![Vec::new(); a.vertex_count()];
        for (v, g) in gens {
            for w in 0..a.vertex_count() {
                for &i in a.hom_block(*v, w) {
                    buckets[w].push(self.action(i).apply(g));
                }
            }
        }
        buckets
            .into_iter()
            .enumerate()
            .map(|(w, vs)| Subspace::from_vectors(f, self.dim(w), vs))
            .collect()
    }

    /// Submodule generated by global vectors.
    pub fn generated_by_global(&self, gens: &[Vec<F::Elem>]) -> Result<VertexSpaces<F>> {
        let mut local = Vec::new();
        for g in gens {
            for (v, part) in self.split(g)?.into_iter().enumerate() {
                local.push((v, part));
            }
        }
        Ok(self.generated(&local))
    }

    /// Whether the given spaces are closed under the action.
    pub fn is_submodule(&self, spaces: &VertexSpaces<F>) -> bool {
        let a = self.algebra();
        a.basis().iter().enumerate().all(|(i, b)| {
            spaces[b.src]
                .vectors()
                .iter()
                .all(|u| spaces[b.tgt].contains_vector(&self.action(i).apply(u)))
        })
    }

    /// The submodule on the given (closed) spaces and its inclusion.
    pub fn submodule(&self, spaces: &VertexSpaces<F>) -> (Self, Morphism<F>) {
        let a = self.algebra();
        let f = self.field();
        let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
        let action = a
            .basis()
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let (s, t) = (&spaces[b.src], &spaces[b.tgt]);
                let cols: Vec<Vec<F::Elem>> = s
                    .vectors()
                    .iter()
                    .map(|u| t.coordinates(&self.action(i).apply(u)).expect("closed under the action"))
                    .collect();
                Matrix::from_columns(f, t.dim(), &cols)
            })
            .collect();
        let sub = Self::derived(a, dims, action);
        let comps = spaces.iter().map(|s| s.basis().transpose()).collect();
        let incl = Morphism::unchecked(sub.clone(), self.clone(), comps);
        (sub, incl)
    }

    /// The quotient by the given (closed) spaces and the projection.
    pub fn quotient(&self, spaces: &VertexSpaces<F>) -> (Self, Morphism<F>) {
        let a = self.algebra();
        let qs: Vec<Matrix<F>> = spaces.iter().map(Subspace::quotient_map).collect();
        let ss: Vec<Matrix<F>> = spaces.iter().map(Subspace::quotient_section).collect();
        let dims: Vec<usize> = qs.iter().map(Matrix::rows).collect();
        let action = a
            .basis()
            .iter()
            .enumerate()
            .map(|(i, b)| qs[b.tgt].mul(self.action(i)).mul(&ss[b.src]))
            .collect();
        let quot = Self::derived(a, dims, action);
        let proj = Morphism::unchecked(self.clone(), quot.clone(), qs);
        (quot, proj)
    }

    /// `rad M`: the span of the images of all radical basis elements.
    pub fn radical_spaces(&self) -> VertexSpaces<F> {
        let a = self.algebra();
        let f = self.field();
        (0..a.vertex_count())
            .map(|w| {
                let vecs = a
                    .radical_basis()
                    .iter()
                    .filter(|&&i| a.basis()[i].tgt == w)
                    .flat_map(|&i| self.action(i).column_vectors());
                Subspace::from_vectors(f, self.dim(w), vecs)
            })
            .collect()
    }

    /// `soc M`: vectors killed by every radical basis element.
    pub fn socle_spaces(&self) -> VertexSpaces<F> {
        let a = self.algebra();
        let f = self.field();
        (0..a.vertex_count())
            .map(|v| {
                let blocks: Vec<&Matrix<F>> = a
                    .radical_basis()
                    .iter()
                    .filter(|&&i| a.basis()[i].src == v)
                    .map(|&i| self.action(i))
                    .collect();
                if blocks.is_empty() {
                    return Subspace::full(f, self.dim(v));
                }
                let stacked = blocks[1..].iter().fold(blocks[0].clone(), |acc, m| acc.vstack(m));
                stacked.kernel()
            })
            .collect()
    }

    /// Whether `rad M = 0`.
    pub fn is_semisimple(&self) -> bool {
        self.radical_spaces().iter().all(Subspace::is_zero)
    }

    /// Direct sum with the canonical injections and projections.
    pub fn direct_sum(algebra: &Arc<AlgebraTable<F>>, parts: &[Self]) -> (Self, Vec<Morphism<F>>, Vec<Morphism<F>>) {
        let f = algebra.field();
        let n = algebra.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dim(v)).sum()).collect();
        let action = algebra
            .basis()
            .iter()
            .enumerate()
            .map(|(i, _)| {
                let blocks: Vec<Matrix<F>> = parts.iter().map(|p| p.action(i).clone()).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        let sum = Self::derived(algebra, dims.clone(), action);
        let mut injections = Vec::new();
        let mut projections = Vec::new();
        let mut offset = vec![0; n];
        for p in parts {
            let inj: Vec<Matrix<F>> = (0..n)
                .map(|v| Matrix::from_fn(f, dims[v], p.dim(v), |r, c| if r == offset[v] + c { f.one() } else { f.zero() }))
                .collect();
            let proj: Vec<Matrix<F>> = inj.iter().map(Matrix::transpose).collect();
            injections.push(Morphism::unchecked(p.clone(), sum.clone(), inj));
            projections.push(Morphism::unchecked(sum.clone(), p.clone(), proj));
            for v in 0..n {
                offset[v] += p.dim(v);
            }
        }
        (sum, injections, projections)
    }
}

/// A module homomorphism, one matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism<F: Field> {
    source: Representation<F>,
    target: Representation<F>,
    comps: Vec<Matrix<F>>,
}

impl<F: Field> Morphism<F> {
    pub fn new(source: Representation<F>, target: Representation<F>, comps: Vec<Matrix<F>>) -> Result<Self> {
        source.check_same_algebra(&target)?;
        let m = Morphism { source, target, comps };
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn unchecked(source: Representation<F>, target: Representation<F>, comps: Vec<Matrix<F>>) -> Self {
        let m = Morphism { source, target, comps };
        debug_assert_eq!(m.validate(), Ok(()));
        m
    }

    /// Shapes and commuting squares for every basis element.
    pub fn validate(&self) -> Result<()> {
        let a = self.source.algebra();
        if self.comps.len() != a.vertex_count() {
            return Err(Error::Shape("one matrix per vertex".into()));
        }
        for v in 0..a.vertex_count() {
            if self.comps[v].shape() != (self.target.dim(v), self.source.dim(v)) {
                return Err(Error::Shape(alloc::format!("component at vertex {v}")));
            }
        }
        for (i, b) in a.basis().iter().enumerate() {
            let lhs = self.comps[b.tgt].mul(self.source.action(i));
            let rhs = self.target.action(i).mul(&self.comps[b.src]);
            if lhs != rhs {
                return Err(Error::NotAModule(alloc::format!("square for `{}` does not commute", b.label)));
            }
        }
        Ok(())
    }

    pub fn zero(source: &Representation<F>, target: &Representation<F>) -> Self {
        let f = source.field();
        let comps = (0..source.dims().len())
            .map(|v| Matrix::zeros(f, target.dim(v), source.dim(v)))
            .collect();
        Morphism {
            source: source.clone(),
            target: target.clone(),
            comps,
        }
    }

    pub fn identity(m: &Representation<F>) -> Self {
        let comps = m.dims().iter().map(|&d| Matrix::identity(m.field(), d)).collect();
        Morphism {
            source: m.clone(),
            target: m.clone(),
            comps,
        }
    }

    pub fn source(&self) -> &Representation<F> {
        &self.source
    }
    pub fn target(&self) -> &Representation<F> {
        &self.target
    }
    pub fn comps(&self) -> &[Matrix<F>] {
        &self.comps
    }
    pub fn comp(&self, v: usize) -> &Matrix<F> {
        &self.comps[v]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(other.target.dims(), self.source.dims(), "composable morphisms");
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.mul(b)).collect();
        Morphism {
            source: other.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let comps = self.comps.iter().zip(&other.comps).map(|(a, b)| a.add(b)).collect();
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            comps,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Morphism {
            source: self.source.clone(),
            target: self.target.clone(),
            comps: self.comps.iter().map(|m| m.scale(c)).collect(),
        }
    }

    /// `Σ c_i f_i` over morphisms with a common source and target.
    pub fn combination(source: &Representation<F>, target: &Representation<F>, coeffs: &[F::Elem], basis: &[Self]) -> Self {
        let f = source.field();
        let mut out = Self::zero(source, target);
        for (c, m) in coeffs.iter().zip(basis) {
            if !f.is_zero(c) {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.comps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.comps.iter().all(|m| m.is_square() && m.rank() == m.rows())
    }

    pub fn kernel_spaces(&self) -> VertexSpaces<F> {
        self.comps.iter().map(Matrix::kernel).collect()
    }

    pub fn image_spaces(&self) -> VertexSpaces<F> {
        self.comps.iter().map(Matrix::image).collect()
    }

    /// Block-diagonal matrix on global coordinates.
    pub fn global_matrix(&self) -> Matrix<F> {
        Matrix::block_diag(self.source.field(), &self.comps)
    }

    /// Entries of all components, concatenated (a coordinate vector for the
    /// morphism inside the space of vertex-wise linear maps).
    pub fn flatten(&self) -> Vec<F::Elem> {
        self.comps.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }
}

/// Spaces of a kernel as a module, with its inclusion.
pub fn kernel<F: Field>(f: &Morphism<F>) -> (Representation<F>, Morphism<F>) {
    f.source().submodule(&f.kernel_spaces())
}

/// Cokernel with the projection from the target.
pub fn cokernel<F: Field>(f: &Morphism<F>) -> (Representation<F>, Morphism<F>) {
    f.target().quotient(&f.image_spaces())
}

pub fn image<F: Field>(f: &Morphism<F>) -> (Representation<F>, Morphism<F>) {
    f.target().submodule(&f.image_spaces())
}
