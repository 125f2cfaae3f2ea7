use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::canon::{dual_over, projective};
use super::hom::{hom_space, is_isomorphic};
use super::rep::{kernel, Morphism, Representation};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::presentation::AlgebraTable;

/// `⊕_j P_{tops[j]}`, with its generators `e_{tops[j]}` in summand `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveSum<F: Field> {
    tops: Vec<usize>,
    module: Representation<F>,
}

impl<F: Field> ProjectiveSum<F> {
    pub fn new(a: &Arc<AlgebraTable<F>>, tops: Vec<usize>) -> Self {
        let parts: Vec<_> = tops.iter().map(|&v| projective(a, v)).collect();
        let (module, _, _) = Representation::direct_sum(a, &parts);
        ProjectiveSum { tops, module }
    }

    pub fn tops(&self) -> &[usize] {
        &self.tops
    }
    pub fn module(&self) -> &Representation<F> {
        &self.module
    }
    pub fn is_zero(&self) -> bool {
        self.tops.is_empty()
    }
    pub fn algebra(&self) -> &Arc<AlgebraTable<F>> {
        self.module.algebra()
    }

    /// Start of summand `j` inside `P(w)`.
    pub(crate) fn summand_offset(&self, j: usize, w: usize) -> usize {
        let a = self.algebra();
        self.tops[..j].iter().map(|&s| a.hom_block(s, w).len()).sum()
    }

    /// Position of the generator of summand `j` inside `P(tops[j])`.
    pub fn generator_index(&self, j: usize) -> usize {
        let s = self.tops[j];
        self.summand_offset(j, s) + self.algebra().pos_in_block(self.algebra().idempotent(s))
    }

    /// The map `P -> n` sending the generator of summand `j` to `gens[j] ∈ n(tops[j])`.
    pub fn map_from_generators(&self, n: &Representation<F>, gens: &[Vec<F::Elem>]) -> Morphism<F> {
        let a = self.algebra();
        let f = a.field();
        let comps = (0..a.vertex_count())
            .map(|w| {
                let mut cols = Vec::new();
                for (j, &s) in self.tops.iter().enumerate() {
                    for &b in a.hom_block(s, w) {
                        cols.push(n.action(b).apply(&gens[j]));
                    }
                }
                Matrix::from_columns(f, n.dim(w), &cols)
            })
            .collect();
        Morphism::unchecked(self.module.clone(), n.clone(), comps)
    }

    /// Images of the generators under a map out of `P`.
    pub fn generator_images(&self, g: &Morphism<F>) -> Vec<Vec<F::Elem>> {
        (0..self.tops.len())
            .map(|j| g.comp(self.tops[j]).column(self.generator_index(j)))
            .collect()
    }

    /// Coordinates of `Hom(P, n)`: generator images, concatenated.
    pub fn hom_dim_into(&self, n: &Representation<F>) -> usize {
        self.tops.iter().map(|&s| n.dim(s)).sum()
    }

    /// The linear map `Hom(P, n) -> n(w)`, `g ↦ g(x)`, for `x ∈ P(w)`.
    fn evaluation(&self, n: &Representation<F>, w: usize, x: &[F::Elem]) -> Matrix<F> {
        let a = self.algebra();
        let f = a.field();
        let mut out = Matrix::zeros(f, n.dim(w), 0);
        for (j, &s) in self.tops.iter().enumerate() {
            let off = self.summand_offset(j, w);
            let mut block = Matrix::zeros(f, n.dim(w), n.dim(s));
            for (k, &b) in a.hom_block(s, w).iter().enumerate() {
                let c = &x[off + k];
                if !f.is_zero(c) {
                    block = block.add(&n.action(b).scale(c));
                }
            }
            out = out.hstack(&block);
        }
        out
    }
}

/// The projective cover of `m`: generators lift a basis of the top.
pub fn projective_cover<F: Field>(m: &Representation<F>) -> (ProjectiveSum<F>, Morphism<F>) {
    let f = m.field();
    let rad = m.radical_spaces();
    let mut tops = Vec::new();
    let mut gens = Vec::new();
    for (v, r) in rad.iter().enumerate() {
        for c in r.complement_indices() {
            let mut e = vec![f.zero(); m.dim(v)];
            e[c] = f.one();
            tops.push(v);
            gens.push(e);
        }
    }
    let p = ProjectiveSum::new(m.algebra(), tops);
    let cover = p.map_from_generators(m, &gens);
    (p, cover)
}

pub fn is_projective<F: Field>(m: &Representation<F>) -> bool {
    projective_cover(m).0.module().total_dim() == m.total_dim()
}

/// Projective dimension: exact, or a lower bound when the resolution was cut off.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pd {
    Finite(usize),
    AtLeast(usize),
}

impl Pd {
    pub fn is_finite(self) -> bool {
        matches!(self, Pd::Finite(_))
    }
    /// `Some(true)` when certainly at most `n`, `Some(false)` when certainly above.
    pub fn at_most(self, n: usize) -> Option<bool> {
        match self {
            Pd::Finite(d) => Some(d <= n),
            Pd::AtLeast(d) if d > n => Some(false),
            Pd::AtLeast(_) => None,
        }
    }
}

impl core::fmt::Display for Pd {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Pd::Finite(d) => write!(f, "{d}"),
            Pd::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

/// `... -> P^1 -> P^0 -> M -> 0`, minimal.
#[derive(Clone, Debug)]
pub struct ResolutionSegment<F: Field> {
    pub terms: Vec<ProjectiveSum<F>>,
    /// `differentials[i]: P^(i+1) -> P^i`.
    pub differentials: Vec<Morphism<F>>,
    pub augmentation: Morphism<F>,
    /// `syzygies[i]` is the kernel of the map out of `P^i`.
    pub syzygies: Vec<Representation<F>>,
    pub pd: Pd,
}

/// Minimal projective resolution with at most `cap + 1` terms.
pub fn min_resolution<F: Field>(m: &Representation<F>, cap: usize) -> ResolutionSegment<F> {
    let (p0, augmentation) = projective_cover(m);
    let (mut syz, mut incl) = kernel(&augmentation);
    let mut terms = vec![p0];
    let mut differentials = Vec::new();
    let mut syzygies = vec![syz.clone()];
    for i in 0..cap {
        if syz.is_zero() {
            return ResolutionSegment {
                terms,
                differentials,
                augmentation,
                syzygies,
                pd: Pd::Finite(i),
            };
        }
        let (p, cover) = projective_cover(&syz);
        differentials.push(incl.compose(&cover));
        terms.push(p);
        (syz, incl) = kernel(&cover);
        syzygies.push(syz.clone());
    }
    let pd = if syz.is_zero() { Pd::Finite(cap) } else { Pd::AtLeast(cap + 1) };
    ResolutionSegment {
        terms,
        differentials,
        augmentation,
        syzygies,
        pd,
    }
}

impl<F: Field> ResolutionSegment<F> {
    /// The term `P^i`, zero past the end of a finite resolution.
    fn term(&self, i: usize) -> Result<ProjectiveSum<F>> {
        match self.terms.get(i) {
            Some(t) => Ok(t.clone()),
            None if self.pd.is_finite() => Ok(ProjectiveSum::new(self.augmentation.source().algebra(), Vec::new())),
            None => Err(Error::ResolutionTooShort),
        }
    }

    /// Matrix of `Hom(P^i, n) -> Hom(P^(i+1), n)`, `g ↦ g ∘ d_i`.
    fn coboundary(&self, i: usize, n: &Representation<F>) -> Result<Matrix<F>> {
        let src = self.term(i)?;
        let next = self.term(i + 1)?;
        let f = n.field();
        let mut out = Matrix::zeros(f, 0, src.hom_dim_into(n));
        if let Some(d) = self.differentials.get(i) {
            for (k, &t) in next.tops().iter().enumerate() {
                let x = d.comp(t).column(next.generator_index(k));
                out = out.vstack(&src.evaluation(n, t, &x));
            }
        } else if !next.is_zero() {
            return Err(Error::ResolutionTooShort);
        }
        Ok(out)
    }

    /// `dim Ext^i(M, n)`.
    pub fn ext_dim(&self, i: usize, n: &Representation<F>) -> Result<usize> {
        self.augmentation.source().check_same_algebra(n)?;
        let h = self.term(i)?.hom_dim_into(n);
        let out = self.coboundary(i, n)?.rank();
        let incoming = if i == 0 { 0 } else { self.coboundary(i - 1, n)?.rank() };
        Ok(h - out - incoming)
    }

    /// A pair `i < j` with `Ω^i M ≅ Ω^j M` (`Ω^0 M = M`), certified by an isomorphism.
    pub fn syzygy_period(&self, seed: u64) -> Option<(usize, usize)> {
        let mut omegas = vec![self.augmentation.target().clone()];
        omegas.extend(self.syzygies.iter().cloned());
        for j in 1..omegas.len() {
            if omegas[j].is_zero() {
                return None;
            }
            for i in 0..j {
                if omegas[i].dims() == omegas[j].dims() && matches!(is_isomorphic(&omegas[i], &omegas[j], seed), Ok(Some(_))) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// `dim Ext^i(m, n)`.
pub fn ext_dim<F: Field>(i: usize, m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    m.check_same_algebra(n)?;
    min_resolution(m, i + 1).ext_dim(i, n)
}

pub fn projective_dimension<F: Field>(m: &Representation<F>, cap: usize) -> Pd {
    min_resolution(m, cap).pd
}

/// The injective envelope `m -> E(m)`, dual to the projective cover of `D m`.
pub fn injective_envelope<F: Field>(m: &Representation<F>) -> (Representation<F>, Morphism<F>) {
    let a = m.algebra();
    let op = Arc::new(a.opposite());
    let (p, cover) = projective_cover(&dual_over(m, &op));
    let e = dual_over(p.module(), a);
    let comps = cover.comps().iter().map(Matrix::transpose).collect();
    (e.clone(), Morphism::unchecked(m.clone(), e, comps))
}

pub fn is_injective<F: Field>(m: &Representation<F>) -> bool {
    injective_envelope(m).0.total_dim() == m.total_dim()
}

/// Spanning set of the maps `M -> N` that factor through an injective: `g ∘ ι`
/// for `g` in a basis of `Hom(E(M), N)`.
fn injective_factor_maps<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<Vec<Morphism<F>>> {
    let (e, iota) = injective_envelope(m);
    Ok(hom_space(&e, n)?.iter().map(|g| g.compose(&iota)).collect())
}

/// Whether `f` factors through an injective module, i.e. through the envelope of
/// its source.
pub fn factors_through_injective<F: Field>(f: &Morphism<F>) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let field = f.source().field();
    let maps = injective_factor_maps(f.source(), f.target())?;
    let cols: Vec<Vec<F::Elem>> = maps.iter().map(Morphism::flatten).collect();
    let target = f.flatten();
    let system = Matrix::from_columns(field, target.len(), &cols);
    let rhs = Matrix::from_columns(field, target.len(), &[target]);
    Ok(system.solve(&rhs).is_some())
}

/// `dim Hom(M, N)` modulo maps factoring through injectives.
pub fn stable_hom_dim<F: Field>(m: &Representation<F>, n: &Representation<F>) -> Result<usize> {
    let all = hom_space(m, n)?.len();
    let maps = injective_factor_maps(m, n)?;
    let dim = maps.first().map_or(0, |g| g.flatten().len());
    let cols: Vec<Vec<F::Elem>> = maps.iter().map(Morphism::flatten).collect();
    let rank = Matrix::from_columns(m.field(), dim, &cols).rank();
    Ok(all - rank)
}

/// A module `E` in `0 -> sub -> E -> quot -> 0` whose class is the image of a
/// random map from the first syzygy of `quot` to `sub`: the pushout of
/// `Ω -> P` along that map.
pub fn random_extension<F: Field, R: rand::Rng + ?Sized>(
    quot: &Representation<F>,
    sub: &Representation<F>,
    rng: &mut R,
) -> Result<Representation<F>> {
    quot.check_same_algebra(sub)?;
    let f = quot.field();
    let (p, cover) = projective_cover(quot);
    let (omega, incl) = kernel(&cover);
    let maps = hom_space(&omega, sub)?;
    let coeffs: Vec<F::Elem> = maps.iter().map(|_| f.random(rng)).collect();
    let g = Morphism::combination(&omega, sub, &coeffs, &maps);
    let (sum, inj, _) = Representation::direct_sum(quot.algebra(), &[p.module().clone(), sub.clone()]);
    let glue = inj[0].compose(&incl).add(&inj[1].compose(&g).scale(&f.neg(&f.one())));
    debug_assert_eq!(sum.total_dim() - omega.total_dim(), quot.total_dim() + sub.total_dim());
    Ok(super::rep::cokernel(&glue).0)
}
