//! Standard modules with respect to a linear order on the vertices, Δ-filtrations
//! and the stratification verdicts built on them.

mod checks;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::modcat::{
    dual_over, is_isomorphic, is_projective, layers, projective, projective_cover, trace_spaces, Morphism,
    Representation, Subcategory, VertexSpaces,
};
use crate::presentation::{AlgebraTable, LinearOrder};

pub use checks::{
    characteristic_tilting_check, cokernel_closure_probe, corner_self_injective, directedness_equivalences,
    hereditary_quotient_check, stratification_report, value_freeness_pd, CharTiltReport, DirectednessTriple,
    ProbeStatus, ProbeWitness, StratReport, ValueFreeness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    ProperStandard,
    Costandard,
    ProperCostandard,
}

/// Standard and proper standard modules for one order, computed once.
#[derive(Clone, Debug)]
pub struct Strata<F: Field> {
    algebra: Arc<AlgebraTable<F>>,
    order: LinearOrder,
    standard: Vec<Representation<F>>,
    proper: Vec<Representation<F>>,
}

impl<F: Field> Strata<F> {
    pub fn new(algebra: &Arc<AlgebraTable<F>>, order: &LinearOrder) -> Result<Self> {
        if order.len() != algebra.vertex_count() {
            return Err(Error::InvalidOrder(format!(
                "order on {} vertices for an algebra with {}",
                order.len(),
                algebra.vertex_count()
            )));
        }
        let n = algebra.vertex_count();
        let mut standard = Vec::with_capacity(n);
        let mut proper = Vec::with_capacity(n);
        for v in 0..n {
            let d = standard_quotient(algebra, order, v)?;
            proper.push(proper_quotient(&d, v)?);
            standard.push(d);
        }
        Ok(Strata {
            algebra: algebra.clone(),
            order: order.clone(),
            standard,
            proper,
        })
    }

    pub fn algebra(&self) -> &Arc<AlgebraTable<F>> {
        &self.algebra
    }
    pub fn order(&self) -> &LinearOrder {
        &self.order
    }
    /// `Δ_v`.
    pub fn standard(&self, v: usize) -> &Representation<F> {
        &self.standard[v]
    }
    /// `Δ̄_v`.
    pub fn proper(&self, v: usize) -> &Representation<F> {
        &self.proper[v]
    }

    /// Vertices above `v`.
    fn above(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.algebra.vertex_count()).filter(move |&w| self.order.less(v, w))
    }

    /// Walks the vertices from the top of the order down, splitting off the trace of
    /// `P_v` and comparing it with a sum of copies of `Δ_v`.
    pub fn delta_filtration(&self, m: &Representation<F>) -> Result<FiltrationWitness<F>> {
        m.check_same_algebra(&self.standard[0])?;
        let mut cur = m.clone();
        let mut out = FiltrationWitness {
            layers: Vec::new(),
            failure: None,
        };
        for v in self.order.descending() {
            if cur.is_zero() {
                break;
            }
            let spaces = trace_spaces(&projective(&self.algebra, v), &cur)?;
            let (u, _) = cur.submodule(&spaces);
            if u.is_zero() {
                continue;
            }
            match self.standard_cover(&u, v)? {
                Ok(certificate) => {
                    let multiplicity = certificate.source().dim(v) / self.standard[v].dim(v);
                    out.layers.push(FiltrationLayer {
                        vertex: v,
                        multiplicity,
                        certificate,
                    });
                }
                Err(reason) => {
                    out.failure = Some(FiltrationFailure {
                        stage: v,
                        reason,
                        remainder: cur,
                    });
                    return Ok(out);
                }
            }
            cur = cur.quotient(&spaces).0;
        }
        if !cur.is_zero() {
            out.failure = Some(FiltrationFailure {
                stage: self.order.ascending()[0],
                reason: "a nonzero remainder is left after the last vertex".into(),
                remainder: cur,
            });
        }
        Ok(out)
    }

    /// An isomorphism `Δ_v^m -> u` induced by the projective cover of `u`, or the
    /// reason there is none.
    fn standard_cover(&self, u: &Representation<F>, v: usize) -> Result<core::result::Result<Morphism<F>, String>> {
        let (p, cover) = projective_cover(u);
        if p.tops().iter().any(|&t| t != v) {
            return Ok(Err(format!("the trace layer has top outside vertex #{v}")));
        }
        let pm = p.module();
        let higher = self.higher_trace(pm, v)?;
        let kills = higher
            .iter()
            .enumerate()
            .all(|(w, s)| s.vectors().iter().all(|x| cover.comp(w).apply(x).iter().all(|c| u.field().is_zero(c))));
        if !kills {
            return Ok(Err("the trace layer is not a quotient of standard modules".into()));
        }
        let (dm, _) = pm.quotient(&higher);
        let comps = (0..u.dims().len())
            .map(|w| cover.comp(w).mul(&higher[w].quotient_section()))
            .collect();
        let induced = Morphism::unchecked(dm, u.clone(), comps);
        if !induced.is_isomorphism() {
            return Ok(Err(format!(
                "the trace layer has dimension {} but {} copies of the standard module have dimension {}",
                u.total_dim(),
                p.tops().len(),
                induced.source().total_dim()
            )));
        }
        Ok(Ok(induced))
    }

    /// Sum of the traces in `pm` of all `P_w` with `w` above `v`.
    fn higher_trace(&self, pm: &Representation<F>, v: usize) -> Result<VertexSpaces<F>> {
        let mut acc = pm.zero_spaces();
        for w in self.above(v) {
            acc = sum_spaces(&acc, &trace_spaces(&projective(&self.algebra, w), pm)?)?;
        }
        Ok(acc)
    }

    /// Whether `x` is filtered by copies of `Δ̄_v`: peel `x / tr_{P_v}(rad x)` off
    /// the top and compare it with `Δ̄_v^m`.
    pub fn in_proper_filtration(&self, x: &Representation<F>, v: usize, seed: u64) -> Result<bool> {
        let mut cur = x.clone();
        while !cur.is_zero() {
            let l = layers(&cur);
            if l.top.support() != [v] {
                return Ok(false);
            }
            let m = l.top.dim(v);
            let t = trace_spaces(&projective(&self.algebra, v), &l.radical)?;
            let inside: VertexSpaces<F> = t
                .iter()
                .enumerate()
                .map(|(w, s)| s.image_under(l.radical_incl.comp(w)))
                .collect();
            let (q, _) = cur.quotient(&inside);
            let copies = vec![self.proper[v].clone(); m];
            let (target, _, _) = Representation::direct_sum(&self.algebra, &copies);
            if is_isomorphic(&q, &target, seed)?.is_none() {
                return Ok(false);
            }
            cur = cur.submodule(&inside).0;
        }
        Ok(true)
    }
}

fn sum_spaces<F: Field>(a: &VertexSpaces<F>, b: &VertexSpaces<F>) -> Result<VertexSpaces<F>> {
    a.iter().zip(b).map(|(x, y)| x.sum(y)).collect()
}

/// `Δ_v = P_v / Σ_{w > v} tr_{P_w}(P_v)`.
fn standard_quotient<F: Field>(a: &Arc<AlgebraTable<F>>, order: &LinearOrder, v: usize) -> Result<Representation<F>> {
    let pv = projective(a, v);
    let mut acc = pv.zero_spaces();
    for w in 0..a.vertex_count() {
        if order.less(v, w) {
            acc = sum_spaces(&acc, &trace_spaces(&projective(a, w), &pv)?)?;
        }
    }
    Ok(pv.quotient(&acc).0)
}

/// `Δ̄_v = Δ_v / tr_{P_v}(rad Δ_v)`.
fn proper_quotient<F: Field>(d: &Representation<F>, v: usize) -> Result<Representation<F>> {
    let l = layers(d);
    let t = trace_spaces(&projective(d.algebra(), v), &l.radical)?;
    let inside: VertexSpaces<F> = t
        .iter()
        .enumerate()
        .map(|(w, s)| s.image_under(l.radical_incl.comp(w)))
        .collect();
    Ok(d.quotient(&inside).0)
}

pub fn standard_rep<F: Field>(
    a: &Arc<AlgebraTable<F>>,
    order: &LinearOrder,
    v: usize,
    variant: Variant,
) -> Result<Representation<F>> {
    if v >= a.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    match variant {
        Variant::Standard => standard_quotient(a, order, v),
        Variant::ProperStandard => proper_quotient(&standard_quotient(a, order, v)?, v),
        Variant::Costandard | Variant::ProperCostandard => {
            let op = Arc::new(a.opposite());
            let inner = if variant == Variant::Costandard {
                Variant::Standard
            } else {
                Variant::ProperStandard
            };
            Ok(dual_over(&standard_rep(&op, order, v, inner)?, a))
        }
    }
}

#[derive(Clone, Debug)]
pub struct FiltrationLayer<F: Field> {
    pub vertex: usize,
    pub multiplicity: usize,
    /// An isomorphism from `Δ_v^m` onto the layer.
    pub certificate: Morphism<F>,
}

#[derive(Clone, Debug)]
pub struct FiltrationFailure<F: Field> {
    pub stage: usize,
    pub reason: String,
    /// The quotient still to be filtered when the failure was found.
    pub remainder: Representation<F>,
}

/// Layers found from the top of the order down, and the failure if any.
#[derive(Clone, Debug)]
pub struct FiltrationWitness<F: Field> {
    pub layers: Vec<FiltrationLayer<F>>,
    pub failure: Option<FiltrationFailure<F>>,
}

impl<F: Field> FiltrationWitness<F> {
    pub fn succeeded(&self) -> bool {
        self.failure.is_none()
    }
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        self.layers.iter().map(|l| (l.vertex, l.multiplicity)).collect()
    }
}

/// The corner `A(v, v)` as a one-vertex subcategory.
pub fn corner<F: Field>(a: &Arc<AlgebraTable<F>>, v: usize) -> Result<Subcategory<F>> {
    Subcategory::new(a, &[v])
}

/// Whether `m(v)` is a free module over the local algebra `A(v, v)`.
pub fn value_is_free<F: Field>(m: &Representation<F>, v: usize) -> Result<bool> {
    let c = corner(m.algebra(), v)?;
    Ok(is_projective(&c.restrict(m)?))
}

/// Whether `A(s, t)` is projective as a left `A(t, t)`-module.
pub fn block_left_projective<F: Field>(a: &Arc<AlgebraTable<F>>, s: usize, t: usize) -> Result<bool> {
    value_is_free(&projective(a, s), t)
}

/// Whether `A(s, t)` is projective as a right `A(s, s)`-module.
pub fn block_right_projective<F: Field>(a: &Arc<AlgebraTable<F>>, s: usize, t: usize) -> Result<bool> {
    let op = Arc::new(a.opposite());
    block_left_projective(&op, t, s)
}
