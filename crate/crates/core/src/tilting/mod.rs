//! The inverse Auslander-Reiten translate through the transpose, and generalized
//! APR tilting at a vertex whose projective is supported only there.

#[cfg(test)]
mod tests;

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::modcat::{
    cokernel, decompose, dual_over, end_top_dim, ext_dim, hom_dim, hom_space, injective, is_isomorphic, kernel,
    min_resolution, projective, projective_cover, stable_hom_dim, trace_spaces, Morphism, Pd,
    ProjectiveSum, Representation,
};
use crate::presentation::AlgebraTable;
use crate::strata::{corner, corner_self_injective};

/// `P^1 -> P^0 -> D M -> 0` over the opposite algebra, and the exact sequence
/// `0 -> left_kernel -> H0 -> H1 -> τ⁻¹M -> 0` obtained by applying
/// `Hom(-, A^op)` to it.
#[derive(Clone, Debug)]
pub struct TauSequence<F: Field> {
    pub presentation_top: ProjectiveSum<F>,
    pub presentation_relations: ProjectiveSum<F>,
    pub presentation_map: Morphism<F>,
    pub h0: ProjectiveSum<F>,
    pub h1: ProjectiveSum<F>,
    pub connecting: Morphism<F>,
    pub left_kernel: Representation<F>,
    pub tau_inv: Representation<F>,
}

impl<F: Field> TauSequence<F> {
    /// `dim τ⁻¹M = dim H1 - dim H0 + dim left_kernel`.
    pub fn dimensions_balance(&self) -> bool {
        self.tau_inv.total_dim() + self.h0.module().total_dim()
            == self.h1.module().total_dim() + self.left_kernel.total_dim()
    }
}

pub fn tau_inverse<F: Field>(m: &Representation<F>) -> TauSequence<F> {
    let a = m.algebra();
    let op = Arc::new(a.opposite());
    let dm = dual_over(m, &op);
    let (p0, c0) = projective_cover(&dm);
    let (k, incl) = kernel(&c0);
    let (p1, c1) = projective_cover(&k);
    let d = incl.compose(&c1);
    // Hom(A^op e_s, A^op) is the left projective A e_s; a component of `d` in
    // A^op(s, t) = A(t, s) becomes the matching component of the transposed map.
    let h0 = ProjectiveSum::new(a, p0.tops().to_vec());
    let h1 = ProjectiveSum::new(a, p1.tops().to_vec());
    let f = a.field();
    let gens: Vec<Vec<F::Elem>> = p0
        .tops()
        .iter()
        .enumerate()
        .map(|(j, &s)| {
            let mut g = vec![f.zero(); h1.module().dim(s)];
            for (k, &t) in p1.tops().iter().enumerate() {
                let col = d.comp(t).column(p1.generator_index(k));
                let src = p0.summand_offset(j, t);
                let dst = h1.summand_offset(k, s);
                let len = a.hom_block(t, s).len();
                g[dst..dst + len].clone_from_slice(&col[src..src + len]);
            }
            g
        })
        .collect();
    let connecting = h0.map_from_generators(h1.module(), &gens);
    let left_kernel = kernel(&connecting).0;
    let tau_inv = cokernel(&connecting).0;
    TauSequence {
        presentation_top: p0,
        presentation_relations: p1,
        presentation_map: d,
        h0,
        h1,
        connecting,
        left_kernel,
        tau_inv,
    }
}

/// Whether `A(x, z)` has a free summand as a left `A(z, z)`-module: some map to
/// the regular module has image outside the radical.
pub fn free_summand_check<F: Field>(a: &Arc<AlgebraTable<F>>, x: usize, z: usize) -> Result<bool> {
    let c = corner(a, z)?;
    let regular = projective(c.algebra(), 0);
    if end_top_dim(&regular)? != 1 {
        return Err(Error::HypothesesNotMet(format!("A({0},{0}) is not local", a.vertices()[z])));
    }
    let block = c.restrict(&projective(a, x))?;
    let rad = regular.radical_spaces();
    Ok(hom_space(&block, &regular)?
        .iter()
        .any(|f| !rad[0].contains(&f.comp(0).image()).unwrap_or(false)))
}

#[derive(Clone, Debug)]
pub struct SiteReport<F: Field> {
    pub site: usize,
    /// `P_z` is supported only at `z`.
    pub site_ok: bool,
    pub self_injective_ok: bool,
    pub free_summand_witness: Option<usize>,
    /// `Hom_{A^op}(D P_z, A^op) = 0`.
    pub hom_vanishing_ok: bool,
    pub tau: TauSequence<F>,
    pub pd_direct: Pd,
}

impl<F: Field> SiteReport<F> {
    pub fn hypotheses(&self) -> bool {
        self.site_ok && self.self_injective_ok && self.free_summand_witness.is_some()
    }

    /// The first failed hypothesis, in the order they are checked.
    pub fn failed_hypothesis(&self) -> Option<&'static str> {
        if !self.site_ok {
            Some("the projective at the site has composition factors at other vertices")
        } else if !self.self_injective_ok {
            Some("the endomorphism algebra of the site is not self-injective")
        } else if self.free_summand_witness.is_none() {
            Some("no free-summand witness")
        } else {
            None
        }
    }
}

pub fn apr_site_report<F: Field>(a: &Arc<AlgebraTable<F>>, z: usize, cap: usize, seed: u64) -> Result<SiteReport<F>> {
    if z >= a.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{z}")));
    }
    let pz = projective(a, z);
    let site_ok = pz.support() == [z];
    let self_injective_ok = corner_self_injective(a, z, seed)?;
    let mut free_summand_witness = None;
    for x in 0..a.vertex_count() {
        if x != z && !a.hom_block(x, z).is_empty() && free_summand_check(a, x, z)? {
            free_summand_witness = Some(x);
            break;
        }
    }
    let op = Arc::new(a.opposite());
    let dpz = dual_over(&pz, &op);
    let mut into_regular = 0;
    for v in 0..a.vertex_count() {
        into_regular += hom_dim(&dpz, &projective(&op, v))?;
    }
    let hom_vanishing_ok = into_regular == 0;
    let tau = tau_inverse(&pz);
    let pd_direct = min_resolution(&tau.tau_inv, cap.max(2)).pd;
    if site_ok && self_injective_ok && Some(hom_vanishing_ok) != pd_direct.at_most(1) {
        return Err(Error::Internal(format!(
            "Hom(D P_z, A^op) vanishing is {hom_vanishing_ok} but pd τ⁻¹P_z = {pd_direct}"
        )));
    }
    Ok(SiteReport {
        site: z,
        site_ok,
        self_injective_ok,
        free_summand_witness,
        hom_vanishing_ok,
        tau,
        pd_direct,
    })
}

#[derive(Clone, Debug)]
pub struct TiltReport<F: Field> {
    pub site: SiteReport<F>,
    /// `⊕_{v != z} P_v ⊕ τ⁻¹P_z`.
    pub t: Representation<F>,
    pub pd_t: Pd,
    pub pd_ok: bool,
    pub ext_direct: usize,
    /// `dim Hom(T, P_z)` modulo maps factoring through injectives.
    pub ext_stable: usize,
    pub ext_ok: bool,
    pub hom_q_to_site_vanishes: bool,
    /// Isomorphism classes of indecomposable summands of `T`, with multiplicities.
    pub summand_classes: Vec<(Representation<F>, usize)>,
    pub summand_count_ok: bool,
    /// A vertex `v` with `τ⁻¹P_z ≅ I_v`, if any.
    pub tau_inv_injective_at: Option<usize>,
}

impl<F: Field> TiltReport<F> {
    pub fn hypotheses(&self) -> bool {
        self.site.hypotheses()
    }
    pub fn verified(&self) -> bool {
        self.hypotheses() && self.pd_ok && self.ext_ok && self.summand_count_ok
    }
}

/// Builds `T = Q ⊕ τ⁻¹P_z` and checks the tilting axioms. The report is produced
/// even when the hypotheses fail.
pub fn build_and_verify_apr<F: Field>(a: &Arc<AlgebraTable<F>>, z: usize, cap: usize, seed: u64) -> Result<TiltReport<F>> {
    let site = apr_site_report(a, z, cap, seed)?;
    let mut parts: Vec<Representation<F>> = (0..a.vertex_count()).filter(|&v| v != z).map(|v| projective(a, v)).collect();
    parts.push(site.tau.tau_inv.clone());
    let (t, _, _) = Representation::direct_sum(a, &parts);
    let pd_t = min_resolution(&t, cap.max(2)).pd;
    let pz = projective(a, z);
    let ext_direct = ext_dim(1, &t, &t)?;
    let ext_stable = stable_hom_dim(&t, &pz)?;
    let hom_q_to_site_vanishes = !site.site_ok
        || (0..a.vertex_count())
            .filter(|&v| v != z)
            .all(|v| hom_dim(&projective(a, v), &pz).is_ok_and(|d| d == 0));
    if !hom_q_to_site_vanishes {
        return Err(Error::Internal("Hom(Q, P_z) is nonzero at a valid site".into()));
    }
    let summand_classes = decompose(&t, seed)?.classes;
    let summand_count_ok = summand_classes.len() == a.vertex_count();
    let mut tau_inv_injective_at = None;
    for v in 0..a.vertex_count() {
        if is_isomorphic(&site.tau.tau_inv, &injective(a, v), seed)?.is_some() {
            tau_inv_injective_at = Some(v);
            break;
        }
    }
    Ok(TiltReport {
        pd_ok: pd_t.at_most(1) == Some(true),
        ext_ok: ext_direct == 0 && ext_stable == 0,
        site,
        t,
        pd_t,
        ext_direct,
        ext_stable,
        hom_q_to_site_vanishes,
        summand_classes,
        summand_count_ok,
        tau_inv_injective_at,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorsionVerdict {
    /// Generated by `T` with `Ext^1(T, M) = 0`.
    pub in_t: bool,
    /// `Hom(T, M) = 0`.
    pub in_f: bool,
    /// Supported only at the site.
    pub factor_support_check: bool,
}

pub fn torsion_classify<F: Field>(report: &TiltReport<F>, m: &Representation<F>) -> Result<TorsionVerdict> {
    let t = &report.t;
    let z = report.site.site;
    let in_f = hom_dim(t, m)? == 0;
    let factor_support_check = m.support().iter().all(|&v| v == z);
    let generated = trace_spaces(t, m)?.iter().all(|s| s.is_full());
    let in_t = generated && ext_dim(1, t, m)? == 0;
    if report.verified() && in_f != factor_support_check {
        let why = format!("Hom(T, M) = 0 is {in_f} but support inside the site is {factor_support_check}");
        return Err(Error::Internal(why));
    }
    Ok(TorsionVerdict {
        in_t,
        in_f,
        factor_support_check,
    })
}
