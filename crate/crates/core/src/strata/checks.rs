use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{block_left_projective, block_right_projective, corner, value_is_free, FiltrationWitness, Strata};
use crate::error::{Error, Result};
use crate::exactlin::Field;
use crate::modcat::{
    cokernel, ext_dim, hom_dim, hom_space, injective, is_isomorphic, layers, min_resolution, projective,
    random_extension, simple, Morphism, Pd, Representation,
};
use crate::presentation::{directed_orders, AlgebraTable, LinearOrder};

#[derive(Clone, Debug)]
pub struct StratReport<F: Field> {
    pub order: LinearOrder,
    pub standardly: bool,
    pub properly: bool,
    pub quasi_hereditary: bool,
    /// Δ-filtration of each indecomposable projective.
    pub filtrations: Vec<FiltrationWitness<F>>,
    /// `local_projectivity[s][t]`: `A(s, t)` is a projective left `A(t, t)`-module.
    /// Only computed for directed orders.
    pub local_projectivity: Option<Vec<Vec<bool>>>,
    pub standard_dims: Vec<Vec<usize>>,
    pub proper_dims: Vec<Vec<usize>>,
    pub standard_end_dims: Vec<usize>,
}

pub fn stratification_report<F: Field>(strata: &Strata<F>, seed: u64) -> Result<StratReport<F>> {
    let a = strata.algebra();
    let n = a.vertex_count();
    let filtrations = (0..n)
        .map(|v| strata.delta_filtration(&projective(a, v)))
        .collect::<Result<Vec<_>>>()?;
    let standardly = filtrations.iter().all(FiltrationWitness::succeeded);
    let mut properly = standardly;
    if standardly {
        for v in 0..n {
            if !strata.in_proper_filtration(strata.standard(v), v, seed)? {
                properly = false;
                break;
            }
        }
    }
    let standard_end_dims = (0..n)
        .map(|v| hom_dim(strata.standard(v), strata.standard(v)))
        .collect::<Result<Vec<_>>>()?;
    let quasi_hereditary = standardly && standard_end_dims.iter().all(|&d| d == 1);
    let local_projectivity = if directed_orders(a).respects(strata.order()) {
        let table = (0..n)
            .map(|s| (0..n).map(|t| block_left_projective(a, s, t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let all = table.iter().flatten().all(|&b| b);
        if all != standardly {
            return Err(Error::Internal(format!(
                "block projectivity ({all}) disagrees with the Δ-filtrations ({standardly})"
            )));
        }
        Some(table)
    } else {
        None
    };
    Ok(StratReport {
        order: strata.order().clone(),
        standardly,
        properly,
        quasi_hereditary,
        filtrations,
        local_projectivity,
        standard_dims: (0..n).map(|v| strata.standard(v).dims().to_vec()).collect(),
        proper_dims: (0..n).map(|v| strata.proper(v).dims().to_vec()).collect(),
        standard_end_dims,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectednessTriple {
    /// Every standard module has only its own simple as composition factor.
    pub standard_pure: bool,
    /// Every proper standard module is simple.
    pub proper_simple: bool,
    /// Nonzero morphisms only go up in the order.
    pub order_directed: bool,
}

pub fn directedness_equivalences<F: Field>(strata: &Strata<F>, seed: u64) -> Result<DirectednessTriple> {
    let a = strata.algebra();
    let n = a.vertex_count();
    let standard_pure = (0..n).all(|v| strata.standard(v).support() == [v]);
    let mut proper_simple = true;
    for v in 0..n {
        if is_isomorphic(strata.proper(v), &simple(a, v), seed)?.is_none() {
            proper_simple = false;
        }
    }
    let order_directed = directed_orders(a).respects(strata.order());
    let t = DirectednessTriple {
        standard_pure,
        proper_simple,
        order_directed,
    };
    if standard_pure != proper_simple || proper_simple != order_directed {
        return Err(Error::Internal(format!("directedness conditions disagree: {t:?}")));
    }
    Ok(t)
}

#[derive(Clone, Debug)]
pub struct ValueFreeness {
    pub free_values: bool,
    pub pd: Pd,
    pub delta_member: bool,
}

impl ValueFreeness {
    /// Whether the three verdicts agree; an unresolved `pd` counts as infinite.
    pub fn consistent(&self) -> bool {
        self.free_values == self.delta_member && self.delta_member == self.pd.is_finite()
    }
}

/// Freeness of every value over its corner, Δ-filtration and finiteness of the
/// projective dimension. Requires a directed order for which the algebra is
/// standardly stratified.
pub fn value_freeness_pd<F: Field>(strata: &Strata<F>, m: &Representation<F>, cap: usize) -> Result<ValueFreeness> {
    let a = strata.algebra();
    if !directed_orders(a).respects(strata.order()) {
        return Err(Error::HypothesesNotMet("the order is not directed".into()));
    }
    for v in 0..a.vertex_count() {
        if !strata.delta_filtration(&projective(a, v))?.succeeded() {
            return Err(Error::HypothesesNotMet("the algebra is not standardly stratified".into()));
        }
    }
    let mut free_values = true;
    for v in 0..a.vertex_count() {
        if !value_is_free(m, v)? {
            free_values = false;
        }
    }
    Ok(ValueFreeness {
        free_values,
        pd: min_resolution(m, cap).pd,
        delta_member: strata.delta_filtration(m)?.succeeded(),
    })
}

/// Stratified with every standard module simple.
pub fn hereditary_quotient_check<F: Field>(strata: &Strata<F>) -> Result<bool> {
    let a = strata.algebra();
    for v in 0..a.vertex_count() {
        if !strata.delta_filtration(&projective(a, v))?.succeeded() {
            return Ok(false);
        }
    }
    Ok((0..a.vertex_count()).all(|v| strata.standard(v).total_dim() == 1))
}

/// Whether the local algebra `A(v, v)` is self-injective: its regular module is
/// isomorphic to its dual. Cross-checked against a simple socle.
pub fn corner_self_injective<F: Field>(a: &Arc<AlgebraTable<F>>, v: usize, seed: u64) -> Result<bool> {
    let c = corner(a, v)?;
    let regular = projective(c.algebra(), 0);
    let dual = injective(c.algebra(), 0);
    let by_duality = is_isomorphic(&regular, &dual, seed)?.is_some();
    let by_socle = layers(&regular).socle.total_dim() == 1;
    if by_duality != by_socle {
        return Err(Error::Internal(format!(
            "self-injectivity of the corner at #{v}: duality says {by_duality}, socle says {by_socle}"
        )));
    }
    Ok(by_duality)
}

#[derive(Clone, Debug)]
pub struct CharTiltReport {
    pub hypotheses: bool,
    /// The first failing hypothesis: a vertex with a non-self-injective corner, or a
    /// pair `(s, t)` with `A(s, t)` not right free.
    pub failure: Option<String>,
    pub failing_pair: Option<(usize, usize)>,
    /// Whether each indecomposable injective lies in `F(Δ)`.
    pub injectives_filtered: Vec<bool>,
    /// `(sample label, vertex, dim Ext^1(sample, I_v))`.
    pub ext_samples: Vec<(String, usize, usize)>,
}

pub fn characteristic_tilting_check<F: Field>(strata: &Strata<F>, seed: u64) -> Result<CharTiltReport> {
    let a = strata.algebra();
    let n = a.vertex_count();
    if !directed_orders(a).respects(strata.order()) {
        return Err(Error::HypothesesNotMet("the order is not directed".into()));
    }
    let injectives_filtered = (0..n)
        .map(|v| Ok(strata.delta_filtration(&injective(a, v))?.succeeded()))
        .collect::<Result<Vec<_>>>()?;
    let mut report = CharTiltReport {
        hypotheses: true,
        failure: None,
        failing_pair: None,
        injectives_filtered,
        ext_samples: Vec::new(),
    };
    for v in 0..n {
        if !corner_self_injective(a, v, seed)? {
            report.hypotheses = false;
            report.failure = Some(format!("A({0},{0}) is not self-injective", a.vertices()[v]));
            return Ok(report);
        }
    }
    for s in 0..n {
        for t in 0..n {
            if s != t && !block_right_projective(a, s, t)? {
                report.hypotheses = false;
                report.failing_pair = Some((s, t));
                report.failure = Some(format!(
                    "A({}, {}) is not free as a right A({0}, {0})-module",
                    a.vertices()[s],
                    a.vertices()[t]
                ));
                return Ok(report);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<(String, Representation<F>)> = Vec::new();
    for w in 0..n {
        samples.push((format!("standard {}", a.vertices()[w]), strata.standard(w).clone()));
        samples.push((format!("projective {}", a.vertices()[w]), projective(a, w)));
    }
    for k in 0..10 {
        let top = strata.standard(k % n);
        let bottom = strata.standard((k * 7 + 3) % n);
        samples.push((format!("extension {k}"), random_extension(top, bottom, &mut rng)?));
    }
    for (label, m) in &samples {
        for v in 0..n {
            report.ext_samples.push((label.clone(), v, ext_dim(1, m, &injective(a, v))?));
        }
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ProbeWitness<F: Field> {
    pub standard: usize,
    pub projective: usize,
    pub mono: Morphism<F>,
    pub cokernel: Representation<F>,
}

#[derive(Clone, Debug)]
pub enum ProbeStatus<F: Field> {
    Verified,
    Counterexample(ProbeWitness<F>),
    /// Pairs `(standard, projective)` whose hom space was too large to enumerate.
    BudgetExceeded(Vec<(usize, usize)>),
}

/// Enumerates every monomorphism `Δ_v -> P_w` over a finite field and tests whether
/// its cokernel has a Δ-filtration.
pub fn cokernel_closure_probe<F: Field>(strata: &Strata<F>, budget: u64) -> Result<ProbeStatus<F>> {
    let a = strata.algebra();
    let f = a.field();
    let q = f.order().ok_or(Error::InfiniteField)?;
    let n = a.vertex_count();
    for v in 0..n {
        if !strata.delta_filtration(&projective(a, v))?.succeeded() {
            return Err(Error::HypothesesNotMet("the algebra is not standardly stratified".into()));
        }
    }
    let mut skipped = Vec::new();
    for v in 0..n {
        for w in 0..n {
            let pw = projective(a, w);
            let basis = hom_space(strata.standard(v), &pw)?;
            let k = basis.len();
            let Some(total) = (0..k).try_fold(1u64, |acc, _| acc.checked_mul(q).filter(|t| *t <= budget)) else {
                skipped.push((v, w));
                continue;
            };
            for idx in 1..total {
                let mut rest = idx;
                let coeffs: Vec<F::Elem> = (0..k)
                    .map(|_| {
                        let e = f.element(rest % q);
                        rest /= q;
                        e
                    })
                    .collect();
                let g = Morphism::combination(strata.standard(v), &pw, &coeffs, &basis);
                if !g.is_injective() {
                    continue;
                }
                let c = cokernel(&g).0;
                if !strata.delta_filtration(&c)?.succeeded() {
                    return Ok(ProbeStatus::Counterexample(ProbeWitness {
                        standard: v,
                        projective: w,
                        mono: g,
                        cokernel: c,
                    }));
                }
            }
        }
    }
    Ok(if skipped.is_empty() {
        ProbeStatus::Verified
    } else {
        ProbeStatus::BudgetExceeded(skipped)
    })
}
