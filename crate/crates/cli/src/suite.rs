//! The built-in suite of golden and property checks over the bundled examples.

use std::collections::BTreeMap;
use std::sync::Arc;

use dircat::exactlin::{Field, FieldSpec, PrimeField, Rationals};
use dircat::modcat::{
    dim_vectors, for_each_rep, hom_dim, injective, is_isomorphic, min_resolution, projective,
    random_module, simple, Pd, Representation, Subcategory,
};
use dircat::presentation::{build_algebra, AlgebraTable, LinearOrder, Presentation};
use dircat::strata::{
    characteristic_tilting_check, directedness_equivalences, standard_rep, stratification_report, value_freeness_pd,
    Strata, Variant,
};
use dircat::tilting::{apr_site_report, build_and_verify_apr, tau_inverse};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::bundled::EXAMPLES;
use crate::commands::with_field;
use crate::config::RunConfig;
use crate::error::CliError;
use crate::quiver_format::parse_presentation;
use crate::report::Outcome;

type Check = Result<String, String>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

pub const NAMES: [&str; 10] = [
    "four-vertex stratification example",
    "loop example and its Ringel dual",
    "first APR tilting example",
    "second APR tilting example",
    "dual hom vanishing iff pd at most one",
    "directedness equivalences over all orders",
    "free values, Δ-filtrations and finite pd agree",
    "Hom(T, M) = 0 iff M lives at the site",
    "structural identities and adjunction",
    "deterministic structured output",
];

/// Bundled or user-supplied example sources, parsed once.
struct Sources {
    parsed: BTreeMap<&'static str, Result<Presentation, String>>,
}

impl Sources {
    fn load(cfg: &RunConfig) -> Sources {
        let parsed = EXAMPLES
            .iter()
            .map(|&(name, text)| {
                let text = match &cfg.data_dir {
                    Some(dir) => std::fs::read_to_string(dir.join(format!("{name}.quiv")))
                        .map_err(|e| format!("{name}.quiv: {e}")),
                    None => Ok(text.to_string()),
                };
                let p = text.and_then(|t| parse_presentation(&t).map_err(|e| format!("{name}.quiv: {e}")));
                (name, p)
            })
            .collect();
        Sources { parsed }
    }

    fn algebra<F: Field>(&self, name: &str, f: &F) -> Result<Arc<AlgebraTable<F>>, String> {
        let p = self.parsed[name].as_ref().map_err(Clone::clone)?;
        build_algebra(p, f, None).map(Arc::new).map_err(|e| format!("{name}: {e}"))
    }
}

struct Ctx<'a, F: Field> {
    f: &'a F,
    sources: &'a Sources,
    seed: u64,
    budget: u64,
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn core<T>(r: dircat::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn order<F: Field>(a: &AlgebraTable<F>, text: &str) -> Result<LinearOrder, String> {
    core(LinearOrder::parse(text, a.vertices()))
}

fn golden_first<F: Field>(c: &Ctx<F>) -> Check {
    let a = c.sources.algebra("e3_1", c.f)?;
    ensure(a.dim() == 10, || format!("dim A = {}", a.dim()))?;
    let proj: Vec<usize> = (0..4).map(|v| projective(&a, v).total_dim()).collect();
    ensure(proj == [4, 2, 2, 2], || format!("projective dims {proj:?}"))?;
    let s = core(Strata::new(&a, &order(&a, "y > x > z > w")?))?;
    let std: Vec<Vec<usize>> = (0..4).map(|v| s.standard(v).dims().to_vec()).collect();
    let expected = [[1, 0, 1, 0], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 2]];
    ensure(std == expected, || format!("standard dims {std:?}"))?;
    let r = core(stratification_report(&s, c.seed))?;
    ensure(r.standardly, || "not standardly stratified".into())?;
    let px = projective(&a, 0);
    let one = c.f.one();
    let (x_over_y, _) = px.quotient(&px.generated(&[(2, vec![one])]));
    ensure(x_over_y.dims() == [1, 1, 0, 0], || format!("x over y has dims {:?}", x_over_y.dims()))?;
    let pd = min_resolution(&x_over_y, 6).pd;
    ensure(pd == Pd::Finite(1), || format!("pd(x over y) = {pd}"))?;
    let w = core(s.delta_filtration(&x_over_y))?;
    ensure(!w.succeeded(), || "x over y has a Δ-filtration".into())?;
    Ok(format!("dim A = 10, P dims {proj:?}, standard dims all 2, pd(x over y) = 1 without Δ-filtration"))
}

fn golden_second<F: Field>(c: &Ctx<F>) -> Check {
    let a = c.sources.algebra("e3_2", c.f)?;
    let s = core(Strata::new(&a, &order(&a, "x < y")?))?;
    let dims = [
        projective(&a, 0).total_dim(),
        s.standard(0).total_dim(),
        injective(&a, 0).total_dim(),
        injective(&a, 1).total_dim(),
    ];
    ensure(dims == [3, 2, 2, 2], || format!("P_x, Δ_x, I_x, I_y dims {dims:?}"))?;
    ensure(core(stratification_report(&s, c.seed))?.standardly, || "not stratified for x < y".into())?;
    ensure(!core(s.delta_filtration(&injective(&a, 1)))?.succeeded(), || "I_y has a Δ-filtration".into())?;
    let ct = core(characteristic_tilting_check(&s, c.seed))?;
    ensure(!ct.hypotheses && ct.failing_pair.is_some(), || {
        format!("characteristic tilting hypotheses: {:?}", ct.failure)
    })?;
    let (t, _, _) = Representation::direct_sum(&a, &[projective(&a, 0), injective(&a, 0)]);
    let end = core(hom_dim(&t, &t))?;
    let mut cols = [core(hom_dim(&t, &projective(&a, 0)))?, core(hom_dim(&t, &injective(&a, 0)))?];
    cols.sort_unstable();
    ensure(end == 7 && cols == [3, 4], || format!("dim End = {end}, columns {cols:?}"))?;
    let dual = c.sources.algebra("two_cycle", c.f)?;
    let mut pdims = [projective(&dual, 0).total_dim(), projective(&dual, 1).total_dim()];
    pdims.sort_unstable();
    ensure(pdims == [3, 4], || format!("Ringel dual projective dims {pdims:?}"))?;
    Ok(format!("{dims:?}; I_y not Δ-filtered; right-freeness fails; dim End(P_x ⊕ I_x) = 7 = 4 + 3"))
}

fn golden_third<F: Field>(c: &Ctx<F>) -> Check {
    let a = c.sources.algebra("e4_1", c.f)?;
    let z = core(a.vertex_index("z"))?;
    let (x, y) = (core(a.vertex_index("x"))?, core(a.vertex_index("y"))?);
    let seq = tau_inverse(&projective(&a, z));
    let rel: Vec<usize> = seq.presentation_relations.tops().to_vec();
    ensure(rel == [x, y], || format!("relation tops {rel:?}"))?;
    let op = Arc::new(a.opposite());
    let rel_dims: Vec<usize> = rel.iter().map(|&v| projective(&op, v).total_dim()).collect();
    let top = seq.presentation_top.module().total_dim();
    // The presentation map is injective here, so D P_z has dimension 5 - 3.
    let dm = top - seq.presentation_map.source().total_dim();
    ensure(
        rel_dims == [1, 2] && top == 5 && seq.presentation_top.tops() == [z] && seq.presentation_map.is_injective(),
        || format!("presentation {rel_dims:?} -> {top}"),
    )?;
    ensure(dm == 2 && dm == projective(&a, z).total_dim(), || format!("cokernel of the presentation has dim {dm}"))?;
    ensure(seq.h0.tops() == [z] && seq.h1.tops() == [x, y] && seq.connecting.is_injective(), || {
        "resolution is not 0 -> P_z -> P_x ⊕ P_y".into()
    })?;
    let tau = &seq.tau_inv;
    let pd = min_resolution(tau, 6).pd;
    let back = core(hom_dim(tau, &projective(&a, z)))?;
    ensure(tau.total_dim() == 4 && pd == Pd::Finite(1) && back == 0, || {
        format!("dim {}, pd {pd}, dim Hom(τ⁻¹P_z, P_z) = {back}", tau.total_dim())
    })?;
    let r = core(build_and_verify_apr(&a, z, 6, c.seed))?;
    ensure(r.verified() && r.summand_classes.len() == 3, || {
        format!("verified {}, {} summand classes", r.verified(), r.summand_classes.len())
    })?;
    Ok(format!("1 + 2 -> 5 -> {dm}; 0 -> P_z -> P_x ⊕ P_y -> τ⁻¹P_z -> 0; dim 4, pd 1; tilting with 3 classes"))
}

fn golden_fourth<F: Field>(c: &Ctx<F>) -> Check {
    let a = c.sources.algebra("e4_2", c.f)?;
    let (x, y) = (core(a.vertex_index("x"))?, core(a.vertex_index("y"))?);
    let seq = tau_inverse(&projective(&a, y));
    ensure(seq.h0.tops() == [y] && seq.h1.tops() == [x] && seq.connecting.is_injective(), || {
        "resolution is not 0 -> P_y -> P_x".into()
    })?;
    let cert = core(is_isomorphic(&seq.tau_inv, &injective(&a, x), c.seed))?;
    ensure(cert.as_ref().is_some_and(|g| g.is_isomorphism()), || "τ⁻¹P_y is not I_x".into())?;
    let r = core(build_and_verify_apr(&a, y, 6, c.seed))?;
    ensure(r.verified(), || "APR tilt not verified".into())?;
    Ok("0 -> P_y -> P_x -> τ⁻¹P_y -> 0; τ⁻¹P_y ≅ I_x with certificate; tilting verified".into())
}

fn hom_vanishing_iff_pd<F: Field>(c: &Ctx<F>) -> Check {
    let mut both_false = false;
    let mut seen = Vec::new();
    for (name, site) in [("e4_1", "z"), ("e4_2", "y"), ("no_witness", "z")] {
        let a = c.sources.algebra(name, c.f)?;
        let z = core(a.vertex_index(site))?;
        let r = core(apr_site_report(&a, z, 6, c.seed))?;
        let small = r.pd_direct.at_most(1);
        ensure(small == Some(r.hom_vanishing_ok), || {
            format!("{name}: vanishing {} but pd {}", r.hom_vanishing_ok, r.pd_direct)
        })?;
        both_false |= !r.hom_vanishing_ok;
        seen.push(format!("{name}: {}", r.hom_vanishing_ok));
    }
    ensure(both_false, || "no instance with both sides false".into())?;
    Ok(seen.join(", "))
}

fn directedness_everywhere<F: Field>(c: &Ctx<F>) -> Check {
    let mut total = 0;
    for &(name, _) in EXAMPLES {
        let a = c.sources.algebra(name, c.f)?;
        for o in LinearOrder::all(a.vertex_count()) {
            let s = core(Strata::new(&a, &o))?;
            core(directedness_equivalences(&s, c.seed)).map_err(|e| format!("{name}, {}: {e}", o.display(a.vertices())))?;
            total += 1;
        }
    }
    Ok(format!("{total} (algebra, order) pairs agree"))
}

fn triple_agreement(c: &Ctx<impl Field>) -> Check {
    let f = PrimeField::new(3).map_err(|e| e.to_string())?;
    let a = c.sources.algebra("e3_2", &f)?;
    let o = order(&a, "x < y")?;
    let s = core(Strata::new(&a, &o))?;
    let mut modules = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for _ in 0..50 {
        modules.push(random_module(&a, 8, &mut rng));
    }
    for v in 0..a.vertex_count() {
        modules.extend([projective(&a, v), injective(&a, v), simple(&a, v)]);
        for variant in [Variant::Standard, Variant::ProperStandard, Variant::Costandard, Variant::ProperCostandard] {
            modules.push(core(standard_rep(&a, &o, v, variant))?);
        }
    }
    let mut free = 0;
    for (k, m) in modules.iter().enumerate() {
        let v = core(value_freeness_pd(&s, m, 20))?;
        ensure(v.consistent(), || format!("module {k}: {v:?}"))?;
        free += v.free_values as usize;
    }
    Ok(format!("{} modules, {free} with free values", modules.len()))
}

fn torsion_free_class(c: &Ctx<impl Field>) -> Check {
    let f = PrimeField::new(2).map_err(|e| e.to_string())?;
    let a = c.sources.algebra("e4_1", &f)?;
    let z = core(a.vertex_index("z"))?;
    let r = core(build_and_verify_apr(&a, z, 6, c.seed))?;
    ensure(r.verified(), || "APR tilt not verified over F2".into())?;
    let mut reps = 0;
    let mut exceptions = 0;
    for dims in dim_vectors(a.vertex_count(), 4) {
        reps += core(for_each_rep(&a, &dims, c.budget, |m| {
            let vanishes = hom_dim(&r.t, m)? == 0;
            let at_site = m.support().iter().all(|&v| v == z);
            exceptions += (vanishes != at_site) as usize;
            Ok(())
        }))?;
    }
    ensure(exceptions == 0, || format!("{exceptions} exceptions among {reps} representations"))?;
    Ok(format!("{reps} representations, no exceptions"))
}

fn structural<F: Field>(c: &Ctx<F>) -> Check {
    let algebras: Vec<Arc<AlgebraTable<F>>> =
        EXAMPLES.iter().map(|&(n, _)| c.sources.algebra(n, c.f)).collect::<Result<_, _>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    for k in 0..200 {
        let a = &algebras[k % algebras.len()];
        let m = random_module(a, 6, &mut rng);
        let v = rng.gen_range(0..a.vertex_count());
        let w = rng.gen_range(0..a.vertex_count());
        let h = core(hom_dim(&projective(a, v), &m))?;
        ensure(h == m.dim(v), || format!("instance {k}: dim Hom(P_v, M) = {h}, dim M(v) = {}", m.dim(v)))?;
        let hp = core(hom_dim(&projective(a, v), &projective(a, w)))?;
        ensure(hp == a.hom_block(w, v).len(), || format!("instance {k}: dim Hom(P_v, P_w) = {hp}"))?;
    }
    for k in 0..20 {
        let a = &algebras[k % algebras.len()];
        let n = a.vertex_count();
        let mut verts: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
        if verts.is_empty() {
            verts.push(rng.gen_range(0..n));
        }
        let sub = core(Subcategory::new(a, &verts))?;
        let w = random_module(sub.algebra(), 5, &mut rng);
        let v = random_module(a, 6, &mut rng);
        let up = core(sub.induce(&w))?;
        let lhs = core(hom_dim(&up, &v))?;
        let rhs = core(hom_dim(&w, &core(sub.restrict(&v))?))?;
        ensure(lhs == rhs, || format!("adjunction instance {k}: {lhs} != {rhs}"))?;
        let round = core(sub.restrict(&up))?;
        ensure(core(is_isomorphic(&round, &w, c.seed))?.is_some(), || format!("instance {k}: W↑↓ ≇ W"))?;
    }
    Ok("200 hom identities and 20 adjunction instances".into())
}

fn run_field_checks<F: Field>(f: &F, sources: &Sources, cfg: &RunConfig) -> Vec<Check> {
    let c = Ctx {
        f,
        sources,
        seed: cfg.seed,
        budget: cfg.budget,
    };
    vec![
        golden_first(&c),
        golden_second(&c),
        golden_third(&c),
        golden_fourth(&c),
        hom_vanishing_iff_pd(&c),
        directedness_everywhere(&c),
        triple_agreement(&c),
        torsion_free_class(&c),
        structural(&c),
    ]
}

fn checks(cfg: &RunConfig) -> Result<Vec<Check>, CliError> {
    let sources = Sources::load(cfg);
    Ok(with_field!(cfg.field.unwrap_or(FieldSpec::Rationals), f => run_field_checks(f, &sources, cfg)))
}

fn results_value(results: &[CheckResult]) -> Value {
    Value::Array(
        results
            .iter()
            .map(|r| json!({"id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail}))
            .collect(),
    )
}

fn collect(checks: Vec<Check>) -> Vec<CheckResult> {
    checks
        .into_iter()
        .enumerate()
        .map(|(k, c)| {
            let (passed, detail) = match c {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult {
                id: k + 1,
                name: NAMES[k],
                passed,
                detail,
            }
        })
        .collect()
}

/// Runs every check; the last one reruns the others and compares the documents.
pub fn run_suite(cfg: &RunConfig) -> Result<Vec<CheckResult>, CliError> {
    let mut results = collect(checks(cfg)?);
    let first = serde_json::to_string_pretty(&results_value(&results)).expect("serializable");
    let second = serde_json::to_string_pretty(&results_value(&collect(checks(cfg)?))).expect("serializable");
    let same = first == second;
    results.push(CheckResult {
        id: 10,
        name: NAMES[9],
        passed: same,
        detail: if same {
            format!("{} bytes, identical across two runs", first.len())
        } else {
            "two runs differ".into()
        },
    });
    Ok(results)
}

pub fn cmd_paper_suite(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let results = run_suite(cfg)?;
    let failed = results.iter().filter(|r| !r.passed).count();
    let lines: Vec<String> = results
        .iter()
        .map(|r| format!("[{}] {:>2} {}: {}", if r.passed { "pass" } else { "FAIL" }, r.id, r.name, r.detail))
        .collect();
    let field = cfg.field.unwrap_or(FieldSpec::Rationals);
    let headline = format!("{}\n{} of {} checks passed", lines.join("\n"), results.len() - failed, results.len());
    let report = json!({
        "field": field.to_string(),
        "seed": cfg.seed,
        "checks": results_value(&results),
        "passed": results.len() - failed,
        "failed": failed,
    });
    Ok(Outcome::new(headline, report, if failed == 0 { 0 } else { 3 }).brief())
}
