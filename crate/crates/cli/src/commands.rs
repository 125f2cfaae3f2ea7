use std::path::Path;
use std::sync::Arc;

use dircat::exactlin::{Field, FieldSpec, PrimeField, Rationals};
use dircat::modcat::{
    decompose, injective, is_injective, is_projective, min_resolution, projective, simple, Representation,
};
use dircat::presentation::{build_algebra, directed_orders, AlgebraTable, LinearOrder, Presentation};
use dircat::strata::{
    characteristic_tilting_check, directedness_equivalences, standard_rep, stratification_report, value_freeness_pd,
    Strata, Variant,
};
use dircat::tilting::build_and_verify_apr;
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::module_format::{parse_module, serialize_module};
use crate::quiver_format::parse_presentation;
use crate::report::{filtration_value, module_value, pd_value, Outcome};

/// Runs `$body` with `$f` bound to the field named by `$spec`.
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            FieldSpec::Rationals => {
                let $f = &Rationals;
                $body
            }
            FieldSpec::Prime(p) => {
                let $f = &PrimeField::new(p)?;
                $body
            }
        }
    };
}
pub(crate) use with_field;

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_presentation(path: &Path, field: Option<FieldSpec>) -> Result<Presentation, CliError> {
    let text = read(path)?;
    let p = parse_presentation(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    Ok(match field {
        Some(f) => p.with_field(f)?,
        None => p,
    })
}

fn input(cfg: &RunConfig, k: usize, what: &str) -> Result<Presentation, CliError> {
    let path = cfg
        .inputs
        .get(k)
        .ok_or_else(|| CliError::Usage(format!("missing {what} file")))?;
    load_presentation(path, cfg.field)
}

fn algebra<F: Field>(p: &Presentation, f: &F, cfg: &RunConfig) -> Result<Arc<AlgebraTable<F>>, CliError> {
    Ok(Arc::new(build_algebra(p, f, cfg.length_cap)?))
}

fn names<F: Field>(a: &AlgebraTable<F>) -> Vec<String> {
    a.vertices().to_vec()
}

/// The `--order` flag, else the declared order, else the first directed order.
fn resolve_order<F: Field>(a: &AlgebraTable<F>, p: &Presentation, cfg: &RunConfig) -> Result<LinearOrder, CliError> {
    if let Some(text) = &cfg.order {
        return Ok(LinearOrder::parse(text, a.vertices())?);
    }
    if let Some(o) = p.declared_order() {
        return Ok(o.clone());
    }
    directed_orders(a)
        .orders()
        .next()
        .ok_or_else(|| CliError::Usage("the category is not directed; pass --order".into()))
}

pub fn cmd_info(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = input(cfg, 0, "quiver")?;
    with_field!(p.field(), f => info(&p, f, cfg))
}

fn info<F: Field>(p: &Presentation, f: &F, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let a = algebra(p, f, cfg)?;
    let n = a.vertex_count();
    let names = names(&a);
    let vertices: Vec<Value> = (0..n)
        .map(|v| {
            json!({
                "name": names[v],
                "projective": projective(&a, v).dims(),
                "injective": injective(&a, v).dims(),
                "simple": simple(&a, v).dims(),
            })
        })
        .collect();
    // cartan[v][w] = dim A(v, w).
    let cartan: Vec<Vec<usize>> = (0..n).map(|v| (0..n).map(|w| a.hom_block(v, w).len()).collect()).collect();
    let d = directed_orders(&a);
    let orders: Vec<String> = d.orders().map(|o| o.display(&names)).collect();
    let headline = if d.is_directed {
        format!("dim A = {}; directed orders: {}", a.dim(), orders.len())
    } else {
        format!("dim A = {}; not a directed category", a.dim())
    };
    let report = json!({
        "field": f.spec().to_string(),
        "dim": a.dim(),
        "vertices": vertices,
        "cartan": cartan,
        "directed": d.is_directed,
        "directed_orders": orders,
    });
    Ok(Outcome::new(headline, report, 0))
}

pub fn cmd_orders(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = input(cfg, 0, "quiver")?;
    with_field!(p.field(), f => orders(&p, f, cfg))
}

fn orders<F: Field>(p: &Presentation, f: &F, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let a = algebra(p, f, cfg)?;
    let n = a.vertex_count();
    if n > 7 {
        return Err(CliError::Usage(format!("{n} vertices give too many orders to list")));
    }
    let names = names(&a);
    let mut rows = Vec::new();
    let mut stratified = 0;
    for o in LinearOrder::all(n) {
        let s = Strata::new(&a, &o)?;
        let r = stratification_report(&s, cfg.seed)?;
        let t = directedness_equivalences(&s, cfg.seed)?;
        stratified += r.standardly as usize;
        rows.push(json!({
            "order": o.display(&names),
            "directed": t.order_directed,
            "standardly": r.standardly,
            "properly": r.properly,
            "quasi_hereditary": r.quasi_hereditary,
            "standard_dims": r.standard_dims,
        }));
    }
    let headline = format!("{} orders, {} standardly stratified", rows.len(), stratified);
    Ok(Outcome::new(headline, json!({ "orders": rows }), 0))
}

pub fn cmd_strata(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = input(cfg, 0, "quiver")?;
    with_field!(p.field(), f => strata(&p, f, cfg))
}

fn strata<F: Field>(p: &Presentation, f: &F, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let a = algebra(p, f, cfg)?;
    let names = names(&a);
    let order = resolve_order(&a, p, cfg)?;
    let s = Strata::new(&a, &order)?;
    let r = stratification_report(&s, cfg.seed)?;
    let t = directedness_equivalences(&s, cfg.seed)?;
    let n = a.vertex_count();
    let mut costandard = Vec::new();
    for v in 0..n {
        costandard.push(standard_rep(&a, &order, v, Variant::Costandard)?.dims().to_vec());
    }
    let mut report = Map::new();
    report.insert("order".into(), json!(order.display(&names)));
    report.insert("standardly".into(), json!(r.standardly));
    report.insert("properly".into(), json!(r.properly));
    report.insert("quasi_hereditary".into(), json!(r.quasi_hereditary));
    report.insert("standard_dims".into(), json!(r.standard_dims));
    report.insert("proper_dims".into(), json!(r.proper_dims));
    report.insert("costandard_dims".into(), json!(costandard));
    report.insert("standard_end_dims".into(), json!(r.standard_end_dims));
    let filtrations: Vec<Value> = r
        .filtrations
        .iter()
        .enumerate()
        .map(|(v, w)| json!({"projective": names[v], "filtration": filtration_value(w, &names)}))
        .collect();
    report.insert("filtrations".into(), Value::Array(filtrations));
    report.insert("local_projectivity".into(), json!(r.local_projectivity));
    report.insert(
        "directedness".into(),
        json!({
            "standard_pure": t.standard_pure,
            "proper_simple": t.proper_simple,
            "order_directed": t.order_directed,
        }),
    );
    if t.order_directed && r.standardly {
        let c = characteristic_tilting_check(&s, cfg.seed)?;
        report.insert(
            "characteristic_tilting".into(),
            json!({
                "hypotheses": c.hypotheses,
                "failure": c.failure,
                "injectives_filtered": c.injectives_filtered,
                "max_ext_sample": c.ext_samples.iter().map(|x| x.2).max(),
            }),
        );
    }
    let headline = format!(
        "order {}: standardly stratified = {}, properly stratified = {}",
        order.display(&names),
        r.standardly,
        r.properly
    );
    Ok(Outcome::new(headline, Value::Object(report), if r.standardly { 0 } else { 3 }))
}

pub fn cmd_tilt(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = input(cfg, 0, "quiver")?;
    with_field!(p.field(), f => tilt(&p, f, cfg))
}

fn tilt<F: Field>(p: &Presentation, f: &F, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let a = algebra(p, f, cfg)?;
    let names = names(&a);
    let site = cfg.site.as_deref().ok_or_else(|| CliError::Usage("tilt needs --site".into()))?;
    let z = a.vertex_index(site)?;
    let r = build_and_verify_apr(&a, z, cfg.resolution_cap, cfg.seed)?;
    let tau = &r.site.tau;
    let classes: Vec<Value> = r
        .summand_classes
        .iter()
        .map(|(m, k)| json!({"dims": m.dims(), "multiplicity": k}))
        .collect();
    let report = json!({
        "site": site,
        "hypotheses": {
            "site_supported_at_one_vertex": r.site.site_ok,
            "corner_self_injective": r.site.self_injective_ok,
            "free_summand_witness": r.site.free_summand_witness.map(|x| names[x].clone()),
            "failed": r.site.failed_hypothesis(),
        },
        "hom_dual_into_regular_vanishes": r.site.hom_vanishing_ok,
        "tau_inverse": module_value(&tau.tau_inv),
        "tau_sequence": {
            "presentation_tops": tau.presentation_top.tops().iter().map(|&v| &names[v]).collect::<Vec<_>>(),
            "presentation_relation_tops": tau.presentation_relations.tops().iter().map(|&v| &names[v]).collect::<Vec<_>>(),
            "h0_tops": tau.h0.tops().iter().map(|&v| &names[v]).collect::<Vec<_>>(),
            "h1_tops": tau.h1.tops().iter().map(|&v| &names[v]).collect::<Vec<_>>(),
            "left_kernel_dim": tau.left_kernel.total_dim(),
        },
        "pd_tau_inverse": pd_value(r.site.pd_direct),
        "tilting_module": module_value(&r.t),
        "pd_t": pd_value(r.pd_t),
        "ext1_t_t": r.ext_direct,
        "stable_hom_t_site": r.ext_stable,
        "summand_classes": classes,
        "tau_inverse_injective_at": r.tau_inv_injective_at.map(|v| names[v].clone()),
        "verified": r.verified(),
    });
    if let Some(dir) = &cfg.out_dir {
        write_module(dir, "tau_inverse.mod", &tau.tau_inv)?;
        write_module(dir, "tilting.mod", &r.t)?;
    }
    let (headline, code) = match r.site.failed_hypothesis() {
        Some(why) => (format!("hypotheses not met at {site}: {why}"), 4),
        None if r.verified() => {
            let iso = r
                .tau_inv_injective_at
                .map(|v| format!("; tau inverse is the injective at {}", names[v]))
                .unwrap_or_default();
            (format!("tilting verified at {site}; dim tau inverse = {}{iso}", tau.tau_inv.total_dim()), 0)
        }
        None => (format!("tilting axioms fail at {site}"), 3),
    };
    Ok(Outcome::new(headline, report, code))
}

fn write_module<F: Field>(dir: &Path, name: &str, m: &Representation<F>) -> Result<(), CliError> {
    let path = dir.join(name);
    std::fs::write(&path, serialize_module(m)).map_err(|source| CliError::Io { path, source })
}

pub fn cmd_check_module(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let p = input(cfg, 0, "quiver")?;
    with_field!(p.field(), f => check_module(&p, f, cfg))
}

fn check_module<F: Field>(p: &Presentation, f: &F, cfg: &RunConfig) -> Result<Outcome, CliError> {
    let a = algebra(p, f, cfg)?;
    let names = names(&a);
    let path = cfg
        .inputs
        .get(1)
        .ok_or_else(|| CliError::Usage("missing module file".into()))?;
    let m = parse_module(&a, &read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    let mut report = Map::new();
    report.insert("module".into(), module_value(&m));
    report.insert("pd".into(), pd_value(min_resolution(&m, cfg.resolution_cap).pd));
    report.insert("projective".into(), json!(is_projective(&m)));
    report.insert("injective".into(), json!(is_injective(&m)));
    let summands = match decompose(&m, cfg.seed) {
        Ok(d) => json!(d
            .classes
            .iter()
            .map(|(s, k)| json!({"dims": s.dims(), "multiplicity": k}))
            .collect::<Vec<_>>()),
        Err(e) => json!(e.to_string()),
    };
    report.insert("summands".into(), summands);
    let mut code = 0;
    let mut headline = format!("valid module of dimension {}", m.total_dim());
    if cfg.order.is_some() || p.declared_order().is_some() {
        let order = resolve_order(&a, p, cfg)?;
        let s = Strata::new(&a, &order)?;
        let w = s.delta_filtration(&m)?;
        report.insert("order".into(), json!(order.display(&names)));
        report.insert("delta_filtration".into(), filtration_value(&w, &names));
        match value_freeness_pd(&s, &m, cfg.resolution_cap) {
            Ok(v) => {
                report.insert(
                    "value_freeness".into(),
                    json!({"free_values": v.free_values, "delta_member": v.delta_member, "pd": pd_value(v.pd), "consistent": v.consistent()}),
                );
            }
            Err(dircat::Error::HypothesesNotMet(why)) => {
                report.insert("value_freeness".into(), json!(format!("not applicable: {why}")));
            }
            Err(e) => return Err(e.into()),
        }
        headline += &format!("; Δ-filtration for {}: {}", order.display(&names), w.succeeded());
        if !w.succeeded() {
            code = 3;
        }
    }
    Ok(Outcome::new(headline, Value::Object(report), code))
}
