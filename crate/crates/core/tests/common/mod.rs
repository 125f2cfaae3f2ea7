#![allow(dead_code)]

use std::sync::Arc;

use dircat::exactlin::{Field, FieldSpec};
use dircat::presentation::{build_algebra, AlgebraTable, Presentation, Quiver};

pub fn pres(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[(i64, &str)]]) -> Presentation {
    let q = Quiver::new(vertices, arrows).unwrap();
    let rels = relations
        .iter()
        .map(|r| r.iter().map(|(c, w)| (*c, q.parse_word(w).unwrap())).collect())
        .collect();
    Presentation::new(FieldSpec::Rationals, q, rels, None).unwrap()
}

pub fn e3_1() -> Presentation {
    pres(
        &["x", "y", "z", "w"],
        &[("a", "x", "y"), ("b", "x", "z"), ("g", "y", "w"), ("e", "z", "w"), ("d", "w", "w")],
        &[&[(1, "d*d")], &[(1, "d*g")], &[(1, "d*e")], &[(1, "g*a"), (-1, "e*b")]],
    )
}

pub fn e3_2() -> Presentation {
    pres(&["x", "y"], &[("d", "x", "x"), ("a", "x", "y")], &[&[(1, "a*d")], &[(1, "d*d")]])
}

pub fn e4_1() -> Presentation {
    pres(
        &["x", "y", "z"],
        &[("a", "x", "z"), ("b", "y", "z"), ("d", "z", "z"), ("r", "y", "y")],
        &[&[(1, "b*r"), (-1, "d*b")], &[(1, "d*d")], &[(1, "r*r")], &[(1, "d*a")]],
    )
}

pub fn e4_2() -> Presentation {
    pres(
        &["x", "y"],
        &[("r", "x", "x"), ("a", "x", "y"), ("d", "y", "y")],
        &[&[(1, "d*a"), (-1, "a*r")], &[(1, "d*d")], &[(1, "r*r")]],
    )
}

pub fn two_cycle() -> Presentation {
    pres(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")], &[&[(1, "b*a*b")]])
}

pub fn hereditary() -> Presentation {
    pres(&["x", "y"], &[("a", "x", "y")], &[])
}

pub fn all() -> Vec<Presentation> {
    vec![e3_1(), e3_2(), e4_1(), e4_2(), two_cycle(), hereditary()]
}

pub fn over<F: Field>(p: &Presentation, f: &F) -> Arc<AlgebraTable<F>> {
    Arc::new(build_algebra(p, f, None).unwrap())
}
