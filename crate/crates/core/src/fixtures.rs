//! Small presentations shared by the unit tests.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::exactlin::{Field, FieldSpec, Rationals};
use crate::presentation::{build_algebra, AlgebraTable, Presentation, Quiver};

pub fn pres(vertices: &[&str], arrows: &[(&str, &str, &str)], relations: &[&[(i64, &str)]]) -> Presentation {
    let q = Quiver::new(vertices, arrows).unwrap();
    let rels = relations
        .iter()
        .map(|r| r.iter().map(|(c, w)| (*c, q.parse_word(w).unwrap())).collect())
        .collect::<Vec<_>>();
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

pub fn no_witness() -> Presentation {
    pres(&["x", "z"], &[("a", "x", "z"), ("d", "z", "z")], &[&[(1, "d*d")], &[(1, "d*a")]])
}

pub fn hereditary() -> Presentation {
    pres(&["x", "y"], &[("a", "x", "y")], &[])
}

pub fn dual_numbers() -> Presentation {
    pres(&["x"], &[("d", "x", "x")], &[&[(1, "d*d")]])
}

/// Loop at `x` with square zero and a free arrow to `y`.
pub fn free_corner() -> Presentation {
    pres(&["x", "y"], &[("d", "x", "x"), ("a", "x", "y")], &[&[(1, "d*d")]])
}

pub fn q(p: &Presentation) -> AlgebraTable<Rationals> {
    build_algebra(p, &Rationals, None).unwrap()
}

pub fn qa(p: &Presentation) -> Arc<AlgebraTable<Rationals>> {
    Arc::new(q(p))
}

pub fn over<F: Field>(p: &Presentation, f: &F) -> Arc<AlgebraTable<F>> {
    Arc::new(build_algebra(p, f, None).unwrap())
}
