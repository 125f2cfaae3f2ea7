mod common;

use dircat::exactlin::Rationals;
use dircat::presentation::{build_algebra, directed_orders, Presentation, Quiver};
use proptest::prelude::*;

/// The same presentation with its vertex list permuted.
fn relabel(p: &Presentation, perm: &[usize]) -> Presentation {
    let q = p.quiver();
    let names: Vec<&str> = perm.iter().map(|&i| q.vertices()[i].as_str()).collect();
    let arrows: Vec<(&str, &str, &str)> = q
        .arrows()
        .iter()
        .map(|a| (a.name.as_str(), q.vertices()[a.src].as_str(), q.vertices()[a.tgt].as_str()))
        .collect();
    let nq = Quiver::new(&names, &arrows).unwrap();
    let rels = p
        .relations()
        .iter()
        .map(|r| r.terms().iter().map(|(c, w)| (*c, nq.parse_word(&w.display(q)).unwrap())).collect())
        .collect();
    Presentation::new(p.field(), nq, rels, None).unwrap()
}

fn cartan(p: &Presentation) -> Vec<Vec<usize>> {
    let a = build_algebra(p, &Rationals, None).unwrap();
    let n = a.vertex_count();
    (0..n).map(|v| (0..n).map(|w| a.hom_block(v, w).len()).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn directedness_is_invariant_under_relabeling(which in 0usize..6, perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle()) {
        let p = &common::all()[which];
        let n = p.quiver().vertex_count();
        let perm: Vec<usize> = perm.into_iter().filter(|&i| i < n).collect();
        let r = relabel(p, &perm);
        let a = build_algebra(p, &Rationals, None).unwrap();
        let b = build_algebra(&r, &Rationals, None).unwrap();
        prop_assert_eq!(a.dim(), b.dim());
        let (da, db) = (directed_orders(&a), directed_orders(&b));
        prop_assert_eq!(da.is_directed, db.is_directed);
        prop_assert_eq!(da.orders().count(), db.orders().count());
        let (ca, cb) = (cartan(p), cartan(&r));
        for v in 0..n {
            for w in 0..n {
                prop_assert_eq!(ca[perm[v]][perm[w]], cb[v][w]);
            }
        }
    }
}

#[test]
fn opposite_is_an_involution_and_blocks_partition_the_basis() {
    for p in common::all() {
        let a = build_algebra(&p, &Rationals, None).unwrap();
        let n = a.vertex_count();
        let total: usize = (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).map(|(v, w)| a.hom_block(v, w).len()).sum();
        assert_eq!(total, a.dim());
        let op = a.opposite();
        for v in 0..n {
            for w in 0..n {
                assert_eq!(op.hom_block(v, w), a.hom_block(w, v));
            }
        }
        let back = op.opposite();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(back.mul_basis(i, j), a.mul_basis(i, j));
                assert_eq!(op.mul_basis(i, j), a.mul_basis(j, i));
            }
        }
    }
}

#[test]
fn multiplication_is_associative_and_unital() {
    for p in common::all() {
        let a = build_algebra(&p, &Rationals, None).unwrap();
        let d = a.dim();
        let e = |i: usize| {
            let mut v = vec![dircat::exactlin::Field::zero(&Rationals); d];
            v[i] = dircat::exactlin::Field::one(&Rationals);
            v
        };
        let mut one = vec![dircat::exactlin::Field::zero(&Rationals); d];
        for &i in a.idempotents() {
            one[i] = dircat::exactlin::Field::one(&Rationals);
        }
        for i in 0..d {
            assert_eq!(a.mul(&one, &e(i)), e(i));
            assert_eq!(a.mul(&e(i), &one), e(i));
            for j in 0..d {
                for k in 0..d {
                    assert_eq!(a.mul(&a.mul(&e(i), &e(j)), &e(k)), a.mul(&e(i), &a.mul(&e(j), &e(k))));
                }
            }
        }
    }
}
