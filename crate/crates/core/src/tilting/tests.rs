use alloc::sync::Arc;
use alloc::vec::Vec;

use super::*;
use crate::exactlin::PrimeField;
use crate::fixtures::{self, over, qa};
use crate::modcat::{dim_vectors, for_each_rep, simple};

const CAP: usize = 6;

#[test]
fn tau_inverse_of_the_site_in_the_first_tilting_example() {
    let a = qa(&fixtures::e4_1());
    let op = Arc::new(a.opposite());
    let pz = projective(&a, 2);
    let seq = tau_inverse(&pz);
    assert_eq!(seq.presentation_top.tops(), [2]);
    assert_eq!(seq.presentation_relations.tops(), [0, 1]);
    let op_dims: Vec<usize> = (0..3).map(|v| projective(&op, v).total_dim()).collect();
    assert_eq!(op_dims, [1, 2, 5]);
    assert_eq!(seq.h0.tops(), [2]);
    assert_eq!(seq.h1.tops(), [0, 1]);
    assert!(seq.left_kernel.is_zero());
    assert!(seq.connecting.is_injective());
    assert_eq!(seq.tau_inv.total_dim(), 4);
    assert!(seq.dimensions_balance());
    assert_eq!(min_resolution(&seq.tau_inv, CAP).pd, Pd::Finite(1));
    assert_eq!(hom_dim(&seq.tau_inv, &pz).unwrap(), 0);
}

#[test]
fn tau_inverse_of_the_site_in_the_second_tilting_example() {
    let a = qa(&fixtures::e4_2());
    let seq = tau_inverse(&projective(&a, 1));
    assert_eq!((seq.h0.tops(), seq.h1.tops()), (&[1][..], &[0][..]));
    assert!(seq.connecting.is_injective());
    assert!(is_isomorphic(&seq.tau_inv, &injective(&a, 0), 0).unwrap().is_some());
}

#[test]
fn left_kernel_is_the_dual_hom_into_the_regular_module() {
    for p in [fixtures::e4_1(), fixtures::e4_2(), fixtures::no_witness(), fixtures::e3_2()] {
        let a = qa(&p);
        let op = Arc::new(a.opposite());
        for v in 0..a.vertex_count() {
            for m in [projective(&a, v), simple(&a, v), injective(&a, v)] {
                let seq = tau_inverse(&m);
                let dm = dual_over(&m, &op);
                let expected: usize = (0..a.vertex_count())
                    .map(|w| hom_dim(&dm, &projective(&op, w)).unwrap())
                    .sum();
                assert_eq!(seq.left_kernel.total_dim(), expected);
                assert!(seq.dimensions_balance());
            }
        }
    }
}

#[test]
fn tau_inverse_of_an_injective_projective_vanishes() {
    let a = qa(&fixtures::dual_numbers());
    let seq = tau_inverse(&projective(&a, 0));
    assert!(seq.tau_inv.is_zero());
}

#[test]
fn free_summands() {
    let a = qa(&fixtures::e4_1());
    assert!(free_summand_check(&a, 1, 2).unwrap());
    assert!(!free_summand_check(&a, 0, 2).unwrap());
    assert!(free_summand_check(&a, 2, 2).unwrap());
}

#[test]
fn site_reports() {
    let a = qa(&fixtures::e4_1());
    let r = apr_site_report(&a, 2, CAP, 0).unwrap();
    assert!(r.site_ok && r.self_injective_ok && r.hom_vanishing_ok);
    assert_eq!(r.free_summand_witness, Some(1));
    assert_eq!(r.pd_direct, Pd::Finite(1));
    assert!(!apr_site_report(&a, 0, CAP, 0).unwrap().site_ok);

    let b = qa(&fixtures::e4_2());
    let r = apr_site_report(&b, 1, CAP, 0).unwrap();
    assert!(r.hypotheses() && r.hom_vanishing_ok);
    assert_eq!(r.free_summand_witness, Some(0));

    let c = qa(&fixtures::no_witness());
    let r = apr_site_report(&c, 1, CAP, 0).unwrap();
    assert!(r.site_ok && r.self_injective_ok);
    assert_eq!(r.free_summand_witness, None);
    assert!(!r.hom_vanishing_ok);
    assert_eq!(r.pd_direct.at_most(1), Some(false));
    assert_eq!(r.failed_hypothesis(), Some("no free-summand witness"));
}

#[test]
fn apr_tilts() {
    let a = qa(&fixtures::e4_1());
    let r = build_and_verify_apr(&a, 2, CAP, 0).unwrap();
    assert!(r.verified());
    assert_eq!(r.summand_classes.len(), 3);
    assert_eq!((r.ext_direct, r.ext_stable), (0, 0));
    assert!(r.hom_q_to_site_vanishes);

    let b = qa(&fixtures::e4_2());
    let r = build_and_verify_apr(&b, 1, CAP, 0).unwrap();
    assert!(r.verified());
    assert_eq!(r.tau_inv_injective_at, Some(0));

    let h = qa(&fixtures::hereditary());
    let r = build_and_verify_apr(&h, 1, CAP, 0).unwrap();
    assert!(r.verified());
    assert_eq!(r.site.tau.tau_inv, simple(&h, 0));

    let c = qa(&fixtures::no_witness());
    let r = build_and_verify_apr(&c, 1, CAP, 0).unwrap();
    assert!(!r.hypotheses() && !r.verified());
}

#[test]
fn torsion_classes() {
    let a = qa(&fixtures::e4_1());
    let r = build_and_verify_apr(&a, 2, CAP, 0).unwrap();
    let sz = torsion_classify(&r, &simple(&a, 2)).unwrap();
    assert!(sz.in_f && sz.factor_support_check && !sz.in_t);
    let pz = torsion_classify(&r, &projective(&a, 2)).unwrap();
    assert!(pz.in_f && pz.factor_support_check);
    let sx = torsion_classify(&r, &simple(&a, 0)).unwrap();
    assert!(!sx.in_f && !sx.factor_support_check);
    let t = torsion_classify(&r, &r.t).unwrap();
    assert!(t.in_t && !t.in_f);
}

#[test]
fn hom_from_t_vanishes_exactly_on_site_modules_over_f2() {
    let f = PrimeField::new(2).unwrap();
    let a = over(&fixtures::e4_1(), &f);
    let r = build_and_verify_apr(&a, 2, CAP, 0).unwrap();
    assert!(r.verified());
    let mut total = 0;
    for dims in dim_vectors(3, 3) {
        total += for_each_rep(&a, &dims, 1 << 20, |m| {
            let v = torsion_classify(&r, m)?;
            assert_eq!(v.in_f, v.factor_support_check);
            assert!(m.is_zero() || !(v.in_f && v.in_t));
            Ok(())
        })
        .unwrap();
    }
    assert!(total > 20);
}
