//! Cross-module pipelines: constructions feed checkers, formats and the
//! bialgebra layer.

use std::sync::Arc;

use multival_core::bialgebra::{
    comult_map, corack_check, frobenius_check, functions_space, group_algebra, pairing_check, N_HOMOMORPHISM,
    SELF_DIST,
};
use multival_core::braid::{braid_check, rack_to_braid};
use multival_core::format;
use multival_core::groups::{conjugation_action, make_named_group, subgroup_generated, NamedGroup, Perm};
use multival_core::nvalued::{
    coset_nv_group, coset_nv_quandle, multi_to_nvalued, nv_assoc_check, nv_rack_check, power_nvalued, Flavor,
    MultiOpFamily, NValuedTable,
};
use multival_core::quandles::{conj_quandle, dihedral_quandle, enumerate_quandles, is_n_quandle, trivial_quandle};
use multival_core::InclusionMode;

fn coset_q() -> (NValuedTable, NValuedTable) {
    let s3 = make_named_group(NamedGroup::S3).unwrap();
    let a = subgroup_generated(6, &[conjugation_action(&s3, 1)]);
    let cq = coset_nv_quandle(&conj_quandle(&s3, 1), &a, InclusionMode::MultiplicityAware).unwrap();
    (cq.rack.product().clone(), cq.rack.bar().clone())
}

#[test]
fn coset_quandle_survives_the_file_format() {
    let (product, bar) = coset_q();
    let text = format::print_nvalued(&product, Some(&bar));
    let back = format::parse_nvalued(&text).unwrap();
    assert_eq!(back.product, product);
    assert_eq!(back.bar.as_ref(), Some(&bar));
    let r = nv_rack_check(&back.product, back.bar.as_ref().unwrap(), true, InclusionMode::MultiplicityAware).unwrap();
    assert!(r.passed(), "{r}");
    let fixture = include_str!("../../../fixtures/cosetq.nv");
    assert_eq!(fixture, text);
}

#[test]
fn function_space_dump_keeps_corack_verdicts() {
    let (product, _) = coset_q();
    let cx = functions_space(&product).space;
    let reparsed = format::parse_space(&format::print_space(&cx)).unwrap();
    let a = corack_check(&cx, 2).unwrap();
    let b = corack_check(&reparsed, 2).unwrap();
    assert_eq!(a.report, b.report);
    assert!(a.report.axiom_passed(N_HOMOMORPHISM));
    assert!(!a.report.axiom_passed(SELF_DIST));
}

#[test]
fn coset_groups_are_frobenius_and_dual() {
    for k in 3..=7 {
        let g = make_named_group(NamedGroup::Zn(k)).unwrap();
        let neg = Perm::new((0..k).map(|x| (k - x) % k).collect()).unwrap();
        let t = coset_nv_group(&g, &subgroup_generated(k, &[neg])).unwrap().product().clone();
        assert!(nv_assoc_check(&t).passed());
        let f = comult_map(Arc::new(functions_space(&t).space)).unwrap();
        assert!(frobenius_check(&f, 2, 11).unwrap().passed(), "Z{k}");
        let p = pairing_check(&group_algebra(&t).space, &functions_space(&t).space).unwrap();
        assert!(p.report.passed());
        assert_eq!(p.checks, t.size().pow(3));
    }
}

#[test]
fn multi_rack_to_nvalued_to_file() {
    let fam = MultiOpFamily::new(vec![trivial_quandle(3).table().clone(), dihedral_quandle(3).table().clone()], Flavor::Quandle)
        .unwrap();
    let out = multi_to_nvalued(&fam, InclusionMode::MultiplicityAware).unwrap();
    assert!(out.report.passed(), "{}", out.report);
    let text = format::print_nvalued(&out.product, out.bar.as_ref());
    let back = format::parse_nvalued(&text).unwrap();
    assert_eq!(back.product, out.product);
}

#[test]
fn enumerated_quandles_give_braid_files() {
    for q in enumerate_quandles(4, true).unwrap() {
        let r = rack_to_braid(&q);
        let back = format::parse_braid(&format::print_braid(&r)).unwrap();
        assert_eq!(back, r);
        assert!(braid_check(&back).passed());
    }
}

#[test]
fn dihedral_powers_match_n_quandle_property() {
    for m in [3, 5, 7] {
        let q = dihedral_quandle(m);
        assert!(is_n_quandle(&q, 2));
        let r = power_nvalued(&q, 2, InclusionMode::MultiplicityAware).unwrap();
        assert!(r.report().passed());
    }
}
