mod common;

use cexkit::algebra::{is_iso_witness, transport};
use cexkit::catalog::Family;
use cexkit::orbitlab::*;
use common::{alg, random_unimodular};

#[test]
fn action_formulas_agree_for_small_families() {
    for f in [Family::Mu0, Family::Mu1(1), Family::Mu1(2), Family::Mu1(3), Family::Mu1(4)] {
        let r = verify_action(f, f.min_dim().max(5)).unwrap();
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn orbit_cases_hold_at_witness_points() {
    for f in [Family::Mu1(1), Family::Mu1(2)] {
        let reports = verify_cases(f, 1, 5).unwrap();
        assert!(!reports.is_empty());
        assert!(reports.iter().all(|r| r.passed()), "{f:?}");
    }
}

#[test]
fn t_lists_reproduced_for_mu0_and_mu11() {
    let r = verify_t_list(Family::Mu0, 5, 1).unwrap();
    assert!(r.passed(), "{r}");
    let r = verify_t_list(Family::Mu1(1), 5, 1).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn invariants_survive_change_of_basis() {
    for (spec, seed) in [("mu2_6:6", 1), ("mu3_3:7:alpha=1/2", 2), ("mu1_4:5", 3)] {
        let a = alg(spec);
        let b = transport(&a, &random_unimodular(a.dim(), seed)).unwrap();
        assert_eq!(fine_invariants(&a), fine_invariants(&b), "{spec}");
        assert_eq!(derivation_dim(&a), derivation_dim(&b));
        assert_eq!(center_dim(&a), center_dim(&b));
    }
}

#[test]
fn finite_field_search_finds_transported_copy() {
    let a = alg("mu1_2:5");
    let p = random_unimodular(5, 11);
    let b = transport(&a, &p).unwrap();
    assert!(is_iso_witness(&b, &a, &p));
    for field in [2, 3] {
        let r = ff_iso_search(&a, &b, field).unwrap();
        let w = r.witness.expect("isomorphic over F_p");
        let (fa, fb) = (FpAlgebra::reduce(&a, field).unwrap(), FpAlgebra::reduce(&b, field).unwrap());
        assert!(is_fp_hom(&fa, &fb, &w) && w.is_invertible());
    }
}

#[test]
fn finite_field_search_separates_distinct_families() {
    let r = ff_iso_search(&alg("mu1_1:5"), &alg("mu0:5"), 3).unwrap();
    assert!(r.witness.is_none());
    assert!(ff_iso_search(&alg("mu2_1:6"), &alg("mu2_1:6"), 2).is_err());
}
