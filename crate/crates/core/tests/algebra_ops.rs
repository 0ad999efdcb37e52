mod common;

use cexkit::algebra::*;
use cexkit::catalog::{automorphism_template, Family};
use cexkit::{Matrix, Scalar, Subspace};
use common::{alg, e, q};

fn dims(a: &Algebra) -> Vec<usize> {
    power_filtration(a).iter().map(Subspace::dim).collect()
}

#[test]
fn products_from_the_tables() {
    let a = alg("mu0:4");
    assert_eq!(a.product(&e(4, 1), &e(4, 2)).unwrap(), e(4, 3));
    let b = alg("mu2_3:6");
    assert_eq!(b.product(&e(6, 5), &e(6, 5)).unwrap(), e(6, 6));
}

#[test]
fn associativity_of_named_algebras() {
    assert!(alg("mu0:5").check_associative().is_empty());
    assert!(alg("mu1_4:6").check_associative().is_empty());
}

#[test]
fn filtration_dimensions() {
    assert_eq!(dims(&alg("mu0:4")), vec![4, 3, 2, 1, 0]);
    assert_eq!(dims(&alg("mu1_2:6")), vec![6, 4, 3, 2, 1, 0]);
    assert_eq!(nilpotency_class(&alg("mu0:5")), Some(6));
}

#[test]
fn annihilators() {
    let a = annihilator(&alg("mu0:4"));
    assert_eq!(a.two_sided, Subspace::span(4, &[e(4, 4)]));
    let b = annihilator(&alg("mu1_1:6"));
    assert_eq!(b.two_sided, Subspace::span(6, &[e(6, 5), e(6, 6)]));
    // brute-force oracle: x in Ann iff x e_j = e_j x = 0 for all j
    for v in b.two_sided.basis_vectors() {
        for j in 1..=6 {
            let m = alg("mu1_1:6");
            assert!(common::naive_mul(&m, &v, &e(6, j)).iter().all(Scalar::is_zero));
            assert!(common::naive_mul(&m, &e(6, j), &v).iter().all(Scalar::is_zero));
        }
    }
}

#[test]
fn shapes() {
    assert_eq!(shape_classify(&alg("mu0:5")).unwrap(), Shape::NullFiliform);
    assert_eq!(shape_classify(&alg("mu1_3:6")).unwrap(), Shape::Filiform);
    assert_eq!(shape_classify(&alg("mu2_4:7")).unwrap(), Shape::QuasiFiliform);
}

#[test]
fn graded_algebras() {
    let a = alg("mu0:4");
    assert_eq!(graded_algebra(&a).unwrap(), a);
    // gr(μ_{1,2}) ≅ μ_{1,1}: certified by a permutation witness
    let g = graded_algebra(&alg("mu1_2:6")).unwrap();
    let target = alg("mu1_1:6");
    assert_ne!(g, alg("mu1_2:6"));
    let gens_g = generators(&g);
    assert_eq!(gens_g.len(), 2);
    let mut found = false;
    for (x, y) in [(0, 1), (1, 0)] {
        let imgs = vec![e(6, 1), e(6, 6)];
        let perm = vec![imgs[x].clone(), imgs[y].clone()];
        if let Ok(p) = extend_generator_images(&g, &gens_g, &perm, &target) {
            found |= is_iso_witness(&g, &target, &p);
        }
    }
    assert!(found);
}

#[test]
fn graded_products_respect_grading() {
    for spec in ["mu1_4:7", "mu2_8:8", "mu3_6:9"] {
        let (g, _, grades) = graded_algebra_with_basis(&alg(spec)).unwrap();
        for (i, j, k, _) in g.table() {
            assert_eq!(grades[k - 1], grades[i - 1] + grades[j - 1]);
        }
    }
}

#[test]
fn transport_examples() {
    let a = alg("mu1_3:5");
    assert_eq!(transport(&a, &Matrix::identity(5)).unwrap(), a);
    let m = alg("mu0:3");
    let p = Matrix::diagonal(&[q(2), q(4), q(8)]);
    assert_eq!(transport(&m, &p).unwrap(), m);
    assert!(transport(&m, &Matrix::zeros(3, 3)).is_err());
}

#[test]
fn hom_witnesses() {
    let a = alg("mu0:4");
    assert!(is_hom_witness(&a, &a, &Matrix::identity(4)));
    let b = alg("mu0:3");
    // φ(e1) = 2e1 + e2, φ(e2) = φ(e1)², φ(e3) = φ(e1)³
    let p = Matrix::from_ints(&[&[2, 0, 0], &[1, 4, 0], &[0, 4, 8]]);
    assert!(is_hom_witness(&b, &b, &p));
    let z = Matrix::zeros(4, 4);
    assert!(is_hom_witness(&a, &a, &z));
    assert!(!is_iso_witness(&a, &a, &z));
}

#[test]
fn generator_extension() {
    let a = alg("mu0:4");
    assert_eq!(extend_generator_images(&a, &[e(4, 1)], &[e(4, 1)], &a).unwrap(), Matrix::identity(4));
    let b = alg("mu0:3");
    let two = vec![q(2), q(0), q(0)];
    assert_eq!(
        extend_generator_images(&b, &[e(3, 1)], &[two], &b).unwrap(),
        Matrix::diagonal(&[q(2), q(4), q(8)])
    );
    assert!(extend_generator_images(&b, &[e(3, 1)], &[e(3, 2)], &b).is_err());
    assert_eq!(
        extend_generator_images(&b, &[e(3, 2)], &[e(3, 2)], &b),
        Err(cexkit::Error::NotGenerating)
    );
}

#[test]
fn fingerprints() {
    let f = fingerprint(&alg("mu0:4"));
    assert_eq!(f.power_dims, vec![4, 3, 2, 1, 0]);
    assert_eq!(f.ann_dim, 1);
    assert_eq!(f.cohom_dims, (4, 3, 1));
    let g1 = fingerprint(&alg("mu2_1:6"));
    let g3 = fingerprint(&alg("mu2_3:6"));
    assert_eq!((g1.right_ann_dim, g3.right_ann_dim), (3, 2));
}

#[test]
fn fingerprint_invariant_under_basis_change() {
    for spec in ["mu1_1:5", "mu1_2:5", "mu2_5:6"] {
        let a = alg(spec);
        let f = fingerprint(&a);
        for seed in 0..5 {
            let p = common::random_unimodular(a.dim(), seed);
            assert_eq!(fingerprint(&transport(&a, &p).unwrap()), f, "{spec} seed {seed}");
        }
    }
}

#[test]
fn templates_are_automorphisms() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for (fam, n) in [(Family::Mu0, 5), (Family::Mu1(1), 6), (Family::Mu1(2), 7), (Family::Mu1(3), 5), (Family::Mu1(4), 6)] {
        let t = automorphism_template(fam, n).unwrap();
        let a = cexkit::catalog::algebra(fam, n).unwrap();
        for _ in 0..5 {
            let pt = t.random_point(&mut rng);
            let m = t.instantiate(&pt).unwrap();
            assert!(is_iso_witness(&a, &a, &m), "{fam} {n}");
        }
    }
}
