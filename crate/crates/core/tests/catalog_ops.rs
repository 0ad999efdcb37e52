mod common;

use cexkit::algebra::{is_iso_witness, shape_classify, Shape};
use cexkit::catalog::*;
use cexkit::cohomology::cohomology_basis;
use cexkit::Scalar;
use common::{alg, q, qq};

#[test]
fn table_examples() {
    let a = alg("mu0:5");
    for i in 1..=5 {
        for j in 1..=5 {
            for k in 1..=5 {
                let want = if i + j <= 5 && k == i + j { q(1) } else { q(0) };
                assert_eq!(a.coeff(i, j, k), want);
            }
        }
    }
    let b = alg("mu2_2:6:alpha=3/1");
    assert_eq!(b.coeff(1, 5, 6), q(1));
    assert_eq!(b.coeff(5, 1, 6), q(3));
    let c = alg("mu4_3:8");
    assert_eq!(c.coeff(1, 5, 4), q(1));
    assert_eq!(c.coeff(1, 5, 6), q(1));
    assert_eq!(c.coeff(5, 1, 7), q(1));
    assert_eq!(c.coeff(5, 5, 8), q(1));
    assert_eq!(c.nnz(), 6 + 4);
}

#[test]
fn guards() {
    assert!(make_algebra(&FamilySpec::new(Family::Mu2(1), 5)).is_err());
    assert!(make_algebra(&FamilySpec::new(Family::Mu3(1), 6)).is_err());
    assert!(make_algebra(&FamilySpec::new(Family::Mu4(1), 7)).is_err());
    assert!(make_algebra(&FamilySpec::new(Family::Mu1(1), 3)).is_err());
    assert!(make_algebra(&FamilySpec::new(Family::Mu2(9), 6)).is_err());
    assert!(make_algebra(&FamilySpec::with_alpha(Family::Mu3(1), 7, q(1))).is_err());
}

#[test]
fn every_family_is_associative() {
    let alphas = [q(-1), q(0), qq(1, 2), q(1), q(2)];
    for f in Family::all() {
        for n in f.min_dim().max(2)..=12 {
            let specs: Vec<FamilySpec> = if f.has_alpha() {
                alphas.iter().map(|a| FamilySpec::with_alpha(f, n, a.clone())).collect()
            } else {
                vec![FamilySpec::new(f, n)]
            };
            for s in specs {
                let a = make_algebra(&s).unwrap();
                assert!(a.check_associative().is_empty(), "{s}");
            }
        }
    }
}

#[test]
fn family_shapes() {
    for n in 4..=9 {
        assert_eq!(shape_classify(&alg(&format!("mu0:{n}"))).unwrap(), Shape::NullFiliform);
        for k in 1..=4 {
            assert_eq!(shape_classify(&alg(&format!("mu1_{k}:{n}"))).unwrap(), Shape::Filiform);
        }
    }
    for n in 6..=9 {
        for k in 1..=10 {
            let s = if matches!(k, 2 | 9) { format!("mu2_{k}:{n}:alpha=2") } else { format!("mu2_{k}:{n}") };
            assert_eq!(shape_classify(&alg(&s)).unwrap(), Shape::QuasiFiliform, "{s}");
        }
    }
}

#[test]
fn nabla_bases() {
    let b = nabla_basis(Family::Mu1(1), 5).unwrap();
    assert_eq!(b.len(), 4);
    for (i, j) in [(1, 4), (2, 3), (3, 2), (4, 1)] {
        assert_eq!(b[0].get(i - 1, j - 1), &q(1));
    }
    assert_eq!(b[0].data().iter().filter(|x| !x.is_zero()).count(), 4);
    let c = nabla_basis(Family::Mu1(2), 5).unwrap();
    assert_eq!(c.len(), 3);
    assert_eq!(c[2].get(4, 4), &q(1));
    let d = nabla_basis(Family::Mu0, 4).unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d[0].data().iter().filter(|x| !x.is_zero()).count(), 4);
    assert!(nabla_basis(Family::Mu2(1), 6).is_err());
}

#[test]
fn nabla_classes_are_independent() {
    for f in [Family::Mu0, Family::Mu1(1), Family::Mu1(2), Family::Mu1(3), Family::Mu1(4)] {
        for n in 4..=8 {
            let h = cohomology_basis(&algebra(f, n).unwrap());
            let (_, change) = h.rebase(nabla_basis(f, n).unwrap()).unwrap();
            assert!(change.is_invertible());
        }
    }
}

#[test]
fn template_examples() {
    let t = automorphism_template(Family::Mu0, 3).unwrap();
    let pt = [("x", q(2)), ("a2", q(0)), ("a3", q(0))]
        .into_iter()
        .map(|(k, v)| (cexkit::exact::Var::from(k), v))
        .collect();
    let m = t.instantiate(&pt).unwrap();
    assert_eq!(m, cexkit::Matrix::diagonal(&[q(2), q(4), q(8)]));
    let a = alg("mu0:3");
    assert!(is_iso_witness(&a, &a, &m));

    let t = automorphism_template(Family::Mu1(4), 6).unwrap();
    assert_eq!(t.get(5, 5).as_constant(), Some(Scalar::one()));
    assert_eq!(t.get(4, 5).to_string(), "y");
    assert!(automorphism_template(Family::Mu1(2), 6).is_err());
    assert!(automorphism_template(Family::Mu2(1), 6).is_err());

    let t = automorphism_template(Family::Mu1(2), 7).unwrap();
    assert_eq!(t.get(6, 6).to_string(), "x^3");
    assert_eq!(t.get(4, 6).to_string(), "-x^2*z");
}

#[test]
fn template_violating_constraint_rejected() {
    let t = automorphism_template(Family::Mu1(1), 5).unwrap();
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
    let mut pt = t.random_point(&mut rng);
    pt.insert("y".into(), q(0));
    assert!(t.instantiate(&pt).is_err());
}
