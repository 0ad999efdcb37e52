mod common;

use cexkit::catalog::{nabla_basis, Family};
use cexkit::cohomology::*;
use cexkit::Matrix;
use common::{alg, q};

/// Σ_{j=1}^{top-1} Δ_{j, top-j}
fn antidiag(n: usize, top: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for j in 1..top {
        if top - j <= n {
            m.set(j - 1, top - j - 1, q(1));
        }
    }
    m
}

fn add(a: &Matrix, b: &Matrix) -> Matrix {
    Matrix::from_data(a.rows(), a.cols(), a.data().iter().zip(b.data()).map(|(x, y)| x + y).collect()).unwrap()
}

#[test]
fn delta_examples() {
    let a = alg("mu0:3");
    assert_eq!(delta(&a, &common::e(3, 3)), antidiag(3, 3));
    assert!(delta(&a, &[q(0), q(0), q(0)]).is_zero());
    let b = alg("mu1_2:6");
    let expected = add(&antidiag(6, 5), &delta_ij(6, 6, 6));
    assert_eq!(delta(&b, &common::e(6, 5)), expected);
}

#[test]
fn dimension_formulas() {
    for n in 4..=8 {
        assert_eq!(cohomology_basis(&alg(&format!("mu0:{n}"))).dims(), (n, n - 1, 1));
        assert_eq!(cohomology_basis(&alg(&format!("mu1_1:{n}"))).dims(), (n + 2, n - 2, 4));
        for k in 2..=4 {
            assert_eq!(cohomology_basis(&alg(&format!("mu1_{k}:{n}"))).dims(), (n + 1, n - 2, 3));
        }
    }
    assert_eq!(cocycle_space(&cexkit::algebra::Algebra::zero(2)).dim(), 4);
}

#[test]
fn z2_basis_matches_displayed_spanning_set() {
    // Z²(μ₀ⁿ) = ⟨Σ_{j<i} Δ_{j,i−j}, 2 ≤ i ≤ n+1⟩
    let n = 6;
    let a = alg("mu0:6");
    let span = cexkit::Subspace::span(n * n, &(2..=n + 1).map(|i| antidiag(n, i).data().to_vec()).collect::<Vec<_>>());
    assert_eq!(cocycle_space(&a), span);
}

#[test]
fn every_basis_cocycle_satisfies_condition_brute_force() {
    for spec in ["mu1_1:5", "mu1_4:6", "mu2_9:6:alpha=2"] {
        let a = alg(spec);
        let n = a.dim();
        for v in cocycle_space(&a).basis_vectors() {
            let f = vec_to_form(n, &v);
            for i in 1..=n {
                for j in 1..=n {
                    for k in 1..=n {
                        let eij = common::naive_mul(&a, &common::e(n, i), &common::e(n, j));
                        let ejk = common::naive_mul(&a, &common::e(n, j), &common::e(n, k));
                        let lhs: cexkit::Scalar = (0..n).map(|m| &eij[m] * f.get(m, k - 1)).sum();
                        let rhs: cexkit::Scalar = (0..n).map(|m| &ejk[m] * f.get(i - 1, m)).sum();
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }
}

#[test]
fn reduction_examples() {
    let a = alg("mu0:5");
    let h = cohomology_basis(&a);
    let g = antidiag(5, 6);
    let c = h.coords(&g).unwrap();
    assert_eq!(c.len(), 1);
    assert!(!c[0].is_zero());
    let (hb, _) = h.rebase(nabla_basis(Family::Mu0, 5).unwrap()).unwrap();
    assert_eq!(hb.coords(&g).unwrap(), vec![q(1)]);
    assert_eq!(hb.coords(&delta(&a, &common::e(5, 2))).unwrap(), vec![q(0)]);

    let b = alg("mu1_1:5");
    let (hb, change) = cohomology_basis(&b).rebase(nabla_basis(Family::Mu1(1), 5).unwrap()).unwrap();
    assert!(change.is_invertible());
    let f = add(&delta_ij(5, 5, 5), &delta(&b, &common::e(5, 3)));
    assert_eq!(hb.coords(&f).unwrap(), vec![q(0), q(0), q(0), q(1)]);
    assert!(hb.coords(&delta_ij(5, 2, 2)).is_err());
}

#[test]
fn h2_representatives_of_filiform_families() {
    for k in 2..=4 {
        let n = 6;
        let a = alg(&format!("mu1_{k}:{n}"));
        let h = cohomology_basis(&a);
        let (_, change) = h.rebase(vec![delta_ij(n, 1, n), delta_ij(n, n, 1), delta_ij(n, n, n)]).unwrap();
        assert!(change.is_invertible());
    }
}

#[test]
fn cocycle_annihilators() {
    let z = Cocycle::single(Matrix::zeros(4, 4));
    assert_eq!(cocycle_annihilator(&z).dim(), 4);
    let t = Cocycle::single(antidiag(5, 6));
    assert!(cocycle_annihilator(&t).is_zero());
    let u = Cocycle::single(delta_ij(6, 6, 6));
    let ann = cocycle_annihilator(&u);
    assert_eq!(ann, cexkit::Subspace::span(6, &(1..=5).map(|i| common::e(6, i)).collect::<Vec<_>>()));
}

#[test]
fn coboundaries_are_cocycles() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for spec in ["mu0:6", "mu1_3:6", "mu2_6:7", "mu3_2:8", "mu4_4:9"] {
        let a = alg(spec);
        let z2 = cocycle_space(&a);
        for _ in 0..10 {
            let f: Vec<_> = (0..a.dim()).map(|_| q(rng.gen_range(-4..=4))).collect();
            let d = delta(&a, &f);
            assert!(z2.contains(d.data()));
            assert!(is_cocycle(&a, &d));
        }
    }
}
