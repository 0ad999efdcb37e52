mod common;

use cexkit::algebra::{annihilator, is_iso_witness, Algebra};
use cexkit::catalog::{nabla_basis, Family};
use cexkit::cohomology::{delta, delta_ij, Cocycle};
use cexkit::extension::*;
use cexkit::{Matrix, Subspace};
use common::{alg, e, q};

fn nabla(f: Family, n: usize, i: usize) -> Matrix {
    nabla_basis(f, n).unwrap()[i - 1].clone()
}

#[test]
fn mu0_extension_is_mu0_next() {
    let a = alg("mu0:3");
    let ext = central_extend(&a, &Cocycle::single(nabla(Family::Mu0, 3, 1))).unwrap();
    assert_eq!(ext, alg("mu0:4"));
}

#[test]
fn mu11_by_delta_nn_is_mu23_verbatim() {
    let a = alg("mu1_1:5");
    let ext = central_extend(&a, &Cocycle::single(delta_ij(5, 5, 5))).unwrap();
    assert_eq!(ext, alg("mu2_3:6"));
}

#[test]
fn zero_cocycle_gives_split_extension() {
    let a = alg("mu0:3");
    let ext = central_extend(&a, &Cocycle::single(Matrix::zeros(3, 3))).unwrap();
    assert_eq!(annihilator(&ext).two_sided, Subspace::span(4, &[e(4, 3), e(4, 4)]));
    assert!(!check_ts(&a, &Cocycle::single(Matrix::zeros(3, 3))).unwrap());
}

#[test]
fn non_cocycle_rejected() {
    let a = alg("mu0:3");
    assert!(central_extend(&a, &Cocycle::single(delta_ij(3, 2, 1))).is_err());
}

#[test]
fn ts_membership() {
    let a = alg("mu0:5");
    assert!(check_ts(&a, &Cocycle::single(nabla(Family::Mu0, 5, 1))).unwrap());
    let cob = Cocycle::single(delta(&a, &e(5, 4)));
    assert!(!check_ts(&a, &cob).unwrap());

    let b = alg("mu1_1:6");
    let d = delta(&b, &e(6, 3));
    let twice: Vec<_> = nabla(Family::Mu1(1), 6, 2).data().iter().zip(d.data()).map(|(x, y)| x * &q(2) + y).collect();
    let theta = Cocycle::new(6, vec![nabla(Family::Mu1(1), 6, 2), Matrix::from_data(6, 6, twice).unwrap()]).unwrap();
    assert!(!check_ts(&b, &theta).unwrap());
    assert!(has_annihilator_component(&b, &theta).unwrap());
}

#[test]
fn annihilator_components() {
    let b = alg("mu1_1:6");
    let one = Cocycle::single(nabla(Family::Mu1(1), 6, 1));
    assert!(!has_annihilator_component(&b, &one).unwrap());
    let with_cob = Cocycle::new(6, vec![nabla(Family::Mu1(1), 6, 1), delta(&b, &e(6, 2))]).unwrap();
    assert!(has_annihilator_component(&b, &with_cob).unwrap());
    let pair = Cocycle::new(6, vec![nabla(Family::Mu1(1), 6, 1), nabla(Family::Mu1(1), 6, 2)]).unwrap();
    assert!(!has_annihilator_component(&b, &pair).unwrap());
}

#[test]
fn ann_decomposition_examples() {
    let a = alg("mu0:3");
    let d = ann_extension_decomposition(&a, &Cocycle::single(nabla(Family::Mu0, 3, 1))).unwrap();
    assert!(d.equal);
    assert_eq!(d.lhs, Subspace::span(4, &[e(4, 4)]));
    let z = ann_extension_decomposition(&a, &Cocycle::single(Matrix::zeros(3, 3))).unwrap();
    assert!(z.equal);
    assert_eq!(z.lhs, Subspace::span(4, &[e(4, 3), e(4, 4)]));
    let m = alg("mu1_1:5");
    let r = ann_extension_decomposition(&m, &Cocycle::single(delta_ij(5, 5, 5))).unwrap();
    assert!(r.equal);
    assert_eq!(r.lhs, Subspace::span(6, &[e(6, 4), e(6, 6)]));
}

#[test]
fn reconstruct_examples() {
    let b = alg("mu0:4");
    let r = reconstruct(&b).unwrap();
    assert_eq!(r.a_prime, alg("mu0:3"));
    let ext = central_extend(&r.a_prime, &r.theta).unwrap();
    assert!(is_iso_witness(&b, &ext, &r.witness));
    assert!(check_ts(&r.a_prime, &r.theta).unwrap());

    let split = central_extend(&alg("mu0:3"), &Cocycle::single(Matrix::zeros(3, 3))).unwrap();
    let r = reconstruct(&split).unwrap();
    assert_eq!(r.a_prime, alg("mu0:2"));
    assert_eq!(r.theta.s(), 2);
    assert!(has_annihilator_component(&r.a_prime, &r.theta).unwrap());

    let r = reconstruct(&Algebra::zero(1)).unwrap();
    assert_eq!(r.a_prime.dim(), 0);
    assert_eq!(r.theta.s(), 1);

    assert_eq!(reconstruct(&alg("mu0:1").clone()).map(|r| r.a_prime.dim()).unwrap(), 0);
}

#[test]
fn explicit_witnesses() {
    let a = alg("mu1_1:5");
    let theta = Cocycle::new(5, vec![nabla(Family::Mu1(1), 5, 1), nabla(Family::Mu1(1), 5, 4)]).unwrap();
    let base = central_extend(&a, &theta).unwrap();

    let fs = vec![vec![q(1), q(-2), q(3), q(0), q(1)], vec![q(0), q(1), q(1), q(5), q(0)]];
    let (shifted, w) = coboundary_shift(&a, &theta, &fs).unwrap();
    assert!(is_iso_witness(&base, &central_extend(&a, &shifted).unwrap(), &w));

    let m = Matrix::from_ints(&[&[1, 2], &[3, 5]]);
    let (mixed, w) = recombine(&theta, &m).unwrap();
    assert!(is_iso_witness(&base, &central_extend(&a, &mixed).unwrap(), &w));

    let t = cexkit::catalog::automorphism_template(Family::Mu1(1), 5).unwrap();
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
    let phi = t.instantiate(&t.random_point(&mut rng)).unwrap();
    let moved = act(&phi, &theta);
    let w = automorphism_shift(&phi, 2);
    assert!(is_iso_witness(&central_extend(&a, &moved).unwrap(), &base, &w));
}
