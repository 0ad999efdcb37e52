mod common;

use cexkit::exact::{nullspace, quotient_reps, row_reduce, Subspace};
use cexkit::{Matrix, ParamPoly};
use common::q;
use proptest::prelude::*;

fn small_matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-3i64..=3, rows * cols).prop_map(move |v| {
        Matrix::from_data(rows, cols, v.into_iter().map(q).collect()).unwrap()
    })
}

proptest! {
    #[test]
    fn row_reduce_is_idempotent(m in small_matrix(4, 5)) {
        let r = row_reduce(&m);
        prop_assert_eq!(row_reduce(r.basis()), r);
    }

    #[test]
    fn rank_nullity(m in small_matrix(3, 6)) {
        let ns = nullspace(&m);
        prop_assert_eq!(ns.dim() + m.rank(), 6);
        for v in ns.basis_vectors() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn quotient_reps_independent_mod_sub(m in small_matrix(4, 5), k in 0usize..4) {
        let whole = row_reduce(&m);
        let subvecs: Vec<_> = whole.basis_vectors().into_iter().take(k).collect();
        let sub = Subspace::span(5, &subvecs);
        let reps = quotient_reps(&whole, &sub).unwrap();
        prop_assert_eq!(reps.len(), whole.dim() - sub.dim());
        let mut acc = sub.clone();
        for r in &reps {
            prop_assert!(whole.contains(r));
            prop_assert!(!acc.contains(r));
            acc = acc.with_vector(r);
        }
    }

    #[test]
    fn scalar_inverse_exact(n in -1000i64..1000, d in 1i64..1000) {
        prop_assume!(n != 0);
        let a = common::qq(n, d);
        prop_assert!((a.clone() * a.inv().unwrap()).is_one());
    }
}

#[test]
fn poly_substitute_case_b1() {
    let p: ParamPoly = "a2*x*y + a1*x*z + a4*w*y".parse().unwrap();
    let c = common::qq(-5, 3);
    let v = p.substitute_values(&[
        ("a1", q(1)),
        ("a2", c.clone()),
        ("a3", c.clone()),
        ("a4", q(0)),
        ("x", q(1)),
        ("y", q(1)),
        ("z", -c),
        ("w", q(9)),
    ]);
    assert!(v.is_zero());
}

#[test]
fn quotient_of_mu0_cocycles() {
    let a = common::alg("mu0:3");
    let z2 = cexkit::cohomology::cocycle_space(&a);
    let b2 = cexkit::cohomology::coboundary_space(&a);
    let reps = quotient_reps(&z2, &b2).unwrap();
    assert_eq!(reps.len(), 1);
    let nabla = cexkit::catalog::nabla_basis(cexkit::catalog::Family::Mu0, 3).unwrap();
    // same class: difference is a coboundary
    let diff: Vec<_> = reps[0].iter().zip(nabla[0].data()).map(|(x, y)| x - y).collect();
    let scaled_ok = b2.contains(&diff)
        || (1..=3).any(|c| {
            let d: Vec<_> = reps[0].iter().zip(nabla[0].data()).map(|(x, y)| x - &(y * &q(c))).collect();
            b2.contains(&d)
        });
    assert!(scaled_ok);
}
