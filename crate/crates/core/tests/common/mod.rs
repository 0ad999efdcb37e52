#![allow(dead_code)]

use cexkit::catalog::{make_algebra, Family, FamilySpec};
use cexkit::algebra::Algebra;
use cexkit::{Matrix, Scalar};

pub fn q(n: i64) -> Scalar {
    Scalar::from_int(n)
}

pub fn qq(n: i64, d: i64) -> Scalar {
    Scalar::new(n, d)
}

pub fn alg(spec: &str) -> Algebra {
    make_algebra(&spec.parse::<FamilySpec>().unwrap()).unwrap()
}

pub fn fam(f: Family, n: usize) -> Algebra {
    cexkit::catalog::algebra(f, n).unwrap()
}

/// e_i (1-based)
pub fn e(n: usize, i: usize) -> Vec<Scalar> {
    cexkit::exact::unit_vec(n, i - 1)
}

/// Independent oracle: structure constants via naive triple loop over a product closure.
pub fn naive_mul(a: &Algebra, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let n = a.dim();
    let mut out = vec![Scalar::zero(); n];
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                let c = a.coeff(i, j, k);
                if !c.is_zero() {
                    out[k - 1] = out[k - 1].clone() + &c * &u[i - 1] * &v[j - 1];
                }
            }
        }
    }
    out
}

/// Random unimodular integer matrix (product of elementary matrices and a permutation).
pub fn random_unimodular(n: usize, seed: u64) -> Matrix {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut m = Matrix::identity(n);
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let c = q(rng.gen_range(-2..=2));
        let mut el = Matrix::identity(n);
        el.set(i, j, c);
        m = &m * &el;
    }
    let mut perm = Matrix::zeros(n, n);
    let mut idx: Vec<usize> = (0..n).collect();
    for k in (1..n).rev() {
        idx.swap(k, rng.gen_range(0..=k));
    }
    for (r, c) in idx.into_iter().enumerate() {
        perm.set(r, c, q(1));
    }
    &m * &perm
}
