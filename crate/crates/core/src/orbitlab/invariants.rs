//! Finer isomorphism invariants used to separate reached algebras.

use crate::algebra::{power_filtration, Algebra};
use crate::exact::{nullspace, Matrix, Scalar, Subspace, Vector};

/// Rank of a row list over `cols` columns.
fn rank(rows: Vec<Vector>, cols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    Matrix::from_rows(&rows, cols).expect("row width").rank()
}

/// Functionals vanishing on `w`.
fn annihilating_functionals(w: &Subspace) -> Vec<Vector> {
    let n = w.ambient_dim();
    if w.is_zero() {
        return (0..n).map(|i| crate::exact::unit_vec(n, i)).collect();
    }
    nullspace(w.basis()).basis_vectors()
}

/// `dim {x : x·U ⊆ W}` (`left`) or `dim {x : U·x ⊆ W}`.
fn transporter_dim(a: &Algebra, u: &Subspace, w: &Subspace, left: bool) -> usize {
    let n = a.dim();
    let qs = annihilating_functionals(w);
    let mut rows = Vec::new();
    for y in u.basis_vectors() {
        let images: Vec<Vector> = (0..n)
            .map(|i| {
                let e = crate::exact::unit_vec(n, i);
                if left {
                    a.mul(&e, &y)
                } else {
                    a.mul(&y, &e)
                }
            })
            .collect();
        for q in &qs {
            rows.push(images.iter().map(|v| dot(q, v)).collect());
        }
    }
    n - rank(rows, n)
}

fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    u.iter().zip(v).fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

/// `dim Der(A)`.
pub fn derivation_dim(a: &Algebra) -> usize {
    let n = a.dim();
    // unknown D[k][i] at column k * n + i; D e_i = Σ_k D[k][i] e_k
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for (k, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        row[r * n + k] += c;
                    }
                }
                for k in 0..n {
                    let c = &a.basis_product(k, j)[r];
                    if !c.is_zero() {
                        row[k * n + i] -= c;
                    }
                    let c = &a.basis_product(i, k)[r];
                    if !c.is_zero() {
                        row[k * n + j] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    n * n - rank(rows, n * n)
}

/// `dim {T : T(xy) = T(x)y}` (`left`) or `dim {T : T(xy) = xT(y)}`.
pub fn centroid_dim(a: &Algebra, left: bool) -> usize {
    let n = a.dim();
    // unknown T[k][i] at column k * n + i
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for (k, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        row[r * n + k] += c;
                    }
                }
                for k in 0..n {
                    if left {
                        let c = &a.basis_product(k, j)[r];
                        if !c.is_zero() {
                            row[k * n + i] -= c;
                        }
                    } else {
                        let c = &a.basis_product(i, k)[r];
                        if !c.is_zero() {
                            row[k * n + j] -= c;
                        }
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    n * n - rank(rows, n * n)
}

/// `dim {x : xy = yx for all y}`.
pub fn center_dim(a: &Algebra) -> usize {
    let n = a.dim();
    let mut rows = Vec::new();
    for j in 0..n {
        for k in 0..n {
            rows.push((0..n).map(|i| &a.basis_product(i, j)[k] - &a.basis_product(j, i)[k]).collect());
        }
    }
    n - rank(rows, n)
}

/// Named dimension invariants: derivations, center, and transporters between powers.
pub fn fine_invariants(a: &Algebra) -> Vec<(String, usize)> {
    let n = a.dim();
    let powers = power_filtration(a);
    let mut out = vec![
        ("der".to_string(), derivation_dim(a)),
        ("center".to_string(), center_dim(a)),
        ("left centroid".to_string(), centroid_dim(a, true)),
        ("right centroid".to_string(), centroid_dim(a, false)),
    ];
    let mut comm = Vec::new();
    let mut anti = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let (p, q) = (a.basis_product(i, j), a.basis_product(j, i));
            comm.push(p.iter().zip(q).map(|(x, y)| x - y).collect::<Vector>());
            anti.push(p.iter().zip(q).map(|(x, y)| x + y).collect::<Vector>());
        }
    }
    let comm = Subspace::span(n, &comm);
    let anti = Subspace::span(n, &anti);
    for (k, p) in powers.iter().enumerate().skip(1) {
        out.push((format!("[A,A]∩A^{}", k + 1), comm.intersect(p).dim()));
        out.push((format!("(A∘A)∩A^{}", k + 1), anti.intersect(p).dim()));
    }
    for (k, p) in powers.iter().enumerate() {
        for (l, w) in powers.iter().enumerate().skip(1) {
            if l <= k {
                continue;
            }
            out.push((format!("x·A^{}⊆A^{}", k + 1, l + 1), transporter_dim(a, p, w, true)));
            out.push((format!("A^{}·x⊆A^{}", k + 1, l + 1), transporter_dim(a, p, w, false)));
        }
        out.push((format!("x·A^{}=0", k + 1), transporter_dim(a, p, &Subspace::zero(n), true)));
        out.push((format!("A^{}·x=0", k + 1), transporter_dim(a, p, &Subspace::zero(n), false)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{algebra, Family};

    #[test]
    fn derivations_of_null_filiform() {
        // D is fixed by D e_1 = Σ c_k e_k with e_1 in the image: n parameters
        let a = algebra(Family::Mu0, 5).unwrap();
        assert_eq!(derivation_dim(&a), 5);
        assert_eq!(center_dim(&a), 5);
    }
}
