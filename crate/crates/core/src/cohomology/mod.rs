//! Second cohomology with trivial coefficients: `Z²`, `B²`, `H²`.
//!
//! A bilinear form is an `n×n` matrix with entry `(i, j) = θ(e_i, e_j)`,
//! vectorized row-major.

mod format;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{nullspace, quotient_reps, Matrix, ParamPoly, Scalar, Subspace, Vector};

pub type BilinearForm = Matrix;

/// `s`-component cocycle `θ = Σ_t θ_t v_t` on an `n`-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    pub dim: usize,
    pub components: Vec<BilinearForm>,
}

impl Cocycle {
    pub fn new(dim: usize, components: Vec<BilinearForm>) -> Result<Self> {
        if components.iter().any(|c| c.rows() != dim || c.cols() != dim) {
            return Err(Error::Dimension(format!("cocycle components must be {dim}x{dim}")));
        }
        Ok(Cocycle { dim, components })
    }

    pub fn single(form: BilinearForm) -> Self {
        Cocycle {
            dim: form.rows(),
            components: vec![form],
        }
    }

    pub fn s(&self) -> usize {
        self.components.len()
    }
}

/// `Δ_{i,j}` (1-based).
pub fn delta_ij(n: usize, i: usize, j: usize) -> BilinearForm {
    let mut m = Matrix::zeros(n, n);
    m.set(i - 1, j - 1, Scalar::one());
    m
}

pub fn form_to_vec(f: &BilinearForm) -> Vector {
    f.data().to_vec()
}

pub fn vec_to_form(n: usize, v: &[Scalar]) -> BilinearForm {
    Matrix::from_data(n, n, v.to_vec()).expect("n^2 entries")
}

/// `δf(e_i, e_j) = f(e_i e_j)`.
pub fn delta(a: &Algebra, f: &[Scalar]) -> BilinearForm {
    let n = a.dim();
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v: Scalar = a
                .basis_product(i, j)
                .iter()
                .zip(f)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, x)| c * x)
                .sum();
            m.set(i, j, v);
        }
    }
    m
}

/// Linear constraints `θ(e_i e_j, e_k) − θ(e_i, e_j e_k) = 0` on vectorized θ.
fn cocycle_constraints(a: &Algebra) -> Matrix {
    let n = a.dim();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut r = vec![Scalar::zero(); n * n];
                for (m, c) in a.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        r[m * n + k] += c;
                    }
                }
                for (m, c) in a.basis_product(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        r[i * n + m] -= c;
                    }
                }
                if r.iter().any(|x| !x.is_zero()) {
                    rows.push(r);
                }
            }
        }
    }
    Matrix::from_rows(&rows, n * n).unwrap()
}

pub fn cocycle_space(a: &Algebra) -> Subspace {
    nullspace(&cocycle_constraints(a))
}

pub fn coboundary_space(a: &Algebra) -> Subspace {
    let n = a.dim();
    let gens: Vec<Vector> = (0..n)
        .map(|k| form_to_vec(&delta(a, &crate::exact::unit_vec(n, k))))
        .collect();
    Subspace::span(n * n, &gens)
}

pub fn is_cocycle(a: &Algebra, f: &BilinearForm) -> bool {
    let n = a.dim();
    if f.rows() != n || f.cols() != n {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let jk = a.basis_product(j, k);
                let lhs: Scalar = (0..n).filter(|&m| !ij[m].is_zero()).map(|m| &ij[m] * f.get(m, k)).sum();
                let rhs: Scalar = (0..n).filter(|&m| !jk[m].is_zero()).map(|m| &jk[m] * f.get(i, m)).sum();
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `Z²`, `B²` and representatives of a basis of `H² = Z²/B²`.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub n: usize,
    pub z2: Subspace,
    pub b2: Subspace,
    pub h2_reps: Vec<BilinearForm>,
    // columns: h2 reps then b2 basis; restricted to independent rows `rows`
    rows: Vec<usize>,
    solve: Matrix,
    full: Matrix,
}

pub fn cohomology_basis(a: &Algebra) -> CohomologyBasis {
    let z2 = cocycle_space(a);
    let b2 = coboundary_space(a);
    let reps = quotient_reps(&z2, &b2).expect("coboundaries are cocycles");
    let n = a.dim();
    let forms = reps.iter().map(|v| vec_to_form(n, v)).collect();
    CohomologyBasis::build(n, z2, b2, forms)
}

impl CohomologyBasis {
    fn build(n: usize, z2: Subspace, b2: Subspace, h2_reps: Vec<BilinearForm>) -> Self {
        let mut cols: Vec<Vector> = h2_reps.iter().map(form_to_vec).collect();
        cols.extend(b2.basis_vectors());
        let full = Matrix::from_cols(&cols, n * n).unwrap();
        // independent rows of `full` = pivot columns of its transpose
        let rows = crate::exact::row_reduce(&full.transpose()).pivots().to_vec();
        let sub_rows: Vec<Vector> = rows.iter().map(|&r| full.row(r).to_vec()).collect();
        let sub = Matrix::from_rows(&sub_rows, cols.len()).unwrap();
        let solve = sub.inverse().expect("independent rows");
        CohomologyBasis {
            n,
            z2,
            b2,
            h2_reps,
            rows,
            solve,
            full,
        }
    }

    pub fn h2_dim(&self) -> usize {
        self.h2_reps.len()
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.z2.dim(), self.b2.dim(), self.h2_dim())
    }

    /// Replaces the representatives, returning the change-of-basis matrix
    /// whose column `t` holds the old coordinates of the new `t`-th class.
    pub fn rebase(&self, new_reps: Vec<BilinearForm>) -> Result<(CohomologyBasis, Matrix)> {
        if new_reps.len() != self.h2_dim() {
            return Err(Error::Dimension("wrong number of representatives".into()));
        }
        let cols = new_reps.iter().map(|f| self.coords(f)).collect::<Result<Vec<_>>>()?;
        let change = Matrix::from_cols(&cols, self.h2_dim())?;
        if !change.is_invertible() {
            return Err(Error::Singular);
        }
        Ok((
            CohomologyBasis::build(self.n, self.z2.clone(), self.b2.clone(), new_reps),
            change,
        ))
    }

    /// `[θ]` in the `h2_reps` basis; zero iff `θ ∈ B²`.
    pub fn coords(&self, f: &BilinearForm) -> Result<Vector> {
        let v = form_to_vec(f);
        if v.len() != self.n * self.n {
            return Err(Error::Dimension("form size".into()));
        }
        let rhs: Vector = self.rows.iter().map(|&r| v[r].clone()).collect();
        let c = self.solve.mul_vec(&rhs);
        if self.full.mul_vec(&c) != v {
            return Err(Error::NotCocycle("form is not in Z²".into()));
        }
        Ok(c[..self.h2_dim()].to_vec())
    }

    /// Same as [`coords`](Self::coords) for forms with polynomial entries.
    pub fn coords_poly(&self, f: &[ParamPoly]) -> Result<Vec<ParamPoly>> {
        if f.len() != self.n * self.n {
            return Err(Error::Dimension("form size".into()));
        }
        let m = self.solve.rows();
        let c: Vec<ParamPoly> = (0..m)
            .map(|i| {
                let mut acc = ParamPoly::zero();
                for (k, &r) in self.rows.iter().enumerate() {
                    let s = self.solve.get(i, k);
                    if !s.is_zero() && !f[r].is_zero() {
                        acc = acc + f[r].scale(s);
                    }
                }
                acc
            })
            .collect();
        for (r, fr) in f.iter().enumerate() {
            let mut acc = ParamPoly::zero();
            for (k, ck) in c.iter().enumerate() {
                let s = self.full.get(r, k);
                if !s.is_zero() && !ck.is_zero() {
                    acc = acc + ck.scale(s);
                }
            }
            if &acc != fr {
                return Err(Error::NotCocycle("polynomial form is not in Z²".into()));
            }
        }
        Ok(c[..self.h2_dim()].to_vec())
    }

    /// Form `Σ c_t h2_reps[t]`.
    pub fn form_from_coords(&self, c: &[Scalar]) -> BilinearForm {
        let mut m = Matrix::zeros(self.n, self.n);
        for (t, ct) in c.iter().enumerate() {
            if ct.is_zero() {
                continue;
            }
            for i in 0..self.n {
                for j in 0..self.n {
                    let x = self.h2_reps[t].get(i, j);
                    if !x.is_zero() {
                        let v = m.get(i, j) + ct * x;
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }
}

pub fn reduce_mod_b2(a: &Algebra, f: &BilinearForm) -> Result<Vector> {
    cohomology_basis(a).coords(f)
}

/// `Ann(θ) = ∩_t {x : θ_t(x, A) = θ_t(A, x) = 0}`.
pub fn cocycle_annihilator(theta: &Cocycle) -> Subspace {
    let n = theta.dim;
    let mut rows = Vec::new();
    for f in &theta.components {
        for j in 0..n {
            rows.push(f.col(j));
            rows.push(f.row(j).to_vec());
        }
    }
    nullspace(&Matrix::from_rows(&rows, n).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_algebra_everything_is_a_cocycle() {
        let z = Algebra::zero(2);
        assert_eq!(cocycle_space(&z).dim(), 4);
        assert_eq!(coboundary_space(&z).dim(), 0);
        let f = delta(&z, &[Scalar::one(), Scalar::one()]);
        assert!(f.is_zero());
    }

    #[test]
    fn zero_cocycle_annihilates_everything() {
        let t = Cocycle::single(Matrix::zeros(3, 3));
        assert_eq!(cocycle_annihilator(&t).dim(), 3);
    }
}
