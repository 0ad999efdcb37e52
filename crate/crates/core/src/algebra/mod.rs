//! Structure-constant algebras.

mod fingerprint;
mod format;
mod hom;
mod structure;

use std::collections::BTreeMap;

pub use fingerprint::{fingerprint, Fingerprint};
pub use format::{matrix_from_text, matrix_to_text};
pub(crate) use format::parse_scalar_value;
pub use hom::{extend_generator_images, is_hom_witness, is_iso_witness, transport};
pub use structure::{
    annihilator, generators, graded_algebra, graded_algebra_with_basis, nilpotency_class,
    power_filtration, product_space, shape_classify, Annihilators, Shape,
};

use crate::error::{Error, Result};
use crate::exact::{axpy, zero_vec, Matrix, Scalar, Subspace, Vector};

/// Algebra with basis `e_1..e_n` and products `e_i e_j = Σ_k c_ij^k e_k`.
#[derive(Clone)]
pub struct Algebra {
    dim: usize,
    table: BTreeMap<(usize, usize, usize), Scalar>,
    // products[(i-1)*n + (j-1)] = e_i e_j
    products: Vec<Vector>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.table == other.table
    }
}

impl Eq for Algebra {}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim {}; ", self.dim)?;
        let parts: Vec<String> = self
            .table
            .iter()
            .map(|((i, j, k), c)| format!("e{i}e{j}->{}e{k}", c.pretty()))
            .collect();
        write!(f, "{})", parts.join(", "))
    }
}

impl Algebra {
    /// Builds from 1-based `(i, j, k, c)` entries; repeated keys are summed.
    pub fn new<I>(dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize, Scalar)>,
    {
        let mut table: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for (i, j, k, c) in entries {
            if !(1..=dim).contains(&i) || !(1..=dim).contains(&j) || !(1..=dim).contains(&k) {
                return Err(Error::Dimension(format!(
                    "index ({i},{j},{k}) out of range 1..={dim}"
                )));
            }
            let e = table.entry((i, j, k)).or_insert_with(Scalar::zero);
            *e += c;
        }
        table.retain(|_, c| !c.is_zero());
        Ok(Algebra::from_table(dim, table))
    }

    fn from_table(dim: usize, table: BTreeMap<(usize, usize, usize), Scalar>) -> Self {
        let mut products = vec![zero_vec(dim); dim * dim];
        for ((i, j, k), c) in &table {
            products[(i - 1) * dim + (j - 1)][k - 1] = c.clone();
        }
        Algebra {
            dim,
            table,
            products,
        }
    }

    pub fn zero(dim: usize) -> Self {
        Algebra::from_table(dim, BTreeMap::new())
    }

    /// Algebra whose basis products are the given vectors (0-based `e_i e_j`).
    pub fn from_products(dim: usize, f: impl Fn(usize, usize) -> Vector) -> Self {
        let mut table = BTreeMap::new();
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in f(i, j).into_iter().enumerate() {
                    if !c.is_zero() {
                        table.insert((i + 1, j + 1, k + 1), c);
                    }
                }
            }
        }
        Algebra::from_table(dim, table)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure constants, 1-based, in lexicographic order.
    pub fn table(&self) -> impl Iterator<Item = (usize, usize, usize, &Scalar)> {
        self.table.iter().map(|(&(i, j, k), c)| (i, j, k, c))
    }

    pub fn nnz(&self) -> usize {
        self.table.len()
    }

    /// `c_ij^k`, 1-based.
    pub fn coeff(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.table.get(&(i, j, k)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `e_i e_j` with 0-based indices.
    pub fn basis_product(&self, i: usize, j: usize) -> &Vector {
        &self.products[i * self.dim + j]
    }

    pub fn product(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        if u.len() != self.dim || v.len() != self.dim {
            return Err(Error::Dimension(format!(
                "vectors of length {} and {} in a {}-dimensional algebra",
                u.len(),
                v.len(),
                self.dim
            )));
        }
        Ok(self.mul(u, v))
    }

    /// Unchecked bilinear product.
    pub fn mul(&self, u: &[Scalar], v: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let p = self.basis_product(i, j);
                axpy(&mut out, &(ui * vj), p);
            }
        }
        out
    }

    /// Triples `(i, j, k)` (1-based) with `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub fn check_associative(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut bad = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for k in 0..n {
                    let jk = self.basis_product(j, k);
                    let mut lhs = zero_vec(n);
                    for (m, c) in ij.iter().enumerate() {
                        axpy(&mut lhs, c, self.basis_product(m, k));
                    }
                    let mut rhs = zero_vec(n);
                    for (m, c) in jk.iter().enumerate() {
                        axpy(&mut rhs, c, self.basis_product(i, m));
                    }
                    if lhs != rhs {
                        bad.push((i + 1, j + 1, k + 1));
                    }
                }
            }
        }
        bad
    }

    pub fn is_associative(&self) -> bool {
        self.check_associative().is_empty()
    }

    /// Matrix of `v ↦ x v`.
    pub fn left_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul(x, &crate::exact::unit_vec(self.dim, j)))
            .collect();
        Matrix::from_cols(&cols, self.dim).expect("square")
    }

    /// Matrix of `v ↦ v x`.
    pub fn right_mult(&self, x: &[Scalar]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim)
            .map(|j| self.mul(&crate::exact::unit_vec(self.dim, j), x))
            .collect();
        Matrix::from_cols(&cols, self.dim).expect("square")
    }

    pub fn square(&self) -> Subspace {
        Subspace::span(self.dim, &self.products)
    }

    /// Reduces coefficients modulo `p`; `None` if a denominator vanishes mod `p`.
    pub fn table_mod(&self, p: u64) -> Option<Vec<(usize, usize, usize, u64)>> {
        let mut out = Vec::new();
        for (i, j, k, c) in self.table() {
            let r = c.mod_prime(p)?;
            if r != 0 {
                out.push((i, j, k, r));
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn non_associative_table_detected() {
        let a = Algebra::new(2, [(1, 1, 2, s(1)), (2, 1, 1, s(1))]).unwrap();
        assert!(!a.check_associative().is_empty());
    }

    #[test]
    fn out_of_range_index_rejected() {
        assert!(Algebra::new(2, [(1, 3, 1, s(1))]).is_err());
    }

    #[test]
    fn zero_times_anything() {
        let a = Algebra::new(2, [(1, 1, 2, s(1))]).unwrap();
        assert_eq!(a.mul(&zero_vec(2), &[s(3), s(4)]), zero_vec(2));
        assert!(a.product(&[s(1)], &[s(1), s(1)]).is_err());
    }
}
