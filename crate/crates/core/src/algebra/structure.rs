use std::fmt;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exact::{nullspace, zero_vec, Matrix, Subspace, Vector};

/// `U·W = span{u w}` over basis pairs.
pub fn product_space(a: &Algebra, u: &Subspace, w: &Subspace) -> Subspace {
    let ub = u.basis_vectors();
    let wb = w.basis_vectors();
    let mut gens = Vec::with_capacity(ub.len() * wb.len());
    for x in &ub {
        for y in &wb {
            gens.push(a.mul(x, y));
        }
    }
    Subspace::span(a.dim(), &gens)
}

/// `A¹ ⊇ A² ⊇ …`, ending with the zero space or at stabilization.
pub fn power_filtration(a: &Algebra) -> Vec<Subspace> {
    let mut powers = vec![Subspace::full(a.dim())];
    loop {
        let i = powers.len();
        if powers[i - 1].is_zero() {
            return powers;
        }
        let mut next = Subspace::zero(a.dim());
        for k in 1..=i {
            next = next.sum(&product_space(a, &powers[k - 1], &powers[i - k]));
        }
        if next == powers[i - 1] {
            return powers;
        }
        powers.push(next);
    }
}

/// Smallest `i` with `Aⁱ = 0`, or `None` if the algebra is not nilpotent.
pub fn nilpotency_class(a: &Algebra) -> Option<usize> {
    let f = power_filtration(a);
    f.last().filter(|s| s.is_zero()).map(|_| f.len())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Annihilators {
    pub two_sided: Subspace,
    /// `{x : xA = 0}`
    pub left: Subspace,
    /// `{x : Ax = 0}`
    pub right: Subspace,
}

pub fn annihilator(a: &Algebra) -> Annihilators {
    let n = a.dim();
    let mut lrows = Vec::with_capacity(n * n);
    let mut rrows = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            lrows.push((0..n).map(|i| a.basis_product(i, j)[k].clone()).collect::<Vector>());
            rrows.push((0..n).map(|i| a.basis_product(j, i)[k].clone()).collect::<Vector>());
        }
    }
    let left = nullspace(&Matrix::from_rows(&lrows, n).unwrap());
    let right = nullspace(&Matrix::from_rows(&rrows, n).unwrap());
    let mut both = lrows;
    both.extend(rrows);
    Annihilators {
        two_sided: nullspace(&Matrix::from_rows(&both, n).unwrap()),
        left,
        right,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    NullFiliform,
    Filiform,
    QuasiFiliform,
    Other,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::NullFiliform => "null-filiform",
            Shape::Filiform => "filiform",
            Shape::QuasiFiliform => "quasi-filiform",
            Shape::Other => "other",
        })
    }
}

pub fn shape_classify(a: &Algebra) -> Result<Shape> {
    let f = power_filtration(a);
    if !f.last().is_some_and(Subspace::is_zero) {
        return Err(Error::NotNilpotent);
    }
    let n = a.dim();
    // dim A^i, 1-based, zero past the end
    let d = |i: usize| f.get(i.wrapping_sub(1)).map_or(0, Subspace::dim);
    if (1..=n + 1).all(|i| d(i) == n + 1 - i) {
        return Ok(Shape::NullFiliform);
    }
    if n >= 2 && (2..=n).all(|i| d(i) == n - i) {
        return Ok(Shape::Filiform);
    }
    if n >= 3 && d(n - 2) > 0 && d(n - 1) == 0 {
        return Ok(Shape::QuasiFiliform);
    }
    Ok(Shape::Other)
}

/// Echelon complement of `A²`; generates `A` when `A` is nilpotent.
pub fn generators(a: &Algebra) -> Vec<Vector> {
    a.square().complement()
}

/// Associated graded algebra on a filtration-adapted basis.
pub fn graded_algebra(a: &Algebra) -> Result<Algebra> {
    graded_algebra_with_basis(a).map(|(g, _, _)| g)
}

/// Returns `(gr A, adapted basis as columns, grade of each basis vector)`.
pub fn graded_algebra_with_basis(a: &Algebra) -> Result<(Algebra, Matrix, Vec<usize>)> {
    let f = power_filtration(a);
    if !f.last().is_some_and(Subspace::is_zero) {
        return Err(Error::NotNilpotent);
    }
    let n = a.dim();
    let mut basis: Vec<Vector> = Vec::with_capacity(n);
    let mut grades = Vec::with_capacity(n);
    for i in 0..f.len() - 1 {
        let deeper = f[i + 1].pivots();
        for (r, p) in f[i].pivots().iter().enumerate() {
            if !deeper.contains(p) {
                basis.push(f[i].basis().row(r).to_vec());
                grades.push(i + 1);
            }
        }
    }
    let p = Matrix::from_cols(&basis, n)?;
    let pinv = p.inverse()?;
    let g = Algebra::from_products(n, |s, t| {
        let gs = grades[s] + grades[t];
        let coords = pinv.mul_vec(&a.mul(&basis[s], &basis[t]));
        let mut out = zero_vec(n);
        for (k, c) in coords.into_iter().enumerate() {
            if grades[k] == gs {
                out[k] = c;
            }
        }
        out
    });
    Ok((g, p, grades))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    fn dims(f: &[Subspace]) -> Vec<usize> {
        f.iter().map(Subspace::dim).collect()
    }

    #[test]
    fn zero_algebra_filtration() {
        let z = Algebra::zero(3);
        assert_eq!(dims(&power_filtration(&z)), vec![3, 0]);
        assert_eq!(nilpotency_class(&z), Some(2));
        assert_eq!(annihilator(&z).two_sided.dim(), 3);
        assert_eq!(graded_algebra(&z).unwrap(), z);
    }

    #[test]
    fn idempotent_not_nilpotent() {
        let a = Algebra::new(1, [(1, 1, 1, s(1))]).unwrap();
        assert_eq!(nilpotency_class(&a), None);
        assert_eq!(shape_classify(&a), Err(Error::NotNilpotent));
    }
}
