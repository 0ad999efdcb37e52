use super::{Matrix, Scalar, Vector};
use crate::error::{Error, Result};

/// Linear subspace of `Q^ambient`, stored as its reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

pub fn row_reduce(m: &Matrix) -> Subspace {
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    let rows: Vec<Vector> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
    Subspace {
        ambient: m.cols(),
        basis: Matrix::from_rows(&rows, m.cols()).expect("row lengths"),
        pivots,
    }
}

/// `{v : m v = 0}`
pub fn nullspace(m: &Matrix) -> Subspace {
    let n = m.cols();
    let mut r = m.clone();
    let pivots = r.rref_in_place();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut gens = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free);
        }
        gens.push(v);
    }
    Subspace::span(n, &gens)
}

/// Representatives of `whole / sub`: the first echelon rows of `whole`
/// independent modulo `sub`.
pub fn quotient_reps(whole: &Subspace, sub: &Subspace) -> Result<Vec<Vector>> {
    if whole.ambient != sub.ambient || !whole.contains_subspace(sub) {
        return Err(Error::Containment);
    }
    let mut acc = sub.clone();
    let mut reps = Vec::new();
    for v in whole.basis_vectors() {
        if !acc.contains(&v) {
            acc = acc.with_vector(&v);
            reps.push(v);
        }
    }
    Ok(reps)
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        row_reduce(&Matrix::identity(ambient))
    }

    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        row_reduce(&Matrix::from_rows(vectors, ambient).expect("vector length"))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vecs()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rest = v.to_vec();
        for (i, ci) in c.iter().enumerate() {
            super::axpy(&mut rest, &-ci, self.basis.row(i));
        }
        super::is_zero_vec(&rest).then_some(c)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn with_vector(&self, v: &[Scalar]) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.push(v.to_vec());
        Subspace::span(self.ambient, &rows)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut rows = self.basis_vectors();
        rows.extend(other.basis_vectors());
        Subspace::span(self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // (a, b) with a·U = b·W
        let du = self.dim();
        let cols: Vec<Vector> = self
            .basis_vectors()
            .into_iter()
            .chain(other.basis_vectors().into_iter().map(|w| w.iter().map(|x| -x).collect()))
            .collect();
        let m = Matrix::from_cols(&cols, self.ambient).expect("lengths");
        let ns = nullspace(&m);
        let gens: Vec<Vector> = ns
            .basis_vectors()
            .iter()
            .map(|ab| {
                let mut v = vec![Scalar::zero(); self.ambient];
                for (i, c) in ab[..du].iter().enumerate() {
                    super::axpy(&mut v, c, self.basis.row(i));
                }
                v
            })
            .collect();
        Subspace::span(self.ambient, &gens)
    }

    /// Standard basis vectors at non-pivot columns: a complement of `self`.
    pub fn complement(&self) -> Vec<Vector> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .map(|c| super::unit_vec(self.ambient, c))
            .collect()
    }

    /// Image under `v ↦ m v`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        let rows: Vec<Vector> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: i64) -> Scalar {
        Scalar::from_int(x)
    }

    #[test]
    fn row_reduce_examples() {
        let id = Matrix::identity(2);
        assert_eq!(row_reduce(&id).basis(), &id);
        let z = row_reduce(&Matrix::zeros(3, 4));
        assert_eq!((z.dim(), z.ambient_dim()), (0, 4));
        let r = row_reduce(&Matrix::from_ints(&[&[2, 4], &[1, 2]]));
        assert_eq!(r.basis_vectors(), vec![vec![s(1), s(2)]]);
    }

    #[test]
    fn nullspace_examples() {
        assert!(nullspace(&Matrix::identity(3)).is_zero());
        assert_eq!(nullspace(&Matrix::zeros(2, 3)).dim(), 3);
        let ns = nullspace(&Matrix::from_ints(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(ns, Subspace::span(3, &[vec![s(1), s(-1), s(0)]]));
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::full(2);
        assert!(quotient_reps(&full, &full).unwrap().is_empty());
        let sub = Subspace::span(2, &[vec![s(1), s(0)]]);
        assert_eq!(quotient_reps(&full, &sub).unwrap(), vec![vec![s(0), s(1)]]);
        assert_eq!(quotient_reps(&sub, &full), Err(Error::Containment));
    }

    #[test]
    fn intersection() {
        let a = Subspace::span(3, &[vec![s(1), s(0), s(0)], vec![s(0), s(1), s(0)]]);
        let b = Subspace::span(3, &[vec![s(0), s(1), s(0)], vec![s(0), s(0), s(1)]]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[vec![s(0), s(1), s(0)]]));
        assert_eq!(a.sum(&b).dim(), 3);
    }
}
