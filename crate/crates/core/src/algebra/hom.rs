use super::Algebra;
use crate::error::{Error, Result};
use crate::exact::{axpy, is_zero_vec, Matrix, Subspace, Vector};

/// Algebra `b` with `b(u, v) = p⁻¹ a(p u, p v)`, so that `p: b → a` is an isomorphism.
pub fn transport(a: &Algebra, p: &Matrix) -> Result<Algebra> {
    if p.rows() != a.dim() || p.cols() != a.dim() {
        return Err(Error::Dimension("transport matrix must be dim x dim".into()));
    }
    let pinv = p.inverse()?;
    let cols = p.col_vecs();
    Ok(Algebra::from_products(a.dim(), |i, j| {
        pinv.mul_vec(&a.mul(&cols[i], &cols[j]))
    }))
}

/// `p(e_i e_j) = p(e_i) p(e_j)` for all basis pairs; `p` maps `a` into `b`.
pub fn is_hom_witness(a: &Algebra, b: &Algebra, p: &Matrix) -> bool {
    if p.rows() != b.dim() || p.cols() != a.dim() {
        return false;
    }
    let cols = p.col_vecs();
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if p.mul_vec(a.basis_product(i, j)) != b.mul(&cols[i], &cols[j]) {
                return false;
            }
        }
    }
    true
}

pub fn is_iso_witness(a: &Algebra, b: &Algebra, p: &Matrix) -> bool {
    a.dim() == b.dim() && p.is_invertible() && is_hom_witness(a, b, p)
}

/// Echelon rows `[d | φ(d)]` with pivot on the domain part.
struct Graph {
    n: usize,
    rows: Vec<(usize, Vector, Vector)>,
}

impl Graph {
    /// Reduces `(d, im)`; returns the residual pair.
    fn reduce(&self, mut d: Vector, mut im: Vector) -> (Vector, Vector) {
        for (p, rd, ri) in &self.rows {
            let c = d[*p].clone();
            if !c.is_zero() {
                axpy(&mut d, &-&c, rd);
                axpy(&mut im, &-&c, ri);
            }
        }
        (d, im)
    }

    /// Returns `Ok(true)` if the pair was new, `Err` on inconsistency.
    fn insert(&mut self, d: Vector, im: Vector) -> Result<bool> {
        let (mut d, mut im) = self.reduce(d, im);
        let Some(p) = d.iter().position(|x| !x.is_zero()) else {
            return if is_zero_vec(&im) {
                Ok(false)
            } else {
                Err(Error::Inconsistent)
            };
        };
        let inv = d[p].inv().unwrap();
        d.iter_mut().for_each(|x| *x *= &inv);
        im.iter_mut().for_each(|x| *x *= &inv);
        for (_, rd, ri) in self.rows.iter_mut() {
            let c = rd[p].clone();
            if !c.is_zero() {
                axpy(rd, &-&c, &d);
                axpy(ri, &-&c, &im);
            }
        }
        self.rows.push((p, d, im));
        Ok(true)
    }
}

/// Extends `gens[i] ↦ images[i]` multiplicatively to a homomorphism `a → b`.
///
/// Fails if the generators do not generate `a`, if propagation is inconsistent,
/// or if the images do not generate `b`.
pub fn extend_generator_images(
    a: &Algebra,
    gens: &[Vector],
    images: &[Vector],
    b: &Algebra,
) -> Result<Matrix> {
    if gens.len() != images.len()
        || gens.iter().any(|g| g.len() != a.dim())
        || images.iter().any(|g| g.len() != b.dim())
    {
        return Err(Error::Dimension("generator/image lengths".into()));
    }
    let mut graph = Graph {
        n: a.dim(),
        rows: Vec::new(),
    };
    let mut elems: Vec<(Vector, Vector)> = Vec::new();
    let mut queue: Vec<(Vector, Vector)> = gens.iter().cloned().zip(images.iter().cloned()).collect();
    while !queue.is_empty() {
        let mut next = Vec::new();
        for (d, im) in queue {
            if !graph.insert(d.clone(), im.clone())? {
                continue;
            }
            elems.push((d, im));
            let (nd, ni) = elems.last().unwrap().clone();
            for (ed, ei) in &elems {
                next.push((a.mul(&nd, ed), b.mul(&ni, ei)));
                next.push((a.mul(ed, &nd), b.mul(ei, &ni)));
            }
        }
        queue = next;
    }
    if graph.rows.len() < graph.n {
        return Err(Error::NotGenerating);
    }
    let img_span = Subspace::span(b.dim(), &elems.iter().map(|e| e.1.clone()).collect::<Vec<_>>());
    if img_span.dim() < b.dim() {
        return Err(Error::ImageNotGenerating);
    }
    let mut cols = vec![Vec::new(); graph.n];
    for (p, _, im) in graph.rows {
        cols[p] = im;
    }
    let m = Matrix::from_cols(&cols, b.dim())?;
    if !is_hom_witness(a, b, &m) {
        return Err(Error::Inconsistent);
    }
    Ok(m)
}
