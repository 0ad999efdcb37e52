//! Central extensions `A_θ = A ⊕ V` and the inverse construction.

use crate::algebra::{annihilator, transport, Algebra};
use crate::cohomology::{cocycle_annihilator, cohomology_basis, delta, is_cocycle, Cocycle, CohomologyBasis};
use crate::error::{Error, Result};
use crate::exact::{unit_vec, Matrix, Scalar, Subspace, Vector};

/// `[x + x', y + y'] = xy + Σ_t θ_t(x, y) e_{n+t}`.
pub fn central_extend(a: &Algebra, theta: &Cocycle) -> Result<Algebra> {
    let n = a.dim();
    if theta.dim != n {
        return Err(Error::Dimension(format!(
            "cocycle on {}-dim algebra applied to {n}-dim algebra",
            theta.dim
        )));
    }
    for (t, f) in theta.components.iter().enumerate() {
        if !is_cocycle(a, f) {
            return Err(Error::NotCocycle(format!("component {}", t + 1)));
        }
    }
    Ok(central_extend_unchecked(a, theta))
}

pub(crate) fn central_extend_unchecked(a: &Algebra, theta: &Cocycle) -> Algebra {
    let n = a.dim();
    let mut entries: Vec<(usize, usize, usize, Scalar)> =
        a.table().map(|(i, j, k, c)| (i, j, k, c.clone())).collect();
    for (t, f) in theta.components.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let c = f.get(i, j);
                if !c.is_zero() {
                    entries.push((i + 1, j + 1, n + t + 1, c.clone()));
                }
            }
        }
    }
    Algebra::new(n + theta.s(), entries).expect("indices in range")
}

/// Rank of the classes `[θ_1], …, [θ_s]` in `H²`.
pub fn class_rank(h: &CohomologyBasis, theta: &Cocycle) -> Result<usize> {
    let coords = theta
        .components
        .iter()
        .map(|f| h.coords(f))
        .collect::<Result<Vec<_>>>()?;
    Ok(Subspace::span(h.h2_dim(), &coords).dim())
}

/// `Ann(θ) ∩ Ann(A)`
pub fn radical(a: &Algebra, theta: &Cocycle) -> Subspace {
    cocycle_annihilator(theta).intersect(&annihilator(a).two_sided)
}

/// Classes independent in `H²` and `Ann(θ) ∩ Ann(A) = 0`.
pub fn check_ts(a: &Algebra, theta: &Cocycle) -> Result<bool> {
    let h = cohomology_basis(a);
    Ok(class_rank(&h, theta)? == theta.s() && radical(a, theta).is_zero())
}

/// Whether the classes are linearly dependent in `H²`.
pub fn has_annihilator_component(a: &Algebra, theta: &Cocycle) -> Result<bool> {
    let h = cohomology_basis(a);
    Ok(class_rank(&h, theta)? < theta.s())
}

#[derive(Clone, Debug)]
pub struct AnnDecomposition {
    /// `Ann(A_θ)` computed on the extended table.
    pub lhs: Subspace,
    /// `(Ann(θ) ∩ Ann(A)) ⊕ V`
    pub rhs: Subspace,
    pub equal: bool,
}

pub fn ann_extension_decomposition(a: &Algebra, theta: &Cocycle) -> Result<AnnDecomposition> {
    let ext = central_extend(a, theta)?;
    let n = a.dim();
    let total = ext.dim();
    let lhs = annihilator(&ext).two_sided;
    let mut gens: Vec<Vector> = radical(a, theta)
        .basis_vectors()
        .into_iter()
        .map(|mut v| {
            v.resize(total, Scalar::zero());
            v
        })
        .collect();
    gens.extend((n..total).map(|k| unit_vec(total, k)));
    let rhs = Subspace::span(total, &gens);
    let equal = lhs == rhs;
    Ok(AnnDecomposition { lhs, rhs, equal })
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub a_prime: Algebra,
    pub theta: Cocycle,
    /// Isomorphism `b → central_extend(a_prime, theta)`.
    pub witness: Matrix,
}

/// Splits `b` as a central extension of `b / Ann(b)` by `Ann(b)`.
pub fn reconstruct(b: &Algebra) -> Result<Reconstruction> {
    let ann = annihilator(b).two_sided;
    if ann.is_zero() {
        return Err(Error::ZeroAnnihilator);
    }
    let n = b.dim();
    let s = ann.dim();
    let m = n - s;
    let mut cols = ann.complement();
    cols.extend(ann.basis_vectors());
    let p = Matrix::from_cols(&cols, n)?;
    let bt = transport(b, &p)?;
    let a_prime = Algebra::new(
        m,
        bt.table()
            .filter(|&(i, j, k, _)| i <= m && j <= m && k <= m)
            .map(|(i, j, k, c)| (i, j, k, c.clone())),
    )?;
    let mut comps = vec![Matrix::zeros(m, m); s];
    for (i, j, k, c) in bt.table() {
        if k > m {
            comps[k - m - 1].set(i - 1, j - 1, c.clone());
        }
    }
    Ok(Reconstruction {
        a_prime,
        theta: Cocycle { dim: m, components: comps },
        witness: p.inverse()?,
    })
}

/// Isomorphism `A_θ → A_{θ + δf}`: `x ↦ x + Σ_t f_t(x) e_{n+t}`.
pub fn coboundary_shift(a: &Algebra, theta: &Cocycle, fs: &[Vector]) -> Result<(Cocycle, Matrix)> {
    if fs.len() != theta.s() {
        return Err(Error::Dimension("one functional per component".into()));
    }
    let n = a.dim();
    let comps = theta
        .components
        .iter()
        .zip(fs)
        .map(|(c, f)| {
            let d = delta(a, f);
            Matrix::from_data(n, n, c.data().iter().zip(d.data()).map(|(x, y)| x + y).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    let total = n + fs.len();
    let mut w = Matrix::identity(total);
    for (t, f) in fs.iter().enumerate() {
        for (j, fj) in f.iter().enumerate() {
            w.set(n + t, j, fj.clone());
        }
    }
    Ok((Cocycle { dim: n, components: comps }, w))
}

/// `(φθ)(x, y) = θ(φx, φy)`, i.e. `φᵀ Θ φ` per component.
pub fn act(phi: &Matrix, theta: &Cocycle) -> Cocycle {
    let pt = phi.transpose();
    Cocycle {
        dim: theta.dim,
        components: theta.components.iter().map(|f| &(&pt * f) * phi).collect(),
    }
}

/// Isomorphism `A_{φθ} → A_θ`: `x + v ↦ φ(x) + v`.
pub fn automorphism_shift(phi: &Matrix, s: usize) -> Matrix {
    let n = phi.rows();
    let mut w = Matrix::identity(n + s);
    for i in 0..n {
        for j in 0..n {
            w.set(i, j, phi.get(i, j).clone());
        }
    }
    w
}

/// `(Mθ)_t = Σ_r M_tr θ_r`; isomorphism `A_θ → A_{Mθ}` is `x + v ↦ x + M v`.
pub fn recombine(theta: &Cocycle, m: &Matrix) -> Result<(Cocycle, Matrix)> {
    let s = theta.s();
    if m.rows() != s || m.cols() != s {
        return Err(Error::Dimension("recombination matrix must be s x s".into()));
    }
    let n = theta.dim;
    let comps = (0..s)
        .map(|t| {
            let mut acc = Matrix::zeros(n, n);
            for r in 0..s {
                let c = m.get(t, r);
                if c.is_zero() {
                    continue;
                }
                let data = acc
                    .data()
                    .iter()
                    .zip(theta.components[r].data())
                    .map(|(x, y)| x + c * y)
                    .collect();
                acc = Matrix::from_data(n, n, data).unwrap();
            }
            acc
        })
        .collect();
    let mut w = Matrix::identity(n + s);
    for t in 0..s {
        for r in 0..s {
            w.set(n + t, n + r, m.get(t, r).clone());
        }
    }
    Ok((Cocycle { dim: n, components: comps }, w))
}
