//! Isomorphism search over `Q` by solving for generator images.
//!
//! A homomorphism out of a nilpotent algebra is fixed by the images of a
//! complement of `E²`; the remaining basis vectors are written as words in
//! those generators. The target may depend affinely on a parameter `t`.

use crate::algebra::{is_iso_witness, Algebra};
use crate::exact::{unit_vec, Matrix, ParamPoly, Scalar, Subspace, Var, Vector};

use super::solve::{solve, SolveOptions, System};

/// Target algebra whose structure constants are affine in `t`.
pub(crate) struct AffineTarget<'a> {
    /// Constants at `t = 2`.
    pub at2: &'a Algebra,
    /// Constants at `t = 3`; `None` for a constant target.
    pub at3: Option<&'a Algebra>,
}

impl AffineTarget<'_> {
    fn product(&self, i: usize, j: usize) -> Vec<ParamPoly> {
        let p2 = self.at2.basis_product(i, j);
        match self.at3 {
            None => p2.iter().cloned().map(ParamPoly::constant).collect(),
            Some(b3) => {
                let tm2 = ParamPoly::var("t") - ParamPoly::int(2);
                p2.iter()
                    .zip(b3.basis_product(i, j))
                    .map(|(x, y)| ParamPoly::constant(x.clone()) + tm2.scale(&(y - x)))
                    .collect()
            }
        }
    }
}

#[derive(Clone, Debug)]
enum Word {
    Gen(usize),
    Prod(usize, usize),
}

/// Words in the generators `e_g` (`g ∉` pivots of `E²`) forming a basis of `e`.
fn word_basis(e: &Algebra) -> Option<(Vec<usize>, Vec<Word>, Matrix)> {
    let n = e.dim();
    let sq = e.square();
    let gens: Vec<usize> = (0..n).filter(|k| !sq.pivots().contains(k)).collect();
    let mut words = Vec::new();
    let mut vals: Vec<Vector> = Vec::new();
    let mut span = Subspace::zero(n);
    for &g in &gens {
        let v = unit_vec(n, g);
        span = span.with_vector(&v);
        words.push(Word::Gen(g));
        vals.push(v);
    }
    let mut changed = true;
    while vals.len() < n && changed {
        changed = false;
        let k = vals.len();
        'outer: for i in 0..k {
            for j in 0..k {
                let v = e.mul(&vals[i], &vals[j]);
                if !span.contains(&v) {
                    span = span.with_vector(&v);
                    words.push(Word::Prod(i, j));
                    vals.push(v);
                    changed = true;
                    if vals.len() == n {
                        break 'outer;
                    }
                }
            }
        }
    }
    if vals.len() < n {
        return None;
    }
    let inv = Matrix::from_cols(&vals, n).ok()?.inverse().ok()?;
    Some((gens, words, inv))
}

fn poly_mul(b: &AffineTarget<'_>, table: &[Vec<Vec<ParamPoly>>], u: &[ParamPoly], v: &[ParamPoly]) -> Vec<ParamPoly> {
    let m = b.at2.dim();
    let mut out = vec![ParamPoly::zero(); m];
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let prod = &table[i][j];
            if prod.iter().all(ParamPoly::is_zero) {
                continue;
            }
            let c = ui * vj;
            for (o, t) in out.iter_mut().zip(prod) {
                if !t.is_zero() {
                    *o = &*o + &(&c * t);
                }
            }
        }
    }
    out
}

fn det(m: &[Vec<ParamPoly>]) -> ParamPoly {
    match m.len() {
        0 => ParamPoly::one(),
        1 => m[0][0].clone(),
        k => {
            let mut acc = ParamPoly::zero();
            for c in 0..k {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<ParamPoly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                let term = &m[0][c] * &det(&minor);
                acc = if c % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Searches for an isomorphism `ψ: e → b(t)`. Returns `ψ` and `t` (if `b` is parametric).
/// `t_nonzero` lists polynomials in `t` that must not vanish.
pub(crate) fn rational_iso_search(
    e: &Algebra,
    b: &AffineTarget<'_>,
    t_nonzero: &[ParamPoly],
    opts: &SolveOptions,
) -> Option<(Matrix, Option<Scalar>)> {
    let m = e.dim();
    if b.at2.dim() != m || b.at2.square().dim() != e.square().dim() {
        return None;
    }
    let (gens, words, inv) = word_basis(e)?;
    let table: Vec<Vec<Vec<ParamPoly>>> = (0..m).map(|i| (0..m).map(|j| b.product(i, j)).collect()).collect();
    let xname = |g: usize, k: usize| format!("x{g}_{k}");
    let mut unknowns: Vec<Var> = gens.iter().flat_map(|&g| (0..m).map(move |k| Var::from(xname(g, k)))).collect();
    if b.at3.is_some() {
        unknowns.push(Var::from("t"));
    }
    let mut img: Vec<Vec<ParamPoly>> = Vec::with_capacity(m);
    for w in &words {
        let v = match *w {
            Word::Gen(g) => (0..m).map(|k| ParamPoly::var(&xname(g, k))).collect(),
            Word::Prod(i, j) => poly_mul(b, &table, &img[i], &img[j]),
        };
        img.push(v);
    }
    // ψ(e_k) = Σ_w inv[w][k] img[w]
    let psi: Vec<Vec<ParamPoly>> = (0..m)
        .map(|k| {
            let mut col = vec![ParamPoly::zero(); m];
            for (w, iw) in img.iter().enumerate() {
                let c = inv.get(w, k);
                if c.is_zero() {
                    continue;
                }
                for (o, x) in col.iter_mut().zip(iw) {
                    *o = &*o + &x.scale(c);
                }
            }
            col
        })
        .collect();
    let apply = |v: &[Scalar]| -> Vec<ParamPoly> {
        let mut out = vec![ParamPoly::zero(); m];
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(&psi[k]) {
                *o = &*o + &x.scale(c);
            }
        }
        out
    };
    let mut equations = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let lhs = apply(e.basis_product(i, j));
            let rhs = poly_mul(b, &table, &psi[i], &psi[j]);
            equations.extend(lhs.into_iter().zip(rhs).map(|(l, r)| l - r).filter(|d| !d.is_zero()));
        }
    }
    // generator images independent modulo B²
    let bsq = b.at2.square();
    let free: Vec<usize> = (0..m).filter(|k| !bsq.pivots().contains(k)).collect();
    if free.len() != gens.len() {
        return None;
    }
    let basis = bsq.basis_vectors();
    let proj: Vec<Vec<ParamPoly>> = gens
        .iter()
        .map(|&g| {
            let mut v: Vec<ParamPoly> = (0..m).map(|k| ParamPoly::var(&xname(g, k))).collect();
            for (row, &piv) in basis.iter().zip(bsq.pivots()) {
                let c = v[piv].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x = &*x - &c.scale(r);
                    }
                }
            }
            free.iter().map(|&k| v[k].clone()).collect()
        })
        .collect();
    let mut nonzero = vec![det(&proj)];
    nonzero.extend(t_nonzero.iter().cloned());
    let sys = System { equations, nonzero, unknowns };
    let sol = solve(&sys, opts)?;
    let value = |p: &ParamPoly| -> Option<Scalar> {
        let b: std::collections::HashMap<Var, crate::exact::PolyBinding> = sol
            .iter()
            .map(|(v, s)| (v.clone(), crate::exact::PolyBinding::Poly(ParamPoly::constant(s.clone()))))
            .collect();
        p.substitute(&b).as_constant().or_else(|| p.is_zero().then(Scalar::zero))
    };
    let t = match b.at3 {
        Some(_) => Some(sol.get("t")?.clone()),
        None => None,
    };
    let data: Option<Vec<Scalar>> = (0..m).flat_map(|i| psi.iter().map(move |col| value(&col[i]))).collect();
    let w = Matrix::from_data(m, m, data?).ok()?;
    let target = match (&t, b.at3) {
        (Some(t), Some(b3)) => affine_at(b.at2, b3, t),
        _ => b.at2.clone(),
    };
    is_iso_witness(e, &target, &w).then_some((w, t))
}

/// `b2 + (t - 2)(b3 - b2)`.
pub(crate) fn affine_at(b2: &Algebra, b3: &Algebra, t: &Scalar) -> Algebra {
    let s = t - &Scalar::from_int(2);
    Algebra::from_products(b2.dim(), |i, j| {
        b2.basis_product(i, j)
            .iter()
            .zip(b3.basis_product(i, j))
            .map(|(x, y)| x + &(&s * &(y - x)))
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::transport;
    use crate::catalog::{algebra, Family};

    fn shear(m: usize) -> Matrix {
        let data = (0..m * m)
            .map(|k| {
                let (i, j) = (k / m, k % m);
                Scalar::from_int(match () {
                    _ if i == j => 1,
                    _ if j > i => (i + 2 * j) as i64 % 3 - 1,
                    _ => 0,
                })
            })
            .collect();
        Matrix::from_data(m, m, data).unwrap()
    }

    #[test]
    fn recovers_transported_algebra() {
        let b = algebra(Family::Mu2(6), 6).unwrap();
        let e = transport(&b, &shear(6)).unwrap();
        let opts = SolveOptions { max_nodes: 2_000_000, ..Default::default() };
        let target = AffineTarget { at2: &b, at3: None };
        let (w, t) = rational_iso_search(&e, &target, &[], &opts).expect("isomorphism");
        assert!(t.is_none());
        assert!(is_iso_witness(&e, &b, &w));
    }

    #[test]
    fn rejects_non_isomorphic_target() {
        let e = algebra(Family::Mu1(1), 5).unwrap();
        let b = algebra(Family::Mu0, 5).unwrap();
        let target = AffineTarget { at2: &b, at3: None };
        assert!(rational_iso_search(&e, &target, &[], &SolveOptions::default()).is_none());
    }
}
