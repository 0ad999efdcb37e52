//! Brute-force isomorphism search over a small prime field.
//!
//! For algebras generated by a complement of `A²` (nilpotent ones), a
//! homomorphism is fixed by the images of those generators, so the search
//! runs over generator images. Otherwise every matrix over `F_p` is tried,
//! which is only feasible for tiny cases.

use std::fmt;

use rayon::prelude::*;

use crate::algebra::{graded_algebra_with_basis, transport, Algebra};
use crate::error::{Error, Result};
use crate::exact::modp::{inv_mod, rank_mod, solve_mod};

pub const MAX_DIM: usize = 5;
const MAX_FULL_CANDIDATES: u64 = 1 << 26;

/// Structure constants reduced modulo `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpAlgebra {
    pub p: u64,
    pub n: usize,
    // products[i * n + j] = e_i e_j
    products: Vec<Vec<u64>>,
}

impl FpAlgebra {
    pub fn reduce(a: &Algebra, p: u64) -> Result<Self> {
        let n = a.dim();
        let table = a
            .table_mod(p)
            .ok_or_else(|| Error::Guard(format!("a denominator is divisible by {p}")))?;
        let mut products = vec![vec![0; n]; n * n];
        for (i, j, k, c) in table {
            products[(i - 1) * n + j - 1][k - 1] = c;
        }
        Ok(FpAlgebra { p, n, products })
    }

    pub fn mul(&self, u: &[u64], v: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.n];
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &vj) in v.iter().enumerate() {
                if vj == 0 {
                    continue;
                }
                let c = ui * vj % self.p;
                for (o, &t) in out.iter_mut().zip(&self.products[i * self.n + j]) {
                    *o = (*o + c * t) % self.p;
                }
            }
        }
        out
    }

    fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        &self.products[i * self.n + j]
    }
}

/// Square matrix over `F_p`; column `j` is the image of `e_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FpMatrix {
    pub p: u64,
    pub n: usize,
    /// Row-major entries.
    pub data: Vec<u64>,
}

impl FpMatrix {
    fn from_cols(p: u64, cols: &[Vec<u64>]) -> Self {
        let n = cols.len();
        let mut data = vec![0; n * n];
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                data[i * n + j] = x;
            }
        }
        FpMatrix { p, n, data }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum::<u64>() % self.p)
            .collect()
    }

    pub fn is_invertible(&self) -> bool {
        let rows: Vec<Vec<u64>> = self.data.chunks(self.n).map(<[u64]>::to_vec).collect();
        rank_mod(&rows, self.p) == self.n
    }
}

impl fmt::Display for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.data.chunks(self.n).enumerate() {
            if r > 0 {
                writeln!(f)?;
            }
            let s: Vec<String> = row.iter().map(u64::to_string).collect();
            write!(f, "{}", s.join(" "))?;
        }
        Ok(())
    }
}

/// `φ(e_i e_j) = φ(e_i) φ(e_j)` for all basis pairs.
pub fn is_fp_hom(a: &FpAlgebra, b: &FpAlgebra, m: &FpMatrix) -> bool {
    let cols: Vec<Vec<u64>> = (0..a.n).map(|j| m.col(j)).collect();
    (0..a.n).all(|i| (0..a.n).all(|j| m.mul_vec(a.basis_product(i, j)) == b.mul(&cols[i], &cols[j])))
}

/// Elements built as products of generators, forming a basis of `a`.
#[derive(Clone, Debug)]
enum Word {
    Gen(usize),
    Prod(usize, usize),
}

/// Word basis of `a` over generators `e_g`, `g ∉` pivots of `A²`, with the
/// inverse of its coordinate matrix; `None` if they do not generate.
fn word_basis(a: &FpAlgebra) -> Option<(Vec<usize>, Vec<Word>, Vec<Vec<u64>>)> {
    let p = a.p;
    let n = a.n;
    let mut sq: Vec<Vec<u64>> = Vec::new();
    let mut pivots = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if let Some(piv) = insert_echelon(&mut sq, a.basis_product(i, j).to_vec(), p) {
                pivots.push(piv);
            }
        }
    }
    let gens: Vec<usize> = (0..n).filter(|k| !pivots.contains(k)).collect();
    let mut words: Vec<Word> = Vec::new();
    let mut vals: Vec<Vec<u64>> = Vec::new();
    let mut ech: Vec<Vec<u64>> = Vec::new();
    for &g in &gens {
        let mut v = vec![0; n];
        v[g] = 1;
        if insert_echelon(&mut ech, v.clone(), p).is_some() {
            words.push(Word::Gen(g));
            vals.push(v);
        }
    }
    let mut changed = true;
    while vals.len() < n && changed {
        changed = false;
        let k = vals.len();
        'outer: for i in 0..k {
            for j in 0..k {
                let v = a.mul(&vals[i], &vals[j]);
                if insert_echelon(&mut ech, v.clone(), p).is_some() {
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
    let inv = invert(&FpMatrix::from_cols(p, &vals))?;
    let inv_rows = inv.data.chunks(n).map(<[u64]>::to_vec).collect();
    Some((gens, words, inv_rows))
}

/// Adds `v` to a reduced echelon list; returns its pivot if independent.
fn insert_echelon(rows: &mut Vec<Vec<u64>>, mut v: Vec<u64>, p: u64) -> Option<usize> {
    for r in rows.iter() {
        let piv = r.iter().position(|&x| x != 0).unwrap();
        if v[piv] != 0 {
            let c = v[piv];
            for (x, &y) in v.iter_mut().zip(r) {
                *x = (*x + p * p - c * y % p) % p;
            }
        }
    }
    let piv = v.iter().position(|&x| x != 0)?;
    let inv = inv_mod(v[piv], p);
    v.iter_mut().for_each(|x| *x = *x * inv % p);
    for r in rows.iter_mut() {
        if r[piv] != 0 {
            let c = r[piv];
            for (x, &y) in r.iter_mut().zip(&v) {
                *x = (*x + p * p - c * y % p) % p;
            }
        }
    }
    rows.push(v);
    Some(piv)
}

fn invert(m: &FpMatrix) -> Option<FpMatrix> {
    let (n, p) = (m.n, m.p);
    let mut a: Vec<Vec<u64>> = m
        .data
        .chunks(n)
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.to_vec();
            row.extend((0..n).map(|j| u64::from(i == j)));
            row
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| a[r][c] != 0)?;
        a.swap(c, piv);
        let inv = inv_mod(a[c][c], p);
        a[c].iter_mut().for_each(|x| *x = *x * inv % p);
        for r in 0..n {
            if r != c && a[r][c] != 0 {
                let f = a[r][c];
                let pivot_row = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
    }
    let data = a.into_iter().flat_map(|r| r[n..].to_vec()).collect();
    Some(FpMatrix { p, n, data })
}

/// Digits of `idx` in base `p`, most significant first.
fn digits(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    let mut d = vec![0; len];
    for k in (0..len).rev() {
        d[k] = idx % p;
        idx /= p;
    }
    d
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    GeneratorImages,
    AllMatrices,
    /// Generator images lifted degree by degree; `candidates` counts visited nodes.
    Lifting,
}

#[derive(Clone, Debug)]
pub struct FfSearch {
    pub p: u64,
    pub mode: SearchMode,
    pub candidates: u64,
    /// Isomorphism `a → b` over `F_p`, or `None` if there is none.
    pub witness: Option<FpMatrix>,
}

impl fmt::Display for FfSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            SearchMode::GeneratorImages => "generator images",
            SearchMode::AllMatrices => "all matrices",
            SearchMode::Lifting => "lifted generator images",
        };
        writeln!(f, "field: F_{}", self.p)?;
        writeln!(f, "search: {mode}, {} candidates", self.candidates)?;
        match &self.witness {
            Some(m) => write!(f, "witness:\n{m}"),
            None => write!(
                f,
                "none (evidence of non-isomorphism over Q, not a proof)"
            ),
        }
    }
}

/// Exhaustive search for an isomorphism `a → b` over `F_p`, `p ∈ {2, 3}`, `dim ≤ 5`.
///
/// Candidates are scanned in parallel; the first in enumeration order wins.
pub fn ff_iso_search(a: &Algebra, b: &Algebra, p: u64) -> Result<FfSearch> {
    if a.dim() > MAX_DIM {
        return Err(Error::Guard(format!("dimension {} exceeds {MAX_DIM}", a.dim())));
    }
    search(a, b, p)
}

fn search(a: &Algebra, b: &Algebra, p: u64) -> Result<FfSearch> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!("dimensions {} and {} differ", a.dim(), b.dim())));
    }
    if p != 2 && p != 3 {
        return Err(Error::Guard(format!("field size {p} not in {{2, 3}}")));
    }
    let fa = FpAlgebra::reduce(a, p)?;
    let fb = FpAlgebra::reduce(b, p)?;
    let n = fa.n;
    if n == 0 {
        return Ok(FfSearch {
            p,
            mode: SearchMode::AllMatrices,
            candidates: 1,
            witness: Some(FpMatrix { p, n, data: vec![] }),
        });
    }
    match word_basis(&fa) {
        Some((gens, words, inv)) => {
            let len = gens.len() * n;
            let total = (p as u128).pow(len as u32);
            let total = total as u64;
            let witness = (0..total).into_par_iter().find_map_first(|idx| {
                let d = digits(idx, p, len);
                let mut imgs: Vec<Vec<u64>> = Vec::with_capacity(n);
                for w in &words {
                    let v = match *w {
                        Word::Gen(g) => {
                            let k = gens.iter().position(|&x| x == g).unwrap();
                            d[k * n..(k + 1) * n].to_vec()
                        }
                        Word::Prod(i, j) => fb.mul(&imgs[i], &imgs[j]),
                    };
                    imgs.push(v);
                }
                // φ = [images of words] · [words]^{-1}
                let im = FpMatrix::from_cols(p, &imgs);
                let cols: Vec<Vec<u64>> = (0..n)
                    .map(|j| {
                        (0..n)
                            .map(|r| (0..n).map(|k| im.get(r, k) * inv[k][j]).sum::<u64>() % p)
                            .collect()
                    })
                    .collect();
                let m = FpMatrix::from_cols(p, &cols);
                (is_fp_hom(&fa, &fb, &m) && m.is_invertible()).then_some(m)
            });
            Ok(FfSearch {
                p,
                mode: SearchMode::GeneratorImages,
                candidates: total,
                witness,
            })
        }
        None => {
            let total = (p as u128).pow((n * n) as u32);
            if total > u128::from(MAX_FULL_CANDIDATES) {
                return Err(Error::Guard(format!(
                    "not generated by a complement of A^2; {total} matrices exceed the search budget"
                )));
            }
            let total = total as u64;
            let witness = (0..total).into_par_iter().find_map_first(|idx| {
                let m = FpMatrix {
                    p,
                    n,
                    data: digits(idx, p, n * n),
                };
                (m.is_invertible() && is_fp_hom(&fa, &fb, &m)).then_some(m)
            });
            Ok(FfSearch {
                p,
                mode: SearchMode::AllMatrices,
                candidates: total,
                witness,
            })
        }
    }
}

/// Isomorphism search `a → b` over `F_p` that lifts generator images one
/// filtration degree at a time, pruning by the homomorphism condition modulo
/// `B^{d+1}`. `b` is first moved to a basis adapted to its power filtration.
/// Returns an error when more than `max_nodes` partial assignments are visited.
pub(crate) fn ff_lift_search(a: &Algebra, b: &Algebra, p: u64, max_nodes: u64) -> Result<FfSearch> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!("dimensions {} and {} differ", a.dim(), b.dim())));
    }
    let (_, basis, grades) = graded_algebra_with_basis(b)?;
    let bp = transport(b, &basis)?;
    let fa = FpAlgebra::reduce(a, p)?;
    let fb = FpAlgebra::reduce(&bp, p)?;
    let pm = reduce_matrix(&basis, p)?;
    let n = fa.n;
    let Some((gens, words, inv)) = word_basis(&fa) else {
        return Err(Error::Guard("not generated by a complement of A^2".into()));
    };
    let top = grades.iter().copied().max().unwrap_or(0);
    let lift = Lift {
        fa: &fa,
        fb: &fb,
        gens: &gens,
        words: &words,
        inv: &inv,
        grades: &grades,
        top,
    };
    let nodes = std::sync::atomic::AtomicU64::new(0);
    let first: Vec<Vec<Vec<u64>>> = lift.extensions(&vec![vec![0; n]; gens.len()], 1);
    let found = first
        .par_iter()
        .map(|imgs| lift.descend(imgs.clone(), 1, &nodes, max_nodes))
        .find_map_first(|r| match r {
            Ok(Some(m)) => Some(Ok(m)),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        })
        .transpose()?;
    let witness = found.map(|m| {
        let cols: Vec<Vec<u64>> = (0..n).map(|j| pm.mul_vec(&m.col(j))).collect();
        FpMatrix::from_cols(p, &cols)
    });
    Ok(FfSearch {
        p,
        mode: SearchMode::Lifting,
        candidates: nodes.into_inner(),
        witness,
    })
}

fn reduce_matrix(m: &crate::exact::Matrix, p: u64) -> Result<FpMatrix> {
    let n = m.rows();
    let data = m
        .data()
        .iter()
        .map(|x| x.mod_prime(p).ok_or_else(|| Error::Guard(format!("a denominator is divisible by {p}"))))
        .collect::<Result<Vec<u64>>>()?;
    Ok(FpMatrix { p, n, data })
}

struct Lift<'a> {
    fa: &'a FpAlgebra,
    fb: &'a FpAlgebra,
    gens: &'a [usize],
    words: &'a [Word],
    inv: &'a [Vec<u64>],
    grades: &'a [usize],
    top: usize,
}

impl Lift<'_> {
    fn slots(&self, d: usize) -> Vec<(usize, usize)> {
        (0..self.gens.len())
            .flat_map(|g| self.grades.iter().enumerate().filter(|&(_, &gr)| gr == d).map(move |(k, _)| (g, k)))
            .collect()
    }

    /// All ways to fill the grade-`d` coordinates of the generator images.
    fn extensions(&self, imgs: &[Vec<u64>], d: usize) -> Vec<Vec<Vec<u64>>> {
        let p = self.fa.p;
        let slots = self.slots(d);
        let total = p.pow(slots.len() as u32);
        (0..total)
            .map(|idx| {
                let mut next = imgs.to_vec();
                for (&(g, k), v) in slots.iter().zip(digits(idx, p, slots.len())) {
                    next[g][k] = v;
                }
                next
            })
            .collect()
    }

    /// Fillings of the grade-`d` coordinates (`d ≥ 2`) satisfying the
    /// homomorphism condition in grade `d`, which is affine in them.
    fn solutions(&self, imgs: &[Vec<u64>], d: usize) -> Vec<Vec<Vec<u64>>> {
        let p = self.fa.p;
        let slots = self.slots(d);
        let r0 = self.residual(imgs, d);
        let cols: Vec<Vec<u64>> = slots
            .iter()
            .map(|&(g, k)| {
                let mut next = imgs.to_vec();
                next[g][k] = 1;
                self.residual(&next, d).iter().zip(&r0).map(|(x, y)| (x + p - y) % p).collect()
            })
            .collect();
        let rhs: Vec<u64> = r0.iter().map(|x| (p - x) % p).collect();
        let Some((x0, null)) = solve_mod(&cols, &rhs, p) else {
            return Vec::new();
        };
        (0..p.pow(null.len() as u32))
            .map(|idx| {
                let mut x = x0.clone();
                for (c, v) in digits(idx, p, null.len()).into_iter().zip(&null) {
                    for (xi, vi) in x.iter_mut().zip(v) {
                        *xi = (*xi + c * vi) % p;
                    }
                }
                let mut next = imgs.to_vec();
                for (&(g, k), v) in slots.iter().zip(x) {
                    next[g][k] = v;
                }
                next
            })
            .collect()
    }

    /// `φ(e_i e_j) - φ(e_i) φ(e_j)` on the grade-`d` coordinates.
    fn residual(&self, imgs: &[Vec<u64>], d: usize) -> Vec<u64> {
        let (p, n) = (self.fa.p, self.fa.n);
        let m = self.map(imgs);
        let cols: Vec<Vec<u64>> = (0..n).map(|j| m.col(j)).collect();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let lhs = m.mul_vec(self.fa.basis_product(i, j));
                let rhs = self.fb.mul(&cols[i], &cols[j]);
                out.extend((0..n).filter(|&k| self.grades[k] == d).map(|k| (lhs[k] + p - rhs[k]) % p));
            }
        }
        out
    }

    fn map(&self, imgs: &[Vec<u64>]) -> FpMatrix {
        let (p, n) = (self.fa.p, self.fa.n);
        let mut vals: Vec<Vec<u64>> = Vec::with_capacity(n);
        for w in self.words {
            let v = match *w {
                Word::Gen(g) => imgs[self.gens.iter().position(|&x| x == g).unwrap()].clone(),
                Word::Prod(i, j) => self.fb.mul(&vals[i], &vals[j]),
            };
            vals.push(v);
        }
        let im = FpMatrix::from_cols(p, &vals);
        let cols: Vec<Vec<u64>> = (0..n)
            .map(|j| (0..n).map(|r| (0..n).map(|k| im.get(r, k) * self.inv[k][j]).sum::<u64>() % p).collect())
            .collect();
        FpMatrix::from_cols(p, &cols)
    }

    /// Homomorphism condition on coordinates of grade `≤ d`.
    fn hom_mod(&self, m: &FpMatrix, d: usize) -> bool {
        let n = self.fa.n;
        let cols: Vec<Vec<u64>> = (0..n).map(|j| m.col(j)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = m.mul_vec(self.fa.basis_product(i, j));
                let rhs = self.fb.mul(&cols[i], &cols[j]);
                (0..n).all(|k| self.grades[k] > d || lhs[k] == rhs[k])
            })
        })
    }

    fn descend(
        &self,
        imgs: Vec<Vec<u64>>,
        d: usize,
        nodes: &std::sync::atomic::AtomicU64,
        max_nodes: u64,
    ) -> Result<Option<FpMatrix>> {
        if nodes.fetch_add(1, std::sync::atomic::Ordering::Relaxed) >= max_nodes {
            return Err(Error::Guard(format!("lifting search exceeded {max_nodes} nodes")));
        }
        let m = self.map(&imgs);
        if d == 1 {
            let low: Vec<Vec<u64>> = imgs
                .iter()
                .map(|v| v.iter().zip(self.grades).map(|(&x, &g)| if g == 1 { x } else { 0 }).collect())
                .collect();
            if rank_mod(&low, self.fa.p) != self.gens.len() {
                return Ok(None);
            }
        }
        if !self.hom_mod(&m, d) {
            return Ok(None);
        }
        if d >= self.top {
            return Ok(m.is_invertible().then_some(m));
        }
        for next in self.solutions(&imgs, d + 1) {
            if let Some(w) = self.descend(next, d + 1, nodes, max_nodes)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{algebra, Family};

    #[test]
    fn identity_found_for_equal_tables() {
        let a = algebra(Family::Mu0, 4).unwrap();
        let r = ff_iso_search(&a, &a, 2).unwrap();
        let w = r.witness.unwrap();
        let fa = FpAlgebra::reduce(&a, 2).unwrap();
        assert!(is_fp_hom(&fa, &fa, &w));
    }

    #[test]
    fn guards() {
        let a = algebra(Family::Mu0, 6).unwrap();
        assert!(matches!(ff_iso_search(&a, &a, 2), Err(Error::Guard(_))));
        let b = algebra(Family::Mu0, 3).unwrap();
        assert!(matches!(ff_iso_search(&b, &b, 5), Err(Error::Guard(_))));
    }

    #[test]
    fn inverse_mod_p() {
        let m = FpMatrix {
            p: 3,
            n: 2,
            data: vec![1, 2, 0, 1],
        };
        let inv = invert(&m).unwrap();
        assert_eq!(inv.data, vec![1, 1, 0, 1]);
    }
}

#[cfg(test)]
mod lift_tests {
    use super::*;
    use crate::catalog::{make_algebra, Family, FamilySpec};
    use crate::exact::Scalar;

    #[test]
    fn lifting_agrees_with_exhaustive_search() {
        let a = make_algebra(&FamilySpec::with_alpha(Family::Mu2(2), 6, Scalar::zero())).unwrap();
        let b = make_algebra(&FamilySpec::new(Family::Mu2(1), 6)).unwrap();
        let same = ff_lift_search(&a, &a, 3, 1 << 20).unwrap();
        let w = same.witness.unwrap();
        let fa = FpAlgebra::reduce(&a, 3).unwrap();
        assert!(is_fp_hom(&fa, &fa, &w) && w.is_invertible());
        assert!(ff_lift_search(&a, &b, 3, 1 << 20).unwrap().witness.is_none());
    }

    #[test]
    fn lifting_matches_exhaustive_at_dim_5() {
        let names = [Family::Mu1(1), Family::Mu1(2), Family::Mu1(3), Family::Mu1(4), Family::Mu0];
        for p in [2, 3] {
            for x in names {
                for y in names {
                    let a = make_algebra(&FamilySpec::new(x, 5)).unwrap();
                    let b = make_algebra(&FamilySpec::new(y, 5)).unwrap();
                    let full = ff_iso_search(&a, &b, p).unwrap().witness.is_some();
                    let lifted = ff_lift_search(&a, &b, p, 1 << 20).unwrap().witness;
                    assert_eq!(full, lifted.is_some(), "{x} {y} F_{p}");
                    if let Some(w) = lifted {
                        let (fa, fb) = (FpAlgebra::reduce(&a, p).unwrap(), FpAlgebra::reduce(&b, p).unwrap());
                        assert!(is_fp_hom(&fa, &fb, &w) && w.is_invertible());
                    }
                }
            }
        }
    }
}
