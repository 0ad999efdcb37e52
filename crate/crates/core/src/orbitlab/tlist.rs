//! Matching listed orbit representatives to named extension algebras.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;

use super::cases::{t_list, Target};
use super::expr::{eval, Env};
use super::ffiso::{ff_iso_search, ff_lift_search, FpAlgebra};
use super::invariants::fine_invariants;
use super::qiso::{rational_iso_search, AffineTarget};
use super::solve::SolveOptions;
use super::verify::{default_of, match_rows, verify_cases, CaseReport, Setup};
use crate::algebra::{annihilator, fingerprint, is_iso_witness, transport, Algebra, Fingerprint};
use crate::catalog::{algebra, automorphism_template, make_algebra_unchecked, Family, FamilySpec};
use crate::cohomology::{Cocycle, CohomologyBasis};
use crate::error::{Error, Result};
use crate::exact::{unit_vec, Matrix, ParamPoly, Scalar, Var};
use crate::extension::{central_extend, class_rank, radical};

use super::action::nabla_cohomology;

const LIFT_NODES: u64 = 1 << 20;

/// Parameter restriction of a named algebra in a list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaRule {
    None,
    Free,
    Fixed(i64),
    Except(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Named {
    pub family: Family,
    pub alpha: AlphaRule,
}

impl Named {
    pub fn label(&self, dim: usize) -> String {
        let base = format!("{}^{dim}", self.family);
        match self.alpha {
            AlphaRule::None => base,
            AlphaRule::Free => format!("{base}(alpha)"),
            AlphaRule::Fixed(k) => format!("{base}({k})"),
            AlphaRule::Except(k) => format!("{base}(alpha!={k})"),
        }
    }
}

const fn nm(family: Family) -> Named {
    Named {
        family,
        alpha: AlphaRule::None,
    }
}

const fn na(family: Family, alpha: AlphaRule) -> Named {
    Named { family, alpha }
}

/// Algebras listed as the non-split `s`-dimensional extensions of `family`.
pub fn theorem_names(family: Family, s: usize) -> Vec<Named> {
    use AlphaRule::*;
    use Family::*;
    match (family, s) {
        (Mu0, 1) => vec![nm(Mu0)],
        (Mu1(1), 1) => vec![
            nm(Mu1(1)),
            nm(Mu1(2)),
            nm(Mu1(3)),
            nm(Mu1(4)),
            nm(Mu2(1)),
            na(Mu2(2), Free),
            nm(Mu2(3)),
            nm(Mu2(4)),
        ],
        (Mu1(1), 2) => {
            let mut v = vec![nm(Mu2(1)), na(Mu2(2), Free)];
            v.extend((3..=8).map(|k| nm(Mu2(k))));
            v.extend([na(Mu2(9), Free), nm(Mu2(10)), nm(Mu3(1)), nm(Mu3(2)), na(Mu3(3), Free), nm(Mu3(4))]);
            v
        }
        (Mu1(1), 3) => vec![
            nm(Mu3(1)),
            nm(Mu3(2)),
            na(Mu3(3), Free),
            nm(Mu3(4)),
            nm(Mu3(5)),
            nm(Mu3(6)),
            nm(Mu3(7)),
        ],
        (Mu1(1), 4) => vec![nm(Mu4(1))],
        (Mu1(2), 1) => vec![nm(Mu2(3)), nm(Mu2(6)), na(Mu2(9), Free), nm(Mu2(10))],
        (Mu1(2), 2) => vec![na(Mu3(3), Free), nm(Mu3(4)), nm(Mu3(6)), nm(Mu3(7))],
        (Mu1(2), 3) => vec![nm(Mu4(2))],
        (Mu1(3), 1) => vec![nm(Mu2(1)), na(Mu2(2), Except(1)), nm(Mu2(5)), nm(Mu2(6)), nm(Mu2(7))],
        (Mu1(3), 2) => vec![nm(Mu3(1)), na(Mu3(3), Except(1)), nm(Mu3(4)), nm(Mu3(5)), nm(Mu3(6))],
        (Mu1(3), 3) => vec![nm(Mu4(3))],
        (Mu1(4), 1) => vec![
            na(Mu2(2), Fixed(1)),
            nm(Mu2(7)),
            nm(Mu2(8)),
            na(Mu2(9), Except(1)),
            nm(Mu2(10)),
        ],
        (Mu1(4), 2) => vec![
            nm(Mu3(2)),
            na(Mu3(3), Except(1)),
            nm(Mu3(4)),
            nm(Mu3(5)),
            nm(Mu3(6)),
            nm(Mu3(7)),
        ],
        (Mu1(4), 3) => vec![nm(Mu4(4))],
        _ => Vec::new(),
    }
}

/// Every catalog family except `μ₀`, each with a free parameter where it has one.
fn all_names() -> Vec<Named> {
    Family::all()
        .into_iter()
        .filter(|f| *f != Family::Mu0)
        .map(|f| {
            if f.has_alpha() {
                na(f, AlphaRule::Free)
            } else {
                nm(f)
            }
        })
        .collect()
}

/// Values of the orbit parameter tried for each entry.
pub fn entry_samples() -> Vec<Scalar> {
    vec![
        Scalar::zero(),
        Scalar::one(),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::new(1, 2),
        Scalar::new(4, 3),
    ]
}

#[derive(Clone, Debug)]
pub struct NameMatch {
    pub name: String,
    pub listed: bool,
    pub family: Family,
    pub alpha: Option<Scalar>,
    /// Isomorphism from the named algebra onto the extension.
    pub witness: Matrix,
    pub verified: bool,
}

#[derive(Clone, Debug)]
pub struct SampleReport {
    pub entry: String,
    pub t: Option<Scalar>,
    pub rows: Vec<Vec<Scalar>>,
    pub independent: bool,
    /// `dim(Ann(θ) ∩ Ann(A))`
    pub radical_dim: usize,
    /// `Ann(A_θ) ⊄ A_θ²`, i.e. the extension has an annihilator component.
    pub split: bool,
    pub fingerprint: Fingerprint,
    pub invariants: Vec<(String, usize)>,
    pub matches: Vec<NameMatch>,
}

impl SampleReport {
    pub fn in_ts(&self) -> bool {
        self.independent && self.radical_dim == 0
    }

    fn key(&self) -> String {
        match &self.t {
            Some(t) => format!("{} [t={}]", self.entry, t.pretty()),
            None => self.entry.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TListReport {
    pub family: Family,
    pub n: usize,
    pub s: usize,
    pub cases: Vec<CaseReport>,
    pub listed: Vec<String>,
    pub samples: Vec<SampleReport>,
    /// Listed names that no sample reached.
    pub unreached: Vec<String>,
    /// Samples matching only unlisted names, parameter-free entries without a
    /// listed match, and parametric entries with no listed match at any sample.
    pub unmatched: Vec<String>,
    /// Samples of a matched parametric entry for which no rational witness was found.
    pub no_rational_witness: Vec<String>,
    /// Distinct entries without a parameter landing on the same algebra.
    pub collisions: Vec<String>,
    pub separation: Vec<String>,
    /// Pairs of distinct named algebras, not members of one α-family, with equal invariants.
    pub unseparated: usize,
    pub alpha_evidence: Vec<String>,
    pub notes: Vec<String>,
}

impl TListReport {
    pub fn cases_passed(&self) -> bool {
        self.cases.iter().all(CaseReport::passed)
    }

    pub fn witnesses_verified(&self) -> bool {
        self.samples.iter().flat_map(|s| &s.matches).all(|m| m.verified)
    }

    pub fn bijection(&self) -> bool {
        self.unreached.is_empty() && self.unmatched.is_empty() && self.collisions.is_empty()
    }

    /// Every pair of reached algebras outside a common α-family is separated by an invariant.
    pub fn separated(&self) -> bool {
        self.unseparated == 0
    }

    pub fn passed(&self) -> bool {
        self.cases_passed() && self.witnesses_verified() && self.bijection() && self.separated()
    }
}

fn fmt_row(r: &[Scalar]) -> String {
    format!("({})", r.iter().map(Scalar::pretty).collect::<Vec<_>>().join(", "))
}

impl fmt::Display for TListReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "T_{} of {} n={}", self.s, self.family, self.n)?;
        let failed = self.cases.iter().filter(|c| !c.passed()).count();
        writeln!(f, "cases: {} checked, {failed} failed", self.cases.len())?;
        for c in self.cases.iter().filter(|c| !c.passed()) {
            writeln!(f, "{c}")?;
        }
        writeln!(f, "listed: {}", self.listed.join(", "))?;
        for s in &self.samples {
            let rows: Vec<String> = s.rows.iter().map(|r| fmt_row(r)).collect();
            let mut flags = Vec::new();
            if !s.independent {
                flags.push("classes dependent".to_string());
            }
            if s.radical_dim > 0 {
                flags.push(format!("Ann(theta)∩Ann(A) has dim {}", s.radical_dim));
            }
            if s.split {
                flags.push("split".into());
            } else {
                flags.push("non-split".into());
            }
            writeln!(f, "entry {} = {}  [{}]", s.key(), rows.join(" "), flags.join("; "))?;
            if s.matches.is_empty() {
                writeln!(f, "  no named algebra found")?;
            }
            for m in &s.matches {
                let a = m.alpha.as_ref().map(|a| format!(" alpha={}", a.pretty())).unwrap_or_default();
                writeln!(
                    f,
                    "  ~ {}{a}{} witness {}",
                    m.name,
                    if m.listed { "" } else { " (not listed)" },
                    if m.verified { "verified" } else { "FAILED" }
                )?;
            }
        }
        for u in &self.unreached {
            writeln!(f, "listed but not reached: {u}")?;
        }
        for u in &self.unmatched {
            writeln!(f, "no listed match: {u}")?;
        }
        for u in &self.no_rational_witness {
            writeln!(f, "no rational witness: {u} (entry matched at another sample; not separated by this engine)")?;
        }
        for c in &self.collisions {
            writeln!(f, "collision: {c}")?;
        }
        for s in &self.separation {
            writeln!(f, "separation: {s}")?;
        }
        for s in &self.alpha_evidence {
            writeln!(f, "alpha evidence: {s}")?;
        }
        for s in &self.notes {
            writeln!(f, "note: {s}")?;
        }
        write!(f, "verdict: {}", if self.passed() { "pass" } else { "fail" })
    }
}

/// Splits of `b` as `A ⊕ V`: transport matrices `P` such that in `transport(b, P)`
/// the last `s` basis vectors are central and the quotient on the first `n` is
/// literally `a`. `P` is a central shear composed with a basis permutation.
fn literal_splits(b: &Algebra, a: &Algebra, s: usize) -> Vec<Matrix> {
    const MAX_SPLITS: usize = 8;
    let m = b.dim();
    if m != a.dim() + s {
        return Vec::new();
    }
    let zero = |v: &[Scalar]| v.iter().all(Scalar::is_zero);
    let central: Vec<usize> = (0..m)
        .filter(|&k| (0..m).all(|j| zero(b.basis_product(k, j)) && zero(b.basis_product(j, k))))
        .collect();
    let mut out: Vec<Matrix> = Vec::new();
    for g in central_shears(m, &central) {
        let Ok(bg) = transport(b, &g) else { continue };
        for order in coordinate_splits(&bg, a, &central, s, MAX_SPLITS) {
            let p = &g * &perm_matrix(&order);
            if !out.contains(&p) {
                out.push(p);
            }
            if out.len() >= MAX_SPLITS {
                return out;
            }
        }
    }
    out
}

/// Identity, then `e_c ↦ e_c ± e_d` and products of two such maps on disjoint pairs of central indices.
fn central_shears(m: usize, central: &[usize]) -> Vec<Matrix> {
    let mut single = Vec::new();
    for &c in central {
        for &d in central {
            if c != d {
                for sign in [-1, 1] {
                    single.push((c, d, sign));
                }
            }
        }
    }
    let shear = |moves: &[(usize, usize, i64)]| {
        let mut g = Matrix::identity(m);
        for &(c, d, sign) in moves {
            g.set(d, c, Scalar::from_int(sign));
        }
        g
    };
    let mut out = vec![Matrix::identity(m)];
    out.extend(single.iter().map(|&mv| shear(&[mv])));
    for (i, &x) in single.iter().enumerate() {
        for &y in &single[i + 1..] {
            let idx = [x.0, x.1, y.0, y.1];
            if (0..4).all(|u| (u + 1..4).all(|v| idx[u] != idx[v])) {
                out.push(shear(&[x, y]));
            }
        }
    }
    out
}

/// Orders `σ(R) ++ S` with `e_S` central and the quotient on `R`, relabeled by `σ`, literally equal to `a`.
fn coordinate_splits(b: &Algebra, a: &Algebra, central: &[usize], s: usize, cap: usize) -> Vec<Vec<usize>> {
    let m = b.dim();
    let n = a.dim();
    let sig = |alg: &Algebra, idx: &[usize], i: usize| {
        let row = idx.iter().filter(|&&j| idx.iter().any(|&k| !alg.basis_product(i, j)[k].is_zero())).count();
        let col = idx.iter().filter(|&&j| idx.iter().any(|&k| !alg.basis_product(j, i)[k].is_zero())).count();
        let hit = idx
            .iter()
            .flat_map(|&x| idx.iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| !alg.basis_product(x, y)[i].is_zero())
            .count();
        (row, col, hit)
    };
    let all_a: Vec<usize> = (0..n).collect();
    let sig_a: Vec<_> = (0..n).map(|i| sig(a, &all_a, i)).collect();
    let mut out = Vec::new();
    for subset in combinations(central, s) {
        let rest: Vec<usize> = (0..m).filter(|k| !subset.contains(k)).collect();
        let sig_q: HashMap<usize, _> = rest.iter().map(|&r| (r, sig(b, &rest, r))).collect();
        let mut sigma = Vec::with_capacity(n);
        let mut found = Vec::new();
        assign(b, a, &rest, &sig_a, &sig_q, &mut sigma, &mut found, cap);
        for mut order in found {
            order.extend(subset.iter().copied());
            out.push(order);
            if out.len() >= cap {
                return out;
            }
        }
    }
    out
}

/// Backtracking over `σ: A-index → R` preserving structure constants modulo `S`.
#[allow(clippy::too_many_arguments)]
fn assign<T: PartialEq>(
    b: &Algebra,
    a: &Algebra,
    rest: &[usize],
    sig_a: &[T],
    sig_q: &HashMap<usize, T>,
    sigma: &mut Vec<usize>,
    found: &mut Vec<Vec<usize>>,
    cap: usize,
) {
    if found.len() >= cap {
        return;
    }
    let i = sigma.len();
    if i == a.dim() {
        let ok = (0..i).all(|x| {
            (0..i).all(|y| {
                let pb = b.basis_product(sigma[x], sigma[y]);
                let pa = a.basis_product(x, y);
                (0..i).all(|k| pa[k] == pb[sigma[k]])
            })
        });
        if ok {
            found.push(sigma.clone());
        }
        return;
    }
    for &r in rest {
        if sigma.contains(&r) || sig_q[&r] != sig_a[i] {
            continue;
        }
        sigma.push(r);
        let consistent = (0..=i).all(|x| {
            (0..=i).all(|y| {
                if x != i && y != i {
                    return true;
                }
                let pb = b.basis_product(sigma[x], sigma[y]);
                let pa = a.basis_product(x, y);
                (0..=i).all(|k| pa[k] == pb[sigma[k]])
            })
        }) && (0..i).all(|x| {
            (0..i).all(|y| a.basis_product(x, y)[i] == b.basis_product(sigma[x], sigma[y])[r])
        });
        if consistent {
            assign(b, a, rest, sig_a, sig_q, sigma, found, cap);
        }
        sigma.pop();
    }
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        for mut rest in combinations(&items[i + 1..], k - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

fn perm_matrix(order: &[usize]) -> Matrix {
    let m = order.len();
    let cols: Vec<_> = order.iter().map(|&k| unit_vec(m, k)).collect();
    Matrix::from_cols(&cols, m).expect("square")
}

/// `θ_B` of a relabeled table `A ⊕ V` (last `s` basis vectors central).
fn read_theta(bp: &Algebra, n: usize, s: usize) -> Cocycle {
    let mut comps = vec![Matrix::zeros(n, n); s];
    for (i, j, k, c) in bp.table() {
        if k > n {
            comps[k - n - 1].set(i - 1, j - 1, c.clone());
        }
    }
    Cocycle { dim: n, components: comps }
}

fn named_algebra(family: Family, dim: usize, alpha: Option<&Scalar>) -> Result<Algebra> {
    let spec = match alpha {
        Some(a) => FamilySpec::with_alpha(family, dim, a.clone()),
        None => FamilySpec::new(family, dim),
    };
    make_algebra_unchecked(&spec)
}

struct Ctx<'a> {
    a: &'a Algebra,
    h: &'a CohomologyBasis,
    setup: &'a Setup,
    n: usize,
    s: usize,
    opts: SolveOptions,
}

impl Ctx<'_> {
    fn class_rows(&self, theta: &Cocycle) -> Result<Vec<Vec<Scalar>>> {
        theta.components.iter().map(|f| self.h.coords(f)).collect()
    }

    /// Tries to identify the extension by `rows` with `named`.
    fn try_name(&self, rows: &[Vec<Scalar>], named: &Named, listed: bool) -> Result<Option<NameMatch>> {
        let dim = self.n + self.s;
        let symbolic = !matches!(named.alpha, AlphaRule::None | AlphaRule::Fixed(_));
        let probe_alpha = match named.alpha {
            AlphaRule::None => None,
            AlphaRule::Fixed(k) => Some(Scalar::from_int(k)),
            _ => Some(Scalar::from_int(2)),
        };
        let b = named_algebra(named.family, dim, probe_alpha.as_ref())?;
        let images: Vec<Vec<ParamPoly>> = rows
            .iter()
            .map(|r| {
                let cls: Vec<ParamPoly> = r.iter().cloned().map(ParamPoly::constant).collect();
                self.setup.formula.apply(&cls)
            })
            .collect();
        for p in literal_splits(&b, self.a, self.s) {
            let c2 = self.class_rows(&read_theta(&transport(&b, &p)?, self.n, self.s))?;
            let (trows, extra): (Vec<Vec<ParamPoly>>, Vec<ParamPoly>) = if symbolic {
                let b3 = named_algebra(named.family, dim, Some(&Scalar::from_int(3)))?;
                let b3p = transport(&b3, &p)?;
                if literal_splits(&b3, self.a, self.s).iter().all(|o| o != &p) {
                    continue;
                }
                let c3 = self.class_rows(&read_theta(&b3p, self.n, self.s))?;
                // affine in alpha: c(t) = c(2) + (t - 2)(c(3) - c(2))
                let tm2 = ParamPoly::var("t") - ParamPoly::int(2);
                let tr = c2
                    .iter()
                    .zip(&c3)
                    .map(|(r2, r3)| {
                        r2.iter()
                            .zip(r3)
                            .map(|(x, y)| ParamPoly::constant(x.clone()) + tm2.scale(&(y - x)))
                            .collect()
                    })
                    .collect();
                let extra = match named.alpha {
                    AlphaRule::Except(k) => vec![ParamPoly::var("t") - ParamPoly::int(k)],
                    _ => Vec::new(),
                };
                (tr, extra)
            } else {
                let tr = c2
                    .iter()
                    .map(|r| r.iter().cloned().map(ParamPoly::constant).collect())
                    .collect();
                (tr, Vec::new())
            };
            let Some(sol) = match_rows(self.setup, &images, &trows, &extra, &self.opts) else {
                continue;
            };
            let alpha = if symbolic { sol.get("t").cloned() } else { probe_alpha.clone() };
            if symbolic && alpha.is_none() {
                continue;
            }
            let bb = named_algebra(named.family, dim, alpha.as_ref())?;
            let witness = self.witness(&bb, &p, rows, &sol)?;
            let ext = central_extend(self.a, &self.theta(rows))?;
            let verified = witness.as_ref().is_some_and(|w| is_iso_witness(&bb, &ext, w));
            return Ok(Some(NameMatch {
                name: named.label(dim),
                listed,
                family: named.family,
                alpha,
                witness: witness.unwrap_or_else(|| Matrix::zeros(dim, dim)),
                verified,
            }));
        }
        self.try_direct(rows, named, listed, probe_alpha.as_ref())
    }

    /// Fallback: solve for an isomorphism from the extension to `named` directly.
    fn try_direct(&self, rows: &[Vec<Scalar>], named: &Named, listed: bool, probe: Option<&Scalar>) -> Result<Option<NameMatch>> {
        let dim = self.n + self.s;
        let ext = central_extend(self.a, &self.theta(rows))?;
        let symbolic = !matches!(named.alpha, AlphaRule::None | AlphaRule::Fixed(_));
        let b2 = named_algebra(named.family, dim, probe)?;
        let b3 = if symbolic { Some(named_algebra(named.family, dim, Some(&Scalar::from_int(3)))?) } else { None };
        let extra = match named.alpha {
            AlphaRule::Except(k) => vec![ParamPoly::var("t") - ParamPoly::int(k)],
            _ => Vec::new(),
        };
        let target = AffineTarget { at2: &b2, at3: b3.as_ref() };
        let Some((psi, t)) = rational_iso_search(&ext, &target, &extra, &self.opts) else {
            return Ok(None);
        };
        let alpha = if symbolic { t } else { probe.cloned() };
        let bb = named_algebra(named.family, dim, alpha.as_ref())?;
        let witness = psi.inverse()?;
        let verified = is_iso_witness(&bb, &ext, &witness);
        Ok(Some(NameMatch {
            name: named.label(dim),
            listed,
            family: named.family,
            alpha,
            witness,
            verified,
        }))
    }

    fn theta(&self, rows: &[Vec<Scalar>]) -> Cocycle {
        Cocycle {
            dim: self.n,
            components: rows.iter().map(|r| self.h.form_from_coords(r)).collect(),
        }
    }

    /// `W = [[φ, 0], [L, C]]: A_{θ_B} → A_{θ_E}` composed with the relabeling of `b`.
    fn witness(&self, b: &Algebra, p: &Matrix, rows: &[Vec<Scalar>], sol: &HashMap<Var, Scalar>) -> Result<Option<Matrix>> {
        let (n, s) = (self.n, self.s);
        let tmpl = automorphism_template(self.setup.formula.family, n)?;
        let nonzero = tmpl.nonzero_params();
        let point: HashMap<Var, Scalar> = tmpl
            .params
            .iter()
            .map(|v| {
                let val = if let Some(x) = sol.get(v) {
                    x.clone()
                } else if self.setup.group.contains(v) {
                    default_of(v)
                } else if nonzero.contains(v) {
                    Scalar::one()
                } else {
                    Scalar::zero()
                };
                (v.clone(), val)
            })
            .collect();
        let phi = tmpl.instantiate(&point)?;
        let c = Matrix::from_data(
            s,
            s,
            (0..s)
                .flat_map(|i| (0..s).map(move |j| (i, j)))
                .map(|(i, j)| sol.get(format!("c_{i}_{j}").as_str()).cloned().unwrap_or_else(Scalar::zero))
                .collect(),
        )?;
        let bp = transport(b, p)?;
        let theta_b = read_theta(&bp, n, s);
        let theta_e = self.theta(rows);
        let pt = phi.transpose();
        let prod_rows: Vec<Vec<Scalar>> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.a.basis_product(i, j).clone())
            .collect();
        let delta_m = Matrix::from_rows(&prod_rows, n)?;
        let mut w = Matrix::zeros(n + s, n + s);
        for i in 0..n {
            for j in 0..n {
                w.set(i, j, phi.get(i, j).clone());
            }
        }
        for t in 0..s {
            let moved = &(&pt * &theta_e.components[t]) * &phi;
            let mut rhs = Vec::with_capacity(n * n);
            for i in 0..n {
                for j in 0..n {
                    let mut v = moved.get(i, j).clone();
                    for r in 0..s {
                        v = v - c.get(t, r) * theta_b.components[r].get(i, j);
                    }
                    rhs.push(v);
                }
            }
            let Some(l) = delta_m.solve(&rhs) else {
                return Ok(None);
            };
            for (j, v) in l.into_iter().enumerate() {
                w.set(n + t, j, v);
            }
            for r in 0..s {
                w.set(n + t, n + r, c.get(t, r).clone());
            }
        }
        Ok(Some(&w * &p.inverse()?))
    }
}

fn eval_rows(target: &Target, t: Option<&Scalar>) -> Result<Vec<Vec<Scalar>>> {
    let mut env: Env = HashMap::new();
    if let Some(t) = t {
        env.insert("t".into(), t.clone());
    }
    target
        .rows
        .iter()
        .map(|r| {
            r.split(',')
                .map(|c| {
                    eval(c.trim(), &env)?
                        .as_constant()
                        .ok_or_else(|| Error::Parse(format!("unbound name in `{c}`")))
                })
                .collect()
        })
        .collect()
}

fn split_off(ext: &Algebra) -> bool {
    !ext.square().contains_subspace(&annihilator(ext).two_sided)
}

/// Checks the `s`-dimensional orbit cases and the listed `T_s` against the named algebras.
pub fn verify_t_list(family: Family, n: usize, s: usize) -> Result<TListReport> {
    let entries = t_list(family, s);
    if entries.is_empty() {
        return Err(Error::Unsupported(format!("no T_{s} list for {family}")));
    }
    let cases = verify_cases(family, s, n)?;
    let a = algebra(family, n)?;
    let h = nabla_cohomology(family, n)?;
    let setup = Setup::new(family, n)?;
    let ctx = Ctx {
        a: &a,
        h: &h,
        setup: &setup,
        n,
        s,
        opts: SolveOptions::default(),
    };
    let listed = theorem_names(family, s);
    let dim = n + s;
    let samples_t = entry_samples();

    let mut jobs: Vec<(&Target, Option<Scalar>)> = Vec::new();
    for e in &entries {
        if e.rows.iter().any(|r| r.contains('t')) {
            for t in &samples_t {
                let env: Env = [("t".to_string(), t.clone())].into();
                let ok = e
                    .param_nonzero
                    .iter()
                    .all(|p| eval(p, &env).ok().and_then(|v| v.as_constant()).is_some_and(|v| !v.is_zero()));
                if ok {
                    jobs.push((e, Some(t.clone())));
                }
            }
        } else {
            jobs.push((e, None));
        }
    }
    let samples: Vec<SampleReport> = jobs
        .par_iter()
        .map(|(e, t)| -> Result<SampleReport> {
            let rows = eval_rows(e, t.as_ref())?;
            let theta = ctx.theta(&rows);
            let independent = class_rank(&h, &theta)? == s;
            let radical_dim = radical(&a, &theta).dim();
            let ext = central_extend(&a, &theta)?;
            let mut matches = Vec::new();
            for named in &listed {
                if let Some(m) = ctx.try_name(&rows, named, true)? {
                    matches.push(m);
                }
            }
            if matches.is_empty() {
                for named in all_names() {
                    if listed.iter().any(|l| l.family == named.family) {
                        continue;
                    }
                    if let Some(m) = ctx.try_name(&rows, &named, false)? {
                        matches.push(m);
                    }
                }
            }
            Ok(SampleReport {
                entry: e.name.to_string(),
                t: t.clone(),
                rows,
                independent,
                radical_dim,
                split: split_off(&ext),
                fingerprint: fingerprint(&ext),
                invariants: fine_invariants(&ext),
                matches,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut unreached = Vec::new();
    for named in &listed {
        let label = named.label(dim);
        if !samples.iter().any(|s| s.matches.iter().any(|m| m.listed && m.name == label)) {
            unreached.push(label);
        }
    }
    let entry_matched = |name: &str| samples.iter().any(|s| s.entry == name && s.matches.iter().any(|m| m.listed));
    let mut unmatched = Vec::new();
    let mut no_rational_witness = Vec::new();
    for smp in &samples {
        if smp.matches.iter().any(|m| m.listed) {
            continue;
        }
        if smp.t.is_some() && smp.matches.is_empty() && entry_matched(&smp.entry) {
            no_rational_witness.push(smp.key());
        } else {
            unmatched.push(smp.key());
        }
    }

    // algebra identity of a sample: (family, alpha)
    let ident = |s: &SampleReport| -> Option<(Family, Option<Scalar>)> {
        s.matches.first().map(|m| (m.family, m.alpha.clone()))
    };
    let mut collisions = Vec::new();
    let mut notes = Vec::new();
    for (i, x) in samples.iter().enumerate() {
        for y in &samples[i + 1..] {
            let (Some(ix), Some(iy)) = (ident(x), ident(y)) else {
                continue;
            };
            if ix != iy {
                continue;
            }
            let msg = format!("{} and {} both give {}", x.key(), y.key(), x.matches[0].name);
            if x.entry != y.entry && x.t.is_none() && y.t.is_none() {
                collisions.push(msg);
            } else {
                notes.push(msg);
            }
        }
    }
    for smp in &samples {
        if smp.matches.len() > 1 {
            let names: Vec<&str> = smp.matches.iter().map(|m| m.name.as_str()).collect();
            notes.push(format!("{} matches several names: {}", smp.key(), names.join(", ")));
        }
        if !smp.in_ts() {
            notes.push(format!(
                "{} violates the T_s condition (radical dim {}) and is {}",
                smp.key(),
                smp.radical_dim,
                if smp.split { "split" } else { "still non-split" }
            ));
        }
    }

    // separation of the distinct algebras reached
    let mut reps: Vec<(String, Family, &SampleReport)> = Vec::new();
    for smp in &samples {
        if let Some(m) = smp.matches.first() {
            let label = match &m.alpha {
                Some(a) if m.family.has_alpha() => format!("{}[alpha={}]", m.name, a.pretty()),
                _ => m.name.clone(),
            };
            if !reps.iter().any(|(l, _, _)| l == &label) {
                reps.push((label, m.family, smp));
            }
        }
    }
    let mut separation = Vec::new();
    let (mut by_fp, mut by_fine, mut by_oracle, mut unseparated, mut alpha_pairs) = (0, 0, 0, 0, 0);
    for (i, (lx, fx, x)) in reps.iter().enumerate() {
        for (ly, fy, y) in &reps[i + 1..] {
            if x.fingerprint != y.fingerprint {
                by_fp += 1;
                continue;
            }
            if let Some(((k, a), (_, b))) = x.invariants.iter().zip(&y.invariants).find(|(p, q)| p != q) {
                by_fine += 1;
                separation.push(format!("{lx} vs {ly}: separated by {k} ({a} vs {b})"));
                continue;
            }
            if x.invariants.len() != y.invariants.len() {
                by_fine += 1;
                continue;
            }
            let (mx, my) = (&x.matches[0], &y.matches[0]);
            let ax = named_algebra(mx.family, dim, mx.alpha.as_ref())?;
            let ay = named_algebra(my.family, dim, my.alpha.as_ref())?;
            match lift_oracle(&ax, &ay) {
                Oracle::None(p) => {
                    by_oracle += 1;
                    separation.push(format!("{lx} vs {ly}: invariants equal, F_{p} oracle: none (evidence)"));
                    continue;
                }
                Oracle::Isomorphic(ps) => {
                    let ps: Vec<String> = ps.iter().map(|p| format!("F_{p}")).collect();
                    separation.push(format!("{lx} vs {ly}: invariants equal, isomorphic over {}", ps.join(", ")));
                }
                Oracle::Inconclusive => separation.push(format!("{lx} vs {ly}: invariants equal, oracle inconclusive")),
            }
            if fx == fy && fx.has_alpha() {
                alpha_pairs += 1;
            } else {
                unseparated += 1;
            }
        }
    }
    let pairs = reps.len() * reps.len().saturating_sub(1) / 2;
    separation.insert(
        0,
        format!(
            "{pairs} pairs of reached algebras: {by_fp} separated by fingerprint, {by_fine} by finer invariants, \
             {by_oracle} by the finite-field oracle, {alpha_pairs} alpha-family pairs and {unseparated} other pairs not separated"
        ),
    );

    let mut alpha_evidence = Vec::new();
    for named in &listed {
        if matches!(named.alpha, AlphaRule::Free | AlphaRule::Except(_)) {
            alpha_evidence.extend(alpha_oracle(named.family)?);
        }
    }
    alpha_evidence.dedup();

    Ok(TListReport {
        family,
        n,
        s,
        cases,
        listed: listed.iter().map(|l| l.label(dim)).collect(),
        samples,
        unreached,
        unmatched,
        no_rational_witness,
        collisions,
        separation,
        unseparated,
        alpha_evidence,
        notes,
    })
}

/// Outcome of the finite-field lifting oracle on one pair.
enum Oracle {
    /// No isomorphism over `F_p`.
    None(u64),
    /// Isomorphic over every prime tried.
    Isomorphic(Vec<u64>),
    Inconclusive,
}

/// Lifting isomorphism search over `F_3`, `F_5`, `F_7`, `F_11`, skipping primes where
/// either table does not reduce or both reduce to the same table.
fn lift_oracle(a: &Algebra, b: &Algebra) -> Oracle {
    let mut iso = Vec::new();
    for p in [3, 5, 7, 11] {
        match (FpAlgebra::reduce(a, p), FpAlgebra::reduce(b, p)) {
            (Ok(x), Ok(y)) if x != y => {}
            _ => continue,
        }
        match ff_lift_search(a, b, p, LIFT_NODES) {
            Ok(r) if r.witness.is_none() => return Oracle::None(p),
            Ok(_) => iso.push(p),
            Err(_) => {}
        }
    }
    if iso.is_empty() {
        Oracle::Inconclusive
    } else {
        Oracle::Isomorphic(iso)
    }
}

/// `F_3` oracle on 5-dimensional truncations at `α ∈ {0, 1, 2}` pairs.
pub fn alpha_oracle(family: Family) -> Result<Vec<String>> {
    let vals = [0i64, 1, 2];
    let mut out = Vec::new();
    for (i, &x) in vals.iter().enumerate() {
        for &y in &vals[i + 1..] {
            let a = named_algebra(family, 5, Some(&Scalar::from_int(x)))?;
            let b = named_algebra(family, 5, Some(&Scalar::from_int(y)))?;
            let r = ff_iso_search(&a, &b, 3)?;
            out.push(format!(
                "{family}^5({x}) vs {family}^5({y}) over F_3: {}",
                if r.witness.is_some() { "isomorphic" } else { "none found" }
            ));
        }
    }
    out.push(format!("{family}(alpha) at other parameter pairs: not separated by this engine"));
    Ok(out)
}
