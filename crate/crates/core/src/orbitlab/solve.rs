//! Search for rational solutions of small polynomial systems.
//!
//! Depth-first: eliminate variables occurring linearly with a constant
//! coefficient, split on monomial equations, take rational roots of
//! univariate equations and otherwise branch over small rational values.
//! Incomplete by design; failure means "not found within budget".

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::{Monomial, ParamPoly, PolyBinding, Scalar, Var};

#[derive(Clone, Debug, Default)]
pub struct System {
    pub equations: Vec<ParamPoly>,
    /// Polynomials that must not vanish at the solution.
    pub nonzero: Vec<ParamPoly>,
    /// Variables to assign; variables outside this list must not occur.
    pub unknowns: Vec<Var>,
}

#[derive(Clone, Debug)]
pub struct SolveOptions {
    pub max_nodes: usize,
    /// Values tried when branching on a variable, in order.
    pub candidates: Vec<Scalar>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        let candidates = [(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2), (3, 1), (-3, 1)]
            .iter()
            .map(|&(a, b)| Scalar::new(a, b))
            .collect();
        SolveOptions {
            max_nodes: 20_000,
            candidates,
        }
    }
}

pub type Solution = HashMap<Var, Scalar>;

#[derive(Clone)]
struct State {
    eqs: Vec<ParamPoly>,
    nonzero: Vec<ParamPoly>,
    assigned: Vec<(Var, ParamPoly)>,
    free: BTreeSet<Var>,
}

impl State {
    fn bind(&mut self, v: &Var, p: ParamPoly) {
        let b: HashMap<Var, PolyBinding> = [(v.clone(), PolyBinding::Poly(p.clone()))].into();
        for e in self.eqs.iter_mut().chain(self.nonzero.iter_mut()) {
            if e.variables().contains(v) {
                *e = e.substitute(&b);
            }
        }
        self.assigned.push((v.clone(), p));
        self.free.remove(v);
    }

    /// Variables known to be nonzero: those of single-term nonzero constraints.
    fn nonzero_vars(&self) -> BTreeSet<Var> {
        self.nonzero
            .iter()
            .filter(|p| p.num_terms() == 1)
            .flat_map(|p| p.variables())
            .collect()
    }

    fn normalize(&mut self) -> bool {
        self.eqs.retain(|e| !e.is_zero());
        let nz = self.nonzero_vars();
        for e in &mut self.eqs {
            let content = monomial_content(e);
            let drop: Vec<(Var, u32)> = content.into_iter().filter(|(v, _)| nz.contains(v)).collect();
            if !drop.is_empty() {
                *e = divide_monomial(e, &drop);
            }
            *e = e.monic();
        }
        if self.eqs.iter().any(|e| e.as_constant().is_some()) {
            return false;
        }
        self.eqs.sort_by_key(|e| (e.num_terms(), e.total_degree()));
        self.eqs.dedup();
        !self.nonzero.iter().any(ParamPoly::is_zero)
    }
}

pub fn solve(sys: &System, opts: &SolveOptions) -> Option<Solution> {
    let st = State {
        eqs: sys.equations.clone(),
        nonzero: sys.nonzero.clone(),
        assigned: Vec::new(),
        free: sys.unknowns.iter().cloned().collect(),
    };
    let mut budget = opts.max_nodes;
    search(st, opts, &mut budget)
}

fn search(mut st: State, opts: &SolveOptions, budget: &mut usize) -> Option<Solution> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    loop {
        if !st.normalize() {
            return None;
        }
        match linear_pivot(&st.eqs) {
            Some((v, p)) => st.bind(&v, p),
            None => break,
        }
    }
    if st.eqs.is_empty() {
        return finish(st, opts);
    }
    match branch_choice(&st, opts) {
        Branch::Split(v) => {
            let mut zero = st.clone();
            zero.bind(&v, ParamPoly::zero());
            if let Some(sol) = search(zero, opts, budget) {
                return Some(sol);
            }
            let mut nonzero = st;
            nonzero.nonzero.push(ParamPoly::var(&v));
            search(nonzero, opts, budget)
        }
        Branch::Assign(v, vals) => {
            for val in vals {
                let mut next = st.clone();
                next.bind(&v, ParamPoly::constant(val));
                if let Some(sol) = search(next, opts, budget) {
                    return Some(sol);
                }
                if *budget == 0 {
                    return None;
                }
            }
            None
        }
    }
}

enum Branch {
    /// `v = 0` or `v ≠ 0`.
    Split(Var),
    /// `v` ranges over the listed values.
    Assign(Var, Vec<Scalar>),
}

/// Common factor `Π v^e` of all terms.
fn monomial_content(p: &ParamPoly) -> Vec<(Var, u32)> {
    let mut it = p.terms();
    let Some((first, _)) = it.next() else {
        return Vec::new();
    };
    let mut content: Vec<(Var, u32)> = first.factors().to_vec();
    for (m, _) in it {
        content = content
            .into_iter()
            .filter_map(|(v, e)| {
                let d = m.degree_in(&v).min(e);
                (d > 0).then_some((v, d))
            })
            .collect();
        if content.is_empty() {
            break;
        }
    }
    content
}

fn divide_monomial(p: &ParamPoly, by: &[(Var, u32)]) -> ParamPoly {
    let mut out = ParamPoly::zero();
    for (m, c) in p.terms() {
        let f: Vec<(Var, u32)> = m
            .factors()
            .iter()
            .map(|(v, e)| {
                let d = by.iter().find(|(w, _)| w == v).map_or(0, |(_, d)| *d);
                (v.clone(), e - d)
            })
            .collect();
        out.add_term(Monomial::from_factors(f), c.clone());
    }
    out
}

/// `c·v + r = 0` with `c` constant and `v ∉ r`.
fn linear_pivot(eqs: &[ParamPoly]) -> Option<(Var, ParamPoly)> {
    for e in eqs {
        for v in e.variables() {
            let cs = e.univariate_coeffs(&v);
            if cs.len() != 2 {
                continue;
            }
            if let Some(c) = cs[1].as_constant() {
                let inv = c.inv().expect("nonzero leading coefficient");
                return Some((v, (-cs[0].clone()).scale(&inv)));
            }
        }
    }
    None
}

fn branch_choice(st: &State, opts: &SolveOptions) -> Branch {
    let nz = st.nonzero_vars();
    // a factor that may vanish: split on it
    for e in &st.eqs {
        if let Some((v, _)) = monomial_content(e).into_iter().find(|(v, _)| !nz.contains(v)) {
            return Branch::Split(v);
        }
    }
    for e in &st.eqs {
        let vs = e.variables();
        if vs.len() == 1 {
            let v = vs.into_iter().next().unwrap();
            return Branch::Assign(v.clone(), rational_roots(&e.univariate_coeffs(&v)));
        }
    }
    // heuristic: in the shortest equation, the variable of lowest degree
    // that occurs most often
    let e = &st.eqs[0];
    let v = e
        .variables()
        .into_iter()
        .min_by_key(|v| {
            let occ = st.eqs.iter().filter(|q| q.variables().contains(v)).count();
            (e.degree_in(v), usize::MAX - occ)
        })
        .unwrap();
    let mut vals = Vec::new();
    if !nz.contains(&v) {
        vals.push(Scalar::zero());
    }
    vals.extend(opts.candidates.iter().cloned());
    Branch::Assign(v, vals)
}

fn finish(mut st: State, opts: &SolveOptions) -> Option<Solution> {
    let free: Vec<Var> = st.free.iter().cloned().collect();
    for v in free {
        let mut vals = vec![Scalar::one(), Scalar::zero()];
        vals.extend(opts.candidates.iter().cloned());
        let mut ok = false;
        for val in vals {
            let b: HashMap<Var, PolyBinding> = [(v.clone(), PolyBinding::Value(val.clone()))].into();
            let nz: Vec<ParamPoly> = st.nonzero.iter().map(|p| p.substitute(&b)).collect();
            if nz.iter().all(|p| !p.is_zero()) {
                st.nonzero = nz;
                st.assigned.push((v.clone(), ParamPoly::constant(val)));
                ok = true;
                break;
            }
        }
        if !ok {
            return None;
        }
    }
    let mut sol: Solution = HashMap::new();
    for (v, p) in st.assigned.iter().rev() {
        let val = p.eval(&sol)?;
        sol.insert(v.clone(), val);
    }
    Some(sol)
}

/// Rational roots of `Σ c_k v^k`, or a few sample values if the coefficients
/// are too large to factor.
pub fn rational_roots(coeffs: &[ParamPoly]) -> Vec<Scalar> {
    let cs: Vec<Scalar> = coeffs
        .iter()
        .map(|c| c.as_constant().expect("univariate"))
        .collect();
    let mut low = 0;
    while low < cs.len() && cs[low].is_zero() {
        low += 1;
    }
    let mut roots = Vec::new();
    if low > 0 {
        roots.push(Scalar::zero());
    }
    let cs = &cs[low..];
    if cs.len() <= 1 {
        return roots;
    }
    let deg = cs.len() - 1;
    // binomial c_d v^d + c_0
    if cs[1..deg].iter().all(Scalar::is_zero) {
        let r = -(&cs[0] / &cs[deg]);
        if let Some(t) = r.nth_root(deg as u32) {
            roots.push(t.clone());
            if deg % 2 == 0 && !t.is_zero() {
                roots.push(-t);
            }
        }
        return roots;
    }
    let l = cs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = cs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let (Some(a0), Some(ad)) = (ints[0].abs().to_u64(), ints[deg].abs().to_u64()) else {
        return roots;
    };
    if a0 > 1_000_000 || ad > 1_000_000 {
        return roots;
    }
    let eval = |p: &BigInt, q: &BigInt| -> bool {
        // Σ a_k p^k q^{d-k} == 0
        let mut acc = BigInt::zero();
        for (k, a) in ints.iter().enumerate() {
            acc += a * p.pow(k as u32) * q.pow((deg - k) as u32);
        }
        acc.is_zero()
    };
    for p in divisors(a0) {
        for q in divisors(ad) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sp in [p as i64, -(p as i64)] {
                if eval(&BigInt::from(sp), &BigInt::from(q)) {
                    roots.push(Scalar::new(sp, q as i64));
                }
            }
        }
    }
    roots
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n % d == 0).take(64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ParamPoly {
        s.parse().unwrap()
    }

    fn vars(vs: &[&str]) -> Vec<Var> {
        vs.iter().map(|v| Var::from(*v)).collect()
    }

    #[test]
    fn roots_of_simple_polynomials() {
        let r = rational_roots(&p("x^2-4").univariate_coeffs("x"));
        assert!(r.contains(&Scalar::from_int(2)) && r.contains(&Scalar::from_int(-2)));
        let r = rational_roots(&p("2*x^3-3*x^2+x").univariate_coeffs("x"));
        assert_eq!(r.len(), 3);
        assert!(rational_roots(&p("x^2-2").univariate_coeffs("x")).is_empty());
    }

    #[test]
    fn triangular_system() {
        let sys = System {
            equations: vec![p("x^5*c-1"), p("x*y-y^2"), p("c-1")],
            nonzero: vec![p("y")],
            unknowns: vars(&["x", "y", "c"]),
        };
        let sol = solve(&sys, &SolveOptions::default()).unwrap();
        for e in &sys.equations {
            assert!(e.eval(&sol).unwrap().is_zero());
        }
        assert!(!sol[&Var::from("y")].is_zero());
    }

    #[test]
    fn inconsistent_system_fails() {
        let sys = System {
            equations: vec![p("x*y-1"), p("x")],
            nonzero: vec![],
            unknowns: vars(&["x", "y"]),
        };
        assert!(solve(&sys, &SolveOptions::default()).is_none());
    }
}
