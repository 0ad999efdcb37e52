//! Checks one orbit case at a witness point.

use std::collections::HashMap;
use std::fmt;

use super::action::{parametric_action, ActionFormula};
use super::cases::{OrbitCase, Rule, Target};
use super::expr::{eval, eval_scalar, Env};
use super::solve::{solve, SolveOptions, System};
use crate::catalog::{automorphism_template, Family};
use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Scalar, Subspace, Var};

const GROUP_DEFAULTS: [(&str, i64); 4] = [("x", 1), ("y", 1), ("z", 0), ("w", 0)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// The displayed substitution reaches a target.
    Displayed,
    /// A group element different from the displayed one was found.
    Corrected,
    /// No substitution is displayed; a group element was found.
    Search,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Displayed => "displayed substitution",
            Method::Corrected => "corrected substitution",
            Method::Search => "search",
        })
    }
}

#[derive(Clone, Debug)]
pub struct TargetHit {
    pub target: String,
    pub method: Method,
    /// Group element, sorted by variable.
    pub group: Vec<(String, Scalar)>,
    /// Value of the orbit parameter `t`, if the target has one.
    pub t: Option<Scalar>,
    /// Rows of the transformed classes.
    pub computed: Vec<Vec<Scalar>>,
    /// Rows of the target representative.
    pub expected: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct CaseReport {
    pub id: String,
    pub family: Family,
    pub n: usize,
    pub point: Vec<Vec<Scalar>>,
    pub conditions_hold: bool,
    /// Outcome of the displayed substitution, when there is one.
    pub displayed: Option<std::result::Result<Vec<(String, Scalar)>, String>>,
    pub hits: Vec<TargetHit>,
    pub missed: Vec<String>,
    pub notes: Vec<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.conditions_hold && !self.hits.is_empty()
    }

    /// Whether the displayed substitution (if any) reached a target unchanged.
    pub fn displayed_ok(&self) -> Option<bool> {
        self.displayed
            .as_ref()
            .map(|_| self.hits.iter().any(|h| h.method == Method::Displayed))
    }
}

fn fmt_rows(rows: &[Vec<Scalar>]) -> String {
    rows.iter()
        .map(|r| format!("({})", r.iter().map(Scalar::pretty).collect::<Vec<_>>().join(", ")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn fmt_assign(a: &[(String, Scalar)]) -> String {
    if a.is_empty() {
        return "identity".into();
    }
    a.iter()
        .map(|(k, v)| format!("{k}={}", v.pretty()))
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "case {} {} n={}", self.family, self.id, self.n)?;
        writeln!(f, "  point: {}", fmt_rows(&self.point))?;
        if !self.conditions_hold {
            writeln!(f, "  conditions: VIOLATED")?;
        }
        match &self.displayed {
            Some(Ok(a)) => writeln!(f, "  displayed substitution: {}", fmt_assign(a))?,
            Some(Err(e)) => writeln!(f, "  displayed substitution: not evaluable ({e})")?,
            None => {}
        }
        for h in &self.hits {
            writeln!(f, "  target {} via {}: {}", h.target, h.method, fmt_assign(&h.group))?;
            if let Some(t) = &h.t {
                writeln!(f, "    t = {}", t.pretty())?;
            }
            writeln!(f, "    computed: {}", fmt_rows(&h.computed))?;
            writeln!(f, "    expected: {}", fmt_rows(&h.expected))?;
        }
        for m in &self.missed {
            writeln!(f, "  target {m}: not reached")?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "verdict: {}", if self.passed() { "pass" } else { "fail" })
    }
}

fn point_env(n: usize, point: &[Vec<Scalar>]) -> Env {
    let mut env: Env = HashMap::new();
    env.insert("n".into(), Scalar::from_int(n as i64));
    for (r, row) in point.iter().enumerate() {
        let letter = (b'a' + r as u8) as char;
        for (k, v) in row.iter().enumerate() {
            env.insert(format!("{letter}{}", k + 1), v.clone());
        }
    }
    env
}

fn parse_rows(rows: &[&str], env: &Env) -> Result<Vec<Vec<ParamPoly>>> {
    rows.iter()
        .map(|r| r.split(',').map(|c| eval(c.trim(), env)).collect())
        .collect()
}

fn condition_holds(c: &str, env: &Env) -> Result<bool> {
    let (lhs, rhs, eq) = if let Some((l, r)) = c.split_once("!=") {
        (l, r, false)
    } else if let Some((l, r)) = c.split_once('=') {
        (l, r, true)
    } else {
        return Err(Error::Parse(format!("bad condition `{c}`")));
    };
    let d = eval_scalar(lhs, env)? - eval_scalar(rhs, env)?;
    Ok(d.is_zero() == eq)
}

fn det(m: &[Vec<ParamPoly>]) -> ParamPoly {
    match m.len() {
        0 => ParamPoly::one(),
        1 => m[0][0].clone(),
        k => {
            let mut acc = ParamPoly::zero();
            for j in 0..k {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<ParamPoly>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][j] * &det(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn const_rows(rows: &[Vec<ParamPoly>], vals: &HashMap<Var, Scalar>) -> Option<Vec<Vec<Scalar>>> {
    rows.iter().map(|r| r.iter().map(|p| p.eval(vals)).collect()).collect()
}

pub(crate) struct Setup {
    pub formula: ActionFormula,
    pub group: Vec<Var>,
    pub group_nonzero: Vec<Var>,
}

impl Setup {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        let formula = parametric_action(family, n)?;
        let group = formula.group_vars();
        let tmpl = automorphism_template(family, n)?;
        let group_nonzero = tmpl
            .nonzero_params()
            .into_iter()
            .filter(|v| group.contains(v))
            .collect();
        Ok(Setup {
            formula,
            group,
            group_nonzero,
        })
    }
}

/// Finds `C ∈ GL_s`, `t` (and the free group variables) with `images = C · T(t)`.
fn match_target(
    setup: &Setup,
    images: &[Vec<ParamPoly>],
    target: &Target,
    env: &Env,
    opts: &SolveOptions,
) -> Result<Option<HashMap<Var, Scalar>>> {
    let trows = parse_rows(target.rows, env)?;
    if trows.len() != images.len() || trows.iter().any(|r| r.len() != setup.formula.h2_dim()) {
        return Err(Error::Dimension(format!("target {} has the wrong shape", target.name)));
    }
    let extra = target
        .param_nonzero
        .iter()
        .map(|p| eval(p, env))
        .collect::<Result<Vec<_>>>()?;
    Ok(match_rows(setup, images, &trows, &extra, opts))
}

/// Solves `images = C · trows` with `det C ≠ 0`; `C` is returned as `c_i_j`.
pub(crate) fn match_rows(
    setup: &Setup,
    images: &[Vec<ParamPoly>],
    trows: &[Vec<ParamPoly>],
    extra_nonzero: &[ParamPoly],
    opts: &SolveOptions,
) -> Option<HashMap<Var, Scalar>> {
    let s = images.len();
    let h = setup.formula.h2_dim();
    let mut unknowns: Vec<Var> = Vec::new();
    for r in images.iter().chain(trows) {
        for p in r {
            unknowns.extend(p.variables());
        }
    }
    if unknowns.is_empty() {
        let g: Vec<Vec<Scalar>> = images.iter().map(|r| r.iter().map(|p| p.as_constant().unwrap()).collect()).collect();
        let t: Vec<Vec<Scalar>> = trows.iter().map(|r| r.iter().map(|p| p.as_constant().unwrap()).collect()).collect();
        let (sg, st) = (Subspace::span(h, &g), Subspace::span(h, &t));
        if sg.dim() != s || sg != st {
            return None;
        }
        let mut sol = HashMap::new();
        for (i, row) in g.iter().enumerate() {
            let c = st_coords(&t, row)?;
            for (j, v) in c.into_iter().enumerate() {
                sol.insert(Var::from(format!("c_{i}_{j}").as_str()), v);
            }
        }
        return Some(sol);
    }
    let c: Vec<Vec<ParamPoly>> = (0..s)
        .map(|i| (0..s).map(|j| ParamPoly::var(&format!("c_{i}_{j}"))).collect())
        .collect();
    for r in &c {
        for p in r {
            unknowns.extend(p.variables());
        }
    }
    unknowns.sort();
    unknowns.dedup();
    let mut equations = Vec::new();
    for i in 0..s {
        for k in 0..h {
            let mut e = images[i][k].clone();
            for j in 0..s {
                e = e - &c[i][j] * &trows[j][k];
            }
            equations.push(e);
        }
    }
    let mut nonzero = vec![det(&c)];
    for v in &setup.group_nonzero {
        if unknowns.contains(v) {
            nonzero.push(ParamPoly::var(v));
        }
    }
    nonzero.extend(extra_nonzero.iter().cloned());
    let sys = System {
        equations,
        nonzero,
        unknowns,
    };
    solve(&sys, opts)
}

/// Coordinates of `v` in the (independent) rows `t`.
fn st_coords(t: &[Vec<Scalar>], v: &[Scalar]) -> Option<Vec<Scalar>> {
    let m = crate::exact::Matrix::from_rows(t, v.len()).ok()?.transpose();
    m.solve(v)
}

pub fn verify_case(case: &OrbitCase, n: usize, point_index: usize) -> Result<CaseReport> {
    let setup = Setup::new(case.family, n)?;
    verify_with(&setup, case, n, point_index, &SolveOptions::default())
}

/// Every witness point of every case of `family` with `s`-dimensional spans.
pub fn verify_cases(family: Family, s: usize, n: usize) -> Result<Vec<CaseReport>> {
    let setup = Setup::new(family, n)?;
    let opts = SolveOptions::default();
    let mut out = Vec::new();
    for case in super::cases::cases_for(family, s) {
        for k in 0..case.points.len() {
            out.push(verify_with(&setup, case, n, k, &opts)?);
        }
    }
    Ok(out)
}

fn verify_with(setup: &Setup, case: &OrbitCase, n: usize, k: usize, opts: &SolveOptions) -> Result<CaseReport> {
    let raw = case
        .points
        .get(k)
        .ok_or_else(|| Error::Guard(format!("case {} has no point {k}", case.id())))?;
    let nenv: Env = [("n".to_string(), Scalar::from_int(n as i64))].into();
    let point: Vec<Vec<Scalar>> = raw
        .iter()
        .map(|r| r.split(',').map(|c| eval_scalar(c.trim(), &nenv)).collect())
        .collect::<Result<_>>()?;
    if point.len() != case.s || point.iter().any(|r| r.len() != setup.formula.h2_dim()) {
        return Err(Error::Dimension(format!("point {k} of case {} has the wrong shape", case.id())));
    }
    let env = point_env(n, &point);
    let conditions_hold = case
        .conditions
        .iter()
        .map(|c| condition_holds(c, &env))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let images: Vec<Vec<ParamPoly>> = point
        .iter()
        .map(|r| {
            let cls: Vec<ParamPoly> = r.iter().cloned().map(ParamPoly::constant).collect();
            setup.formula.apply(&cls)
        })
        .collect();
    let mut notes: Vec<String> = Vec::new();
    if !case.note.is_empty() {
        notes.push(case.note.into());
    }
    let mut hits = Vec::new();
    let mut missed = Vec::new();

    let displayed = match case.rule {
        Rule::Displayed(subs) => Some(displayed_element(setup, subs, &env)),
        _ => None,
    };
    for target in case.targets {
        let mut hit = None;
        if let Some(Ok(elem)) = &displayed {
            let vals: HashMap<Var, Scalar> = elem.iter().map(|(k, v)| (Var::from(k.as_str()), v.clone())).collect();
            let fixed: Vec<Vec<ParamPoly>> = const_rows(&images, &vals)
                .expect("group fully assigned")
                .into_iter()
                .map(|r| r.into_iter().map(ParamPoly::constant).collect())
                .collect();
            if let Some(sol) = match_target(setup, &fixed, target, &env, opts)? {
                hit = Some(make_hit(target, Method::Displayed, &vals, &sol, &images, &env)?);
            }
        }
        if hit.is_none() {
            if let Some(sol) = match_target(setup, &images, target, &env, opts)? {
                let method = if displayed.is_some() { Method::Corrected } else { Method::Search };
                let mut vals: HashMap<Var, Scalar> = HashMap::new();
                for v in &setup.group {
                    vals.insert(v.clone(), sol.get(v).cloned().unwrap_or_else(|| default_of(v)));
                }
                hit = Some(make_hit(target, method, &vals, &sol, &images, &env)?);
            }
        }
        match hit {
            Some(h) => hits.push(h),
            None => missed.push(target.name.to_string()),
        }
    }
    if let Some(Err(e)) = &displayed {
        notes.push(format!("displayed substitution not evaluable: {e}"));
    }
    Ok(CaseReport {
        id: case.id(),
        family: case.family,
        n,
        point,
        conditions_hold,
        displayed,
        hits,
        missed,
        notes,
    })
}

pub(crate) fn default_of(v: &str) -> Scalar {
    GROUP_DEFAULTS
        .iter()
        .find(|(k, _)| *k == v)
        .map_or(Scalar::one(), |(_, d)| Scalar::from_int(*d))
}

/// Evaluates the displayed substitution in order, starting from the identity.
fn displayed_element(
    setup: &Setup,
    subs: &[(&str, &str)],
    env: &Env,
) -> std::result::Result<Vec<(String, Scalar)>, String> {
    let mut local = env.clone();
    for v in &setup.group {
        local.insert(v.to_string(), default_of(v));
    }
    for (var, src) in subs {
        let val = eval_scalar(src, &local).map_err(|e| e.to_string())?;
        local.insert(var.to_string(), val);
    }
    let elem: Vec<(String, Scalar)> = setup
        .group
        .iter()
        .map(|v| (v.to_string(), local[&**v].clone()))
        .collect();
    if let Some((v, _)) = elem
        .iter()
        .find(|(v, val)| val.is_zero() && setup.group_nonzero.iter().any(|g| &**g == v))
    {
        return Err(format!("{v} = 0 is not invertible"));
    }
    Ok(elem)
}

fn make_hit(
    target: &Target,
    method: Method,
    group: &HashMap<Var, Scalar>,
    sol: &HashMap<Var, Scalar>,
    images: &[Vec<ParamPoly>],
    env: &Env,
) -> Result<TargetHit> {
    let computed = const_rows(images, group).expect("group fully assigned");
    let mut tenv = env.clone();
    let t = sol.get("t").cloned();
    if let Some(t) = &t {
        tenv.insert("t".into(), t.clone());
    }
    let expected = target
        .rows
        .iter()
        .map(|r| r.split(',').map(|c| eval_scalar(c.trim(), &tenv)).collect())
        .collect::<Result<Vec<Vec<Scalar>>>>()?;
    let mut g: Vec<(String, Scalar)> = group.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    g.sort();
    Ok(TargetHit {
        target: target.name.into(),
        method,
        group: g,
        t,
        computed,
        expected,
    })
}
