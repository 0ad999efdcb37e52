//! Action of the automorphism template on `H²` in the `∇`-basis.

use std::collections::HashMap;
use std::fmt;

use crate::catalog::{algebra, automorphism_template, nabla_basis, Family, ParamMatrix};
use crate::cohomology::{cohomology_basis, CohomologyBasis};
use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Scalar, Var};

/// Name of the coordinate `α_t` (1-based) in action polynomials.
pub fn alpha_var(t: usize) -> String {
    format!("alpha{t}")
}

/// Coefficient `t` is the `∇_{t+1}`-coordinate of `φ·(Σ α_i ∇_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionFormula {
    pub family: Family,
    pub n: usize,
    pub coefficients: Vec<ParamPoly>,
}

impl ActionFormula {
    pub fn h2_dim(&self) -> usize {
        self.coefficients.len()
    }

    /// Variables of the template appearing in the formula (besides the `α_t`).
    pub fn group_vars(&self) -> Vec<Var> {
        let alphas: Vec<String> = (1..=self.h2_dim()).map(alpha_var).collect();
        let mut vs: Vec<Var> = self
            .coefficients
            .iter()
            .flat_map(|c| c.variables())
            .filter(|v| !alphas.iter().any(|a| a.as_str() == &**v))
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// The image of the class with coordinates `class`, as polynomials in the group variables.
    pub fn apply(&self, class: &[ParamPoly]) -> Vec<ParamPoly> {
        let b: HashMap<Var, crate::exact::PolyBinding> = class
            .iter()
            .enumerate()
            .map(|(t, c)| (Var::from(alpha_var(t + 1).as_str()), c.clone().into()))
            .collect();
        self.coefficients.iter().map(|c| c.substitute(&b)).collect()
    }

    /// The image of a rational class at a point of the group variables.
    pub fn apply_at(&self, class: &[Scalar], point: &HashMap<Var, Scalar>) -> Result<Vec<Scalar>> {
        let mut vals = point.clone();
        for (t, c) in class.iter().enumerate() {
            vals.insert(Var::from(alpha_var(t + 1).as_str()), c.clone());
        }
        self.coefficients
            .iter()
            .map(|c| {
                c.eval(&vals)
                    .ok_or_else(|| Error::Guard("group variable left unassigned".into()))
            })
            .collect()
    }
}

impl fmt::Display for ActionFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (t, c) in self.coefficients.iter().enumerate() {
            writeln!(f, "nabla{}: {}", t + 1, c)?;
        }
        Ok(())
    }
}

/// `H²` basis whose representatives are the family's `∇` forms.
pub fn nabla_cohomology(family: Family, n: usize) -> Result<CohomologyBasis> {
    let a = algebra(family, n)?;
    let (h, _) = cohomology_basis(&a).rebase(nabla_basis(family, n)?)?;
    Ok(h)
}

/// `φᵀ (Σ α_i ∇_i) φ` reduced modulo `B²` and expressed in the `∇`-basis.
pub fn parametric_action(family: Family, n: usize) -> Result<ActionFormula> {
    let tmpl = automorphism_template(family, n)?;
    let h = nabla_cohomology(family, n)?;
    action_from_parts(family, n, &tmpl, &h)
}

pub(crate) fn action_from_parts(
    family: Family,
    n: usize,
    tmpl: &ParamMatrix,
    h: &CohomologyBasis,
) -> Result<ActionFormula> {
    // sparse M(α) = Σ α_t ∇_t
    let mut m: HashMap<(usize, usize), ParamPoly> = HashMap::new();
    for (t, form) in h.h2_reps.iter().enumerate() {
        let a = ParamPoly::var(&alpha_var(t + 1));
        for i in 0..n {
            for j in 0..n {
                let c = form.get(i, j);
                if !c.is_zero() {
                    let e = m.entry((i, j)).or_default();
                    *e = std::mem::take(e) + a.scale(c);
                }
            }
        }
    }
    let mut support: Vec<((usize, usize), ParamPoly)> = m.into_iter().collect();
    support.sort_by_key(|(k, _)| *k);
    let mut entries = vec![ParamPoly::zero(); n * n];
    for p in 0..n {
        for q in 0..n {
            let mut acc = ParamPoly::zero();
            for ((i, j), c) in &support {
                let u = tmpl.get(*i, p);
                let v = tmpl.get(*j, q);
                if u.is_zero() || v.is_zero() {
                    continue;
                }
                acc = acc + &(c * u) * v;
            }
            entries[p * n + q] = acc;
        }
    }
    let coefficients = h.coords_poly(&entries)?;
    Ok(ActionFormula {
        family,
        n,
        coefficients,
    })
}

/// The action as displayed in the literature, for comparison.
pub fn stated_formula(family: Family, n: usize) -> Result<ActionFormula> {
    let src: Vec<String> = match family {
        Family::Mu0 => vec![format!("alpha1*x^{}", n + 1)],
        Family::Mu1(1) => vec![
            format!("alpha1*x^{n}"),
            "alpha2*x*y+alpha1*x*z+alpha4*w*y".into(),
            "alpha3*x*y+alpha1*x*z+alpha4*w*y".into(),
            "alpha4*y^2".into(),
        ],
        Family::Mu1(2) => {
            if n % 2 == 0 {
                return Err(Error::Unsupported(format!("{family} needs odd n, got {n}")));
            }
            let h = (n - 1) / 2;
            vec![
                format!("x^{h}*(alpha1*x+alpha3*z)"),
                format!("x^{h}*(alpha2*x+alpha3*z)"),
                format!("alpha3*x^{}", n - 1),
            ]
        }
        Family::Mu1(3) => vec![
            format!("alpha1*x^{}+alpha3*x^{}*z", n - 1, n - 2),
            format!("alpha2*x^{}+alpha3*x^{}*z", n - 1, n - 2),
            format!("alpha3*x^{}", 2 * n - 4),
        ],
        Family::Mu1(4) => vec![
            "alpha1+alpha3*z".into(),
            "alpha2+alpha3*z".into(),
            "alpha3".into(),
        ],
        _ => return Err(Error::Unsupported(format!("no action formula for {family}"))),
    };
    let coefficients = src.iter().map(|s| s.parse()).collect::<Result<Vec<ParamPoly>>>()?;
    Ok(ActionFormula {
        family,
        n,
        coefficients,
    })
}

#[derive(Clone, Debug)]
pub struct ActionReport {
    pub family: Family,
    pub n: usize,
    pub computed: ActionFormula,
    pub expected: ActionFormula,
    /// Indices (0-based) of coefficients that differ.
    pub mismatches: Vec<usize>,
}

impl ActionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for ActionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "action {} n={}", self.family, self.n)?;
        for (t, (c, e)) in self
            .computed
            .coefficients
            .iter()
            .zip(&self.expected.coefficients)
            .enumerate()
        {
            let mark = if c == e { "ok" } else { "MISMATCH" };
            writeln!(f, "  nabla{}: computed {c} | expected {e} | {mark}", t + 1)?;
        }
        write!(f, "verdict: {}", if self.passed() { "pass" } else { "fail" })
    }
}

pub fn verify_action(family: Family, n: usize) -> Result<ActionReport> {
    let computed = parametric_action(family, n)?;
    let expected = stated_formula(family, n)?;
    let mismatches = (0..computed.h2_dim().max(expected.h2_dim()))
        .filter(|&t| computed.coefficients.get(t) != expected.coefficients.get(t))
        .collect();
    Ok(ActionReport {
        family,
        n,
        computed,
        expected,
        mismatches,
    })
}
