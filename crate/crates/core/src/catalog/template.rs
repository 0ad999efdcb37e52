use std::collections::HashMap;

use rand::Rng;

use super::{algebra, Family};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, ParamPoly, Scalar, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constraint {
    NonZero(Var),
    /// Parameter fixed to a constant and already substituted in the entries.
    Fixed(Var, Scalar),
}

/// Matrix of polynomials; column `j` is the image of `e_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamMatrix {
    pub n: usize,
    pub entries: Vec<ParamPoly>,
    pub params: Vec<Var>,
    pub constraints: Vec<Constraint>,
}

impl ParamMatrix {
    pub fn get(&self, i: usize, j: usize) -> &ParamPoly {
        &self.entries[i * self.n + j]
    }

    pub fn column(&self, j: usize) -> Vec<ParamPoly> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn nonzero_params(&self) -> Vec<Var> {
        self.constraints
            .iter()
            .filter_map(|c| match c {
                Constraint::NonZero(v) => Some(v.clone()),
                Constraint::Fixed(..) => None,
            })
            .collect()
    }

    pub fn satisfies(&self, point: &HashMap<Var, Scalar>) -> bool {
        self.params.iter().all(|p| point.contains_key(p))
            && self.nonzero_params().iter().all(|v| !point[v].is_zero())
    }

    pub fn instantiate(&self, point: &HashMap<Var, Scalar>) -> Result<Matrix> {
        if !self.satisfies(point) {
            return Err(Error::Guard("point violates template constraints".into()));
        }
        let data = self
            .entries
            .iter()
            .map(|p| p.eval(point).expect("all parameters bound"))
            .collect();
        Matrix::from_data(self.n, self.n, data)
    }

    /// Random constraint-satisfying point with small rational coordinates.
    pub fn random_point<R: Rng>(&self, rng: &mut R) -> HashMap<Var, Scalar> {
        let nz = self.nonzero_params();
        self.params
            .iter()
            .map(|p| {
                let v = loop {
                    let num = rng.gen_range(-5i64..=5);
                    let den = rng.gen_range(1i64..=3);
                    let s = Scalar::new(num, den);
                    if !(s.is_zero() && nz.contains(p)) {
                        break s;
                    }
                };
                (p.clone(), v)
            })
            .collect()
    }
}

/// Bilinear product of polynomial coordinate vectors.
pub fn mul_poly(a: &Algebra, u: &[ParamPoly], v: &[ParamPoly]) -> Vec<ParamPoly> {
    let mut out = vec![ParamPoly::zero(); a.dim()];
    for (i, ui) in u.iter().enumerate() {
        if ui.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            if vj.is_zero() {
                continue;
            }
            let p = a.basis_product(i, j);
            if p.iter().all(Scalar::is_zero) {
                continue;
            }
            let uv = ui * vj;
            for (k, c) in p.iter().enumerate() {
                if !c.is_zero() {
                    out[k] = std::mem::take(&mut out[k]) + uv.scale(c);
                }
            }
        }
    }
    out
}

fn var(s: &str) -> ParamPoly {
    ParamPoly::var(s)
}

/// Parametric automorphism `φ`: the images of the generators are free
/// (up to the displayed shape) and the rest follows from `φ(e_k) = φ(e_{k-1})φ(e_1)`.
pub fn automorphism_template(family: Family, n: usize) -> Result<ParamMatrix> {
    let a = algebra(family, n)?;
    let k = match family {
        Family::Mu0 => 0,
        Family::Mu1(k) => k,
        _ => return Err(Error::Unsupported(format!("no automorphism template for {family}"))),
    };
    if k == 2 && n % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "{family} template needs odd n (half-integer powers of x), got {n}"
        )));
    }
    let nv = |s: &str| Var::from(s);
    let chain_top = if k == 0 { n } else { n - 1 };
    let x = if k == 4 { ParamPoly::one() } else { var("x") };
    let mut params = Vec::new();
    let mut constraints = Vec::new();
    if k == 4 {
        constraints.push(Constraint::Fixed(nv("x"), Scalar::one()));
    } else {
        params.push(nv("x"));
        constraints.push(Constraint::NonZero(nv("x")));
    }
    let mut g1 = vec![ParamPoly::zero(); n];
    g1[0] = x.clone();
    for (idx, slot) in g1.iter_mut().enumerate().take(chain_top).skip(1) {
        let name = format!("a{}", idx + 1);
        *slot = var(&name);
        params.push(nv(&name));
    }
    let mut gn = vec![ParamPoly::zero(); n];
    match k {
        0 => {}
        1 => {
            g1[n - 1] = var("w");
            gn[n - 2] = var("z");
            gn[n - 1] = var("y");
            params.extend([nv("w"), nv("z"), nv("y")]);
            constraints.push(Constraint::NonZero(nv("y")));
        }
        _ => {
            g1[n - 1] = var("z");
            gn[n - 2] = var("y");
            params.extend([nv("y"), nv("z")]);
            match k {
                2 => {
                    gn[n - 3] = -(&var("z") * &x.pow(((n - 3) / 2) as u32));
                    gn[n - 1] = x.pow(((n - 1) / 2) as u32);
                }
                3 => gn[n - 1] = x.pow((n - 2) as u32),
                _ => {
                    gn[n - 3] = -var("z");
                    gn[n - 1] = ParamPoly::one();
                }
            }
        }
    }
    let mut cols = vec![g1.clone()];
    for _ in 1..chain_top {
        let next = mul_poly(&a, cols.last().unwrap(), &g1);
        cols.push(next);
    }
    if k != 0 {
        cols.push(gn);
    }
    let mut entries = vec![ParamPoly::zero(); n * n];
    for (j, c) in cols.into_iter().enumerate() {
        for (i, p) in c.into_iter().enumerate() {
            entries[i * n + j] = p;
        }
    }
    Ok(ParamMatrix {
        n,
        entries,
        params,
        constraints,
    })
}
