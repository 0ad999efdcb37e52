//! Named algebra families, their `∇`-bases of `H²`, and automorphism templates.

mod template;

use std::fmt;
use std::str::FromStr;

pub use template::{automorphism_template, mul_poly, Constraint, ParamMatrix};

use crate::algebra::Algebra;
use crate::cohomology::{delta_ij, BilinearForm};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `μ₀ⁿ`
    Mu0,
    /// `μ_{1,k}ⁿ`, k = 1..4
    Mu1(u8),
    /// `μ_{2,k}ⁿ`, k = 1..10
    Mu2(u8),
    /// `μ_{3,k}ⁿ`, k = 1..7
    Mu3(u8),
    /// `μ_{4,k}ⁿ`, k = 1..4
    Mu4(u8),
}

impl Family {
    pub fn all() -> Vec<Family> {
        let mut v = vec![Family::Mu0];
        v.extend((1..=4).map(Family::Mu1));
        v.extend((1..=10).map(Family::Mu2));
        v.extend((1..=7).map(Family::Mu3));
        v.extend((1..=4).map(Family::Mu4));
        v
    }

    pub fn min_dim(self) -> usize {
        match self {
            Family::Mu0 => 1,
            Family::Mu1(_) => 4,
            Family::Mu2(_) => 6,
            Family::Mu3(_) => 7,
            Family::Mu4(_) => 8,
        }
    }

    pub fn has_alpha(self) -> bool {
        matches!(self, Family::Mu2(2) | Family::Mu2(9) | Family::Mu3(3))
    }

    fn valid(self) -> bool {
        match self {
            Family::Mu0 => true,
            Family::Mu1(k) | Family::Mu4(k) => (1..=4).contains(&k),
            Family::Mu2(k) => (1..=10).contains(&k),
            Family::Mu3(k) => (1..=7).contains(&k),
        }
    }

    /// Display name such as `μ_{2,3}`.
    pub fn pretty(self) -> String {
        match self {
            Family::Mu0 => "μ_0".into(),
            Family::Mu1(k) => format!("μ_{{1,{k}}}"),
            Family::Mu2(k) => format!("μ_{{2,{k}}}"),
            Family::Mu3(k) => format!("μ_{{3,{k}}}"),
            Family::Mu4(k) => format!("μ_{{4,{k}}}"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Mu0 => write!(f, "mu0"),
            Family::Mu1(k) => write!(f, "mu1_{k}"),
            Family::Mu2(k) => write!(f, "mu2_{k}"),
            Family::Mu3(k) => write!(f, "mu3_{k}"),
            Family::Mu4(k) => write!(f, "mu4_{k}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSpec(format!("unknown family `{s}`"));
        if s == "mu0" {
            return Ok(Family::Mu0);
        }
        let rest = s.strip_prefix("mu").ok_or_else(bad)?;
        let (level, k) = rest.split_once('_').ok_or_else(bad)?;
        let k: u8 = k.parse().map_err(|_| bad())?;
        let fam = match level {
            "1" => Family::Mu1(k),
            "2" => Family::Mu2(k),
            "3" => Family::Mu3(k),
            "4" => Family::Mu4(k),
            _ => return Err(bad()),
        };
        if fam.valid() {
            Ok(fam)
        } else {
            Err(bad())
        }
    }
}

/// Coefficient of a defining relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Coef {
    One,
    Alpha,
}

/// Defining relations `e_i e_j = c e_k` (1-based) of a family member, without range guards.
pub fn relations(family: Family, n: usize) -> Vec<(usize, usize, usize, Coef)> {
    use Coef::{Alpha, One};
    let chain_top = match family {
        Family::Mu0 => n,
        Family::Mu1(_) => n - 1,
        Family::Mu2(_) => n - 2,
        Family::Mu3(_) => n - 3,
        Family::Mu4(_) => n - 4,
    };
    let mut r = Vec::new();
    for i in 1..chain_top {
        for j in 1..=chain_top - i {
            r.push((i, j, i + j, One));
        }
    }
    let extra: Vec<(usize, usize, usize, Coef)> = match family {
        Family::Mu0 | Family::Mu1(1) => vec![],
        Family::Mu1(k) => {
            let (m, t) = (n, n - 1);
            match k {
                2 => vec![(m, m, t, One)],
                3 => vec![(1, m, t, One)],
                _ => vec![(1, m, t, One), (m, m, t, One)],
            }
        }
        Family::Mu2(k) => {
            let m = n - 1;
            match k {
                1 => vec![(m, 1, n, One)],
                2 => vec![(1, m, n, One), (m, 1, n, Alpha)],
                3 => vec![(m, m, n, One)],
                4 => vec![(1, m, n, One), (m, m, n, One)],
                5 => vec![(1, m, n - 2, One), (1, m, n, One), (m, 1, n, One)],
                6 => vec![(1, m, n - 2, One), (m, 1, n, One), (m, m, n, One)],
                7 => vec![(1, m, n - 2, One), (m, m, n, One)],
                8 => vec![(1, m, n - 2, One), (1, m, n, One), (m, 1, n, One), (m, m, n - 2, One)],
                9 => vec![(1, m, n, One), (m, 1, n, Alpha), (m, m, n - 2, One)],
                _ => vec![(m, 1, n, One), (m, m, n - 2, One)],
            }
        }
        Family::Mu3(k) => {
            let m = n - 2;
            match k {
                1 => vec![(1, m, n - 1, One), (m, 1, n, One)],
                2 => vec![(1, m, n - 1, One), (m, 1, n - 1, One), (m, 1, n, One), (m, m, n, One)],
                3 => vec![(1, m, n - 1, One), (m, 1, n - 1, Alpha), (m, m, n, One)],
                4 => vec![(m, 1, n - 1, One), (m, m, n, One)],
                5 => vec![(1, m, n - 3, One), (1, m, n - 1, One), (m, 1, n - 1, One), (m, m, n, One)],
                6 => vec![
                    (1, m, n - 3, One),
                    (1, m, n - 1, One),
                    (m, 1, n - 1, One),
                    (m, 1, n, One),
                    (m, m, n, One),
                ],
                _ => vec![(1, m, n - 1, One), (m, 1, n, One), (m, m, n - 3, One)],
            }
        }
        Family::Mu4(k) => {
            let m = n - 3;
            let mut v = vec![(m, 1, n - 1, One)];
            if k >= 3 {
                v.push((1, m, n - 4, One));
            }
            v.push((1, m, n - 2, One));
            if k == 2 || k == 4 {
                v.push((m, m, n - 4, One));
            }
            v.push((m, m, n, One));
            v
        }
    };
    r.extend(extra);
    r
}

/// Family member with dimension and optional parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    pub alpha: Option<Scalar>,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Self {
        FamilySpec {
            family,
            n,
            alpha: None,
        }
    }

    pub fn with_alpha(family: Family, n: usize, alpha: Scalar) -> Self {
        FamilySpec {
            family,
            n,
            alpha: Some(alpha),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.family.valid() {
            return Err(Error::InvalidSpec(format!("unknown family {:?}", self.family)));
        }
        if self.n < self.family.min_dim() {
            return Err(Error::InvalidSpec(format!(
                "{} requires n >= {}, got {}",
                self.family,
                self.family.min_dim(),
                self.n
            )));
        }
        match (self.family.has_alpha(), &self.alpha) {
            (true, None) => Err(Error::InvalidSpec(format!("{} requires alpha", self.family))),
            (false, Some(_)) => Err(Error::InvalidSpec(format!("{} takes no alpha", self.family))),
            _ => Ok(()),
        }
    }

    /// Display name such as `μ_{2,2}^6(3)`.
    pub fn pretty(&self) -> String {
        match &self.alpha {
            Some(a) => format!("{}^{}({})", self.family.pretty(), self.n, a.pretty()),
            None => format!("{}^{}", self.family.pretty(), self.n),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.family, self.n)?;
        if let Some(a) = &self.alpha {
            write!(f, ":alpha={a}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `<family>:<n>[:alpha=<num/den>]`
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(Error::InvalidSpec(format!("malformed spec `{s}`")));
        }
        let family: Family = parts[0].parse()?;
        let n: usize = parts[1]
            .parse()
            .map_err(|_| Error::InvalidSpec(format!("invalid dimension in `{s}`")))?;
        let alpha = match parts.get(2) {
            None => None,
            Some(a) => {
                let v = a
                    .strip_prefix("alpha=")
                    .ok_or_else(|| Error::InvalidSpec(format!("expected alpha=<q> in `{s}`")))?;
                Some(v.parse().map_err(|_| Error::InvalidSpec(format!("invalid alpha `{v}`")))?)
            }
        };
        let spec = FamilySpec { family, n, alpha };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn make_algebra(spec: &FamilySpec) -> Result<Algebra> {
    spec.validate()?;
    make_algebra_unchecked(spec)
}

/// Builds the table without the minimum-dimension guard, e.g. for small truncations.
pub fn make_algebra_unchecked(spec: &FamilySpec) -> Result<Algebra> {
    let alpha = spec.alpha.clone().unwrap_or_else(Scalar::one);
    let n = spec.n;
    let min_ok = match spec.family {
        Family::Mu0 => n >= 1,
        Family::Mu1(_) => n >= 3,
        Family::Mu2(_) => n >= 4,
        Family::Mu3(_) => n >= 5,
        Family::Mu4(_) => n >= 6,
    };
    if !min_ok {
        return Err(Error::InvalidSpec(format!("{} is undefined at n = {n}", spec.family)));
    }
    Algebra::new(
        n,
        relations(spec.family, n).into_iter().map(|(i, j, k, c)| {
            let v = match c {
                Coef::One => Scalar::one(),
                Coef::Alpha => alpha.clone(),
            };
            (i, j, k, v)
        }),
    )
}

/// Shorthand for `make_algebra(&FamilySpec::new(family, n))`.
pub fn algebra(family: Family, n: usize) -> Result<Algebra> {
    make_algebra(&FamilySpec::new(family, n))
}

/// The named representatives `∇_1, ∇_2, …` of a basis of `H²`.
pub fn nabla_basis(family: Family, n: usize) -> Result<Vec<BilinearForm>> {
    FamilySpec::new(family, n).validate().or_else(|e| match family {
        Family::Mu0 | Family::Mu1(_) => Err(e),
        _ => Err(Error::Unsupported(format!("no ∇-basis for {family}"))),
    })?;
    let sum_antidiag = |top: usize| {
        let mut m = Matrix::zeros(n, n);
        for j in 1..top {
            m.set(j - 1, top - j - 1, Scalar::one());
        }
        m
    };
    match family {
        Family::Mu0 => Ok(vec![sum_antidiag(n + 1)]),
        Family::Mu1(1) => Ok(vec![
            sum_antidiag(n),
            delta_ij(n, 1, n),
            delta_ij(n, n, 1),
            delta_ij(n, n, n),
        ]),
        Family::Mu1(_) => Ok(vec![delta_ij(n, 1, n), delta_ij(n, n, 1), delta_ij(n, n, n)]),
        _ => Err(Error::Unsupported(format!("no ∇-basis for {family}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_parsing() {
        let s: FamilySpec = "mu2_2:6:alpha=3/1".parse().unwrap();
        assert_eq!(s, FamilySpec::with_alpha(Family::Mu2(2), 6, Scalar::from_int(3)));
        assert_eq!(s.to_string(), "mu2_2:6:alpha=3/1");
        assert!("mu1_5:6".parse::<FamilySpec>().is_err());
        assert!("mu2_1:5".parse::<FamilySpec>().is_err());
        assert!("mu2_2:6".parse::<FamilySpec>().is_err());
        assert!("mu2_1:6:alpha=1".parse::<FamilySpec>().is_err());
        assert!("nu0:4".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn every_family_has_a_name_round_trip() {
        for f in Family::all() {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
