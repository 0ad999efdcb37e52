use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::Arc;

use super::Scalar;
use crate::error::{Error, Result};

pub type Var = Arc<str>;

/// Product of variable powers; factors sorted by variable name, exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: &str) -> Self {
        Monomial(vec![(Var::from(v), 1)])
    }

    pub fn from_factors(mut f: Vec<(Var, u32)>) -> Self {
        f.retain(|(_, e)| *e > 0);
        f.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Var, u32)> = Vec::with_capacity(f.len());
        for (v, e) in f {
            match out.last_mut() {
                Some((lv, le)) if *lv == v => *le += e,
                _ => out.push((v, e)),
            }
        }
        Monomial(out)
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn degree_in(&self, v: &str) -> u32 {
        self.0.iter().find(|(w, _)| &**w == v).map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// Removes `v` entirely, returning its exponent.
    pub fn split_off(&self, v: &str) -> (u32, Monomial) {
        let e = self.degree_in(v);
        let rest = self.0.iter().filter(|(w, _)| &**w != v).cloned().collect();
        (e, Monomial(rest))
    }
}

impl Ord for Monomial {
    /// Graded lexicographic with variables ordered by name.
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.0.get(i), other.0.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (Some((a, ea)), Some((b, eb))) => match a.cmp(b) {
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                        Ordering::Equal => match ea.cmp(eb) {
                            Ordering::Equal => {
                                i += 1;
                                j += 1;
                            }
                            o => return o,
                        },
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Sparse multivariate polynomial over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

#[derive(Clone, Debug)]
pub enum PolyBinding {
    Value(Scalar),
    Poly(ParamPoly),
}

impl From<Scalar> for PolyBinding {
    fn from(s: Scalar) -> Self {
        PolyBinding::Value(s)
    }
}

impl From<ParamPoly> for PolyBinding {
    fn from(p: ParamPoly) -> Self {
        PolyBinding::Poly(p)
    }
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn int(c: i64) -> Self {
        ParamPoly::constant(Scalar::from_int(c))
    }

    pub fn one() -> Self {
        ParamPoly::int(1)
    }

    pub fn var(v: &str) -> Self {
        ParamPoly::term(Scalar::one(), Monomial::var(v))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut p = ParamPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: &str) -> u32 {
        self.terms.keys().map(|m| m.degree_in(v)).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> ParamPoly {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> ParamPoly {
        let mut out = ParamPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Substitutes bound variables and renormalizes; unbound variables stay symbolic.
    pub fn substitute(&self, bindings: &HashMap<Var, PolyBinding>) -> ParamPoly {
        let mut cache: HashMap<(Var, u32), ParamPoly> = HashMap::new();
        let mut out = ParamPoly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            let mut polys: Vec<ParamPoly> = Vec::new();
            for (v, e) in &m.0 {
                match bindings.get(v) {
                    None => rest.push((v.clone(), *e)),
                    Some(PolyBinding::Value(s)) => coeff *= &s.pow(*e),
                    Some(PolyBinding::Poly(p)) => {
                        let key = (v.clone(), *e);
                        let pw = cache.entry(key).or_insert_with(|| p.pow(*e)).clone();
                        polys.push(pw);
                    }
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let mut t = ParamPoly::term(coeff, Monomial(rest));
            for p in polys {
                t = &t * &p;
            }
            out = out + t;
        }
        out
    }

    pub fn substitute_values(&self, values: &[(&str, Scalar)]) -> ParamPoly {
        let b: HashMap<Var, PolyBinding> = values
            .iter()
            .map(|(k, v)| (Var::from(*k), PolyBinding::Value(v.clone())))
            .collect();
        self.substitute(&b)
    }

    /// Full evaluation; `None` if some variable is left unbound.
    pub fn eval(&self, values: &HashMap<Var, Scalar>) -> Option<Scalar> {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in &m.0 {
                t *= &values.get(v)?.pow(*e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Coefficients of powers of `v`: `p = Σ_k coeffs[k] v^k`.
    pub fn univariate_coeffs(&self, v: &str) -> Vec<ParamPoly> {
        let mut out = vec![ParamPoly::zero(); self.degree_in(v) as usize + 1];
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(v);
            out[e as usize].add_term(rest, c.clone());
        }
        out
    }

    /// Splits a polynomial of total degree ≤ 1 into its constant and linear coefficients.
    pub fn linear_parts(&self) -> Option<(Scalar, BTreeMap<Var, Scalar>)> {
        let mut lin = BTreeMap::new();
        let mut c0 = Scalar::zero();
        for (m, c) in &self.terms {
            match m.0.as_slice() {
                [] => c0 = c.clone(),
                [(v, 1)] => {
                    lin.insert(v.clone(), c.clone());
                }
                _ => return None,
            }
        }
        Some((c0, lin))
    }

    /// Divides every coefficient by the leading coefficient.
    pub fn monic(&self) -> ParamPoly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => self.clone(),
        }
    }
}

impl Add for ParamPoly {
    type Output = ParamPoly;
    fn add(mut self, rhs: ParamPoly) -> ParamPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        self.clone() + rhs.clone()
    }
}

impl Sub for ParamPoly {
    type Output = ParamPoly;
    fn sub(mut self, rhs: ParamPoly) -> ParamPoly {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        self.clone() - rhs.clone()
    }
}

impl Neg for ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut out = ParamPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: ParamPoly) -> ParamPoly {
        &self * &rhs
    }
}

impl From<Scalar> for ParamPoly {
    fn from(s: Scalar) -> Self {
        ParamPoly::constant(s)
    }
}

impl fmt::Display for ParamPoly {
    /// Leading term first, e.g. `2*x^2*y - 1/3*z + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{}", a.pretty())?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", a.pretty())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ParamPoly {
    type Err = Error;

    /// Parses sums/products of rationals, identifiers, `^` powers and parentheses.
    fn from_str(s: &str) -> Result<Self> {
        let toks = tokenize(s)?;
        let mut p = Parser { toks, pos: 0 };
        let out = p.expr()?;
        if p.pos != p.toks.len() {
            return Err(Error::Parse(format!("trailing input in polynomial `{s}`")));
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            let t: String = cs[st..i].iter().collect();
            out.push(Tok::Num(t.parse()?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected `{c}` in polynomial")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek_op(&self, c: char) -> bool {
        self.toks.get(self.pos) == Some(&Tok::Op(c))
    }

    fn expr(&mut self) -> Result<ParamPoly> {
        let mut neg = false;
        if self.peek_op('-') {
            neg = true;
            self.pos += 1;
        } else if self.peek_op('+') {
            self.pos += 1;
        }
        let mut acc = self.product()?;
        if neg {
            acc = -acc;
        }
        loop {
            if self.peek_op('+') {
                self.pos += 1;
                acc = acc + self.product()?;
            } else if self.peek_op('-') {
                self.pos += 1;
                acc = acc - self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<ParamPoly> {
        let mut acc = self.power()?;
        loop {
            if self.peek_op('*') {
                self.pos += 1;
                acc = &acc * &self.power()?;
            } else if self.peek_op('/') {
                self.pos += 1;
                let d = self
                    .power()?
                    .as_constant()
                    .and_then(|c| c.inv())
                    .ok_or_else(|| Error::Parse("division by a non-constant or zero".into()))?;
                acc = acc.scale(&d);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<ParamPoly> {
        let base = self.atom()?;
        if self.peek_op('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Num(e)) if e.is_integer() => {
                    let e = e.numer().to_string().parse::<u32>().map_err(|_| {
                        Error::Parse("exponent out of range".into())
                    })?;
                    self.pos += 1;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse("expected integer exponent".into())),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<ParamPoly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(ParamPoly::constant(n))
            }
            Some(Tok::Ident(v)) => {
                self.pos += 1;
                Ok(ParamPoly::var(&v))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.peek_op(')') {
                    return Err(Error::Parse("missing `)`".into()));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.power()?)
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> ParamPoly {
        s.parse().unwrap()
    }

    #[test]
    fn substitute_to_constant() {
        let xy = p("x*y");
        let v = xy.substitute_values(&[("x", Scalar::from_int(2)), ("y", Scalar::from_int(3))]);
        assert_eq!(v.as_constant(), Some(Scalar::from_int(6)));
        let x5 = p("x^5").substitute_values(&[("x", Scalar::one())]);
        assert_eq!(x5.as_constant(), Some(Scalar::one()));
    }

    #[test]
    fn action_coefficient_vanishes_at_case_point() {
        let f = p("a2*x*y + a1*x*z + a4*w*y");
        let c = Scalar::from_int(7);
        let v = f.substitute_values(&[
            ("a1", Scalar::one()),
            ("a2", c.clone()),
            ("a3", c.clone()),
            ("a4", Scalar::zero()),
            ("x", Scalar::one()),
            ("y", Scalar::one()),
            ("z", -c),
        ]);
        assert!(v.is_zero());
    }

    #[test]
    fn polynomial_substitution() {
        let f = p("x^2 + y");
        let mut b = HashMap::new();
        b.insert(Var::from("x"), PolyBinding::Poly(p("t + 1")));
        assert_eq!(f.substitute(&b), p("t^2 + 2*t + 1 + y"));
    }

    #[test]
    fn canonical_normalization() {
        assert_eq!(p("x*y - y*x"), ParamPoly::zero());
        assert_eq!(p("(x+y)^2"), p("x^2 + 2*x*y + y^2"));
        assert_eq!(p("3/2*x - 1").to_string(), "3/2*x - 1");
        assert_eq!(p("y^2 + x^3 + x*y").to_string(), "x^3 + x*y + y^2");
    }

    #[test]
    fn univariate_split() {
        let c = p("x^2*y + 3*x + y + 1").univariate_coeffs("x");
        assert_eq!(c, vec![p("y + 1"), p("3"), p("y")]);
    }
}
