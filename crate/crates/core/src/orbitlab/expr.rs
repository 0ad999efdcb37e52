//! Expression language for case data: rationals, identifiers, `+ - * / ^`,
//! `sqrt(e)` and `root(k, e)`. Values are polynomials, so identifiers without
//! a binding stay symbolic; division, roots and exponents need constants.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact::{ParamPoly, Scalar};

pub type Env = HashMap<String, Scalar>;

pub fn eval(src: &str, env: &Env) -> Result<ParamPoly> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, env, src };
    let v = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{src}`")));
    }
    Ok(v)
}

pub fn eval_scalar(src: &str, env: &Env) -> Result<Scalar> {
    eval(src, env)?
        .as_constant()
        .ok_or_else(|| Error::Parse(format!("`{src}` has unbound identifiers")))
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let cs: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < cs.len() && cs[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Tok::Num(cs[st..i].iter().collect::<String>().parse()?));
        } else if c.is_alphabetic() || c == '_' {
            let st = i;
            while i < cs.len() && (cs[i].is_alphanumeric() || cs[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(cs[st..i].iter().collect()));
        } else if "+-*/^(),".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Parse(format!("unexpected `{c}` in `{s}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    env: &'a Env,
    src: &'a str,
}

impl Parser<'_> {
    fn eat(&mut self, c: char) -> bool {
        if self.toks.get(self.pos) == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(Error::Parse(format!("expected `{c}` in `{}`", self.src)))
        }
    }

    fn constant(&self, p: &ParamPoly, what: &str) -> Result<Scalar> {
        p.as_constant()
            .ok_or_else(|| Error::Parse(format!("{what} must be constant in `{}`", self.src)))
    }

    fn sum(&mut self) -> Result<ParamPoly> {
        let mut acc = if self.eat('-') {
            -self.product()?
        } else {
            self.eat('+');
            self.product()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.product()?;
            } else if self.eat('-') {
                acc = acc - self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<ParamPoly> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                let d = self.constant(&d, "divisor")?;
                let inv = d
                    .inv()
                    .ok_or_else(|| Error::Guard(format!("division by zero in `{}`", self.src)))?;
                acc = acc.scale(&inv);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<ParamPoly> {
        if self.eat('-') {
            Ok(-self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ParamPoly> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let e = self.unary_exponent()?;
        if e >= 0 {
            return Ok(base.pow(e as u32));
        }
        let b = self.constant(&base, "base of a negative power")?;
        let inv = b
            .inv()
            .ok_or_else(|| Error::Guard(format!("zero to a negative power in `{}`", self.src)))?;
        Ok(ParamPoly::constant(inv.pow((-e) as u32)))
    }

    fn unary_exponent(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let e = self.atom()?;
        let e = self.constant(&e, "exponent")?;
        let e = to_int(&e).ok_or_else(|| Error::Parse(format!("non-integer exponent in `{}`", self.src)))?;
        Ok(if neg { -e } else { e })
    }

    fn atom(&mut self) -> Result<ParamPoly> {
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(ParamPoly::constant(n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match name.as_str() {
                    "sqrt" | "root" if self.toks.get(self.pos) == Some(&Tok::Op('(')) => {
                        self.pos += 1;
                        let k = if name == "root" {
                            let k = self.sum()?;
                            self.expect(',')?;
                            to_int(&self.constant(&k, "root index")?)
                                .filter(|&k| k > 0)
                                .ok_or_else(|| Error::Parse(format!("bad root index in `{}`", self.src)))?
                        } else {
                            2
                        };
                        let arg = self.sum()?;
                        self.expect(')')?;
                        let arg = self.constant(&arg, "radicand")?;
                        let r = arg.nth_root(k as u32).ok_or_else(|| {
                            Error::Guard(format!("root({k}, {}) is not rational", arg.pretty()))
                        })?;
                        Ok(ParamPoly::constant(r))
                    }
                    _ => Ok(match self.env.get(&name) {
                        Some(v) => ParamPoly::constant(v.clone()),
                        None => ParamPoly::var(&name),
                    }),
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            other => Err(Error::Parse(format!("unexpected {other:?} in `{}`", self.src))),
        }
    }
}

fn to_int(s: &Scalar) -> Option<i64> {
    if s.is_integer() {
        s.numer().to_string().parse().ok()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &[(&str, i64)]) -> Env {
        pairs.iter().map(|(k, v)| (k.to_string(), Scalar::from_int(*v))).collect()
    }

    #[test]
    fn radicals_and_powers() {
        let e = env(&[("n", 5), ("a", 4)]);
        assert_eq!(eval_scalar("root(n-3, a)", &e).unwrap(), Scalar::from_int(2));
        assert_eq!(eval_scalar("sqrt(a)^-1", &e).unwrap(), Scalar::new(1, 2));
        assert_eq!(eval_scalar("-2^2", &e).unwrap(), Scalar::from_int(-4));
        assert_eq!(eval_scalar("a^(n-3)/8", &e).unwrap(), Scalar::from_int(2));
        assert!(matches!(eval_scalar("root(2, 2)", &e), Err(Error::Guard(_))));
        assert!(matches!(eval_scalar("1/(a-4)", &e), Err(Error::Guard(_))));
    }

    #[test]
    fn unbound_names_stay_symbolic() {
        let e = env(&[("b", 2)]);
        let p = eval("1 + b*t", &e).unwrap();
        assert_eq!(p, "1+2*t".parse().unwrap());
        assert!(eval_scalar("t", &e).is_err());
    }
}
