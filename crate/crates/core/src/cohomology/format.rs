//! Text format: `{"dim": n, "components": [[[i, j, "num/den"], ...], ...]}`.

use std::fmt::Write as _;

use serde_json::Value;

use super::Cocycle;
use crate::algebra::parse_scalar_value;
use crate::error::{Error, Result};
use crate::exact::Matrix;

impl Cocycle {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{{").unwrap();
        writeln!(s, "  \"dim\": {},", self.dim).unwrap();
        writeln!(s, "  \"components\": [").unwrap();
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|f| {
                let mut entries = Vec::new();
                for i in 0..self.dim {
                    for j in 0..self.dim {
                        let c = f.get(i, j);
                        if !c.is_zero() {
                            entries.push(format!("      [{}, {}, \"{c}\"]", i + 1, j + 1));
                        }
                    }
                }
                if entries.is_empty() {
                    "    []".to_string()
                } else {
                    format!("    [\n{}\n    ]", entries.join(",\n"))
                }
            })
            .collect();
        if !comps.is_empty() {
            writeln!(s, "{}", comps.join(",\n")).unwrap();
        }
        writeln!(s, "  ]").unwrap();
        s.push_str("}\n");
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing or invalid `dim`".into()))? as usize;
        let comps = v
            .get("components")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing or invalid `components`".into()))?;
        let mut components = Vec::with_capacity(comps.len());
        for comp in comps {
            let entries = comp
                .as_array()
                .ok_or_else(|| Error::Parse("component is not a list".into()))?;
            let mut m = Matrix::zeros(dim, dim);
            for e in entries {
                let r = e
                    .as_array()
                    .filter(|r| r.len() == 3)
                    .ok_or_else(|| Error::Parse(format!("entry {e} is not [i, j, c]")))?;
                let idx = |x: &Value| -> Result<usize> {
                    x.as_u64()
                        .map(|u| u as usize)
                        .filter(|u| (1..=dim).contains(u))
                        .ok_or_else(|| Error::Parse(format!("invalid index {x}")))
                };
                let (i, j) = (idx(&r[0])?, idx(&r[1])?);
                let c = m.get(i - 1, j - 1) + parse_scalar_value(&r[2])?;
                m.set(i - 1, j - 1, c);
            }
            components.push(m);
        }
        if components.is_empty() {
            return Err(Error::Parse("cocycle has no components".into()));
        }
        Ok(Cocycle { dim, components })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Scalar;

    #[test]
    fn round_trip() {
        let mut a = Matrix::zeros(3, 3);
        a.set(0, 2, Scalar::one());
        a.set(1, 1, Scalar::new(-1, 2));
        let c = Cocycle::new(3, vec![a, Matrix::zeros(3, 3)]).unwrap();
        let t = c.to_text();
        let d = Cocycle::from_text(&t).unwrap();
        assert_eq!(c, d);
        assert_eq!(d.to_text(), t);
        assert!(Cocycle::from_text(r#"{"dim": 2, "components": [[[3, 1, "1/1"]]]}"#).is_err());
    }
}
