//! Text formats: algebras as `{"dim": n, "table": [[i, j, k, "num/den"], ...]}`,
//! matrices as `{"rows": r, "cols": c, "entries": [["num/den", ...], ...]}`.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::Value;

use super::Algebra;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Scalar};

impl Algebra {
    /// Canonical text form: entries sorted, coefficients always `num/den`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{{").unwrap();
        writeln!(s, "  \"dim\": {},", self.dim()).unwrap();
        if self.nnz() == 0 {
            writeln!(s, "  \"table\": []").unwrap();
        } else {
            writeln!(s, "  \"table\": [").unwrap();
            let rows: Vec<String> = self
                .table()
                .map(|(i, j, k, c)| format!("    [{i}, {j}, {k}, \"{c}\"]"))
                .collect();
            writeln!(s, "{}", rows.join(",\n")).unwrap();
            writeln!(s, "  ]").unwrap();
        }
        s.push_str("}\n");
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing or invalid `dim`".into()))? as usize;
        let table = v
            .get("table")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing or invalid `table`".into()))?;
        let mut entries = Vec::with_capacity(table.len());
        for row in table {
            let r = row
                .as_array()
                .filter(|r| r.len() == 4)
                .ok_or_else(|| Error::Parse(format!("table entry {row} is not [i, j, k, c]")))?;
            let idx = |x: &Value| -> Result<usize> {
                x.as_u64()
                    .map(|u| u as usize)
                    .ok_or_else(|| Error::Parse(format!("invalid index {x}")))
            };
            entries.push((idx(&r[0])?, idx(&r[1])?, idx(&r[2])?, parse_scalar_value(&r[3])?));
        }
        Algebra::new(dim, entries).map_err(|e| match e {
            Error::Dimension(m) => Error::Parse(m),
            e => e,
        })
    }
}

pub(crate) fn parse_scalar_value(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) if n.is_i64() => Ok(Scalar::from_int(n.as_i64().unwrap())),
        _ => Err(Error::Parse(format!("invalid coefficient {v}"))),
    }
}

/// Witness matrices: column `j` is the image of basis vector `j`.
pub fn matrix_to_text(m: &Matrix) -> String {
    let mut s = String::new();
    writeln!(s, "{{").unwrap();
    writeln!(s, "  \"rows\": {},", m.rows()).unwrap();
    writeln!(s, "  \"cols\": {},", m.cols()).unwrap();
    let rows: Vec<String> = (0..m.rows())
        .map(|i| {
            let r: Vec<String> = (0..m.cols()).map(|j| format!("\"{}\"", m.get(i, j))).collect();
            format!("    [{}]", r.join(", "))
        })
        .collect();
    if rows.is_empty() {
        writeln!(s, "  \"entries\": []").unwrap();
    } else {
        writeln!(s, "  \"entries\": [\n{}\n  ]", rows.join(",\n")).unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn matrix_from_text(text: &str) -> Result<Matrix> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let size = |k: &str| -> Result<usize> {
        v.get(k)
            .and_then(Value::as_u64)
            .map(|u| u as usize)
            .ok_or_else(|| Error::Parse(format!("missing or invalid `{k}`")))
    };
    let (rows, cols) = (size("rows")?, size("cols")?);
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing or invalid `entries`".into()))?;
    if entries.len() != rows {
        return Err(Error::Parse(format!("{} rows listed, {rows} declared", entries.len())));
    }
    let mut data = Vec::with_capacity(rows * cols);
    for row in entries {
        let r = row
            .as_array()
            .filter(|r| r.len() == cols)
            .ok_or_else(|| Error::Parse(format!("row {row} does not have {cols} entries")))?;
        for x in r {
            data.push(parse_scalar_value(x)?);
        }
    }
    Matrix::from_data(rows, cols, data)
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Algebra::from_text(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::from_data(2, 3, ["1", "-2/3", "0", "5", "7/2", "1/9"].iter().map(|x| x.parse().unwrap()).collect())
            .unwrap();
        let t = matrix_to_text(&m);
        assert_eq!(matrix_from_text(&t).unwrap(), m);
        assert_eq!(matrix_to_text(&matrix_from_text(&t).unwrap()), t);
        assert!(matrix_from_text("{\"rows\": 1, \"cols\": 2, \"entries\": [[\"1\"]]}").is_err());
    }

    #[test]
    fn round_trip_is_bit_exact() {
        let a = Algebra::new(
            3,
            [
                (1, 1, 2, Scalar::one()),
                (1, 2, 3, Scalar::new(-3, 7)),
                (2, 1, 3, Scalar::from_int(2)),
            ],
        )
        .unwrap();
        let t = a.to_text();
        let b = Algebra::from_text(&t).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.to_text(), t);
        assert!(t.contains("[1, 2, 3, \"-3/7\"]"));
    }

    #[test]
    fn accepts_integer_strings_and_rejects_garbage() {
        let a = Algebra::from_text(r#"{"dim": 2, "table": [[1, 1, 2, "5"]]}"#).unwrap();
        assert_eq!(a.coeff(1, 1, 2), Scalar::from_int(5));
        assert!(Algebra::from_text(r#"{"dim": 2, "table": [[1, 1, 3, "1/1"]]}"#).is_err());
        assert!(Algebra::from_text(r#"{"dim": 2}"#).is_err());
        assert!(Algebra::from_text("not json").is_err());
        let z = Algebra::zero(3);
        assert_eq!(Algebra::from_text(&z.to_text()).unwrap(), z);
    }
}
