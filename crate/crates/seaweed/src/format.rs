//! Plain, JSON and CSV renderings of engine results.

use std::fmt::Write;

use serde_json::{json, Map, Value};
use seaweed_core::{IntegerMultiset, PartialIntegerMatrix, PrincipalElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Plain,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "plain" => Ok(Format::Plain),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected plain, json or csv)")),
        }
    }
}

/// `{"value": count, ...}` in ascending value order.
pub fn multiset_to_json(s: &IntegerMultiset) -> Value {
    let map: Map<String, Value> = s.iter().map(|(v, c)| (v.to_string(), Value::from(c))).collect();
    Value::Object(map)
}

pub fn multiset_from_json(v: &Value) -> Option<IntegerMultiset> {
    let mut out = IntegerMultiset::new();
    for (k, c) in v.as_object()? {
        let c = c.as_u64().filter(|&c| c > 0)?;
        out.insert_n(k.parse().ok()?, c);
    }
    Some(out)
}

pub fn multiset(s: &IntegerMultiset, format: Format) -> String {
    match format {
        Format::Plain => format!("{s}\n"),
        Format::Json => format!("{}\n", multiset_to_json(s)),
        Format::Csv => {
            let mut out = String::from("value,count\n");
            for (v, c) in s.iter() {
                let _ = writeln!(out, "{v},{c}");
            }
            out
        }
    }
}

pub fn matrix(m: &PartialIntegerMatrix, format: Format) -> String {
    match format {
        Format::Plain => m.to_text(),
        Format::Json => {
            let rows: Vec<Value> = m.rows().map(|row| json!(row)).collect();
            format!("{}\n", Value::Array(rows))
        }
        Format::Csv => {
            let mut out = String::new();
            for row in m.rows() {
                let cells: Vec<String> =
                    row.iter().map(|c| c.map(|v| v.to_string()).unwrap_or_default()).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
    }
}

pub fn principal(p: &PrincipalElement, format: Format) -> String {
    let entries: Vec<String> = p.diag.iter().map(|r| r.to_string()).collect();
    match format {
        Format::Plain => format!("[{}]\n", entries.join(", ")),
        Format::Json => format!("{}\n", json!(entries)),
        Format::Csv => {
            let mut out = String::from("i,value\n");
            for (i, e) in entries.iter().enumerate() {
                let _ = writeln!(out, "{},{e}", i + 1);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(pairs: &[(i64, u64)]) -> IntegerMultiset {
        IntegerMultiset::from_counts(pairs.iter().copied())
    }

    #[test]
    fn json_keeps_ascending_order() {
        let s = ms(&[(1, 1), (-2, 3), (0, 1)]);
        assert_eq!(multiset(&s, Format::Json), "{\"-2\":3,\"0\":1,\"1\":1}\n");
        assert_eq!(multiset_from_json(&multiset_to_json(&s)), Some(s));
        assert_eq!(multiset_from_json(&json!({"x": 1})), None);
        assert_eq!(multiset_from_json(&json!({"1": 0})), None);
    }

    #[test]
    fn csv_and_plain() {
        let s = ms(&[(0, 2), (1, 1)]);
        assert_eq!(multiset(&s, Format::Csv), "value,count\n0,2\n1,1\n");
        assert_eq!(multiset(&s, Format::Plain), "{0^2, 1}\n");
    }

    #[test]
    fn matrix_formats() {
        let m = PartialIntegerMatrix::from_fn(2, |i, j| (i <= j).then_some(j as i64 - i as i64));
        assert_eq!(matrix(&m, Format::Plain), "0 1\n· 0\n");
        assert_eq!(matrix(&m, Format::Json), "[[0,1],[null,0]]\n");
        assert_eq!(matrix(&m, Format::Csv), "0,1\n,0\n");
    }
}
