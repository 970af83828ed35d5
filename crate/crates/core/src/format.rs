//! JSON exchange format for multicomplexes.
//!
//! ```json
//! { "Q": 2, "s": 2,
//!   "spaces": [{"a": 0, "b": 0, "dim": 1, "labels": ["x"]}],
//!   "maps": [{"i": 1, "a": 0, "b": 0, "rows": 1, "cols": 1, "entries": [["1/2"]]}] }
//! ```
//!
//! Rationals are strings `"p/q"` (or `"p"`); plain JSON integers are accepted
//! on input. An optional `"exterior"` object marks form-valued models.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{format_scalar, int, parse_scalar, Matrix, Scalar};
use crate::multicomplex::{Bidegree, ExteriorInfo, Multicomplex, Space, ValidationError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("JSON parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("I/O error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Text(String),
    Int(i64),
}

impl Entry {
    fn scalar(&self) -> Result<Scalar, ValidationError> {
        match self {
            Entry::Text(s) => parse_scalar(s).map_err(|e| ValidationError::Entry(e.to_string())),
            Entry::Int(n) => Ok(int(*n)),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceRecord {
    a: i64,
    b: i64,
    dim: usize,
    #[serde(default)]
    labels: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MapRecord {
    i: usize,
    a: i64,
    b: i64,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Record {
    #[serde(rename = "Q")]
    q: i64,
    s: usize,
    spaces: Vec<SpaceRecord>,
    maps: Vec<MapRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    exterior: Option<ExteriorInfo>,
}

/// Parses and validates a multicomplex. Missing labels default to `e0, e1, ...`.
pub fn from_json(text: &str) -> Result<Multicomplex, FormatError> {
    let rec: Record = serde_json::from_str(text)?;
    let mut spaces = BTreeMap::new();
    for s in rec.spaces {
        let bd = Bidegree::new(s.a, s.b);
        let labels = if s.labels.is_empty() {
            (0..s.dim).map(|i| format!("e{i}")).collect()
        } else {
            s.labels
        };
        if spaces.insert(bd, Space { dim: s.dim, labels }).is_some() {
            return Err(ValidationError::DuplicateSpace { a: s.a, b: s.b }.into());
        }
    }
    let mut maps = BTreeMap::new();
    for m in rec.maps {
        let shape_err = |rows, cols| ValidationError::Shape {
            i: m.i,
            a: m.a,
            b: m.b,
            rows,
            cols,
            exp_rows: m.rows,
            exp_cols: m.cols,
        };
        if m.entries.len() != m.rows {
            return Err(shape_err(m.entries.len(), m.cols).into());
        }
        let mut rows = Vec::with_capacity(m.rows);
        for r in &m.entries {
            if r.len() != m.cols {
                return Err(shape_err(m.rows, r.len()).into());
            }
            rows.push(r.iter().map(Entry::scalar).collect::<Result<Vec<_>, _>>()?);
        }
        let key = (m.i, Bidegree::new(m.a, m.b));
        if maps.insert(key, Matrix::from_rows(m.cols, rows)).is_some() {
            return Err(ValidationError::DuplicateMap { i: m.i, a: m.a, b: m.b }.into());
        }
    }
    Ok(Multicomplex::new(rec.q, rec.s, spaces, maps, rec.exterior)?)
}

pub fn read_file(path: &std::path::Path) -> Result<Multicomplex, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    from_json(&text)
}

/// Serializes with spaces and maps in bidegree order; only nonzero maps are
/// written.
pub fn to_json(mc: &Multicomplex) -> String {
    let spaces = mc
        .spaces()
        .iter()
        .map(|(bd, s)| SpaceRecord { a: bd.a, b: bd.b, dim: s.dim, labels: s.labels.clone() })
        .collect();
    let maps = mc
        .maps()
        .iter()
        .map(|(&(i, bd), m)| MapRecord {
            i,
            a: bd.a,
            b: bd.b,
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|r| m.row(r).iter().map(|x| Entry::Text(format_scalar(x))).collect())
                .collect(),
        })
        .collect();
    let rec = Record { q: mc.q(), s: mc.s(), spaces, maps, exterior: mc.exterior().cloned() };
    serde_json::to_string_pretty(&rec).expect("multicomplex record serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const ARROW: &str = r#"{"Q": 1, "s": 2,
        "spaces": [{"a": 0, "b": 0, "dim": 1}, {"a": 1, "b": 0, "dim": 1, "labels": ["y"]}],
        "maps": [{"i": 1, "a": 0, "b": 0, "rows": 1, "cols": 1, "entries": [["3/2"]]}]}"#;

    #[test]
    fn round_trip() {
        let mc = from_json(ARROW).unwrap();
        assert_eq!(mc.labels(Bidegree::new(0, 0)), ["e0"]);
        let again = from_json(&to_json(&mc)).unwrap();
        assert_eq!(mc, again);
    }

    #[test]
    fn malformed_json_reports_location() {
        let err = from_json("{\"Q\": 1,\n \"s\": }").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn ragged_entries_rejected() {
        let bad = ARROW.replace("[[\"3/2\"]]", "[[\"3/2\", \"1\"]]");
        assert!(matches!(from_json(&bad), Err(FormatError::Invalid(ValidationError::Shape { .. }))));
    }
}
