//! The on-disk system document: JSON with keys `A`, `b`, optional `name`,
//! and an optional `format` version (absent means 1).
//!
//! Integers are accepted as plain JSON numbers or as decimal strings and are
//! always emitted as strings, so values beyond 64 bits round-trip exactly.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use dioph_core::{DiophantineSystem, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemDocument {
    pub name: Option<String>,
    pub a: Vec<Vec<BigInt>>,
    pub b: Vec<BigInt>,
}

/// Parse failure with the offending location (JSON syntax position or field
/// path).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.location.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.location, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err(location: impl Into<String>, message: impl Into<String>) -> ParseError {
    ParseError {
        location: location.into(),
        message: message.into(),
    }
}

impl SystemDocument {
    pub fn parse(bytes: &[u8]) -> Result<Self, ParseError> {
        let value: Value =
            serde_json::from_slice(bytes).map_err(|e| err("", format!("invalid JSON: {e}")))?;
        let Value::Object(map) = value else {
            return Err(err("", "document must be a JSON object"));
        };
        for key in map.keys() {
            if !matches!(key.as_str(), "A" | "b" | "name" | "format") {
                return Err(err(key.clone(), "unknown field"));
            }
        }
        if let Some(version) = map.get("format") {
            if version.as_u64() != Some(1) {
                return Err(err("format", format!("unsupported version {version}")));
            }
        }
        let name = match map.get("name") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(s.clone()),
            Some(other) => return Err(err("name", format!("expected a string, got {other}"))),
        };

        let rows = match map.get("A") {
            Some(Value::Array(rows)) if !rows.is_empty() => rows,
            Some(Value::Array(_)) => return Err(err("A", "matrix needs at least one row")),
            Some(other) => return Err(err("A", format!("expected an array of rows, got {other}"))),
            None => return Err(err("A", "missing field")),
        };
        let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(rows.len());
        let mut width: Option<usize> = None;
        for (i, row) in rows.iter().enumerate() {
            let Value::Array(entries) = row else {
                return Err(err(
                    format!("A[{i}]"),
                    format!("expected an array, got {row}"),
                ));
            };
            if let Some(w) = width {
                if entries.len() != w {
                    return Err(err(
                        format!("A[{i}]"),
                        format!("row has {} entries, expected {w}", entries.len()),
                    ));
                }
            } else {
                if entries.is_empty() {
                    return Err(err(format!("A[{i}]"), "row needs at least one entry"));
                }
                width = Some(entries.len());
            }
            let mut parsed = Vec::with_capacity(entries.len());
            for (j, entry) in entries.iter().enumerate() {
                parsed.push(parse_integer(entry, &format!("A[{i}][{j}]"))?);
            }
            a.push(parsed);
        }

        let b = match map.get("b") {
            Some(Value::Array(entries)) => {
                if entries.len() != a.len() {
                    return Err(err(
                        "b",
                        format!("{} entries for {} equations", entries.len(), a.len()),
                    ));
                }
                entries
                    .iter()
                    .enumerate()
                    .map(|(i, entry)| parse_integer(entry, &format!("b[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?
            }
            Some(other) => return Err(err("b", format!("expected an array, got {other}"))),
            None => return Err(err("b", "missing field")),
        };

        Ok(SystemDocument { name, a, b })
    }

    /// Canonical JSON rendering; integers as decimal strings, keys in
    /// alphabetical order, `format` always present.
    pub fn render(&self) -> String {
        let mut map = serde_json::Map::new();
        map.insert(
            "A".into(),
            Value::Array(
                self.a
                    .iter()
                    .map(|row| {
                        Value::Array(row.iter().map(|v| Value::String(v.to_string())).collect())
                    })
                    .collect(),
            ),
        );
        map.insert(
            "b".into(),
            Value::Array(
                self.b
                    .iter()
                    .map(|v| Value::String(v.to_string()))
                    .collect(),
            ),
        );
        map.insert("format".into(), Value::Number(1.into()));
        if let Some(name) = &self.name {
            map.insert("name".into(), Value::String(name.clone()));
        }
        Value::Object(map).to_string()
    }

    pub fn to_system(&self) -> dioph_core::Result<DiophantineSystem> {
        let rows = self.a.len();
        let cols = self.a.first().map(Vec::len).unwrap_or(0);
        let entries = self.a.iter().flatten().cloned().collect();
        DiophantineSystem::new(IntMatrix::new(rows, cols, entries)?, self.b.clone())
    }

    pub fn from_system(sys: &DiophantineSystem, name: Option<String>) -> Self {
        let a = (0..sys.a().rows())
            .map(|r| sys.a().row(r).to_vec())
            .collect();
        SystemDocument {
            name,
            a,
            b: sys.b().to_vec(),
        }
    }
}

fn parse_integer(value: &Value, location: &str) -> Result<BigInt, ParseError> {
    match value {
        // serde_json keeps the raw literal (arbitrary precision), so any
        // integer literal survives exactly; non-integers fail to parse
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| err(location, format!("{n} is not an integer"))),
        Value::String(s) => BigInt::from_str(s)
            .map_err(|_| err(location, format!("{s:?} is not a decimal integer"))),
        other => Err(err(
            location,
            format!("expected an integer or decimal string, got {other}"),
        )),
    }
}
