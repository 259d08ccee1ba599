use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::connectivity::classify;
use crate::error::{Error, Result};
use crate::lattice::{AffineUnimodularMap, DigitalSet, LatticePoint, INPUT_LIMIT};
use crate::normalize::NormalizationTrace;

/// Parses one point per line: two signed decimal integers separated by
/// whitespace. Blank lines and anything after `#` are ignored.
pub fn parse_points(text: &str) -> Result<DigitalSet> {
    let mut pts = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse { line, reason: format!("expected 2 integers, found {} fields", fields.len()) });
        }
        let mut coords = [0i64; 2];
        for (slot, field) in coords.iter_mut().zip(&fields) {
            *slot = field
                .parse::<i64>()
                .map_err(|_| Error::Parse { line, reason: format!("`{field}` is not an integer") })?;
            if slot.unsigned_abs() > INPUT_LIMIT as u64 {
                return Err(Error::Parse { line, reason: format!("{field} exceeds ±2^31") });
            }
        }
        pts.push(LatticePoint::new(coords[0], coords[1]));
    }
    DigitalSet::new(pts)
}

/// `x y` per line in lexicographic order.
pub fn format_points(s: &DigitalSet) -> String {
    let mut out = String::with_capacity(s.len() * 8);
    for p in s {
        let _ = writeln!(out, "{} {}", p.x, p.y);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub step: String,
    pub matrix: [[i64; 2]; 2],
    pub translation: [i64; 2],
    pub check: String,
}

/// The JSON document written by `normalize`. Field order is the wire order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub matrix: [[i64; 2]; 2],
    pub translation: [i64; 2],
    pub determinant: i64,
    pub points: Vec<[i64; 2]>,
    pub classification: String,
    pub witness: Option<[i64; 2]>,
    pub trace: Vec<TraceEntry>,
    pub fallback_used: bool,
}

impl ResultDocument {
    pub fn build(m: &AffineUnimodularMap, c: &DigitalSet, trace: &NormalizationTrace) -> Result<Self> {
        let class = classify(c)?;
        Ok(Self {
            matrix: m.matrix(),
            translation: m.translation_vector(),
            determinant: m.determinant() as i64,
            points: c.iter().map(|p| [p.x, p.y]).collect(),
            classification: class.tag().as_str().to_string(),
            witness: class.witness().map(|p| [p.x, p.y]),
            trace: trace
                .steps
                .iter()
                .map(|s| TraceEntry {
                    step: s.name.to_string(),
                    matrix: s.map.matrix(),
                    translation: s.map.translation_vector(),
                    check: s.check.as_str().to_string(),
                })
                .collect(),
            fallback_used: trace.fallback_used,
        })
    }

    /// One top-level key per line, values in compact form, trailing newline.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("plain data serializes");
        let serde_json::Value::Object(map) = value else { unreachable!("struct serializes to an object") };
        let body: Vec<String> = map
            .iter()
            .map(|(k, v)| format!("  {}: {}", serde_json::to_string(k).expect("string"), v))
            .collect();
        format!("{{\n{}\n}}\n", body.join(",\n"))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), reason: e.to_string() })
    }

    pub fn point_set(&self) -> Result<DigitalSet> {
        DigitalSet::new(self.points.iter().map(|&[x, y]| LatticePoint::new(x, y)))
    }
}

/// Serializes a normalization result. Deterministic byte for byte.
pub fn serialize_result(m: &AffineUnimodularMap, c: &DigitalSet, trace: &NormalizationTrace) -> Result<String> {
    Ok(ResultDocument::build(m, c, trace)?.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_points() {
        assert_eq!(parse_points("0 0\n1 0\n").unwrap(), DigitalSet::from_pairs(&[(0, 0), (1, 0)]));
        let text = "# header\n\n  -3\t4  \n5 -6 # trailing\n";
        assert_eq!(parse_points(text).unwrap(), DigitalSet::from_pairs(&[(-3, 4), (5, -6)]));
    }

    #[test]
    fn parse_errors_carry_line() {
        assert!(matches!(parse_points("0 0\nx y\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_points("1 2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_points("\n\n4\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_points("3000000000 0\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn format_then_parse() {
        let s = DigitalSet::from_pairs(&[(3, -1), (0, 0), (-7, 2)]);
        assert_eq!(format_points(&s), "-7 2\n0 0\n3 -1\n");
        assert_eq!(parse_points(&format_points(&s)).unwrap(), s);
    }
}
