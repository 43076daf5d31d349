//! Lists of `(ring, Hilbert polynomial)` cases, one per line.
//!
//! ```text
//! # comment
//! ring=2,3,inf,inf poly=3*z+5 max_candidates=200000 max_degree=8
//! ```

use serde::Serialize;

use crate::enumeration::EnumerationBudget;
use crate::error::{Error, Result};
use crate::poly::HilbertPoly;
use crate::ring::ClRing;

/// The cases the test suites and `verify` run by default.
pub const DEFAULT_MATRIX: &str = include_str!("../data/default_matrix.txt");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Case {
    /// 1-based line in the source text.
    pub line: usize,
    #[serde(serialize_with = "as_string")]
    pub ring: ClRing,
    #[serde(serialize_with = "as_string")]
    pub poly: HilbertPoly,
    #[serde(skip)]
    pub budget: EnumerationBudget,
}

fn as_string<T: std::fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn parse_line(line: usize, text: &str) -> Result<Case> {
    let err = |msg: String| Error::Parse(format!("line {line}: {msg}"));
    let (mut ring, mut poly) = (None, None);
    let mut budget = EnumerationBudget::default();
    for field in text.split_whitespace() {
        let (k, v) = field.split_once('=').ok_or_else(|| err(format!("expected key=value, got {field:?}")))?;
        match k {
            "ring" => ring = Some(v.parse::<ClRing>().map_err(|e| err(e.to_string()))?),
            "poly" => poly = Some(v.parse::<HilbertPoly>().map_err(|e| err(e.to_string()))?),
            "max_candidates" => budget.max_candidates = v.parse().map_err(|_| err(format!("bad count {v:?}")))?,
            "max_degree" => budget.max_gen_degree = Some(v.parse().map_err(|_| err(format!("bad degree {v:?}")))?),
            _ => return Err(err(format!("unknown key {k:?}"))),
        }
    }
    Ok(Case {
        line,
        ring: ring.ok_or_else(|| err("missing ring".into()))?,
        poly: poly.ok_or_else(|| err("missing poly".into()))?,
        budget,
    })
}

/// Parses a case list. Blank lines and `#` comments are skipped.
pub fn parse_matrix(text: &str) -> Result<Vec<Case>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| parse_line(i, l))
        .collect()
}

pub fn default_matrix() -> Vec<Case> {
    parse_matrix(DEFAULT_MATRIX).expect("shipped matrix parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::hilb_nonempty;
    use crate::poly::gotzmann_number;

    #[test]
    fn shipped_matrix_is_in_range() {
        let cases = default_matrix();
        assert!(cases.len() >= 10);
        for c in &cases {
            assert!(c.ring.varcount() <= 5, "{c:?}");
            assert!(gotzmann_number(&c.poly).unwrap() <= 8, "{c:?}");
            assert!(hilb_nonempty(&c.poly, &c.ring), "{c:?}");
        }
    }

    #[test]
    fn parse_errors_name_the_line() {
        let e = parse_matrix("ring=inf,inf poly=1\n\nring=inf poly").unwrap_err();
        assert!(e.to_string().contains("line 3"), "{e}");
        assert!(parse_matrix("ring=inf,inf").is_err());
        assert!(parse_matrix("ring=inf,inf poly=1 colour=red").is_err());
        let c = parse_matrix("ring=2,inf poly=1 max_candidates=5 max_degree=3 # note").unwrap();
        assert_eq!(c[0].budget, EnumerationBudget { max_gen_degree: Some(3), max_candidates: 5 });
    }
}
