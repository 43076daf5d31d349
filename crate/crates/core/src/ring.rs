//! Clements–Lindström rings `k[x1..xm] / (x_i^{d_i} : d_i finite)`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A natural number or infinity. Used for the power bounds of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(u32),
    Inf,
}

impl ExtNat {
    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Finite(_))
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            ExtNat::Finite(d) => Some(d),
            ExtNat::Inf => None,
        }
    }

    /// True when `x^e` survives a bound of `self`.
    pub fn admits(self, e: u32) -> bool {
        match self {
            ExtNat::Finite(d) => e < d,
            ExtNat::Inf => true,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(d) => write!(f, "{d}"),
            ExtNat::Inf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(ExtNat::Inf);
        }
        s.parse::<u32>()
            .map(ExtNat::Finite)
            .map_err(|_| Error::Parse(format!("bad degree {s:?}")))
    }
}

/// A Clements–Lindström ring given by its non-decreasing power bounds.
///
/// Cloning is cheap: the degree list is shared.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClRing {
    degrees: Arc<[ExtNat]>,
}

impl ClRing {
    /// Builds a ring from its degree sequence.
    ///
    /// Needs at least one variable, every finite degree at least 2, and the
    /// sequence non-decreasing.
    pub fn new(degrees: Vec<ExtNat>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        Self::with_degrees(degrees)
    }

    pub(crate) fn with_degrees(degrees: Vec<ExtNat>) -> Result<Self> {
        for d in &degrees {
            if let ExtNat::Finite(v) = d {
                if *v < 2 {
                    return Err(Error::InvalidRing(format!("finite degree {v} is below 2")));
                }
            }
        }
        if degrees.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidRing(format!(
                "degrees {} are not non-decreasing",
                join(&degrees)
            )));
        }
        Ok(ClRing { degrees: degrees.into() })
    }

    /// The polynomial ring in `m` variables.
    pub fn polynomial(m: usize) -> Self {
        ClRing { degrees: vec![ExtNat::Inf; m].into() }
    }

    pub fn varcount(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[ExtNat] {
        &self.degrees
    }

    /// Bound of variable `i`, counting from 1.
    pub fn degree(&self, i: usize) -> Result<ExtNat> {
        if i == 0 || i > self.varcount() {
            return Err(Error::VariableIndex { index: i, count: self.varcount() });
        }
        Ok(self.degrees[i - 1])
    }

    pub fn is_projective(&self) -> bool {
        self.degrees.last() == Some(&ExtNat::Inf)
    }

    pub fn is_polynomial(&self) -> bool {
        self.degrees.iter().all(|d| *d == ExtNat::Inf)
    }

    /// Finite bounds, in variable order.
    pub fn finite_degrees(&self) -> impl Iterator<Item = u32> + '_ {
        self.degrees.iter().filter_map(|d| d.finite())
    }

    /// Whether the monomial with these exponents is nonzero here.
    pub fn admits(&self, exps: &[u32]) -> bool {
        exps.iter().zip(self.degrees.iter()).all(|(e, d)| d.admits(*e))
    }

    /// Drops the second-to-last variable, keeping the last one.
    pub fn bar_ring(&self) -> Result<ClRing> {
        let m = self.varcount();
        if m < 2 {
            return Err(Error::TooFewVariables(self.to_string()));
        }
        let mut d = self.degrees.to_vec();
        d.remove(m - 2);
        ClRing::with_degrees(d)
    }

    /// Drops the last variable. The result may have no variables.
    pub fn tilde_ring(&self) -> Result<ClRing> {
        let m = self.varcount();
        if m == 0 {
            return Err(Error::TooFewVariables(self.to_string()));
        }
        ClRing::with_degrees(self.degrees[..m - 1].to_vec())
    }

    /// The polynomial ring this ring is a quotient of.
    pub fn ambient(&self) -> ClRing {
        ClRing::polynomial(self.varcount())
    }

    /// The same bounds with one extra unbounded variable appended.
    pub fn cone(&self) -> ClRing {
        let mut d = self.degrees.to_vec();
        d.push(ExtNat::Inf);
        ClRing { degrees: d.into() }
    }

    pub(crate) fn check_same(&self, other: &ClRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.to_string(), other.to_string()))
        }
    }
}

fn join(d: &[ExtNat]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for ClRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.degrees))
    }
}

impl fmt::Debug for ClRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClRing({self})")
    }
}

impl FromStr for ClRing {
    type Err = Error;

    /// Parses a comma-separated degree list such as `2,3,inf,inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Err(Error::Parse("empty degree list".into()));
        }
        let degrees = s.split(',').map(str::parse).collect::<Result<Vec<ExtNat>>>()?;
        ClRing::new(degrees)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let r: ClRing = "2,3,inf,inf".parse().unwrap();
        assert_eq!(r.varcount(), 4);
        assert!(r.is_projective());
        assert_eq!(r.to_string(), "2,3,inf,inf");
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!("3,2,inf".parse::<ClRing>().is_err());
        assert!("1,inf".parse::<ClRing>().is_err());
        assert!("".parse::<ClRing>().is_err());
        assert!("2,x".parse::<ClRing>().is_err());
    }

    #[test]
    fn bar_and_tilde() {
        let r: ClRing = "2,3,inf,inf".parse().unwrap();
        assert_eq!(r.bar_ring().unwrap().to_string(), "2,3,inf");
        assert_eq!(r.tilde_ring().unwrap().to_string(), "2,3,inf");
        let a: ClRing = "2,2,2,inf".parse().unwrap();
        assert_eq!(a.bar_ring().unwrap().to_string(), "2,2,inf");
        assert_eq!(a.tilde_ring().unwrap().to_string(), "2,2,2");
        assert!(!a.tilde_ring().unwrap().is_projective());
        let line = ClRing::polynomial(1);
        assert!(line.bar_ring().is_err());
        assert_eq!(line.tilde_ring().unwrap().varcount(), 0);
    }
}
