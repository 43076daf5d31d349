//! Monomials of a Clements–Lindström ring and the two term orders used here.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::ClRing;

/// Term orders on monomials of one ring.
///
/// `Lex` reads exponents from `x1` upward; the larger exponent at the first
/// difference wins. `Opp` is the same comparison read from `xm` downward.
/// Monomials of different degrees are compared by the pure reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonoOrder {
    Lex,
    Opp,
}

pub(crate) type Exps = Vec<u32>;

pub(crate) fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.cmp(b)
}

pub(crate) fn opp_cmp(a: &[u32], b: &[u32]) -> Ordering {
    a.iter().rev().cmp(b.iter().rev())
}

pub(crate) fn degree_of(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub(crate) fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Canonical generator order: degree ascending, then descending lex.
pub(crate) fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
    degree_of(a).cmp(&degree_of(b)).then_with(|| lex_cmp(b, a))
}

/// A nonzero monomial of a fixed ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    ring: ClRing,
    exps: Box<[u32]>,
}

impl Monomial {
    /// Builds a monomial, rejecting wrong lengths and monomials that vanish in `ring`.
    pub fn new(ring: &ClRing, exps: Vec<u32>) -> Result<Self> {
        if exps.len() != ring.varcount() {
            return Err(Error::LengthMismatch { expected: ring.varcount(), found: exps.len() });
        }
        if !ring.admits(&exps) {
            return Err(Error::ZeroMonomial(format_exps(&exps)));
        }
        Ok(Monomial { ring: ring.clone(), exps: exps.into() })
    }

    pub(crate) fn from_raw(ring: &ClRing, exps: &[u32]) -> Self {
        debug_assert!(exps.len() == ring.varcount() && ring.admits(exps));
        Monomial { ring: ring.clone(), exps: exps.into() }
    }

    pub fn one(ring: &ClRing) -> Self {
        Monomial { ring: ring.clone(), exps: vec![0; ring.varcount()].into() }
    }

    /// The variable `x_i`, counting from 1.
    pub fn var(ring: &ClRing, i: usize) -> Result<Self> {
        if i == 0 || i > ring.varcount() {
            return Err(Error::VariableIndex { index: i, count: ring.varcount() });
        }
        let mut e = vec![0; ring.varcount()];
        e[i - 1] = 1;
        Ok(Monomial { ring: ring.clone(), exps: e.into() })
    }

    pub fn ring(&self) -> &ClRing {
        &self.ring
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Exponent of `x_i`, counting from 1. Out-of-range indices give 0.
    pub fn exponent(&self, i: usize) -> u32 {
        i.checked_sub(1).and_then(|j| self.exps.get(j)).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        degree_of(&self.exps)
    }

    /// Product in the ring; `None` when it is zero.
    pub fn multiply(&self, other: &Monomial) -> Result<Option<Monomial>> {
        self.ring.check_same(&other.ring)?;
        let e: Exps = self.exps.iter().zip(other.exps.iter()).map(|(a, b)| a + b).collect();
        Ok(self.ring.admits(&e).then(|| Monomial { ring: self.ring.clone(), exps: e.into() }))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.ring == other.ring && divides(&self.exps, &other.exps)
    }

    pub fn compare(&self, other: &Monomial, order: MonoOrder) -> Result<Ordering> {
        self.ring.check_same(&other.ring)?;
        Ok(match order {
            MonoOrder::Lex => lex_cmp(&self.exps, &other.exps),
            MonoOrder::Opp => opp_cmp(&self.exps, &other.exps),
        })
    }

    /// Parses `x1^2*x3`, `1`, or an exponent tuple such as `[2,0,1,0]`.
    pub fn parse(ring: &ClRing, text: &str) -> Result<Self> {
        Monomial::new(ring, parse_exps(ring.varcount(), text)?)
    }
}

pub(crate) fn parse_exps(m: usize, text: &str) -> Result<Exps> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let e = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|s| s.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad exponent {s:?}"))))
                .collect::<Result<Exps>>()?
        };
        if e.len() != m {
            return Err(Error::LengthMismatch { expected: m, found: e.len() });
        }
        return Ok(e);
    }
    let mut e = vec![0; m];
    if t == "1" {
        return Ok(e);
    }
    for factor in t.split('*') {
        let f = factor.trim();
        let (var, pow) = match f.split_once('^') {
            Some((v, p)) => (v, p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad power in {f:?}")))?),
            None => (f, 1),
        };
        let idx: usize = var
            .trim()
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad variable {var:?}")))?;
        if idx == 0 || idx > m {
            return Err(Error::VariableIndex { index: idx, count: m });
        }
        e[idx - 1] += pow;
    }
    Ok(e)
}

pub(crate) fn format_exps(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, p)| **p > 0)
        .map(|(i, p)| if *p == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, p) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_exps(&self.exps))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exponent vectors of all nonzero monomials of degree `j`, in descending lex order.
pub(crate) fn exps_of_degree(ring: &ClRing, j: u32) -> Vec<Exps> {
    let d = ring.degrees();
    let mut out = Vec::new();
    let mut cur = vec![0u32; d.len()];
    fill(d, 0, j, &mut cur, &mut out);
    out
}

fn fill(d: &[crate::ring::ExtNat], i: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
    if i == d.len() {
        if left == 0 {
            out.push(cur.clone());
        }
        return;
    }
    let top = match d[i].finite() {
        Some(b) => left.min(b - 1),
        None => left,
    };
    for e in (0..=top).rev() {
        cur[i] = e;
        fill(d, i + 1, left - e, cur, out);
    }
    cur[i] = 0;
}

/// All nonzero monomials of degree `j`, in descending lex order.
pub fn monomials_of_degree(ring: &ClRing, j: u32) -> Vec<Monomial> {
    exps_of_degree(ring, j).iter().map(|e| Monomial::from_raw(ring, e)).collect()
}

/// Number of nonzero monomials of degree `j`.
pub fn count_of_degree(ring: &ClRing, j: u32) -> u64 {
    // coefficient of t^j in the product of truncated geometric series
    let mut c = vec![0u64; j as usize + 1];
    c[0] = 1;
    for d in ring.degrees() {
        let mut next = vec![0u64; j as usize + 1];
        let mut window = 0u64;
        for t in 0..=j as usize {
            window += c[t];
            if let Some(b) = d.finite() {
                if t >= b as usize {
                    window -= c[t - b as usize];
                }
            }
            next[t] = window;
        }
        c = next;
    }
    c[j as usize]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> ClRing {
        s.parse().unwrap()
    }

    #[test]
    fn multiply_respects_bounds() {
        let r = ring("2,3,inf,inf");
        let x = Monomial::var(&r, 1).unwrap();
        assert!(x.multiply(&x).unwrap().is_none());
        let y = Monomial::var(&r, 2).unwrap();
        let y2 = y.multiply(&y).unwrap().unwrap();
        assert!(y2.multiply(&y).unwrap().is_none());
        assert_eq!(x.multiply(&y2).unwrap().unwrap().to_string(), "x1*x2^2");
    }

    #[test]
    fn orders() {
        let r = ring("inf,inf,inf,inf");
        let x = Monomial::parse(&r, "x1").unwrap();
        let y3 = Monomial::parse(&r, "x2^3").unwrap();
        assert_eq!(x.compare(&y3, MonoOrder::Lex).unwrap(), Ordering::Greater);
        assert_eq!(x.compare(&y3, MonoOrder::Opp).unwrap(), Ordering::Less);
    }

    #[test]
    fn degree_listing_is_descending_lex() {
        let r = ring("2,3,inf");
        let ms = monomials_of_degree(&r, 2);
        let text: Vec<String> = ms.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"]);
        for j in 0..8 {
            assert_eq!(count_of_degree(&r, j), monomials_of_degree(&r, j).len() as u64);
        }
    }

    #[test]
    fn parse_forms() {
        let r = ring("2,3,inf,inf");
        assert_eq!(Monomial::parse(&r, "[1,2,0,4]").unwrap().to_string(), "x1*x2^2*x4^4");
        assert_eq!(Monomial::parse(&r, "1").unwrap().degree(), 0);
        assert!(Monomial::parse(&r, "x1^2").is_err());
        assert!(Monomial::parse(&r, "x5").is_err());
    }
}
