//! Monomial ideals with canonical minimal generators.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{canonical_cmp, degree_of, divides, exps_of_degree, format_exps, parse_exps, Exps, Monomial};
use crate::ring::{ClRing, ExtNat};

mod decompose;

pub use decompose::Decomposition;

/// Which graded piece to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Ideal,
    Quotient,
}

/// Structural flags of a monomial ideal.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Classification {
    pub saturated: bool,
    pub strongly_stable: bool,
    pub lex: bool,
    pub almost_lex: bool,
}

/// A monomial ideal of a [`ClRing`].
///
/// Generators are minimal and sorted by degree, then by descending lex order,
/// so two ideals are equal exactly when their generator lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: ClRing,
    gens: Vec<Exps>,
}

/// Drops zeros and redundant generators and sorts the rest canonically.
pub(crate) fn minimalize(ring: &ClRing, mut gens: Vec<Exps>) -> Vec<Exps> {
    gens.retain(|g| ring.admits(g));
    if gens.iter().any(|g| g.iter().all(|e| *e == 0)) {
        return vec![vec![0; ring.varcount()]];
    }
    gens.sort_by(|a, b| canonical_cmp(a, b));
    gens.dedup();
    let mut out: Vec<Exps> = Vec::with_capacity(gens.len());
    // after sorting by degree, a divisor always precedes its multiples
    for g in gens {
        if !out.iter().any(|h| divides(h, &g)) {
            out.push(g);
        }
    }
    out
}

impl MonomialIdeal {
    pub(crate) fn from_exps(ring: &ClRing, gens: Vec<Exps>) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: minimalize(ring, gens) }
    }

    /// The ideal generated by `ms`.
    pub fn from_generators<I>(ring: &ClRing, ms: I) -> Result<Self>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut gens = Vec::new();
        for m in ms {
            ring.check_same(m.ring())?;
            gens.push(m.exponents().to_vec());
        }
        Ok(Self::from_exps(ring, gens))
    }

    /// The ideal generated by the given exponent vectors. Vectors that are zero in
    /// the ring are dropped.
    pub fn from_exponents(ring: &ClRing, gens: Vec<Vec<u32>>) -> Result<Self> {
        for g in &gens {
            if g.len() != ring.varcount() {
                return Err(Error::LengthMismatch { expected: ring.varcount(), found: g.len() });
            }
        }
        Ok(Self::from_exps(ring, gens))
    }

    /// Parses a comma-separated generator list like `x1*x2, x1*x3^5`.
    /// An empty string or `0` gives the zero ideal.
    pub fn parse(ring: &ClRing, text: &str) -> Result<Self> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() || t == "0" {
            return Ok(Self::zero(ring));
        }
        if t.starts_with('[') {
            let rows: Vec<Vec<u32>> = serde_json::from_str(&format!("[{t}]"))
                .map_err(|e| Error::Parse(format!("bad exponent list: {e}")))?;
            return Self::from_exponents(ring, rows);
        }
        let gens = t.split(',').map(|s| parse_exps(ring.varcount(), s)).collect::<Result<Vec<_>>>()?;
        Self::from_exponents(ring, gens)
    }

    pub fn zero(ring: &ClRing) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn unit(ring: &ClRing) -> Self {
        MonomialIdeal { ring: ring.clone(), gens: vec![vec![0; ring.varcount()]] }
    }

    /// `(x_1, ..., x_k)`.
    pub fn first_variables(ring: &ClRing, k: usize) -> Self {
        let m = ring.varcount();
        let gens = (0..k.min(m))
            .map(|i| {
                let mut e = vec![0; m];
                e[i] = 1;
                e
            })
            .collect();
        Self::from_exps(ring, gens)
    }

    pub fn ring(&self) -> &ClRing {
        &self.ring
    }

    pub fn gens(&self) -> Vec<Monomial> {
        self.gens.iter().map(|g| Monomial::from_raw(&self.ring, g)).collect()
    }

    pub(crate) fn gen_exps(&self) -> &[Exps] {
        &self.gens
    }

    pub fn generator_count(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].iter().all(|e| *e == 0)
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.gens.iter().map(|g| degree_of(g)).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        m.ring() == &self.ring && self.contains_exps(m.exponents())
    }

    pub(crate) fn contains_exps(&self, e: &[u32]) -> bool {
        self.gens.iter().any(|g| divides(g, e))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        self.ring == other.ring && other.gens.iter().all(|g| self.contains_exps(g))
    }

    /// Number of degree-`j` monomials inside (or outside) the ideal, by direct count.
    pub fn hf_value(&self, j: u32, side: Side) -> u64 {
        let all = exps_of_degree(&self.ring, j);
        let inside = all.iter().filter(|e| self.contains_exps(e)).count() as u64;
        match side {
            Side::Ideal => inside,
            Side::Quotient => all.len() as u64 - inside,
        }
    }

    /// `I : x_i`, with `i` counted from 1.
    pub fn colon_var(&self, i: usize) -> Result<Self> {
        let d = self.ring.degree(i)?;
        Ok(self.colon_var_unchecked(i - 1, d))
    }

    fn colon_var_unchecked(&self, idx: usize, d: ExtNat) -> Self {
        let mut gens: Vec<Exps> = self
            .gens
            .iter()
            .map(|g| {
                let mut h = g.clone();
                if h[idx] > 0 {
                    h[idx] -= 1;
                }
                h
            })
            .collect();
        if let Some(b) = d.finite() {
            let mut e = vec![0; self.ring.varcount()];
            e[idx] = b - 1;
            gens.push(e);
        }
        Self::from_exps(&self.ring, gens)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
            }
        }
        Ok(Self::from_exps(&self.ring, gens))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_exps(&self.ring, gens))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        Ok(Self::from_exps(&self.ring, gens))
    }

    pub fn power(&self, k: u32) -> Self {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.multiply(self).expect("same ring");
        }
        acc
    }

    /// `I : (x_1, ..., x_m)`.
    pub fn colon_max(&self) -> Self {
        let m = self.ring.varcount();
        let mut acc: Option<MonomialIdeal> = None;
        for idx in 0..m {
            let c = self.colon_var_unchecked(idx, self.ring.degrees()[idx]);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c).expect("same ring"),
            });
        }
        acc.unwrap_or_else(|| self.clone())
    }

    pub fn saturate(&self) -> Self {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_max();
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_saturated(&self) -> bool {
        self.ring.varcount() == 0 || self.colon_max() == *self
    }

    pub fn is_strongly_stable(&self) -> bool {
        for g in &self.gens {
            for h in 1..g.len() {
                if g[h] == 0 {
                    continue;
                }
                for k in 0..h {
                    let mut v = g.clone();
                    v[h] -= 1;
                    v[k] += 1;
                    if self.ring.admits(&v) && !self.contains_exps(&v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Each graded piece up to one past the top generator degree is an initial lex segment.
    pub fn is_lex(&self) -> bool {
        let top = self.max_generator_degree() + 1;
        (0..=top).all(|j| {
            let mut seen_outside = false;
            for e in exps_of_degree(&self.ring, j) {
                if self.contains_exps(&e) {
                    if seen_outside {
                        return false;
                    }
                } else {
                    seen_outside = true;
                }
            }
            true
        })
    }

    pub fn is_almost_lex(&self) -> bool {
        if !self.ring.is_projective() {
            return false;
        }
        let last = self.ring.varcount() - 1;
        if self.gens.iter().any(|g| g[last] > 0) {
            return false;
        }
        self.tilde_image().map(|t| t.is_lex()).unwrap_or(false)
    }

    pub fn classify(&self) -> Classification {
        Classification {
            saturated: self.is_saturated(),
            strongly_stable: self.is_strongly_stable(),
            lex: self.is_lex(),
            almost_lex: self.is_almost_lex(),
        }
    }

    /// The image in the ring without the last variable.
    pub fn tilde_image(&self) -> Result<Self> {
        let tilde = self.ring.tilde_ring()?;
        let last = self.ring.varcount() - 1;
        if self.gens.iter().any(|g| g[last] > 0) {
            return Err(Error::LastVariableInGenerator(self.to_string()));
        }
        let gens = self.gens.iter().map(|g| g[..last].to_vec()).collect();
        Ok(Self::from_exps(&tilde, gens))
    }

    /// Extension of an ideal of `target`'s tilde ring to `target`.
    pub fn extend_from_tilde(&self, target: &ClRing) -> Result<Self> {
        let tilde = target.tilde_ring()?;
        self.ring.check_same(&tilde)?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = g.clone();
                e.push(0);
                e
            })
            .collect();
        Ok(Self::from_exps(target, gens))
    }

    /// The ideal of the polynomial ring whose quotient equals `R/I`.
    pub fn preimage_in_ambient(&self) -> Self {
        let amb = self.ring.ambient();
        let m = self.ring.varcount();
        let mut gens = self.gens.clone();
        for (i, d) in self.ring.degrees().iter().enumerate() {
            if let Some(b) = d.finite() {
                let mut e = vec![0; m];
                e[i] = b;
                gens.push(e);
            }
        }
        Self::from_exps(&amb, gens)
    }

    /// The ideal with the same generators, read in another ring with the same
    /// variable count. Generators that vanish there are dropped.
    pub fn reinterpret(&self, ring: &ClRing) -> Result<Self> {
        if ring.varcount() != self.ring.varcount() {
            return Err(Error::RingMismatch(self.ring.to_string(), ring.to_string()));
        }
        Ok(Self::from_exps(ring, self.gens.clone()))
    }

    pub fn decompose(&self) -> Result<Decomposition> {
        Decomposition::of(self)
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A deterministic total order used to sort lists of ideals.
impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.ring.cmp(&other.ring).then_with(|| {
            for (a, b) in self.gens.iter().zip(&other.gens) {
                let c = canonical_cmp(a, b);
                if c.is_ne() {
                    return c;
                }
            }
            self.gens.len().cmp(&other.gens.len())
        })
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| format_exps(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in [{}]", self.ring)
    }
}

/// Wire form: `{"ring": "2,3,inf,inf", "gens": [[1,1,0,0], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub ring: String,
    pub gens: Vec<Vec<u32>>,
}

impl From<&MonomialIdeal> for IdealJson {
    fn from(i: &MonomialIdeal) -> Self {
        IdealJson { ring: i.ring.to_string(), gens: i.gens.clone() }
    }
}

impl TryFrom<IdealJson> for MonomialIdeal {
    type Error = Error;

    fn try_from(j: IdealJson) -> Result<Self> {
        let ring: ClRing = j.ring.parse()?;
        MonomialIdeal::from_exponents(&ring, j.gens)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IdealJson::deserialize(d)?;
        MonomialIdeal::try_from(j).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: &str, g: &str) -> MonomialIdeal {
        MonomialIdeal::parse(&r.parse().unwrap(), g).unwrap()
    }

    #[test]
    fn minimalization() {
        let i = ideal("inf,inf,inf,inf", "x1, x1*x2^3, x2^4, x2^3*x3");
        assert_eq!(i.to_string(), "(x1, x2^4, x2^3*x3)");
        assert_eq!(ideal("inf,inf", "x1*x2, x1*x2").generator_count(), 1);
        assert!(ideal("inf,inf", "1, x1").is_unit());
        assert!(ideal("2,inf", "x1^2").is_zero());
    }

    #[test]
    fn membership_and_counts() {
        let i = ideal("inf,inf,inf", "x1*x2, x1*x3^5");
        let r = i.ring().clone();
        assert!(i.contains(&Monomial::parse(&r, "x1*x2*x3").unwrap()));
        assert!(!i.contains(&Monomial::parse(&r, "x2^2*x3").unwrap()));
        let j = ideal("2,3,inf,inf", "x1*x2^2, x1*x2*x3");
        assert_eq!(j.hf_value(2, Side::Quotient), 9);
        assert_eq!(MonomialIdeal::unit(&r).hf_value(3, Side::Quotient), 0);
        assert_eq!(MonomialIdeal::zero(&"2,inf".parse().unwrap()).hf_value(2, Side::Quotient), 2);
    }

    #[test]
    fn colon_examples() {
        let i = ideal("inf,inf,inf,inf", "x1^2, x1*x2, x1*x3, x1*x4");
        assert_eq!(i.colon_var(1).unwrap().to_string(), "(x1, x2, x3, x4)");
        assert_eq!(i.saturate().to_string(), "(x1)");
        let j = ideal("2,3,inf,inf", "x1*x4^2");
        assert_eq!(j.colon_var(4).unwrap().to_string(), "(x1*x4)");
        assert!(ideal("2,3,inf", "x2").colon_var(2).unwrap().is_unit());
    }

    #[test]
    fn classification_examples() {
        let a = ideal("2,3,inf,inf", "x1*x2^2, x1*x2*x3");
        let c = a.classify();
        assert!(c.lex && c.almost_lex && c.saturated && c.strongly_stable);
        let b = ideal("2,3,inf,inf", "x1*x2, x1*x3, x1*x4^2, x2^2*x3");
        let c = b.classify();
        assert!(c.lex && !c.saturated && !c.almost_lex);
        assert_eq!(b.saturate().to_string(), "(x1, x2^2*x3)");
        let d = ideal("2,3,inf,inf", "x1*x2, x2^2");
        let c = d.classify();
        assert!(c.strongly_stable && c.saturated && !c.lex && !c.almost_lex);
    }

    #[test]
    fn products_and_preimages() {
        let r = "inf,inf,inf";
        let m = ideal(r, "x1, x2");
        assert_eq!(m.multiply(&m).unwrap().to_string(), "(x1^2, x1*x2, x2^2)");
        assert_eq!(m.multiply(&m.power(2)).unwrap(), m.power(3));
        let a = ideal("2,inf", "x1");
        assert!(a.multiply(&MonomialIdeal::first_variables(a.ring(), 1)).unwrap().is_zero());
        assert_eq!(a.preimage_in_ambient().to_string(), "(x1)");
        assert_eq!(ideal("2,3,inf,inf", "x1*x2").preimage_in_ambient().to_string(), "(x1^2, x1*x2, x2^3)");
        assert_eq!(MonomialIdeal::zero(&"2,3,inf,inf".parse().unwrap()).preimage_in_ambient().to_string(), "(x1^2, x2^3)");
    }

    #[test]
    fn tilde_round_trip() {
        let i = ideal("inf,inf,inf,inf", "x1^2, x1*x2, x1*x3, x2^3");
        let t = i.tilde_image().unwrap();
        assert_eq!(t.ring().varcount(), 3);
        assert_eq!(t.extend_from_tilde(i.ring()).unwrap(), i);
        assert!(ideal("inf,inf", "x2").tilde_image().is_err());
    }

    #[test]
    fn json_round_trip() {
        let i = ideal("2,3,inf,inf", "x1*x2, x1*x4^2");
        let s = serde_json::to_string(&i).unwrap();
        assert_eq!(s, r#"{"ring":"2,3,inf,inf","gens":[[1,1,0,0],[1,0,0,2]]}"#);
        let back: MonomialIdeal = serde_json::from_str(&s).unwrap();
        assert_eq!(back, i);
    }
}
