//! Exact univariate polynomials in `ζ` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A polynomial in `ζ`, coefficients stored low to high with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct HilbertPoly {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl HilbertPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        HilbertPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|c| rat(*c)).collect())
    }

    pub fn zero() -> Self {
        HilbertPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![BigRational::from_integer(c.into())])
    }

    /// `ζ`.
    pub fn zeta() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `C(ζ + a, k)` as a polynomial; `C(·, 0) = 1`.
    pub fn binomial(a: i64, k: u32) -> Self {
        let mut acc = Self::constant(1);
        for i in 0..k as i64 {
            let factor = HilbertPoly::new(vec![rat(a - i) / rat(i + 1), BigRational::one() / rat(i + 1)]);
            acc = &acc * &factor;
        }
        acc
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    /// The constant value when the polynomial has degree at most 0.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// The integer value when the polynomial is an integer constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    pub fn eval(&self, x: impl Into<BigInt>) -> BigRational {
        let x = BigRational::from_integer(x.into());
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
    }

    /// `p(ζ - k)`.
    pub fn shift(&self, k: i64) -> Self {
        let lin = HilbertPoly::from_ints(&[-k, 1]);
        let mut acc = HilbertPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &HilbertPoly::new(vec![c.clone()]);
        }
        acc
    }

    /// `p(ζ) - p(ζ - 1)`.
    pub fn difference(&self) -> Self {
        self - &self.shift(1)
    }

    /// Integer-valued on all integers, tested on `deg + 1` consecutive points.
    pub fn is_numerical(&self) -> bool {
        let n = self.coeffs.len().max(1) as i64;
        (0..n).all(|x| self.eval(x).is_integer())
    }

    /// Wire form with exact decimal strings, low to high.
    pub fn to_json(&self) -> PolyJson {
        PolyJson { coeffs: self.coeffs.iter().map(ToString::to_string).collect() }
    }

    pub fn from_json(j: &PolyJson) -> Result<Self> {
        let coeffs = j.coeffs.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

/// `{"coeffs": ["-3", "6"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl Serialize for HilbertPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for HilbertPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = PolyJson::deserialize(d)?;
        HilbertPoly::from_json(&j).map_err(serde::de::Error::custom)
    }
}

impl Add for &HilbertPoly {
    type Output = HilbertPoly;

    fn add(self, rhs: &HilbertPoly) -> HilbertPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigRational::zero();
        HilbertPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for &HilbertPoly {
    type Output = HilbertPoly;

    fn neg(self) -> HilbertPoly {
        HilbertPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &HilbertPoly {
    type Output = HilbertPoly;

    fn sub(self, rhs: &HilbertPoly) -> HilbertPoly {
        self + &(-rhs)
    }
}

impl Mul for &HilbertPoly {
    type Output = HilbertPoly;

    fn mul(self, rhs: &HilbertPoly) -> HilbertPoly {
        if self.is_zero() || rhs.is_zero() {
            return HilbertPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        HilbertPoly::new(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for HilbertPoly {
            type Output = HilbertPoly;
            fn $f(self, rhs: HilbertPoly) -> HilbertPoly { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

/// `p ⪯ q`: `q - p` is a non-negative constant.
pub fn hp_preceq(p: &HilbertPoly, q: &HilbertPoly) -> bool {
    (q - p).as_constant().is_some_and(|c| !c.is_negative())
}

/// `q - p` when it is an integer constant.
pub fn hp_difference_constant(p: &HilbertPoly, q: &HilbertPoly) -> Option<BigInt> {
    (q - p).as_integer()
}

/// Gotzmann number of `p`: the length of its greedy binomial decomposition
/// `p(ζ) = Σ_{i=1}^{r} C(ζ + a_i - i + 1, a_i)` with `a_1 ≥ ... ≥ a_r ≥ 0`.
pub fn gotzmann_number(p: &HilbertPoly) -> Result<u64> {
    let bad = || Error::InadmissiblePolynomial(p.to_string());
    let mut rem = p.clone();
    let mut r: i64 = 0;
    while let Some(a) = rem.degree() {
        let lead = rem.leading();
        if !lead.is_positive() {
            return Err(bad());
        }
        if a == 0 {
            let c = rem.as_integer().ok_or_else(bad)?;
            let c = c.to_i64().ok_or_else(|| Error::TooLarge(p.to_string()))?;
            r = r.checked_add(c).ok_or_else(|| Error::TooLarge(p.to_string()))?;
            break;
        }
        r += 1;
        rem = &rem - &HilbertPoly::binomial(a as i64 - r + 1, a as u32);
        if rem.degree() == Some(a) && rem.leading().is_negative() {
            return Err(bad());
        }
    }
    Ok(r as u64)
}

impl fmt::Display for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                f.write_str(&zpart)?;
            } else {
                write!(f, "{a}*{zpart}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HilbertPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad number {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(t: &str) -> Result<(usize, BigRational)> {
    let bad = || Error::Parse(format!("bad term {t:?}"));
    let t = t.trim();
    let zpos = t.find(['z', 'ζ']);
    let Some(zpos) = zpos else {
        return Ok((0, parse_rational(t)?));
    };
    let zlen = t[zpos..].chars().next().map(char::len_utf8).unwrap_or(1);
    let before = t[..zpos].trim().trim_end_matches('*').trim();
    let mut after = t[zpos + zlen..].trim();
    let mut power = 1usize;
    if let Some(rest) = after.strip_prefix('^') {
        let digits: String = rest.trim_start().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(bad());
        }
        power = digits.parse().map_err(|_| bad())?;
        after = rest.trim_start()[digits.len()..].trim();
    }
    let mut coeff = if before.is_empty() { BigRational::one() } else { parse_rational(before)? };
    if let Some(q) = after.strip_prefix('/') {
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        coeff /= BigRational::from_integer(q);
    } else if !after.is_empty() {
        return Err(bad());
    }
    Ok((power, coeff))
}

impl FromStr for HilbertPoly {
    type Err = Error;

    /// Parses sums of terms `c`, `c*z`, `c*z^k` and `z^k/q`, e.g. `3*z+5` or `z^2/2+3*z/2+1`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut prev: Option<char> = None;
        for c in compact.chars() {
            let splits = (c == '+' || c == '-') && !matches!(prev, None | Some('^') | Some('*') | Some('/'));
            if splits {
                terms.push((neg, std::mem::take(&mut cur)));
                neg = c == '-';
            } else if (c == '+' || c == '-') && prev.is_none() {
                neg = c == '-';
            } else {
                cur.push(c);
            }
            prev = Some(c);
        }
        terms.push((neg, cur));
        let mut out = HilbertPoly::zero();
        for (neg, t) in terms {
            if t.is_empty() {
                return Err(Error::Parse(format!("bad polynomial {s:?}")));
            }
            let (k, mut c) = parse_term(&t)?;
            if neg {
                c = -c;
            }
            let mut coeffs = vec![BigRational::zero(); k + 1];
            coeffs[k] = c;
            out = &out + &HilbertPoly::new(coeffs);
        }
        Ok(out)
    }
}
