//! Exact prime fields and the row reduction the Betti code needs.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A field of characteristic 0 (the rationals) or a prime `q`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u64) -> Result<Self> {
        if characteristic != 0 && !is_prime(characteristic) || characteristic > u32::MAX as u64 {
            return Err(Error::InvalidCharacteristic(characteristic));
        }
        Ok(FieldSpec { characteristic })
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "QQ"),
            q => write!(f, "GF({q})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

pub(crate) trait Field: Sync {
    type Elem: Clone + PartialEq + Send + Sync + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn embed_i64(&self, v: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.embed_i64(1)
    }
}

pub(crate) struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn embed_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
}

pub(crate) struct PrimeField {
    q: u64,
}

impl PrimeField {
    pub(crate) fn new(q: u64) -> Self {
        PrimeField { q }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn embed_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.q as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.q - b) % self.q
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.q
    }
    fn inv(&self, a: &u64) -> u64 {
        // Fermat
        let (mut base, mut e, mut acc) = (*a, self.q - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.q;
            }
            base = base * base % self.q;
            e >>= 1;
        }
        acc
    }
}

/// Runs `body` with the field named by `spec`.
macro_rules! with_field {
    ($spec:expr, |$f:ident| $body:expr) => {
        match $spec.characteristic() {
            0 => {
                let $f = &$crate::betti::field::Rationals;
                $body
            }
            q => {
                let $f = &$crate::betti::field::PrimeField::new(q);
                $body
            }
        }
    };
}
pub(crate) use with_field;

/// Rows in reduced echelon form, grown one vector at a time.
pub(crate) struct Echelon<'f, F: Field> {
    f: &'f F,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<'f, F: Field> Echelon<'f, F> {
    pub(crate) fn new(f: &'f F) -> Self {
        Echelon { f, rows: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far; returns whether it was.
    pub(crate) fn insert(&mut self, mut v: Vec<F::Elem>) -> bool {
        let f = self.f;
        for (p, row) in &self.rows {
            if !f.is_zero(&v[*p]) {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !f.is_zero(r) {
                        *x = f.sub(x, &f.mul(&c, r));
                    }
                }
            }
        }
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for (_, row) in self.rows.iter_mut() {
            if !f.is_zero(&row[p]) {
                let c = row[p].clone();
                for (x, r) in row.iter_mut().zip(&v) {
                    if !f.is_zero(r) {
                        *x = f.sub(x, &f.mul(&c, r));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Rank of a matrix given by rows.
pub(crate) fn rank<F: Field>(f: &F, rows: Vec<Vec<F::Elem>>) -> usize {
    let mut e = Echelon::new(f);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// A basis of `{v : A v = 0}` for `A` given by its `ncols` columns as row-indexed vectors.
pub(crate) fn kernel<F: Field>(f: &F, cols: &[Vec<F::Elem>], nrows: usize) -> Vec<Vec<F::Elem>> {
    let ncols = cols.len();
    // row-reduce A with columns as unknowns
    let mut a: Vec<Vec<F::Elem>> = (0..nrows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !f.is_zero(&a[i][c])) else {
            continue;
        };
        a.swap(r, p);
        let inv = f.inv(&a[r][c]);
        for x in a[r].iter_mut() {
            *x = f.mul(x, &inv);
        }
        for i in 0..nrows {
            if i != r && !f.is_zero(&a[i][c]) {
                let k = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    if !f.is_zero(y) {
                        *x = f.sub(x, &f.mul(&k, y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = f.sub(&f.zero(), &a[i][free]);
        }
        out.push(v);
    }
    out
}
