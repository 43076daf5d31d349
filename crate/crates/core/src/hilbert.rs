//! Hilbert series numerators, Hilbert functions and Hilbert polynomials of `R/I`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::ideal::{minimalize, MonomialIdeal};
use crate::monomial::{degree_of, Exps};
use crate::poly::HilbertPoly;
use crate::ring::ClRing;

/// `K(t)` with `HS(R/I, t) = K(t) / (1 - t)^m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeriesNumerator {
    k: Vec<BigInt>,
    m: usize,
}

fn trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn add_shifted(acc: &mut Vec<BigInt>, p: &[BigInt], shift: usize, sign: i32) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, BigInt::zero());
    }
    for (i, c) in p.iter().enumerate() {
        if sign >= 0 {
            acc[i + shift] += c;
        } else {
            acc[i + shift] -= c;
        }
    }
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Numerator of `S/(gens)` over `(1 - t)^m` for a polynomial ring `S`.
fn numerator(gens: Vec<Exps>, m: usize) -> Vec<BigInt> {
    let gens = minimalize(&ClRing::polynomial(m), gens);
    if gens.is_empty() {
        return vec![BigInt::one()];
    }
    if gens.iter().any(|g| g.iter().all(|e| *e == 0)) {
        return Vec::new();
    }
    // pairwise coprime generators form a regular sequence
    let mut used = vec![false; m];
    let mut coprime = true;
    'outer: for g in &gens {
        for (i, e) in g.iter().enumerate() {
            if *e > 0 {
                if used[i] {
                    coprime = false;
                    break 'outer;
                }
                used[i] = true;
            }
        }
    }
    if coprime {
        let mut acc = vec![BigInt::one()];
        for g in &gens {
            let d = degree_of(g) as usize;
            let mut next = acc.clone();
            add_shifted(&mut next, &acc, d, -1);
            acc = next;
        }
        return trim(acc);
    }
    let mut freq = vec![0usize; m];
    for g in &gens {
        for (i, e) in g.iter().enumerate() {
            if *e > 0 {
                freq[i] += 1;
            }
        }
    }
    let pivot = (0..m).max_by(|a, b| freq[*a].cmp(&freq[*b]).then(b.cmp(a))).expect("m > 0");
    let e = gens.iter().map(|g| g[pivot]).filter(|e| *e > 0).min().expect("pivot occurs");
    // S/I has S/(I + x^e) as quotient and S/(I : x^e)(-e) as kernel
    let mut with = gens.clone();
    let mut p = vec![0; m];
    p[pivot] = e;
    with.push(p);
    let colon: Vec<Exps> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            h[pivot] = h[pivot].saturating_sub(e);
            h
        })
        .collect();
    let mut acc = numerator(with, m);
    let c = numerator(colon, m);
    add_shifted(&mut acc, &c, e as usize, 1);
    trim(acc)
}

impl SeriesNumerator {
    pub fn coeffs(&self) -> &[BigInt] {
        &self.k
    }

    /// Denominator exponent, the number of variables.
    pub fn exponent(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> Option<usize> {
        self.k.len().checked_sub(1)
    }

    /// `HF(R/I, j)`.
    pub fn hf(&self, j: u64) -> BigInt {
        let m = self.m as i64;
        let j = j as i64;
        let mut acc = BigInt::zero();
        for (k, c) in self.k.iter().enumerate() {
            let k = k as i64;
            if k > j {
                break;
            }
            let w = if m == 0 { BigInt::from((k == j) as i64) } else { binom(j - k + m - 1, m - 1) };
            acc += c * w;
        }
        acc
    }

    /// Hilbert polynomial obtained by cancelling `(1 - t)` factors.
    pub fn hilbert_polynomial(&self) -> HilbertPoly {
        let mut q = self.k.clone();
        let mut m = self.m;
        while m > 0 && !q.is_empty() && q.iter().sum::<BigInt>().is_zero() {
            // synthetic division by (1 - t): q = (1 - t) * s with s_i = Σ_{k≤i} q_k
            let mut s = Vec::with_capacity(q.len() - 1);
            let mut run = BigInt::zero();
            for c in &q[..q.len() - 1] {
                run += c;
                s.push(run.clone());
            }
            q = trim(s);
            m -= 1;
        }
        if m == 0 || q.is_empty() {
            return HilbertPoly::zero();
        }
        let mut acc = HilbertPoly::zero();
        for (i, c) in q.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let b = HilbertPoly::binomial(m as i64 - 1 - i as i64, m as u32 - 1);
            let scaled = HilbertPoly::new(b.coeffs().iter().map(|x| x * BigRational::from_integer(c.clone())).collect());
            acc = &acc + &scaled;
        }
        acc
    }
}

/// `K(t)` for `R/I`, computed on the preimage of `I` in the polynomial ring.
pub fn series_numerator(ideal: &MonomialIdeal) -> SeriesNumerator {
    let pre = ideal.preimage_in_ambient();
    let m = ideal.ring().varcount();
    SeriesNumerator { k: numerator(pre.gen_exps().to_vec(), m), m }
}

/// `HP(R/I)`.
pub fn hilbert_polynomial(ideal: &MonomialIdeal) -> HilbertPoly {
    series_numerator(ideal).hilbert_polynomial()
}

/// `HP(I) = HP(R) - HP(R/I)`.
pub fn hilbert_polynomial_ideal(ideal: &MonomialIdeal) -> HilbertPoly {
    let ring_hp = hilbert_polynomial(&MonomialIdeal::zero(ideal.ring()));
    &ring_hp - &hilbert_polynomial(ideal)
}

/// `HF(R/I, j)` from the series.
pub fn hilbert_function(ideal: &MonomialIdeal, j: u64) -> BigInt {
    series_numerator(ideal).hf(j)
}

/// A degree from which `HF(R/I, j) = HP(R/I)(j)`.
pub fn hf_hp_threshold(ideal: &MonomialIdeal) -> u64 {
    let s = series_numerator(ideal);
    match s.degree() {
        None => 0,
        Some(d) => (d as i64 - (s.m as i64 - 1)).max(0) as u64,
    }
}
