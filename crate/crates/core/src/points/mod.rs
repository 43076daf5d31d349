//! The lex point and the expansive point of a Hilbert scheme, and the chains
//! of almost lex ideals that produce them.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::hilbert_polynomial;
use crate::ideal::MonomialIdeal;
use crate::monomial::{degree_of, exps_of_degree, opp_cmp, Exps, Monomial};
use crate::poly::{hp_difference_constant, HilbertPoly};
use crate::ring::ClRing;

mod axioms;

pub use axioms::{check_candidate, check_axiom, hyperplane_check, linear_forms_check, Axiom, AxiomInstance, AxiomReport, Witnesses};

/// Which generator a chain step replaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    /// Lex-smallest generator of the largest generator degree.
    Lex,
    /// Among the lex-smallest generator of each degree, the smallest in the opposite order.
    Exp,
}

/// One ideal of a chain and the generator whose replacement produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub ideal: MonomialIdeal,
    pub replaced: Option<Monomial>,
}

/// `L(0) ⊋ L(1) ⊋ ... ⊋ L(c)`, each step raising the quotient Hilbert polynomial by one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub kind: ChainKind,
    pub steps: Vec<ChainStep>,
}

impl Chain {
    /// Number of replacement steps.
    pub fn length(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn start(&self) -> &MonomialIdeal {
        &self.steps[0].ideal
    }

    pub fn last(&self) -> &MonomialIdeal {
        &self.steps.last().expect("chains are never empty").ideal
    }

    pub fn into_last(self) -> MonomialIdeal {
        self.steps.into_iter().last().expect("chains are never empty").ideal
    }
}

fn empty(p: &HilbertPoly, r: &ClRing) -> Error {
    Error::EmptyHilbertScheme { ring: r.to_string(), poly: p.to_string() }
}

/// Index of the generator replaced by the next step.
fn select(gens: &[Exps], kind: ChainKind) -> Option<usize> {
    if gens.is_empty() {
        return None;
    }
    // canonical order puts the lex-smallest generator of a degree last in its block
    let lex_min_per_degree: Vec<usize> = (0..gens.len())
        .filter(|&i| i + 1 == gens.len() || degree_of(&gens[i + 1]) != degree_of(&gens[i]))
        .collect();
    match kind {
        ChainKind::Lex => lex_min_per_degree.last().copied(),
        ChainKind::Exp => lex_min_per_degree.into_iter().min_by(|a, b| opp_cmp(&gens[*a], &gens[*b])),
    }
}

/// Replaces generator `u` by `x_1 u, ..., x_n u`, where `n` is one less than the variable count.
pub(crate) fn replace_generator(ideal: &MonomialIdeal, idx: usize) -> MonomialIdeal {
    let gens = ideal.gen_exps();
    let u = &gens[idx];
    let n = ideal.ring().varcount().saturating_sub(1);
    let mut out: Vec<Exps> = gens.iter().enumerate().filter(|(i, _)| *i != idx).map(|(_, g)| g.clone()).collect();
    for i in 0..n {
        let mut v = u.clone();
        v[i] += 1;
        out.push(v);
    }
    MonomialIdeal::from_exps(ideal.ring(), out)
}

/// The chain of the given kind ending at the lex or expansive point.
pub fn chain(p: &HilbertPoly, r: &ClRing, kind: ChainKind) -> Result<Chain> {
    if p.is_zero() {
        return Ok(Chain { kind, steps: vec![ChainStep { ideal: MonomialIdeal::unit(r), replaced: None }] });
    }
    if !r.is_projective() {
        return Err(empty(p, r));
    }
    let tilde = r.tilde_ring()?;
    let start = lex_point(&p.difference(), &tilde).map_err(|_| empty(p, r))?.extend_from_tilde(r)?;
    let c = hp_difference_constant(&hilbert_polynomial(&start), p).ok_or_else(|| empty(p, r))?;
    if c.is_negative() {
        return Err(empty(p, r));
    }
    let c = c.to_usize().ok_or_else(|| Error::TooLarge(format!("chain length {c}")))?;
    let mut steps = vec![ChainStep { ideal: start, replaced: None }];
    for _ in 0..c {
        let cur = &steps.last().expect("nonempty").ideal;
        let idx = select(cur.gen_exps(), kind).ok_or_else(|| empty(p, r))?;
        let replaced = Monomial::from_raw(r, &cur.gen_exps()[idx]);
        let next = replace_generator(cur, idx);
        steps.push(ChainStep { ideal: next, replaced: Some(replaced) });
    }
    Ok(Chain { kind, steps })
}

pub fn lex_chain(p: &HilbertPoly, r: &ClRing) -> Result<Chain> {
    chain(p, r, ChainKind::Lex)
}

pub fn exp_chain(p: &HilbertPoly, r: &ClRing) -> Result<Chain> {
    chain(p, r, ChainKind::Exp)
}

/// The saturated lex ideal `L` with `HP(R/L) = p`.
pub fn lex_point(p: &HilbertPoly, r: &ClRing) -> Result<MonomialIdeal> {
    Ok(lex_chain(p, r)?.into_last())
}

/// The expansive ideal `E` with `HP(R/E) = p`.
pub fn exp_point(p: &HilbertPoly, r: &ClRing) -> Result<MonomialIdeal> {
    Ok(exp_chain(p, r)?.into_last())
}

/// Whether some saturated ideal of `r` has quotient Hilbert polynomial `p`.
pub fn hilb_nonempty(p: &HilbertPoly, r: &ClRing) -> bool {
    match lex_point(p, r) {
        Ok(l) => l.is_saturated() && hilbert_polynomial(&l) == *p,
        Err(_) => false,
    }
}

/// Whether a saturated ideal is the expansive point of its own Hilbert polynomial.
pub fn is_expansive(ideal: &MonomialIdeal) -> Result<bool> {
    if !ideal.is_saturated() {
        return Err(Error::NotSaturated(ideal.to_string()));
    }
    let p = hilbert_polynomial(ideal);
    Ok(exp_point(&p, ideal.ring())? == *ideal)
}

/// The ways the lex and expansive points can coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum LexExpCase {
    /// The lex chain has length zero.
    Case1,
    /// The chain starts at an ideal generated in one degree and has length one.
    Case2,
    /// The chain starts at a principal ideal and has length two.
    Case3,
    /// The lex point is `(x_1^{d_1-1} ... x_{n-1}^{d_{n-1}-1} x_n^α)` with `d_{n-1}` finite.
    Case4,
    None,
}

pub fn lex_eq_exp_case(p: &HilbertPoly, r: &ClRing) -> Result<LexExpCase> {
    let ch = lex_chain(p, r)?;
    let start = ch.start();
    let c = ch.length();
    let single_degree = {
        let g = start.gen_exps();
        g.iter().all(|e| degree_of(e) == degree_of(&g[0]))
    };
    if c == 0 {
        return Ok(LexExpCase::Case1);
    }
    if single_degree && c == 1 {
        return Ok(LexExpCase::Case2);
    }
    if start.generator_count() == 1 && c == 2 {
        return Ok(LexExpCase::Case3);
    }
    let m = r.varcount();
    if m >= 3 {
        let n = m - 1;
        if let Some(_dn1) = r.degrees()[n - 2].finite() {
            let lex = ch.last();
            if lex.generator_count() == 1 {
                let g = &lex.gen_exps()[0];
                let top = (0..n - 1).all(|i| r.degrees()[i].finite().is_some_and(|d| g[i] == d - 1));
                if top && g[m - 1] == 0 {
                    return Ok(LexExpCase::Case4);
                }
            }
        }
    }
    Ok(LexExpCase::None)
}

/// Closed form of the expansive point for a constant polynomial `c`:
/// `(x_1..x_n)^δ` plus the first few lex monomials of degree `δ - 1`.
pub fn exp_zero_dimensional(c: u64, r: &ClRing) -> Result<MonomialIdeal> {
    let p = HilbertPoly::constant(c);
    if c == 0 {
        return Ok(MonomialIdeal::unit(r));
    }
    if !r.is_projective() {
        return Err(empty(&p, r));
    }
    let tilde = r.tilde_ring()?;
    let mut total: u64 = 0;
    let mut delta: u32 = 0;
    let mut last_block: Vec<Exps> = Vec::new();
    while total < c {
        let block = exps_of_degree(&tilde, delta);
        if block.is_empty() {
            return Err(empty(&p, r));
        }
        total += block.len() as u64;
        last_block = block;
        delta += 1;
    }
    let extra = (total - c) as usize;
    let mut gens: Vec<Exps> = exps_of_degree(&tilde, delta);
    gens.extend(last_block.into_iter().take(extra));
    let k = MonomialIdeal::from_exps(&tilde, gens);
    k.extend_from_tilde(r)
}

/// `p + b`.
pub(crate) fn offset(p: &HilbertPoly, b: u64) -> HilbertPoly {
    p + &HilbertPoly::constant(BigInt::from(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> ClRing {
        s.parse().unwrap()
    }

    fn p(s: &str) -> HilbertPoly {
        s.parse().unwrap()
    }

    #[test]
    fn lex_points() {
        assert_eq!(lex_point(&p("3*z+5"), &ring("2,3,inf,inf")).unwrap().to_string(), "(x1*x2, x1*x3^5)");
        assert_eq!(lex_point(&p("3*z+1"), &ring("inf,inf,inf,inf")).unwrap().to_string(), "(x1, x2^4, x2^3*x3)");
        assert!(lex_point(&p("0"), &ring("2,inf")).unwrap().is_unit());
    }

    #[test]
    fn exp_chain_for_twisted_cubic() {
        let ch = exp_chain(&p("3*z+1"), &ring("inf,inf,inf,inf")).unwrap();
        assert_eq!(ch.length(), 1);
        assert_eq!(ch.start().to_string(), "(x1, x2^3)");
        assert_eq!(ch.steps[1].replaced.as_ref().unwrap().to_string(), "x1");
        assert_eq!(ch.last().to_string(), "(x1^2, x1*x2, x1*x3, x2^3)");
    }

    #[test]
    fn exp_point_with_bounded_variables() {
        let ch = exp_chain(&p("3*z+5"), &ring("2,3,inf,inf")).unwrap();
        assert_eq!(ch.length(), 5);
        assert_eq!(ch.last().to_string(), "(x1*x2^2, x1*x2*x3^2, x1*x3^3)");
        for s in &ch.steps {
            assert!(s.ideal.is_almost_lex(), "{:?}", s.ideal);
        }
    }

    #[test]
    fn eight_points_in_four_space() {
        // degree-2 part is the initial lex segment of length 7 in k[x1..x4]
        let r = ring("inf,inf,inf,inf,inf");
        let e = exp_point(&p("8"), &r).unwrap();
        let m = MonomialIdeal::first_variables(&r, 4).power(3);
        let extra = MonomialIdeal::parse(&r, "x1^2, x1*x2, x1*x3, x1*x4, x2^2, x2*x3, x2*x4").unwrap();
        assert_eq!(e, m.sum(&extra).unwrap());
        assert!(e.is_almost_lex());
        assert_eq!(exp_zero_dimensional(8, &r).unwrap(), e);
    }

    #[test]
    fn nonemptiness() {
        let a = ring("2,3,inf,inf");
        assert!(hilb_nonempty(&p("3*z+5"), &a));
        assert!(!hilb_nonempty(&p("z"), &a));
        assert!(hilb_nonempty(&p("0"), &a));
        assert!(!hilb_nonempty(&p("z^2"), &ring("inf,inf,inf")));
        assert!(!hilb_nonempty(&p("-1"), &a));
    }

    #[test]
    fn expansive_predicate() {
        let a = ring("2,3,inf,inf");
        assert!(!is_expansive(&MonomialIdeal::parse(&a, "x1*x2, x1*x3^5").unwrap()).unwrap());
        let s = ring("inf,inf,inf");
        assert!(is_expansive(&MonomialIdeal::parse(&s, "x1, x2^2").unwrap()).unwrap());
        assert!(is_expansive(&MonomialIdeal::unit(&s)).unwrap());
        assert!(is_expansive(&MonomialIdeal::parse(&s, "x1^2, x1*x2, x1*x3").unwrap()).is_err());
    }

    #[test]
    fn coincidence_cases() {
        assert_eq!(lex_eq_exp_case(&p("3*z"), &ring("2,3,inf,inf")).unwrap(), LexExpCase::Case1);
        assert_eq!(lex_eq_exp_case(&p("3*z+1"), &ring("inf,inf,inf,inf")).unwrap(), LexExpCase::None);
        assert_eq!(lex_eq_exp_case(&p("2"), &ring("inf,inf,inf")).unwrap(), LexExpCase::Case3);
    }

    #[test]
    fn zero_dimensional_closed_form() {
        let s = ring("inf,inf,inf");
        assert_eq!(exp_zero_dimensional(3, &s).unwrap().to_string(), "(x1^2, x1*x2, x2^2)");
        for r in ["inf,inf,inf", "2,2,inf", "2,3,inf,inf"] {
            let r = ring(r);
            assert_eq!(exp_zero_dimensional(1, &r).unwrap(), MonomialIdeal::first_variables(&r, r.varcount() - 1));
        }
    }

    #[test]
    fn degenerate_step_still_adds_a_point() {
        // in k[x1,x2]/(x1^2) the replacement of x1 by x1*x1 leaves the zero ideal
        let r = ring("2,inf");
        let ch = exp_chain(&p("2"), &r).unwrap();
        assert!(ch.last().is_zero());
        assert_eq!(hilbert_polynomial(ch.last()), p("2"));
        assert!(!hilb_nonempty(&p("3"), &r));
    }
}
