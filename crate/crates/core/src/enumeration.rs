//! Exhaustive search for the saturated strongly stable points of a Hilbert scheme.
//!
//! A saturated strongly stable ideal of a projective ring is the extension of a
//! strongly stable ideal of its tilde ring, so the search runs there. Its preimage in
//! the ambient polynomial ring is saturated with the same Hilbert polynomial, hence
//! generated in degrees up to the Gotzmann number `G`, and its Hilbert function agrees
//! with `p` from degree `G - 1` on. In the tilde ring this pins down the number of
//! standard monomials in each degree `D ≥ G` and their total up to `D`.
//!
//! The search picks the set of standard monomials degree by degree from `D` down to
//! 0. In each degree it must be closed under moving exponent to later variables, and
//! it must contain every monomial some multiple of which is already standard.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hilbert::hilbert_polynomial;
use crate::ideal::MonomialIdeal;
use crate::monomial::{exps_of_degree, Exps};
use crate::points::hilb_nonempty;
use crate::poly::{gotzmann_number, HilbertPoly};
use crate::ring::ClRing;

/// Limits for [`strongly_stable_points`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest generator degree searched. `None` uses the certified bound.
    pub max_gen_degree: Option<u32>,
    /// Number of search nodes after which the search aborts.
    pub max_candidates: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_gen_degree: None, max_candidates: 1_000_000 }
    }
}

/// Result of an enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Enumeration {
    pub points: Vec<MonomialIdeal>,
    /// Whether the degree bound used was at least the certified one.
    pub complete: bool,
    pub degree_bound: u32,
}

/// `max(G(p), largest finite bound)`, past which no minimal generator can live.
pub fn certified_degree_bound(p: &HilbertPoly, r: &ClRing) -> Result<u32> {
    let g = gotzmann_number(p)?;
    let g = u32::try_from(g).map_err(|_| Error::TooLarge(p.to_string()))?;
    Ok(r.finite_degrees().max().unwrap_or(0).max(g))
}

/// Monomials of one degree, indexed in ascending lex order.
///
/// Moving exponent to a later variable lowers lex order, so ascending lex order
/// lists every monomial after the ones it can be moved down to.
struct Level {
    mons: Vec<Exps>,
    index: HashMap<Exps, usize>,
    /// Indices reachable by one move to a later variable.
    below: Vec<Vec<usize>>,
}

impl Level {
    fn new(ring: &ClRing, j: u32) -> Self {
        let mut mons = exps_of_degree(ring, j);
        mons.reverse();
        let index: HashMap<Exps, usize> = mons.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let below = mons
            .iter()
            .map(|u| {
                let mut out = Vec::new();
                for i in 0..u.len() {
                    if u[i] == 0 {
                        continue;
                    }
                    for k in i + 1..u.len() {
                        let mut w = u.clone();
                        w[i] -= 1;
                        w[k] += 1;
                        if let Some(&x) = index.get(&w) {
                            out.push(x);
                        }
                    }
                }
                out
            })
            .collect();
        Level { mons, index, below }
    }

    fn len(&self) -> usize {
        self.mons.len()
    }
}

struct Search<'a> {
    levels: Vec<Level>,
    total: u64,
    nodes: &'a AtomicU64,
    limit: u64,
}

impl Search<'_> {
    fn tick(&self) -> Result<()> {
        if self.nodes.fetch_add(1, Ordering::Relaxed) >= self.limit {
            return Err(Error::BudgetExceeded(self.limit));
        }
        Ok(())
    }

    /// Monomials of degree `j` having a multiple in `standard` (degree `j + 1`) that is nonzero.
    fn forced(&self, j: usize, standard_above: &[bool]) -> Vec<bool> {
        let lvl = &self.levels[j];
        let up = &self.levels[j + 1];
        lvl.mons
            .iter()
            .map(|u| {
                (0..u.len()).any(|i| {
                    let mut w = u.clone();
                    w[i] += 1;
                    up.index.get(&w).is_some_and(|&x| standard_above[x])
                })
            })
            .collect()
    }

    /// Least number of standard monomials in degrees `0..=j` given degree `j + 1`.
    fn min_below(&self, j: usize, standard_above: &[bool]) -> u64 {
        let mut acc = 0;
        let mut cur = standard_above.to_vec();
        for t in (0..=j).rev() {
            cur = self.forced(t, &cur);
            acc += cur.iter().filter(|b| **b).count() as u64;
        }
        acc
    }

    /// Calls `f` on every down-closed set of degree `j` containing `base` whose size
    /// lies in `lo..=hi`.
    fn down_sets(
        &self,
        j: usize,
        base: Vec<bool>,
        lo: usize,
        hi: usize,
        f: &mut dyn FnMut(&[bool]) -> Result<()>,
    ) -> Result<()> {
        let size = base.iter().filter(|b| **b).count();
        let mut set = base;
        self.grow(j, &mut set, size, 0, lo, hi, f)
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &self,
        j: usize,
        set: &mut Vec<bool>,
        size: usize,
        from: usize,
        lo: usize,
        hi: usize,
        f: &mut dyn FnMut(&[bool]) -> Result<()>,
    ) -> Result<()> {
        self.tick()?;
        if size >= lo && size <= hi {
            f(set)?;
        }
        if size >= hi {
            return Ok(());
        }
        let lvl = &self.levels[j];
        for x in from..lvl.len() {
            if set[x] || !lvl.below[x].iter().all(|&y| set[y]) {
                continue;
            }
            set[x] = true;
            self.grow(j, set, size + 1, x + 1, lo, hi, f)?;
            set[x] = false;
        }
        Ok(())
    }

    /// Continues below degree `j + 1` with `used` standard monomials already placed.
    fn descend(&self, j: usize, above: &[bool], used: u64, chosen: &mut Vec<Vec<bool>>, out: &mut Vec<Vec<Vec<bool>>>) -> Result<()> {
        let base = self.forced(j, above);
        let left = self.total - used;
        let hi = (left as usize).min(self.levels[j].len());
        let lo = base.iter().filter(|b| **b).count();
        self.down_sets(j, base, lo, hi, &mut |set| {
            let n = set.iter().filter(|b| **b).count() as u64;
            if j == 0 {
                if used + n == self.total {
                    chosen.push(set.to_vec());
                    out.push(chosen.clone());
                    chosen.pop();
                }
                return Ok(());
            }
            if used + n + self.min_below(j - 1, set) > self.total {
                return Ok(());
            }
            chosen.push(set.to_vec());
            let r = self.descend(j - 1, set, used + n, chosen, out);
            chosen.pop();
            r
        })
    }
}

fn count_to_u64(v: &num_rational::BigRational, p: &HilbertPoly) -> Result<u64> {
    if !v.is_integer() || v.is_negative() {
        return Err(Error::InadmissiblePolynomial(p.to_string()));
    }
    v.to_integer().to_u64().ok_or_else(|| Error::TooLarge(p.to_string()))
}

/// All saturated strongly stable ideals `I` of `r` with `HP(R/I) = p`, in canonical order.
pub fn strongly_stable_points(p: &HilbertPoly, r: &ClRing, budget: &EnumerationBudget) -> Result<Enumeration> {
    if !r.is_projective() {
        return Err(Error::NotProjective(r.to_string()));
    }
    if !hilb_nonempty(p, r) {
        return Err(Error::EmptyHilbertScheme { ring: r.to_string(), poly: p.to_string() });
    }
    if p.is_zero() {
        return Ok(Enumeration { points: vec![MonomialIdeal::unit(r)], complete: true, degree_bound: 0 });
    }
    let certified = certified_degree_bound(p, r)?;
    let d = budget.max_gen_degree.unwrap_or(certified).max(1);
    let tilde = r.tilde_ring()?;
    let total = count_to_u64(&p.eval(d), p)?;
    let top = count_to_u64(&(&p.eval(d) - &p.eval(d - 1)), p)?;
    let nodes = AtomicU64::new(0);
    let search = Search {
        levels: (0..=d).map(|j| Level::new(&tilde, j)).collect(),
        total,
        nodes: &nodes,
        limit: budget.max_candidates,
    };
    let du = d as usize;
    let mut tops = Vec::new();
    if top as usize <= search.levels[du].len() {
        let empty = vec![false; search.levels[du].len()];
        search.down_sets(du, empty, top as usize, top as usize, &mut |set| {
            if top + search.min_below(du - 1, set) <= total {
                tops.push(set.to_vec());
            }
            Ok(())
        })?;
    }
    let found: Vec<Vec<Vec<Vec<bool>>>> = tops
        .par_iter()
        .map(|set| {
            let mut out = Vec::new();
            let mut chosen = vec![set.clone()];
            search.descend(du - 1, set, top, &mut chosen, &mut out)?;
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut points = Vec::new();
    for standard in found.into_iter().flatten() {
        // standard[0] is degree d, the last entry degree 0
        let mut gens = Vec::new();
        for (k, set) in standard.iter().enumerate() {
            let lvl = &search.levels[du - k];
            gens.extend(lvl.mons.iter().zip(set).filter(|(_, s)| !**s).map(|(m, _)| m.clone()));
        }
        let ideal = MonomialIdeal::from_exps(&tilde, gens).extend_from_tilde(r)?;
        if hilbert_polynomial(&ideal) == *p && ideal.is_strongly_stable() {
            points.push(ideal);
        }
    }
    points.sort();
    points.dedup();
    Ok(Enumeration { points, complete: d >= certified, degree_bound: d })
}

/// The almost lex members of [`strongly_stable_points`].
pub fn almost_lex_points(p: &HilbertPoly, r: &ClRing, budget: &EnumerationBudget) -> Result<Enumeration> {
    let mut e = strongly_stable_points(p, r, budget)?;
    e.points.retain(|i| i.is_almost_lex());
    Ok(e)
}
