//! Truncated minimal free resolutions by linear algebra in each multidegree.
//!
//! Every module in the resolution of `R/I` is multigraded, so each free module is a
//! list of generators with multidegrees and each differential is determined by its
//! values on generators. In a fixed multidegree `b` the free module `R(-a)` is
//! spanned by `x^(b-a)` when that monomial is nonzero in `R`, so the differential
//! restricted to degree `b` is a small matrix. New generators in degree `b` are
//! the kernel vectors not already in the span of `x_v * kernel(b - e_v)`.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;

use super::field::{kernel, with_field, Echelon, Field};
use super::table::{BettiTable, Over, Window};
use super::FieldSpec;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{degree_of, exps_of_degree, Exps};
use crate::ring::ClRing;

struct Gen<E> {
    deg: Exps,
    /// `d(gen) = Σ c * x^(deg - deg_k) * gen_k` over the previous level.
    image: Vec<(usize, E)>,
}

/// Generators of the previous level that live in degree `b`, in order.
fn basis_at<E>(ring: &ClRing, level: &[Gen<E>], b: &[u32]) -> Vec<usize> {
    level
        .iter()
        .enumerate()
        .filter(|(_, g)| {
            g.deg.iter().zip(b).all(|(a, x)| a <= x) && {
                let diff: Exps = b.iter().zip(&g.deg).map(|(x, a)| x - a).collect();
                ring.admits(&diff)
            }
        })
        .map(|(k, _)| k)
        .collect()
}

struct Slice<E> {
    basis: Vec<usize>,
    kernel: Vec<Vec<E>>,
}

fn next_level<F: Field>(
    f: &F,
    ring: &ClRing,
    prev: &[Gen<F::Elem>],
    cur: &[Gen<F::Elem>],
    jmax: u32,
) -> Vec<Gen<F::Elem>> {
    let mut degrees: HashSet<Exps> = HashSet::new();
    for g in cur {
        let a = degree_of(&g.deg);
        for t in 0..=jmax.saturating_sub(a) {
            if a + t > jmax {
                break;
            }
            for c in exps_of_degree(ring, t) {
                degrees.insert(g.deg.iter().zip(&c).map(|(x, y)| x + y).collect());
            }
        }
    }
    let mut degrees: Vec<Exps> = degrees.into_iter().collect();
    degrees.sort_by(|a, b| degree_of(a).cmp(&degree_of(b)).then(a.cmp(b)));
    let slices: HashMap<Exps, Slice<F::Elem>> = degrees
        .par_iter()
        .map(|b| {
            let basis = basis_at(ring, cur, b);
            let rows = basis_at(ring, prev, b);
            let cols: Vec<Vec<F::Elem>> = basis
                .iter()
                .map(|&g| {
                    let mut col = vec![f.zero(); rows.len()];
                    for (k, c) in &cur[g].image {
                        if let Ok(pos) = rows.binary_search(k) {
                            col[pos] = c.clone();
                        }
                    }
                    col
                })
                .collect();
            let kernel = kernel(f, &cols, rows.len());
            (b.clone(), Slice { basis, kernel })
        })
        .collect();
    let found: Vec<Vec<Gen<F::Elem>>> = degrees
        .par_iter()
        .map(|b| {
            let here = &slices[b];
            if here.kernel.is_empty() {
                return Vec::new();
            }
            let mut span = Echelon::new(f);
            for v in 0..b.len() {
                if b[v] == 0 {
                    continue;
                }
                let mut lower = b.clone();
                lower[v] -= 1;
                let Some(there) = slices.get(&lower) else { continue };
                for kv in &there.kernel {
                    let mut w = vec![f.zero(); here.basis.len()];
                    for (pos, g) in there.basis.iter().enumerate() {
                        if let Ok(p) = here.basis.binary_search(g) {
                            w[p] = kv[pos].clone();
                        }
                    }
                    span.insert(w);
                }
            }
            let mut out = Vec::new();
            for kv in &here.kernel {
                if span.insert(kv.clone()) {
                    let image = here
                        .basis
                        .iter()
                        .zip(kv)
                        .filter(|(_, c)| !f.is_zero(c))
                        .map(|(g, c)| (*g, c.clone()))
                        .collect();
                    out.push(Gen { deg: b.clone(), image });
                }
            }
            out
        })
        .collect();
    found.into_iter().flatten().collect()
}

fn resolve<F: Field>(f: &F, ring: &ClRing, gens: &[Exps], imax: u32, jmax: u32) -> BTreeMap<(u32, u32), u64> {
    let mut out = BTreeMap::new();
    out.insert((0, 0), 1);
    let m = ring.varcount();
    let mut prev = vec![Gen { deg: vec![0; m], image: Vec::new() }];
    let mut cur: Vec<Gen<F::Elem>> = gens
        .iter()
        .filter(|g| degree_of(g) <= jmax)
        .map(|g| Gen { deg: g.clone(), image: vec![(0, f.one())] })
        .collect();
    for i in 1..=imax {
        for g in &cur {
            *out.entry((i, degree_of(&g.deg))).or_insert(0) += 1;
        }
        if i == imax || cur.is_empty() {
            break;
        }
        let next = next_level(f, ring, &prev, &cur, jmax);
        prev = cur;
        cur = next;
    }
    out
}

/// Betti numbers `β_{i,j}` of `R/I` for `i ≤ imax`, `j ≤ jmax`, over `R` itself or
/// over its ambient polynomial ring.
///
/// Generators of internal degree at most `jmax` never depend on higher degrees, so
/// every reported entry is exact.
pub fn betti_resolution_oracle(
    ideal: &MonomialIdeal,
    over: Over,
    field: FieldSpec,
    imax: u32,
    jmax: u32,
) -> Result<BettiTable> {
    let (ring, target) = match over {
        Over::Quotient => (ideal.ring().clone(), ideal.clone()),
        Over::Ambient => (ideal.ring().ambient(), ideal.preimage_in_ambient()),
    };
    let window = Window { imax, jmax };
    if target.is_unit() {
        return Ok(BettiTable::new(over, window));
    }
    let gens = target.gen_exps();
    if imax >= 1 && !gens.is_empty() && gens.iter().all(|g| degree_of(g) > jmax) {
        return Err(Error::WindowTooSmall(format!("no generator of {ideal} has degree at most {jmax}")));
    }
    let entries = with_field!(field, |f| resolve(f, &ring, gens, imax, jmax));
    let mut t = BettiTable::new(over, window);
    for ((i, j), b) in entries {
        t.add(i, j, b);
    }
    Ok(t)
}

/// Default window: `imax = 6`, `jmax = max generator degree + imax + 2`.
pub fn default_window(ideal: &MonomialIdeal) -> Window {
    let imax = 6;
    Window { imax, jmax: ideal.max_generator_degree() + imax + 2 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::ambient::betti_ambient;

    fn ideal(r: &str, g: &str) -> MonomialIdeal {
        MonomialIdeal::parse(&r.parse::<ClRing>().unwrap(), g).unwrap()
    }

    #[test]
    fn periodic_and_koszul() {
        // residue field of k[x]/(x^2), i.e. R/(x)
        let t = betti_resolution_oracle(&ideal("2", "x1"), Over::Quotient, FieldSpec::RATIONALS, 6, 10).unwrap();
        assert_eq!(t.totals(), [1; 7]);
        let t = betti_resolution_oracle(&ideal("inf,inf", "x1, x2"), Over::Quotient, FieldSpec::RATIONALS, 5, 10).unwrap();
        assert_eq!(t.totals(), [1, 2, 1]);
        let t = betti_resolution_oracle(&ideal("2,2,inf", "x1, x2"), Over::Quotient, FieldSpec::RATIONALS, 5, 12).unwrap();
        assert_eq!(t.totals(), [1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn matches_lattice_over_the_ambient_ring() {
        for (r, g) in [
            ("inf,inf,inf,inf", "x1^2, x1*x2, x1*x3, x2^3"),
            ("2,3,inf,inf", "x1*x2^2, x1*x2*x3^2, x1*x3^3"),
            ("2,2,inf,inf", "x1*x2, x1*x3, x2*x3^2"),
        ] {
            let i = ideal(r, g);
            let full = betti_ambient(&i, FieldSpec::RATIONALS).unwrap();
            let w = full.window();
            let o = betti_resolution_oracle(&i, Over::Ambient, FieldSpec::new(3).unwrap(), w.imax, w.jmax).unwrap();
            assert!(o.same_entries(&full), "{i}: {o:?} vs {full:?}");
        }
    }

    #[test]
    fn window_errors() {
        let e = betti_resolution_oracle(&ideal("inf,inf", "x1^3"), Over::Quotient, FieldSpec::RATIONALS, 3, 2);
        assert_eq!(e.unwrap_err().kind(), "window-too-small");
        let unit = betti_resolution_oracle(&ideal("inf,inf", "1"), Over::Quotient, FieldSpec::RATIONALS, 3, 2).unwrap();
        assert!(unit.totals().is_empty());
    }
}
