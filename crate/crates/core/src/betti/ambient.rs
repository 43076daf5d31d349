//! Finite resolutions over the ambient polynomial ring.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use super::field::{rank, with_field, Field};
use super::table::{BettiTable, Over, Window};
use super::FieldSpec;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{degree_of, divides, Exps};

/// Generator count above which the lcm lattice is not attempted.
pub const LATTICE_GENERATOR_LIMIT: usize = 22;

fn lcm(a: &[u32], b: &[u32]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// All lcms of nonempty subsets of `gens`.
fn lcm_lattice(gens: &[Exps]) -> Vec<Exps> {
    let mut seen: HashSet<Exps> = gens.iter().cloned().collect();
    let mut queue: Vec<Exps> = gens.to_vec();
    while let Some(a) = queue.pop() {
        for g in gens {
            let l = lcm(&a, g);
            if seen.insert(l.clone()) {
                queue.push(l);
            }
        }
    }
    let mut out: Vec<Exps> = seen.into_iter().collect();
    out.sort();
    out
}

/// Reduced homology dimensions `H̃_k` for `k = -1, 0, ...` of a complex given by
/// its faces as bitmasks (closed under subsets).
fn reduced_homology<F: Field>(f: &F, faces: &[u32]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|s| s.count_ones()).max().unwrap_or(0) as usize;
    // by_size[s] lists the faces with s vertices, that is dimension s - 1
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
    for &s in faces {
        by_size[s.count_ones() as usize].push(s);
    }
    // rank of the boundary from size s to size s - 1
    let mut ranks = vec![0usize; top + 2];
    for s in 1..=top {
        let lower = &by_size[s - 1];
        let rows: Vec<Vec<F::Elem>> = by_size[s]
            .iter()
            .map(|&face| {
                let mut v = vec![f.zero(); lower.len()];
                let mut sign = 1i64;
                for bit in 0..32 {
                    if face >> bit & 1 == 1 {
                        let sub = face & !(1 << bit);
                        let pos = lower.iter().position(|&x| x == sub).expect("closed under subsets");
                        v[pos] = f.embed_i64(sign);
                        sign = -sign;
                    }
                }
                v
            })
            .collect();
        ranks[s] = rank(f, rows);
    }
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

/// Ideal-side multigraded Betti numbers of a monomial ideal of a polynomial ring,
/// summed into `(i, j)`.
fn ideal_betti<F: Field>(f: &F, gens: &[Exps]) -> BTreeMap<(u32, u32), u64> {
    let lattice = lcm_lattice(gens);
    let per: Vec<Vec<(u32, u32)>> = lattice
        .par_iter()
        .map(|b| {
            let support: Vec<usize> = (0..b.len()).filter(|&i| b[i] > 0).collect();
            let mut faces = Vec::new();
            for mask in 0u32..(1 << support.len()) {
                let mut c = b.clone();
                for (bit, &v) in support.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        c[v] -= 1;
                    }
                }
                if gens.iter().any(|g| divides(g, &c)) {
                    faces.push(mask);
                }
            }
            let j = degree_of(b);
            reduced_homology(f, &faces)
                .into_iter()
                .enumerate()
                .flat_map(|(k, h)| std::iter::repeat_n((k as u32, j), h))
                .collect()
        })
        .collect();
    let mut out = BTreeMap::new();
    for (i, j) in per.into_iter().flatten() {
        *out.entry((i, j)).or_insert(0) += 1;
    }
    out
}

/// Complete graded Betti table of `R/I` over the ambient polynomial ring, from the
/// homology of upper Koszul complexes over the lcm lattice of the preimage.
pub fn betti_ambient(ideal: &MonomialIdeal, field: FieldSpec) -> Result<BettiTable> {
    let pre = ideal.preimage_in_ambient();
    let m = pre.ring().varcount() as u32;
    let gens = pre.gen_exps();
    if gens.len() > LATTICE_GENERATOR_LIMIT {
        return Err(Error::TooManyGenerators(gens.len(), LATTICE_GENERATOR_LIMIT));
    }
    let jmax = gens.iter().fold(vec![0; m as usize], |acc, g| lcm(&acc, g));
    let window = Window { imax: m, jmax: degree_of(&jmax) };
    let ib = with_field!(field, |f| ideal_betti(f, gens));
    Ok(BettiTable::from_ideal_side(Over::Ambient, window, &ib, pre.is_unit()))
}

/// Betti table of `S/J` for a strongly stable `J` of a polynomial ring, by the
/// Eliahou–Kervaire formula `β_{i,i+d}(J) = Σ C(max(u) - 1, i)` over generators `u` of degree `d`.
pub fn betti_eliahou_kervaire(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let r = ideal.ring();
    if !r.is_polynomial() {
        return Err(Error::UnsupportedDegrees(r.to_string()));
    }
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable(ideal.to_string()));
    }
    let m = r.varcount() as u32;
    let mut ib = BTreeMap::new();
    for g in ideal.gen_exps() {
        let d = degree_of(g);
        let top = g.iter().rposition(|e| *e > 0).map_or(0, |p| p as u32 + 1);
        for i in 0..top {
            *ib.entry((i, i + d)).or_insert(0) += binomial(top.saturating_sub(1), i);
        }
    }
    let window = Window { imax: m, jmax: ideal.max_generator_degree() + m };
    Ok(BettiTable::from_ideal_side(Over::Ambient, window, &ib, ideal.is_unit()))
}

fn binomial(n: u32, k: u32) -> u64 {
    if k > n {
        return 0;
    }
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ClRing;

    fn ideal(r: &str, g: &str) -> MonomialIdeal {
        MonomialIdeal::parse(&r.parse::<ClRing>().unwrap(), g).unwrap()
    }

    #[test]
    fn koszul_and_small_cases() {
        let t = betti_ambient(&ideal("inf,inf", "x1, x2"), FieldSpec::RATIONALS).unwrap();
        assert_eq!(t.totals(), [1, 2, 1]);
        let t = betti_ambient(&ideal("inf,inf,inf,inf", "x1^2, x1*x2, x1*x3, x2^3"), FieldSpec::RATIONALS).unwrap();
        assert_eq!(t.ideal_totals(), [4, 4, 1]);
        let t = betti_ambient(&ideal("inf,inf,inf,inf", "x1, x2^4, x2^3*x3"), FieldSpec::RATIONALS).unwrap();
        assert_eq!(t.ideal_totals(), [3, 3, 1]);
        assert!(betti_ambient(&ideal("inf,inf", "1"), FieldSpec::RATIONALS).unwrap().totals().is_empty());
        assert_eq!(betti_ambient(&ideal("inf,inf", "0"), FieldSpec::RATIONALS).unwrap().totals(), [1]);
    }

    #[test]
    fn bounded_variables_enter_the_preimage() {
        // k[x,y]/(x^2) over k[x,y]: one relation
        let t = betti_ambient(&ideal("2,inf", "0"), FieldSpec::RATIONALS).unwrap();
        assert_eq!(t.totals(), [1, 1]);
        assert_eq!(t.get(1, 2), 1);
    }

    #[test]
    fn eliahou_kervaire_examples() {
        assert_eq!(betti_eliahou_kervaire(&ideal("inf,inf", "x1^2, x1*x2")).unwrap().ideal_totals(), [2, 1]);
        assert_eq!(betti_eliahou_kervaire(&ideal("inf,inf,inf,inf", "x1, x2^4, x2^3*x3")).unwrap().ideal_totals(), [3, 3, 1]);
        assert_eq!(betti_eliahou_kervaire(&ideal("inf,inf", "x1")).unwrap().ideal_totals(), [1]);
        assert!(betti_eliahou_kervaire(&ideal("inf,inf", "x2")).is_err());
        assert!(betti_eliahou_kervaire(&ideal("2,inf", "x1")).is_err());
    }

    #[test]
    fn lattice_cap() {
        let r: ClRing = "inf,inf,inf".parse().unwrap();
        let big = MonomialIdeal::first_variables(&r, 2).power(22);
        assert_eq!(betti_ambient(&big, FieldSpec::RATIONALS).unwrap_err(), Error::TooManyGenerators(23, 22));
    }

    #[test]
    fn homology_of_a_circle() {
        // boundary of a triangle: vertices and edges, no 2-face
        let faces = [0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110];
        assert_eq!(reduced_homology(&super::super::field::Rationals, &faces), [0, 0, 1]);
    }
}
