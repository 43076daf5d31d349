//! Total Betti numbers over rings whose bounded variables are all quadratic.
//!
//! Splitting `I` by powers of `x_n` reduces to the bar ring `R̄`. Writing `κ` for the
//! Betti numbers of `k[x_last] = R̄/(x_1..x_{n-1})` over `R̄`, the ideal-side totals satisfy
//!
//! * `x_n` unbounded: `β_t(I) = β_t(I_0) + c κ_t` with `c = HP(I_tail) - HP(I_0)`;
//! * `x_n` quadratic: `β_t(I) = β_t(I_0) + c (κ_0 + ... + κ_t)` with `c = HP(I_1) - HP(I_0)`,
//!
//! where the `I_ℓ` are ideals of `R̄` and `HP` is the Hilbert polynomial of the ideal
//! itself. These hold on the ideal side only: applying the same shape to the
//! quotient totals gives wrong answers already for `R/(x1, x2)` over `k[x1,x2,x3]/(x1², x2²)`.

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::hilbert::hilbert_polynomial_ideal;
use crate::ideal::MonomialIdeal;
use crate::poly::hp_difference_constant;
use crate::ring::{ClRing, ExtNat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    Ideal,
    /// The same recursion applied to quotient totals, kept to show it disagrees.
    #[cfg_attr(not(test), allow(dead_code))]
    Quotient,
}

/// `κ_0..=κ_imax`: coefficients of `Π (1+t)` over unbounded and `Π 1/(1-t)` over
/// quadratic variables among all but the last two of `r`.
fn residue_betti(r: &ClRing, imax: usize) -> Vec<u64> {
    let m = r.varcount();
    let mut k = vec![0u64; imax + 1];
    k[0] = 1;
    for d in &r.degrees()[..m.saturating_sub(2)] {
        match d {
            ExtNat::Inf => {
                for t in (1..=imax).rev() {
                    k[t] += k[t - 1];
                }
            }
            ExtNat::Finite(_) => {
                for t in 1..=imax {
                    k[t] += k[t - 1];
                }
            }
        }
    }
    k
}

fn constant(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<u64> {
    hp_difference_constant(&hilbert_polynomial_ideal(a), &hilbert_polynomial_ideal(b))
        .and_then(|c| c.to_u64())
        .ok_or_else(|| Error::NotSaturated(format!("{a} inside {b}")))
}

pub(crate) fn recurse(ideal: &MonomialIdeal, imax: usize, side: Side) -> Result<Vec<u64>> {
    let r = ideal.ring();
    if r.varcount() == 1 {
        let mut out = vec![0u64; imax + 1];
        // saturated ideals of k[x] are 0 and the unit ideal
        match (side, ideal.is_unit()) {
            (Side::Ideal, true) | (Side::Quotient, false) => out[0] = 1,
            _ => {}
        }
        return Ok(out);
    }
    let d = ideal.decompose()?;
    let kappa = residue_betti(r, imax);
    let i0 = d.component(0).expect("every split has a zeroth component");
    let mut out = recurse(i0, imax, side)?;
    match d.bound() {
        ExtNat::Inf => {
            let tail = d.tail().expect("unbounded split has a tail");
            let c = constant(i0, tail)?;
            for t in 0..=imax {
                out[t] += c * kappa[t];
            }
        }
        ExtNat::Finite(_) => {
            let c = constant(i0, &d.components()[1])?;
            let mut acc = 0;
            for t in 0..=imax {
                acc += kappa[t];
                out[t] += c * acc;
            }
        }
    }
    Ok(out)
}

fn check_input(ideal: &MonomialIdeal) -> Result<()> {
    let r = ideal.ring();
    if !r.is_projective() || r.finite_degrees().any(|d| d != 2) {
        return Err(Error::UnsupportedDegrees(r.to_string()));
    }
    if !ideal.is_strongly_stable() {
        return Err(Error::NotStronglyStable(ideal.to_string()));
    }
    if !ideal.is_saturated() {
        return Err(Error::NotSaturated(ideal.to_string()));
    }
    Ok(())
}

/// Total Betti numbers `β_0..=β_imax` of `R/I` over `R`, for `I` saturated and
/// strongly stable in a ring with every bounded degree equal to 2.
///
/// ```
/// use expansive::{betti::betti_quadratic_recursion, ClRing, MonomialIdeal};
/// let r: ClRing = "2,2,inf".parse().unwrap();
/// let i = MonomialIdeal::parse(&r, "x1, x2").unwrap();
/// assert_eq!(betti_quadratic_recursion(&i, 4).unwrap(), [1, 2, 3, 4, 5]);
/// ```
pub fn betti_quadratic_recursion(ideal: &MonomialIdeal, imax: u32) -> Result<Vec<u64>> {
    check_input(ideal)?;
    if ideal.is_unit() {
        return Ok(vec![0; imax as usize + 1]);
    }
    let ib = recurse(ideal, imax as usize, Side::Ideal)?;
    let mut out = vec![1];
    out.extend_from_slice(&ib[..imax as usize]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::{betti_resolution_oracle, FieldSpec, Over};

    fn ideal(r: &str, g: &str) -> MonomialIdeal {
        MonomialIdeal::parse(&r.parse::<ClRing>().unwrap(), g).unwrap()
    }

    fn oracle(i: &MonomialIdeal, imax: u32) -> Vec<u64> {
        let t = betti_resolution_oracle(i, Over::Quotient, FieldSpec::RATIONALS, imax, 12).unwrap();
        let mut v = t.totals();
        v.resize(imax as usize + 1, 0);
        v
    }

    fn quotient_side(i: &MonomialIdeal, imax: u32) -> Vec<u64> {
        recurse(i, imax as usize, Side::Quotient).unwrap()
    }

    #[test]
    fn calibration() {
        let cases = [("2,inf", "x1"), ("2,2,inf", "x1, x2"), ("2,inf,inf", "x1")];
        let expected: [Vec<u64>; 3] = [vec![1; 7], (1..=7).collect(), vec![1; 7]];
        let mut quotient_matches = 0;
        for ((r, g), want) in cases.iter().zip(&expected) {
            let i = ideal(r, g);
            assert_eq!(&oracle(&i, 6), want, "{i}");
            assert_eq!(&betti_quadratic_recursion(&i, 6).unwrap(), want, "{i}");
            quotient_matches += usize::from(&quotient_side(&i, 6) == want);
        }
        assert!(quotient_matches < cases.len());
    }

    #[test]
    fn rejects_other_degrees() {
        assert!(matches!(
            betti_quadratic_recursion(&ideal("3,inf", "x1"), 3),
            Err(Error::UnsupportedDegrees(_))
        ));
        assert!(matches!(
            betti_quadratic_recursion(&ideal("inf,inf,inf", "x2"), 3),
            Err(Error::NotStronglyStable(_))
        ));
    }

    #[test]
    fn polynomial_rings_are_finite() {
        // twisted cubic over k[x,y,z,w]
        let i = ideal("inf,inf,inf,inf", "x1^2, x1*x2, x1*x3, x2^3");
        assert_eq!(betti_quadratic_recursion(&i, 5).unwrap(), [1, 4, 4, 1, 0, 0]);
    }
}
