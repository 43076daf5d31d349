use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Exps;
use crate::ring::{ClRing, ExtNat};

/// Splitting of an ideal `I` by powers of `x_n` (the second-to-last variable):
/// `I = ⊕ I_ℓ x_n^ℓ` with each `I_ℓ` an ideal of the bar ring.
///
/// For a bounded `x_n` all components `I_0..I_{d_n-1}` are stored. Otherwise the
/// prefix holds the components before the chain stabilizes and `tail` holds the
/// stable value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    base: ClRing,
    dn: ExtNat,
    prefix: Vec<MonomialIdeal>,
    tail: Option<MonomialIdeal>,
}

fn drop_index(e: &[u32], idx: usize) -> Exps {
    let mut v = e.to_vec();
    v.remove(idx);
    v
}

impl Decomposition {
    pub(crate) fn of(ideal: &MonomialIdeal) -> Result<Self> {
        let ring = ideal.ring();
        if !ring.is_projective() {
            return Err(Error::NotProjective(ring.to_string()));
        }
        let base = ring.bar_ring()?;
        let m = ring.varcount();
        let idx = m - 2;
        let dn = ring.degrees()[idx];
        let component = |l: u32| {
            let gens = ideal
                .gen_exps()
                .iter()
                .filter(|g| g[idx] <= l)
                .map(|g| drop_index(g, idx))
                .collect();
            MonomialIdeal::from_exps(&base, gens)
        };
        Ok(match dn {
            ExtNat::Finite(d) => Decomposition { base: base.clone(), dn, prefix: (0..d).map(component).collect(), tail: None },
            ExtNat::Inf => {
                let l0 = ideal.gen_exps().iter().map(|g| g[idx]).max().unwrap_or(0);
                Decomposition {
                    base: base.clone(),
                    dn,
                    prefix: (0..l0).map(component).collect(),
                    tail: Some(component(l0)),
                }
            }
        })
    }

    /// Builds a decomposition from its parts, checking the chain condition.
    ///
    /// With a bounded `x_n`, `components` must have exactly `d_n` entries and
    /// `tail` must be `None`. Otherwise `tail` is required.
    pub fn from_parts(
        base: &ClRing,
        dn: ExtNat,
        components: Vec<MonomialIdeal>,
        tail: Option<MonomialIdeal>,
    ) -> Result<Self> {
        for c in components.iter().chain(tail.iter()) {
            base.check_same(c.ring())?;
        }
        match (dn, &tail) {
            (ExtNat::Finite(d), None) if components.len() == d as usize => {}
            (ExtNat::Inf, Some(_)) => {}
            _ => {
                return Err(Error::InvalidRing(format!(
                    "{} components and tail {:?} do not fit bound {dn}",
                    components.len(),
                    tail.is_some()
                )))
            }
        }
        let d = Decomposition { base: base.clone(), dn, prefix: components, tail };
        d.check_chain()?;
        Ok(d)
    }

    fn check_chain(&self) -> Result<()> {
        let all: Vec<&MonomialIdeal> = self.prefix.iter().chain(self.tail.iter()).collect();
        for (l, w) in all.windows(2).enumerate() {
            if !w[1].contains_ideal(w[0]) {
                return Err(Error::ChainViolation(l));
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &ClRing {
        &self.base
    }

    /// Bound of the splitting variable.
    pub fn bound(&self) -> ExtNat {
        self.dn
    }

    /// The stored components: all of them for a bounded `x_n`, the pre-stable prefix otherwise.
    pub fn components(&self) -> &[MonomialIdeal] {
        &self.prefix
    }

    pub fn tail(&self) -> Option<&MonomialIdeal> {
        self.tail.as_ref()
    }

    /// First index from which the components are constant, for an unbounded `x_n`.
    pub fn stable_index(&self) -> Option<usize> {
        self.tail.as_ref().map(|_| self.prefix.len())
    }

    /// `I_ℓ`; `None` past the bound.
    pub fn component(&self, l: usize) -> Option<&MonomialIdeal> {
        match &self.tail {
            Some(t) => Some(self.prefix.get(l).unwrap_or(t)),
            None => self.prefix.get(l),
        }
    }

    /// Components and tail in order.
    pub fn all_parts(&self) -> Vec<&MonomialIdeal> {
        self.prefix.iter().chain(self.tail.iter()).collect()
    }

    /// Rebuilds the ideal of `target` with these components.
    pub fn assemble(&self, target: &ClRing) -> Result<MonomialIdeal> {
        if !target.is_projective() {
            return Err(Error::NotProjective(target.to_string()));
        }
        self.base.check_same(&target.bar_ring()?)?;
        let idx = target.varcount() - 2;
        if target.degrees()[idx] != self.dn {
            return Err(Error::RingMismatch(self.base.to_string(), target.to_string()));
        }
        self.check_chain()?;
        let mut gens = Vec::new();
        for (l, c) in self.all_parts().into_iter().enumerate() {
            for g in c.gen_exps() {
                let mut e = g.clone();
                e.insert(idx, l as u32);
                gens.push(e);
            }
        }
        Ok(MonomialIdeal::from_exps(target, gens))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: &str, g: &str) -> MonomialIdeal {
        MonomialIdeal::parse(&r.parse().unwrap(), g).unwrap()
    }

    #[test]
    fn bounded_split_matches_hand_computation() {
        let i = ideal("3,3,4,inf", "x1^2, x1*x2^2*x3, x1*x2*x3^2, x1*x3^3, x2^2*x3^2");
        let d = i.decompose().unwrap();
        assert_eq!(d.components().len(), 4);
        assert_eq!(d.component(0).unwrap().to_string(), "(x1^2)");
        assert_eq!(d.component(2).unwrap().to_string(), "(x1^2, x1*x2, x2^2)");
        assert_eq!(d.component(3).unwrap().to_string(), "(x1, x2^2)");
        assert!(d.component(4).is_none());
        assert_eq!(d.assemble(i.ring()).unwrap(), i);
    }

    #[test]
    fn unbounded_split_has_tail() {
        let i = ideal("2,inf,inf", "x1");
        let d = i.decompose().unwrap();
        assert_eq!(d.stable_index(), Some(0));
        assert_eq!(d.tail().unwrap().to_string(), "(x1)");
        assert_eq!(d.component(7).unwrap().to_string(), "(x1)");
        assert_eq!(d.assemble(i.ring()).unwrap(), i);
    }

    #[test]
    fn assemble_from_parts() {
        let target: ClRing = "2,inf".parse().unwrap();
        let base = target.bar_ring().unwrap();
        let d = Decomposition::from_parts(
            &base,
            ExtNat::Finite(2),
            vec![MonomialIdeal::zero(&base), MonomialIdeal::unit(&base)],
            None,
        )
        .unwrap();
        assert_eq!(d.assemble(&target).unwrap().to_string(), "(x1)");
        let bad = Decomposition::from_parts(
            &base,
            ExtNat::Finite(2),
            vec![MonomialIdeal::unit(&base), MonomialIdeal::zero(&base)],
            None,
        );
        assert_eq!(bad.unwrap_err(), Error::ChainViolation(0));
    }
}
