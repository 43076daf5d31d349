//! Betti-number upper bounds attached to the expansive point.

use serde::{Deserialize, Serialize};

use super::ambient::betti_ambient;
use super::{BettiTable, FieldSpec};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::points::exp_point;
use crate::poly::HilbertPoly;
use crate::ring::ClRing;

/// How far the bound given by `Exp(p)` is established for the ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Provenance {
    /// Monomial ideals of the Clements–Lindström ring itself; always holds.
    Unconditional,
    /// Arbitrary homogeneous ideals containing a complete intersection whose
    /// degrees grow fast enough, in characteristic 0.
    ProvedCi,
    /// Arbitrary homogeneous ideals, assuming the lex-plus-powers conjecture.
    ConditionalLpp,
}

/// `d_j > Σ_{h<j} (d_h - 1)` for every `j ≥ 3`, over the bounded degrees in order.
pub fn degrees_grow_fast(r: &ClRing) -> bool {
    let d: Vec<u32> = r.finite_degrees().collect();
    (2..d.len()).all(|j| d[j] > d[..j].iter().map(|x| x - 1).sum::<u32>())
}

pub fn provenance(r: &ClRing, field: FieldSpec) -> Provenance {
    if r.is_polynomial() {
        Provenance::Unconditional
    } else if field.characteristic() == 0 && degrees_grow_fast(r) {
        Provenance::ProvedCi
    } else {
        Provenance::ConditionalLpp
    }
}

#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub exp: MonomialIdeal,
    /// Betti table of `R/Exp(p)` over the ambient polynomial ring.
    pub table: BettiTable,
    pub provenance: Provenance,
    pub note: String,
}

impl BoundsReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "exp": self.exp,
            "table": self.table.to_json(),
            "provenance": self.provenance,
            "note": self.note,
        })
    }
}

/// Betti numbers of `R/Exp(p)` over the ambient ring, which bound those of every
/// saturated ideal with Hilbert polynomial `p` to the extent given by the provenance.
pub fn bounds_report(p: &HilbertPoly, r: &ClRing, field: FieldSpec) -> Result<BoundsReport> {
    let exp = exp_point(p, r)?;
    let table = betti_ambient(&exp, field)?;
    let provenance = provenance(r, field);
    let note = match provenance {
        Provenance::Unconditional => "bounds hold for every saturated ideal of the polynomial ring".to_string(),
        Provenance::ProvedCi => format!(
            "bounds hold for every ideal containing a regular sequence of degrees {} (characteristic 0)",
            degree_list(r)
        ),
        Provenance::ConditionalLpp => format!(
            "bounds hold for monomial ideals of {r}; for ideals containing a regular sequence of degrees {} they assume the lex-plus-powers conjecture",
            degree_list(r)
        ),
    };
    Ok(BoundsReport { exp, table, provenance, note })
}

fn degree_list(r: &ClRing) -> String {
    r.finite_degrees().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(p: &str, r: &str) -> BoundsReport {
        bounds_report(&p.parse().unwrap(), &r.parse().unwrap(), FieldSpec::RATIONALS).unwrap()
    }

    #[test]
    fn exp_tables() {
        assert_eq!(report("7*z", "2,3,3,inf,inf").table.totals(), [1, 9, 17, 12, 3]);
        assert_eq!(report("7*z", "2,2,3,inf,inf").table.totals(), [1, 7, 13, 9, 2]);
        assert_eq!(report("7*z", "inf,inf,inf,inf,inf").table.totals(), [1, 19, 42, 33, 9]);
        let ci = report("5*z+10", "2,3,inf,inf,inf");
        assert_eq!(ci.table.ideal_totals(), [17, 39, 32, 9]);
        assert_eq!(ci.provenance, Provenance::ProvedCi);
        assert_eq!(report("7*z", "2,3,3,inf,inf").provenance, Provenance::ConditionalLpp);
    }

    #[test]
    fn growth_condition() {
        let ok = |s: &str| degrees_grow_fast(&s.parse().unwrap());
        assert!(ok("2,3,inf,inf,inf"));
        assert!(!ok("2,2,2,inf"));
        assert!(!ok("2,3,3,inf,inf"));
        assert!(ok("2,2,3,inf"));
        assert!(ok("2,3,4,inf"));
        assert!(!ok("2,2,2,2,inf"));
    }

    #[test]
    fn provenance_tags() {
        assert_eq!(report("7*z", "inf,inf,inf,inf,inf").provenance, Provenance::Unconditional);
        assert_eq!(report("3*z+5", "2,3,inf,inf").provenance, Provenance::ProvedCi);
        let r: ClRing = "2,3,inf,inf".parse().unwrap();
        assert_eq!(provenance(&r, FieldSpec::new(2).unwrap()), Provenance::ConditionalLpp);
        assert_eq!(serde_json::to_value(Provenance::ProvedCi).unwrap(), "PROVED-CI");
        assert_eq!(serde_json::to_value(Provenance::ConditionalLpp).unwrap(), "CONDITIONAL-LPP");
    }
}
