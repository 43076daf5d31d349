//! Property suites run case by case over a matrix file.

use std::collections::BTreeMap;

use clap::ValueEnum;
use expansive::{
    betti_ambient, betti_quadratic_recursion, betti_resolution_oracle, bounds_report, check_axiom, exp_point,
    hyperplane_check, linear_forms_check, strongly_stable_points, Axiom, Case, Error, ExtNat, FieldSpec, MonomialIdeal,
    Over, Witnesses,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

/// Homological degrees checked by the infinite-resolution suite.
const QUOTIENT_IMAX: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Defining properties of the expansive point, plus the hyperplane and linear form checks.
    Axioms,
    /// Betti numbers of every point stay below those of the expansive point, over the ambient ring.
    Bounds,
    /// The same over the quotient ring, for degrees 2 and inf only.
    Infinite,
    All,
}

impl Suite {
    fn parts(self) -> &'static [Suite] {
        match self {
            Suite::All => &[Suite::Axioms, Suite::Bounds, Suite::Infinite],
            Suite::Axioms => &[Suite::Axioms],
            Suite::Bounds => &[Suite::Bounds],
            Suite::Infinite => &[Suite::Infinite],
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Failed {
    pub suite: Suite,
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct CaseReport {
    pub line: usize,
    pub ring: String,
    pub poly: String,
    pub passed: bool,
    pub checks: usize,
    pub failures: Vec<Failed>,
    /// Suites that did not apply to this case.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<Suite>,
    /// Computed values worth recording, such as the bound itself.
    pub results: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Value>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub passed: bool,
    pub cases: Vec<CaseReport>,
}

struct Tally<'a> {
    report: &'a mut CaseReport,
    suite: Suite,
}

impl Tally<'_> {
    fn check(&mut self, ok: bool, check: impl Into<String>, detail: impl FnOnce() -> Option<String>) {
        self.report.checks += 1;
        if !ok {
            self.report.passed = false;
            self.report.failures.push(Failed { suite: self.suite, check: check.into(), detail: detail() });
        }
    }
}

fn dominated(small: &[u64], big: &[u64]) -> bool {
    (0..small.len().max(big.len())).all(|i| small.get(i).unwrap_or(&0) <= big.get(i).unwrap_or(&0))
}

fn points(c: &Case) -> Result<Vec<MonomialIdeal>, Error> {
    let e = strongly_stable_points(&c.poly, &c.ring, &c.budget)?;
    if !e.complete {
        return Err(Error::BudgetExceeded(c.budget.max_candidates));
    }
    Ok(e.points)
}

fn axioms(c: &Case, pts: &[MonomialIdeal], t: &mut Tally) -> Result<(), Error> {
    let w = Witnesses { points: pts.to_vec(), offsets: vec![1, 2, 3] };
    for a in Axiom::ALL {
        let rep = check_axiom(a, &c.poly, &c.ring, &w)?;
        for inst in rep.instances {
            t.check(inst.passed, format!("{a} {}", inst.label), || inst.detail.clone());
        }
    }
    if c.ring.varcount() >= 2 {
        for j in pts {
            for h in 1..=3 {
                let ok = hyperplane_check(&c.poly, &c.ring, j, h)?;
                t.check(ok, format!("hyperplane h={h}"), || Some(j.to_string()));
            }
            let ok = linear_forms_check(&c.poly, &c.ring, j)?;
            t.check(ok, "linear forms", || Some(j.to_string()));
        }
    }
    Ok(())
}

fn bounds(c: &Case, pts: &[MonomialIdeal], t: &mut Tally) -> Result<(), Error> {
    let rep = bounds_report(&c.poly, &c.ring, FieldSpec::RATIONALS)?;
    let top = rep.table.totals();
    t.report.results.insert("bounds".into(), rep.to_json());
    t.check(pts.contains(&rep.exp), "expansive point enumerated", || Some(rep.exp.to_string()));
    for j in pts {
        let b = betti_ambient(j, FieldSpec::RATIONALS)?.totals();
        t.check(dominated(&b, &top), "ambient totals bounded", || Some(format!("{j}: {b:?} vs {top:?}")));
    }
    Ok(())
}

/// Totals over the quotient ring for `i ≤ 6`. Quotients by squares of variables are
/// Koszul, so the regularity over the ambient ring bounds the one needed here.
fn quotient_totals(j: &MonomialIdeal) -> Result<Vec<u64>, Error> {
    let reg = betti_ambient(j, FieldSpec::RATIONALS)?.regularity();
    let mut t = betti_resolution_oracle(j, Over::Quotient, FieldSpec::RATIONALS, QUOTIENT_IMAX, QUOTIENT_IMAX + reg)?
        .totals();
    t.resize(QUOTIENT_IMAX as usize + 1, 0);
    Ok(t)
}

fn infinite(c: &Case, pts: &[MonomialIdeal], t: &mut Tally) -> Result<(), Error> {
    let exp = exp_point(&c.poly, &c.ring)?;
    let top = quotient_totals(&exp)?;
    t.report.results.insert("quotient_totals".into(), json!(top));
    for j in pts {
        let b = quotient_totals(j)?;
        t.check(dominated(&b, &top), "quotient totals bounded", || Some(format!("{j}: {b:?} vs {top:?}")));
        let rec = betti_quadratic_recursion(j, QUOTIENT_IMAX)?;
        t.check(rec == b, "recursion matches resolution", || Some(format!("{j}: {rec:?} vs {b:?}")));
    }
    Ok(())
}

fn quadratic(c: &Case) -> bool {
    c.ring.degrees().iter().all(|d| matches!(d, ExtNat::Inf | ExtNat::Finite(2)))
}

fn run_case(suite: Suite, c: &Case) -> CaseReport {
    let mut report = CaseReport {
        line: c.line,
        ring: c.ring.to_string(),
        poly: c.poly.to_string(),
        passed: true,
        checks: 0,
        failures: Vec::new(),
        skipped: Vec::new(),
        results: BTreeMap::new(),
        error: None,
    };
    let outcome = points(c).and_then(|pts| {
        report.results.insert("points".into(), json!(pts.len()));
        for &s in suite.parts() {
            if s == Suite::Infinite && !quadratic(c) {
                report.skipped.push(s);
                continue;
            }
            let mut t = Tally { report: &mut report, suite: s };
            match s {
                Suite::Axioms => axioms(c, &pts, &mut t)?,
                Suite::Bounds => bounds(c, &pts, &mut t)?,
                Suite::Infinite => infinite(c, &pts, &mut t)?,
                Suite::All => unreachable!("parts never contains All"),
            }
        }
        Ok(())
    });
    if let Err(e) = outcome {
        report.passed = false;
        report.error = Some(json!({ "kind": e.kind(), "detail": e.to_string() }));
    }
    report
}

/// Runs `suite` on every case, in parallel, reporting in input order.
pub fn run_suite(suite: Suite, cases: &[Case]) -> Report {
    let cases: Vec<CaseReport> = cases.par_iter().map(|c| run_case(suite, c)).collect();
    Report { suite, passed: cases.iter().all(|c| c.passed), cases }
}
