//! Serializable reports for presentations, verifications and conjecture
//! runs. The JSON layout is versioned by [`SCHEMA`].

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::explorer::{CandidateType, ConjectureCandidate, ConjectureReading, ConjectureReport, ReadingOutcome};
use crate::presentation::{Presentation, Regime};
use crate::rational::Rational;
use crate::verify::Verification;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorTerm {
    pub point: String,
    pub multiplicity: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub degree: i64,
    pub ord_p1: i64,
    pub ord_p2: i64,
    pub label: Option<String>,
    pub symbol: String,
    /// The function, `t_c^(k)·u^d` or `w·u^d`, when known in closed form.
    pub function: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeadingFactor {
    pub gen: String,
    pub exp: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationEntry {
    pub leading: Vec<LeadingFactor>,
    pub symbol: String,
    pub degree: i64,
    /// `null` where minimality is not settled in closed form.
    pub minimal: Option<bool>,
    pub boxed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub schema: u32,
    pub divisor: Vec<DivisorTerm>,
    pub curve: Option<String>,
    pub field: Option<String>,
    pub regime: String,
    pub transcription: String,
    pub order: String,
    pub swapped: bool,
    pub generators: Vec<GeneratorEntry>,
    pub relations: Vec<RelationEntry>,
    pub verification: Option<Verification>,
}

fn regime_name(r: Regime) -> &'static str {
    match r {
        Regime::OnePoint => "one-point",
        Regime::Unequal => "unequal",
        Regime::Equal => "equal",
    }
}

impl PresentationReport {
    pub fn new(p: &Presentation) -> Self {
        let names = ["P1", "P2"];
        let divisor =
            p.alphas.iter().zip(names).map(|(&a, n)| DivisorTerm { point: n.into(), multiplicity: a }).collect();
        let generators = p
            .generators
            .iter()
            .map(|g| GeneratorEntry {
                degree: g.degree,
                ord_p1: g.ord_p1,
                ord_p2: g.ord_p2,
                label: Some(g.label.to_string()),
                symbol: g.symbol.clone(),
                function: Some(g.function_kind.to_string()),
            })
            .collect();
        let relations = p
            .relations
            .iter()
            .map(|r| RelationEntry {
                leading: p
                    .generators
                    .iter()
                    .zip(&r.monomial)
                    .filter(|(_, &e)| e > 0)
                    .map(|(g, &e)| LeadingFactor { gen: g.symbol.clone(), exp: e })
                    .collect(),
                symbol: p.monomial_symbol(&r.monomial),
                degree: p.monomial_degree(&r.monomial),
                minimal: r.minimal.into(),
                boxed: r.boxed,
            })
            .collect();
        PresentationReport {
            schema: SCHEMA,
            divisor,
            curve: None,
            field: None,
            regime: regime_name(p.regime).into(),
            transcription: format!("{:?}", p.transcription).to_lowercase(),
            order: p.order.name().into(),
            swapped: p.swapped,
            generators,
            relations,
            verification: None,
        }
    }

    pub fn with_verification(mut self, v: Verification, curve: Option<String>, field: Option<String>) -> Self {
        self.verification = Some(v);
        self.curve = curve;
        self.field = field;
        self
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let div: Vec<String> = self.divisor.iter().map(|t| format!("{}·{}", t.multiplicity, t.point)).collect();
        let _ = writeln!(s, "D = {}   ({} regime, order {})", div.join(" + "), self.regime, self.order);
        if self.swapped {
            let _ = writeln!(s, "inputs interchanged so that α1 ≥ α2");
        }
        let _ = writeln!(s, "\ngenerators ({}):", self.generators.len());
        let _ = writeln!(s, "  {:>4}  {:>8}  {:>5}  {:<14} function", "deg", "ords", "label", "symbol");
        for g in &self.generators {
            let _ = writeln!(
                s,
                "  {:>4}  {:>8}  {:>5}  {:<14} {}",
                g.degree,
                format!("({},{})", g.ord_p1, g.ord_p2),
                g.label.as_deref().unwrap_or("-"),
                g.symbol,
                g.function.as_deref().unwrap_or("-")
            );
        }
        let _ = writeln!(s, "\nrelation leading terms ({}):", self.relations.len());
        for r in &self.relations {
            let m = match r.minimal {
                Some(true) => "minimal",
                Some(false) => "not minimal",
                None => "minimality open",
            };
            let b = if r.boxed { "  [boxed]" } else { "" };
            let _ = writeln!(s, "  deg {:>3}  {:<24} {m}{b}", r.degree, r.symbol);
        }
        if let Some(v) = &self.verification {
            let _ = writeln!(s, "\n{} oracle: {:?}", v.oracle, v.status);
            for d in &v.diffs {
                let _ = writeln!(s, "  diff: {d}");
            }
            for n in &v.notes {
                let _ = writeln!(s, "  note: {n}");
            }
        }
        s
    }
}

/// One row of a verification sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub alphas: Vec<Rational>,
    pub verification: Verification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: u32,
    pub oracle: String,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn mismatches(&self) -> usize {
        self.rows.iter().filter(|r| !r.verification.is_match()).count()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let a: Vec<String> = r.alphas.iter().map(|a| a.to_string()).collect();
            let _ = writeln!(s, "{:<12} {:?}", a.join(", "), r.verification.status);
            for d in &r.verification.diffs {
                let _ = writeln!(s, "    {d}");
            }
        }
        let _ = writeln!(s, "{} of {} match ({} oracle)", self.rows.len() - self.mismatches(), self.rows.len(), self.oracle);
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExploreReport {
    pub schema: u32,
    pub divisor: Vec<DivisorTerm>,
    pub curve: String,
    pub points: Vec<String>,
    pub field: String,
    pub generators: Vec<GeneratorEntry>,
    pub conjecture: ConjectureReport,
}

fn candidate_label(cands: &[ConjectureCandidate], d: i64, c: i64) -> Option<String> {
    cands.iter().find(|x| x.degree == d && x.pole == c).map(|x| match x.kind {
        CandidateType::A => "a".to_string(),
        CandidateType::B => "b".to_string(),
        CandidateType::C => "c".to_string(),
    })
}

impl ExploreReport {
    pub fn new(conjecture: ConjectureReport, curve: String, points: [String; 2], field: String) -> Self {
        let divisor = vec![
            DivisorTerm { point: "P1".into(), multiplicity: conjecture.alpha1 },
            DivisorTerm { point: "P2".into(), multiplicity: -conjecture.alpha2 },
        ];
        let generators = conjecture
            .generators
            .iter()
            .map(|&(d, o1, o2)| GeneratorEntry {
                degree: d,
                ord_p1: o1,
                ord_p2: o2,
                label: candidate_label(&conjecture.candidates, d, (-o1).max(0)),
                symbol: format!("g({d},{})", -o1),
                function: None,
            })
            .collect();
        ExploreReport { schema: SCHEMA, divisor, curve, points: points.to_vec(), field, generators, conjecture }
    }

    pub fn to_text(&self) -> String {
        let c = &self.conjecture;
        let mut s = String::new();
        let _ = writeln!(s, "D = {}·P1 − {}·P2 on {}, P1 = {}, P2 = {}", c.alpha1, c.alpha2, self.curve, self.points[0], self.points[1]);
        let _ = writeln!(s, "field {}, degrees ≤ {}, P2 − P1 has no torsion of order ≤ {}", self.field, c.d_max, c.torsion_bound);
        let _ = writeln!(s, "\n  deg  dim  poles at P1");
        for (d, (dim, poles)) in c.dims.iter().zip(&c.basis_poles).enumerate() {
            if *dim > 0 {
                let p: Vec<String> = poles.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(s, "  {d:>3}  {dim:>3}  {}", p.join(" "));
            }
        }
        let degs: Vec<String> = c.generator_degrees.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(s, "\ngenerator degrees: {}", degs.join(", "));
        let _ = writeln!(s, "generators (degree, pole at P1, label under {}):", c.reading.label());
        for g in &self.generators {
            let _ = writeln!(s, "  ({}, {})  {}", g.degree, -g.ord_p1, g.label.as_deref().unwrap_or("-"));
        }
        write_outcome(&mut s, &c.outcome, true);
        let _ = writeln!(s, "\nall readings:");
        for o in &c.readings {
            write_outcome(&mut s, o, false);
        }
        if c.excluded_pole_violations.is_empty() {
            let _ = writeln!(s, "\nno element has pole order ⌈dα2⌉ at P1");
        } else {
            let _ = writeln!(s, "\nelements with pole order ⌈dα2⌉ at P1 in degrees {:?}", c.excluded_pole_violations);
        }
        s
    }
}

fn write_outcome(s: &mut String, o: &ReadingOutcome, long: bool) {
    let status = if o.matches { "MATCH" } else { "DIFF" };
    if long {
        let _ = writeln!(s, "\nconjecture ({}): {status}", o.label);
        let _ = writeln!(s, "  predicted, not on the curve: {:?}", o.missing);
        let _ = writeln!(s, "  on the curve, not predicted: {:?}", o.extra);
    } else {
        let _ = writeln!(s, "  {:<22} {status:<5} missing {:?} extra {:?}", o.label, o.missing, o.extra);
    }
}

/// A reading as accepted on the command line: `m`, `level`, `c_start`
/// separated by commas, e.g. `plus-one,adjacent,2`.
pub fn parse_reading(s: &str) -> crate::error::Result<ConjectureReading> {
    use crate::error::Error;
    use crate::explorer::{LevelRule, MVariant};
    match s {
        "literal" => return Ok(ConjectureReading::literal()),
        "as-drawn" => return Ok(ConjectureReading::as_drawn()),
        _ => {}
    }
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::Parse(format!("reading must be literal, as-drawn or <plus-one|strict>,<literal|adjacent>,<2|3>; got {s:?}"));
    let [m, l, c] = parts.as_slice() else { return Err(bad()) };
    let m = match *m {
        "plus-one" => MVariant::PlusOne,
        "strict" => MVariant::Strict,
        _ => return Err(bad()),
    };
    let level = match *l {
        "literal" => LevelRule::Literal,
        "adjacent" => LevelRule::Adjacent,
        _ => return Err(bad()),
    };
    let c_start = match *c {
        "2" => 2,
        "3" => 3,
        _ => return Err(bad()),
    };
    Ok(ConjectureReading { m, level, c_start })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::present_one_point;

    #[test]
    fn weierstrass_report() {
        let r = PresentationReport::new(&present_one_point("1".parse().unwrap()).unwrap());
        assert_eq!(r.generators.iter().map(|g| g.degree).collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(r.relations.len(), 1);
        assert_eq!(r.relations[0].degree, 6);
        assert!(r.to_text().contains("fc^2"));
    }

    #[test]
    fn readings_parse() {
        assert_eq!(parse_reading("as-drawn").unwrap(), ConjectureReading::as_drawn());
        for rd in ConjectureReading::all() {
            let m = if rd.m == crate::explorer::MVariant::PlusOne { "plus-one" } else { "strict" };
            let l = if rd.level == crate::explorer::LevelRule::Literal { "literal" } else { "adjacent" };
            assert_eq!(parse_reading(&format!("{m},{l},{}", rd.c_start)).unwrap(), rd);
        }
        assert!(parse_reading("strict,adjacent").is_err());
    }
}
