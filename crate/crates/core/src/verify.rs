//! Agreement reports between closed forms and an oracle, and the oracle
//! strategy trait.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::monoid::{default_leader_bound, irreducible_degree_bound, relation_leaders_oracle, LatticePoint};
use crate::presentation::{Minimality, Presentation, Regime};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub oracle: String,
    pub status: Status,
    pub diffs: Vec<String>,
    /// Free-form observations that are not pass/fail, such as the empirical
    /// status of leaders whose minimality has no closed form.
    pub notes: Vec<String>,
}

impl Verification {
    pub fn new(oracle: &str, diffs: Vec<String>, notes: Vec<String>) -> Self {
        let status = if diffs.is_empty() { Status::Match } else { Status::Mismatch };
        Verification { oracle: oracle.into(), status, diffs, notes }
    }

    pub fn is_match(&self) -> bool {
        self.status == Status::Match
    }
}

pub trait PresentationOracle: Send + Sync {
    fn name(&self) -> &'static str;

    /// Recompute the presentation independently and diff it against `p`.
    /// `d_max` bounds the degrees examined; `None` picks the oracle default.
    fn verify(&self, p: &Presentation, d_max: Option<i64>) -> Result<Verification>;
}

/// A monomial as a sorted multiset of generator lattice points.
pub type PointMonomial = Vec<(LatticePoint, u32)>;

pub fn point_monomial(points: &[LatticePoint], m: &[u32]) -> PointMonomial {
    let mut v: Vec<_> = points.iter().zip(m).filter(|(_, &e)| e > 0).map(|(p, &e)| (*p, e)).collect();
    v.sort();
    v
}

fn render(m: &PointMonomial) -> String {
    m.iter().map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") }).collect::<Vec<_>>().join("*")
}

/// Checks one-point closed forms against the lattice monoid.
pub struct MonoidOracle;

impl PresentationOracle for MonoidOracle {
    fn name(&self) -> &'static str {
        "monoid"
    }

    fn verify(&self, p: &Presentation, d_max: Option<i64>) -> Result<Verification> {
        if p.regime != Regime::OnePoint {
            return domain("the monoid oracle only covers one-point divisors");
        }
        let alpha = p.alphas[0];
        let mut diffs = Vec::new();

        let closed_pts: Vec<LatticePoint> = p.generators.iter().map(|g| g.lattice).collect();
        let irr = crate::monoid::irreducibles_up_to(alpha, irreducible_degree_bound(alpha))?;
        let a: BTreeSet<_> = closed_pts.iter().copied().collect();
        let b: BTreeSet<_> = irr.iter().copied().collect();
        for x in a.difference(&b) {
            diffs.push(format!("generator {x} is not irreducible"));
        }
        for x in b.difference(&a) {
            diffs.push(format!("irreducible {x} missing from the generators"));
        }

        let bound = d_max.unwrap_or_else(|| default_leader_bound(&closed_pts));
        let (gens, leaders) = relation_leaders_oracle(alpha, bound)?;
        let oracle: BTreeSet<(PointMonomial, bool)> =
            leaders.iter().map(|l| (point_monomial(&gens, &l.vector), l.minimal)).collect();
        let closed: BTreeSet<(PointMonomial, bool)> = p
            .relations
            .iter()
            .filter(|l| p.monomial_degree(&l.monomial) <= bound)
            .map(|l| (point_monomial(&closed_pts, &l.monomial), l.minimal != Minimality::NotMinimal))
            .collect();
        for (m, min) in closed.difference(&oracle) {
            diffs.push(format!("closed-form leader {} (minimal: {min}) not found by the oracle", render(m)));
        }
        for (m, min) in oracle.difference(&closed) {
            diffs.push(format!("oracle leader {} (minimal: {min}) missing from the closed form", render(m)));
        }
        Ok(Verification::new(self.name(), diffs, Vec::new()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::present_one_point;

    #[test]
    fn small_cases_match() {
        for a in ["1", "3/2", "3", "5/2", "4", "7/5", "1/3"] {
            let p = present_one_point(a.parse().unwrap()).unwrap();
            let v = MonoidOracle.verify(&p, None).unwrap();
            assert!(v.is_match(), "{a}: {:?}", v.diffs);
        }
    }
}
