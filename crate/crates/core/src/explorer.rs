//! Ineffective two-point divisors `α1·P1 − α2·P2`: the integral basis, the
//! Frobenius dimension pattern, candidate generators read off the lattice
//! conditions of the conjecture, and a comparison against the section oracle.
//!
//! The conjecture is a hypothesis here. Its wording leaves several choices
//! open, collected in [`ConjectureReading`]; the checker evaluates each
//! reading and reports which ones agree with the curve.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::approx::best_lower_approximations;
use crate::curve::{Curve, Point, RationalFunction};
use crate::divisor::{is_in_riemann_roch, riemann_roch_space, t_function, Divisor};
use crate::error::{domain, Error, Result};
use crate::field::Field;
use crate::rational::Rational;
use crate::section::{minimal_generator_profile, GeneratorProfile, QDivisor};

/// Torsion orders below this are ruled out over ℚ by Mazur's bound.
pub const MAZUR_BOUND: u32 = 12;

/// Refuses `P2 − P1` of order at most `bound`.
///
/// Over ℚ, `MAZUR_BOUND` certifies non-torsion. Over a prime field every point
/// is torsion, so the check can only certify that the order exceeds every
/// multiple the computation can see; callers pass a bound derived from the
/// degrees and multiplicities in play.
pub fn check_non_torsion<F: Field>(c: &Curve<F>, p1: &Point<F::E>, p2: &Point<F::E>, bound: u32) -> Result<()> {
    let diff = c.group_add(p2, &c.group_neg(p1)?)?;
    if diff.is_inf() {
        return Err(Error::Torsion { order: 1 });
    }
    match c.torsion_order_up_to(&diff, bound)? {
        Some(order) => Err(Error::Torsion { order }),
        None => Ok(()),
    }
}

/// Torsion bound for a run up to degree `d_max`: the largest multiplicity
/// `⌊d·α⌋` that can occur, and never less than [`MAZUR_BOUND`].
pub fn torsion_bound(alpha1: Rational, alpha2: Rational, d_max: i64) -> u32 {
    let m = (alpha1.abs() + alpha2.abs()).ceil_mul(d_max.max(1)) + 1;
    (m.clamp(0, u32::MAX as i64) as u32).max(MAZUR_BOUND)
}

/// Basis of `L(α1·P1 − α2·P2)` for integers `α1 > α2 ≥ 0`:
/// `1, t_2^(1), …, t_α1^(1)` when `α2 = 0`, otherwise
/// `t_(α2+1)^(1), …, t_α1^(1)`. Checked against a Riemann–Roch computation.
pub fn ineffective_basis<F: Field>(
    c: &Curve<F>,
    alpha1: i64,
    alpha2: i64,
    p1: &Point<F::E>,
    p2: &Point<F::E>,
) -> Result<Vec<RationalFunction<F::E>>> {
    if !(alpha1 > alpha2 && alpha2 >= 0) {
        return domain(format!("need α1 > α2 ≥ 0, got {alpha1}, {alpha2}"));
    }
    if alpha2 > 0 {
        check_non_torsion(c, p1, p2, (alpha1 as u32 + 1).max(MAZUR_BOUND))?;
    }
    let mut out = Vec::new();
    let lo = if alpha2 == 0 {
        out.push(c.rf(c.func_const(c.field.one())));
        2
    } else {
        alpha2 + 1
    };
    for k in lo..=alpha1 {
        out.push(t_function(c, p1, p2, k)?);
    }
    let d = Divisor::from_terms([(p1.clone(), alpha1), (p2.clone(), -alpha2)]);
    let rr = riemann_roch_space(c, &d)?;
    if rr.len() != out.len() {
        return domain(format!("L(D) has dimension {}, the basis has {} functions", rr.len(), out.len()));
    }
    for g in &out {
        if !is_in_riemann_roch(c, g, &d)? {
            return domain(format!("{} is not in L(D)", c.render_rf(g)));
        }
    }
    Ok(out)
}

/// `D = (a/p)·P1 − (b/q)·P2` with `aq − bp = 1`, of degree `1/(pq)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusInstance {
    pub p: i64,
    pub q: i64,
    pub a: i64,
    pub b: i64,
}

impl FrobeniusInstance {
    /// The smallest positive `a` (and then `b`) solving `aq − bp = 1`.
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 1 || q < 1 || num::integer::gcd(p, q) != 1 {
            return domain(format!("need coprime positive p, q, got {p}, {q}"));
        }
        let a = (1..=p + 1).find(|a| (a * q - 1) % p == 0 && (a * q - 1) / p > 0);
        let a = a.ok_or_else(|| Error::Domain(format!("no positive solution of aq − bp = 1 for p = {p}, q = {q}")))?;
        Ok(FrobeniusInstance { p, q, a, b: (a * q - 1) / p })
    }

    pub fn alphas(&self) -> (Rational, Rational) {
        (Rational::new(self.a, self.p), Rational::new(self.b, self.q))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusDimension {
    pub degree: i64,
    /// `#{(x, y) ≥ 0 : xp + yq = d − pq}`, zero below `pq`.
    pub count: i64,
    /// `max(0, ⌊ad/p⌋ − ⌈bd/q⌉)`.
    pub formula_a: i64,
    /// The same with the extra `− 1` of the printed display.
    pub formula_b: i64,
}

impl FrobeniusDimension {
    pub fn matches_a(&self) -> bool {
        self.count == self.formula_a
    }

    pub fn matches_b(&self) -> bool {
        self.count == self.formula_b
    }
}

pub fn frobenius_dimension(inst: FrobeniusInstance, d: i64) -> Result<FrobeniusDimension> {
    if d < 0 {
        return domain("negative degree");
    }
    let FrobeniusInstance { p, q, a, b } = inst;
    let k = d - p * q;
    let count = if k < 0 { 0 } else { (0..=k / p).filter(|x| (k - x * p) % q == 0).count() as i64 };
    let ceil_bd = -(-(b * d)).div_euclid(q);
    let raw = (a * d).div_euclid(p) - ceil_bd;
    Ok(FrobeniusDimension { degree: d, count, formula_a: raw.max(0), formula_b: (raw - 1).max(0) })
}

/// Lower bound of the lattice region `M` in degree `d`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MVariant {
    /// `d·α2 + 1 ≤ c`, as in the conjecture.
    #[default]
    PlusOne,
    /// `d·α2 < c`, as in the surrounding text; admits `(d, ⌈dα2⌉)`.
    Strict,
}

/// Which levels above a type-b or type-c candidate are searched for a point
/// with two distinct decompositions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LevelRule {
    /// Every level `n ≥ 2` (type b) or `n ≥ 3` (type c), as worded.
    #[default]
    Literal,
    /// Only the level directly above the candidate.
    Adjacent,
}

/// One way of reading the conjecture's conditions.
///
/// Candidates of types b and c sit just above the lower boundary in each
/// degree `d`, at `(d, ⌈dα2⌉ + 1)` and `(d, ⌈dα2⌉ + 2)`, with the index `j` of
/// the statement read as the degree. Indexing by the reduced best upper
/// approximations of `α2` instead produces no candidate at all for
/// `α2 = 3/5` above degree 5, while the computed ring has seventeen.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ConjectureReading {
    pub m: MVariant,
    pub level: LevelRule,
    /// First degree allowed for type c: 3 as worded, 2 as drawn.
    pub c_start: i64,
}

impl ConjectureReading {
    pub fn literal() -> Self {
        ConjectureReading { m: MVariant::PlusOne, level: LevelRule::Literal, c_start: 3 }
    }

    /// The reading that reproduces the labeled figure for `13/5, 1/7`.
    pub fn as_drawn() -> Self {
        ConjectureReading { m: MVariant::PlusOne, level: LevelRule::Adjacent, c_start: 2 }
    }

    pub fn all() -> Vec<Self> {
        let mut v = Vec::new();
        for m in [MVariant::PlusOne, MVariant::Strict] {
            for level in [LevelRule::Literal, LevelRule::Adjacent] {
                for c_start in [3, 2] {
                    v.push(ConjectureReading { m, level, c_start });
                }
            }
        }
        v
    }

    pub fn label(&self) -> String {
        let m = match self.m {
            MVariant::PlusOne => "M+1",
            MVariant::Strict => "M<",
        };
        let l = match self.level {
            LevelRule::Literal => "literal",
            LevelRule::Adjacent => "adjacent",
        };
        format!("{m}/{l}/c≥{}", self.c_start)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CandidateType {
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureCandidate {
    pub degree: i64,
    /// Pole order at `P1`.
    pub pole: i64,
    pub kind: CandidateType,
    /// The conditions that admitted the candidate, in words.
    pub conditions: Vec<String>,
}

/// The region `M` and decomposition counts over it.
struct Region {
    a1: Rational,
    a2: Rational,
    m: MVariant,
}

impl Region {
    fn lo(&self, d: i64) -> i64 {
        match self.m {
            MVariant::PlusOne => self.a2.ceil_mul(d) + 1,
            MVariant::Strict => self.a2.floor_mul(d) + 1,
        }
    }

    fn hi(&self, d: i64) -> i64 {
        self.a1.floor_mul(d)
    }

    fn contains(&self, d: i64, c: i64) -> bool {
        d >= 1 && self.lo(d) <= c && c <= self.hi(d)
    }

    fn first_degree(&self, cap: i64) -> Option<i64> {
        (1..=cap).find(|&d| self.lo(d) <= self.hi(d))
    }

    /// For every pole order `c` in degree `d`, the number of multisets of
    /// points of `M` of degree `< d` summing to `(d, c)`, saturated at 2.
    fn decompositions(&self, d: i64) -> Vec<u8> {
        let cmax = self.hi(d).max(0) as usize;
        let du = d as usize;
        // ways[e][c] for e ≤ d, parts of degree < d added one kind at a time
        let mut ways = vec![vec![0u8; cmax + 1]; du + 1];
        ways[0][0] = 1;
        for pd in 1..d {
            for pc in self.lo(pd)..=self.hi(pd) {
                if pc < 0 || pc as usize > cmax {
                    continue;
                }
                let (pd, pc) = (pd as usize, pc as usize);
                for e in pd..=du {
                    for c in pc..=cmax {
                        let add = ways[e - pd][c - pc];
                        if add > 0 {
                            ways[e][c] = (ways[e][c] + add).min(2);
                        }
                    }
                }
            }
        }
        std::mem::take(&mut ways[du])
    }
}

/// `2·d_first + den(α1)·den(α2)`, where `d_first` is the least degree in which
/// `M` has a point.
pub fn default_candidate_bound(alpha1: Rational, alpha2: Rational) -> Result<i64> {
    let r = Region { a1: alpha1, a2: alpha2, m: MVariant::PlusOne };
    let cap = 4 * alpha1.denom() * alpha2.denom() + 4;
    let first = r.first_degree(cap).ok_or_else(|| Error::Domain(format!("M is empty for {alpha1}, {alpha2}")))?;
    Ok(2 * first + alpha1.denom() * alpha2.denom())
}

pub fn conjecture_generators(alpha1: Rational, alpha2: Rational) -> Result<Vec<ConjectureCandidate>> {
    conjecture_generators_with(alpha1, alpha2, ConjectureReading::literal(), default_candidate_bound(alpha1, alpha2)?)
}

/// Candidates of degree at most `d_bound` under `reading`, sorted by degree
/// and pole order.
pub fn conjecture_generators_with(
    alpha1: Rational,
    alpha2: Rational,
    reading: ConjectureReading,
    d_bound: i64,
) -> Result<Vec<ConjectureCandidate>> {
    if !(alpha1 > alpha2 && alpha2.is_positive()) {
        return domain(format!("need α1 > α2 > 0, got {alpha1}, {alpha2}"));
    }
    let r = Region { a1: alpha1, a2: alpha2, m: reading.m };
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();

    // type a: the first multiple of each best lower approximation c/d of α1
    // (beyond 0/1 and the single-pole one) that lands in M
    let bla = best_lower_approximations(alpha1)?;
    for (j, &(c, d)) in bla.entries.iter().enumerate().skip(2) {
        let Some(k) = (1..).take_while(|k| k * d <= d_bound).find(|k| r.contains(k * d, k * c)) else { continue };
        let (dd, cc) = (k * d, k * c);
        if seen.insert((dd, cc)) {
            let mut why = vec![format!("best lower approximation {c}/{d} (j = {j})")];
            if k > 1 {
                why.push(format!("first multiple in M is {k}·({d}, {c})"));
            }
            why.push(format!("{cc} > ⌈{dd}·α2⌉ = {}", alpha2.ceil_mul(dd)));
            out.push(ConjectureCandidate { degree: dd, pole: cc, kind: CandidateType::A, conditions: why });
        }
    }

    for d in 2..=d_bound {
        let base = alpha2.ceil_mul(d);
        let ways = r.decompositions(d);
        let at = |c: i64| if c >= 0 && (c as usize) < ways.len() { ways[c as usize] } else { 0 };
        let levels = |from: i64| -> Vec<i64> {
            let top = match reading.level {
                LevelRule::Literal => r.hi(d),
                LevelRule::Adjacent => from,
            };
            (from..=top).filter(|&c| r.contains(d, c)).collect()
        };

        let cb = base + 1;
        if r.contains(d, cb) && !seen.contains(&(d, cb)) {
            let clash = levels(base + 2).into_iter().find(|&c| at(c) >= 2);
            if clash.is_none() {
                seen.insert((d, cb));
                out.push(ConjectureCandidate {
                    degree: d,
                    pole: cb,
                    kind: CandidateType::B,
                    conditions: vec![format!(
                        "no level above ({d}, {cb}) in M has two decompositions in lower degrees"
                    )],
                });
            }
        }

        let cc = base + 2;
        if d >= reading.c_start && cc <= r.hi(d) && r.contains(d, cc) && !seen.contains(&(d, cc)) && at(cc) == 0 {
            let clash = levels(base + 3).into_iter().find(|&c| at(c) >= 2);
            if clash.is_none() {
                seen.insert((d, cc));
                out.push(ConjectureCandidate {
                    degree: d,
                    pole: cc,
                    kind: CandidateType::C,
                    conditions: vec![
                        format!("{cc} ≤ {d}·α1"),
                        format!("({d}, {cc}) is not a sum of lower-degree points of M"),
                        format!("no level above ({d}, {cc}) in M has two decompositions in lower degrees"),
                    ],
                });
            }
        }
    }
    out.sort_by_key(|c| (c.degree, c.pole));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingOutcome {
    pub reading: ConjectureReading,
    pub label: String,
    pub matches: bool,
    /// Predicted `(degree, pole)` points the curve does not have.
    pub missing: Vec<(i64, i64)>,
    /// Curve generators the reading does not predict.
    pub extra: Vec<(i64, i64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub alpha1: Rational,
    pub alpha2: Rational,
    pub d_max: i64,
    pub torsion_bound: u32,
    /// `dim S_d` for `d = 0..=d_max`.
    pub dims: Vec<usize>,
    pub generator_degrees: Vec<i64>,
    /// `(degree, order at P1, order at P2)` per generator.
    pub generators: Vec<(i64, i64, i64)>,
    /// The reading the candidate list below was produced with.
    pub reading: ConjectureReading,
    pub candidates: Vec<ConjectureCandidate>,
    pub outcome: ReadingOutcome,
    /// Every reading, in [`ConjectureReading::all`] order.
    pub readings: Vec<ReadingOutcome>,
    /// Degrees where some element has pole order `⌈dα2⌉` at `P1`.
    pub excluded_pole_violations: Vec<i64>,
    /// Pole orders at `P1` of an echelon basis of `S_d`, per degree.
    pub basis_poles: Vec<Vec<i64>>,
}

impl ConjectureReport {
    pub fn matches(&self) -> bool {
        self.outcome.matches
    }
}

fn outcome(reading: ConjectureReading, predicted: &BTreeSet<(i64, i64)>, actual: &BTreeSet<(i64, i64)>) -> ReadingOutcome {
    let missing: Vec<_> = predicted.difference(actual).copied().collect();
    let extra: Vec<_> = actual.difference(predicted).copied().collect();
    ReadingOutcome { reading, label: reading.label(), matches: missing.is_empty() && extra.is_empty(), missing, extra }
}

/// Degrees `d ≥ 1` in which `poles[d]`, the pole orders of a basis of `S_d`,
/// contain `⌈dα2⌉`.
pub fn excluded_pole_violations(poles: &[Vec<i64>], alpha2: Rational) -> Vec<i64> {
    poles
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(d, poles)| poles.contains(&alpha2.ceil_mul(*d as i64)))
        .map(|(d, _)| d as i64)
        .collect()
}

/// Computes the minimal generators of `S_D` for `D = α1·P1 − α2·P2` up to
/// `d_max` and diffs their `(degree, pole)` points against the candidates of
/// every reading.
pub fn conjecture_check<F: Field>(
    c: &Curve<F>,
    p1: &Point<F::E>,
    p2: &Point<F::E>,
    alpha1: Rational,
    alpha2: Rational,
    d_max: i64,
    reading: ConjectureReading,
) -> Result<ConjectureReport> {
    if !(alpha1 > alpha2 && alpha2.is_positive()) {
        return domain(format!("need α1 > α2 > 0, got {alpha1}, {alpha2}"));
    }
    let bound = torsion_bound(alpha1, alpha2, d_max);
    check_non_torsion(c, p1, p2, bound)?;
    let dv = QDivisor::two_point(p1.clone(), alpha1, p2.clone(), -alpha2)?;
    let ring = crate::section::SectionRing::new(c, &dv, d_max)?;
    let profile: GeneratorProfile<F::E> = ring.generator_profile()?;
    let poles: Vec<Vec<i64>> = ring.pieces().iter().map(|p| p.poles()).collect();
    let violations = excluded_pole_violations(&poles, alpha2);

    let actual: BTreeSet<(i64, i64)> = profile.generators.iter().map(|g| (g.degree, g.pole())).collect();
    let mut readings = Vec::new();
    let mut chosen = None;
    for rd in ConjectureReading::all() {
        let cands = conjecture_generators_with(alpha1, alpha2, rd, d_max)?;
        let predicted: BTreeSet<(i64, i64)> = cands.iter().map(|c| (c.degree, c.pole)).collect();
        let o = outcome(rd, &predicted, &actual);
        if rd == reading {
            chosen = Some((cands, o.clone()));
        }
        readings.push(o);
    }
    let (candidates, outcome) = match chosen {
        Some(x) => x,
        None => {
            let cands = conjecture_generators_with(alpha1, alpha2, reading, d_max)?;
            let predicted = cands.iter().map(|c| (c.degree, c.pole)).collect();
            let o = outcome(reading, &predicted, &actual);
            (cands, o)
        }
    };
    Ok(ConjectureReport {
        alpha1,
        alpha2,
        d_max,
        torsion_bound: bound,
        dims: profile.dims.clone(),
        generator_degrees: profile.degrees(),
        generators: profile.signatures(),
        reading,
        candidates,
        outcome,
        readings,
        excluded_pole_violations: violations,
        basis_poles: poles,
    })
}

/// The generator profile alone, behind the same torsion guard.
pub fn ineffective_profile<F: Field>(
    c: &Curve<F>,
    p1: &Point<F::E>,
    p2: &Point<F::E>,
    alpha1: Rational,
    alpha2: Rational,
    d_max: i64,
) -> Result<GeneratorProfile<F::E>> {
    check_non_torsion(c, p1, p2, torsion_bound(alpha1, alpha2, d_max))?;
    let dv = QDivisor::two_point(p1.clone(), alpha1, p2.clone(), -alpha2)?;
    minimal_generator_profile(c, &dv, d_max)
}
