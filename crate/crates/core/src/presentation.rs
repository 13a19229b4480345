//! Closed-form generators and Gröbner leading terms for one-point and
//! effective two-point divisors.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::approx::{best_lower_approximations, classify_frac_neg_inv, Bucket};
use crate::error::{domain, Result};
use crate::monoid::LatticePoint;
use crate::order::{GenWeight, TermOrder};
use crate::rational::Rational;
use crate::registry;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Label::A => "a",
            Label::B => "b",
            Label::C => "c",
            Label::D => "d",
            Label::E => "e",
        };
        f.write_str(s)
    }
}

/// Which closed-form generator this is. `A1(0)` is `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenId {
    A1(usize),
    A2(usize),
    B,
    C,
    D,
    W,
}

/// `t_c^{(point)} · u^d` or `w · u^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FunctionKind {
    T { point: u8, c: i64, d: i64 },
    W { d: i64 },
}

impl fmt::Display for FunctionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let upow = |d: i64| if d == 1 { "u".to_string() } else { format!("u^{d}") };
        match *self {
            FunctionKind::T { c: 0, d, .. } => write!(f, "{}", upow(d)),
            FunctionKind::T { point, c, d } => write!(f, "t{c}^({point}) {}", upow(d)),
            FunctionKind::W { d } => write!(f, "w {}", upow(d)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabeledGenerator {
    #[serde(skip)]
    pub id: GenId,
    pub point_index: u8,
    /// Degree and pole order at the carrying point.
    pub lattice: LatticePoint,
    pub label: Label,
    pub function_kind: FunctionKind,
    pub degree: i64,
    pub ord_p1: i64,
    pub ord_p2: i64,
    pub symbol: String,
}

impl LabeledGenerator {
    pub fn weight(&self) -> GenWeight {
        GenWeight { degree: self.degree, pole1: (-self.ord_p1).max(0), pole2: (-self.ord_p2).max(0) }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(into = "Option<bool>")]
pub enum Minimality {
    Minimal,
    NotMinimal,
    Unknown,
}

impl From<Minimality> for Option<bool> {
    fn from(m: Minimality) -> Self {
        match m {
            Minimality::Minimal => Some(true),
            Minimality::NotMinimal => Some(false),
            Minimality::Unknown => None,
        }
    }
}

impl From<bool> for Minimality {
    fn from(b: bool) -> Self {
        if b {
            Minimality::Minimal
        } else {
            Minimality::NotMinimal
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationLeader {
    /// Exponents over the presentation's generator list.
    pub monomial: Vec<u32>,
    pub minimal: Minimality,
    pub boxed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Regime {
    OnePoint,
    Unequal,
    Equal,
}

impl Regime {
    pub fn order_name(self, t: Transcription) -> &'static str {
        match (self, t) {
            (Regime::OnePoint, _) => "one-point",
            (Regime::Unequal, Transcription::Corrected) => "unequal",
            (Regime::Unequal, Transcription::Printed) => "unequal-printed",
            (Regime::Equal, _) => "equal",
        }
    }
}

/// Which version of the two-point relation statements to use.
///
/// `Printed` follows the statements literally. `Corrected` fixes three
/// points the curve computations contradict: the unequal order's tie-break
/// at the primary point is applied only to monomials without a pole at the
/// secondary point; with `f_b` present the equal case also has leaders
/// `f_b·f_i^(k)`, `i ≥ 2`; without it the cubic leader is `u·(f_2^(1))²`, as
/// lex order demands, rather than `f_2^(1)·f_w²`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Transcription {
    #[default]
    Corrected,
    Printed,
}

/// A closed-form presentation: generators listed in the regime's generator
/// order, and relation leading terms over that list.
pub struct Presentation {
    /// Multiplicity at the primary point, then at the secondary one if any.
    pub alphas: Vec<Rational>,
    /// The inputs were given with `α1 < α2` and have been interchanged.
    pub swapped: bool,
    pub regime: Regime,
    pub transcription: Transcription,
    pub bucket: Bucket,
    pub generators: Vec<LabeledGenerator>,
    pub relations: Vec<RelationLeader>,
    pub order: Box<dyn TermOrder>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("alphas", &self.alphas)
            .field("regime", &self.regime)
            .field("generators", &self.generators)
            .field("relations", &self.relations)
            .finish()
    }
}

impl Presentation {
    pub fn index_of(&self, id: GenId) -> Option<usize> {
        self.generators.iter().position(|g| g.id == id)
    }

    pub fn monomial_symbol(&self, m: &[u32]) -> String {
        monomial_symbol(&self.generators, m)
    }

    pub fn monomial_degree(&self, m: &[u32]) -> i64 {
        self.generators.iter().zip(m).map(|(g, &e)| g.degree * e as i64).sum()
    }

    pub fn compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a == b {
            return domain("comparing a monomial with itself");
        }
        if a.len() != self.generators.len() || b.len() != self.generators.len() {
            return domain("exponent vector length does not match the generator list");
        }
        Ok(self.order.cmp(a, b))
    }
}

pub fn monomial_symbol(gens: &[LabeledGenerator], m: &[u32]) -> String {
    let parts: Vec<String> = gens
        .iter()
        .zip(m)
        .filter(|(_, &e)| e > 0)
        .map(|(g, &e)| if e == 1 { g.symbol.clone() } else { format!("{}^{e}", g.symbol) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

fn t_gen(id: GenId, point: u8, two_point: bool, d: i64, c: i64, label: Label, symbol: String) -> LabeledGenerator {
    // t_c^{(k)} has a pole of order c at P^{(k)} and a zero of order c - 1 at
    // the other point; t_0 = 1.
    let (own, other) = if c == 0 { (0, 0) } else { (-c, if two_point { c - 1 } else { 0 }) };
    let (ord_p1, ord_p2) = if point == 1 { (own, other) } else { (other, own) };
    LabeledGenerator {
        id,
        point_index: point,
        lattice: LatticePoint::new(d, c),
        label,
        function_kind: FunctionKind::T { point, c, d },
        degree: d,
        ord_p1,
        ord_p2,
        symbol,
    }
}

/// The one-point generators, with symbols and pole data relative to a
/// single point. `two_point` switches on the zero at the other point and the
/// two-point symbol style.
fn point_generators(alpha: Rational, point: u8, two_point: bool, extras: bool, ceil_unequal: bool) -> Result<Vec<LabeledGenerator>> {
    let bla = best_lower_approximations(alpha)?;
    let bucket = classify_frac_neg_inv(alpha)?.bucket;
    let sup = |i: &str| if two_point { format!("f{i}^({point})") } else { format!("f{i}") };
    let mut out = Vec::new();
    for (i, &(c, d)) in bla.entries.iter().enumerate() {
        if i == 1 || (i == 0 && point == 2) {
            continue;
        }
        let id = if point == 1 { GenId::A1(i) } else { GenId::A2(i) };
        let sym = if i == 0 { if two_point { "u".into() } else { "f0".into() } } else { sup(&i.to_string()) };
        out.push(t_gen(id, point, two_point, d, c, Label::A, sym));
    }
    if !extras {
        return Ok(out);
    }
    if bucket.below_half() {
        out.push(t_gen(GenId::B, point, two_point, alpha.recip().ceil_mul(2), 2, Label::B, "fb".into()));
    }
    if bucket.has_type_c() && ceil_unequal {
        out.push(t_gen(GenId::C, point, two_point, alpha.recip().ceil_mul(3), 3, Label::C, "fc".into()));
    }
    if bucket.open_below_half() && ceil_unequal {
        let (c1, d1) = bla.get(1);
        let (c2, d2) = bla.get(2);
        out.push(t_gen(GenId::D, point, two_point, d1 + d2, c1 + c2, Label::D, "fd".into()));
    }
    Ok(out)
}

pub fn generators_one_point(alpha: Rational) -> Result<Vec<LabeledGenerator>> {
    let mut g = point_generators(alpha, 1, false, true, true)?;
    g.sort_by_key(|g| (g.lattice.d, g.lattice.c));
    Ok(g)
}

fn ordered_pair(alpha1: Rational, alpha2: Rational) -> Result<(Rational, Rational, bool)> {
    if !alpha1.is_positive() || !alpha2.is_positive() {
        return domain(format!("effective two-point divisor needs positive multiplicities, got {alpha1}, {alpha2}"));
    }
    Ok(if alpha1 >= alpha2 { (alpha1, alpha2, false) } else { (alpha2, alpha1, true) })
}

pub fn ceilings_unequal(alpha1: Rational, alpha2: Rational) -> bool {
    alpha2.recip().ceil() > alpha1.recip().ceil()
}

/// Generators for `α1·P1 + α2·P2`, in the regime's generator order. When
/// `α1 < α2` the points are interchanged first.
pub fn generators_two_point(alpha1: Rational, alpha2: Rational) -> Result<Vec<LabeledGenerator>> {
    let (a1, a2, _) = ordered_pair(alpha1, alpha2)?;
    let unequal = ceilings_unequal(a1, a2);
    let mut g = point_generators(a1, 1, true, true, unequal)?;
    g.extend(point_generators(a2, 2, true, false, unequal)?);
    let dw = a2.recip().ceil();
    g.push(LabeledGenerator {
        id: GenId::W,
        point_index: 2,
        lattice: LatticePoint::new(dw, 1),
        label: Label::E,
        function_kind: FunctionKind::W { d: dw },
        degree: dw,
        ord_p1: -1,
        ord_p2: -1,
        symbol: "fw".into(),
    });
    sort_two_point(&mut g, unequal);
    Ok(g)
}

fn sort_two_point(g: &mut [LabeledGenerator], unequal: bool) {
    if unequal {
        g.sort_by_key(|x| {
            let w = x.weight();
            (w.pole2, w.degree, w.pole1)
        });
    } else {
        // u ≺ f_w ≺ [f_b] ≺ f_2^(1) ≺ ⋯ ≺ f_2^(2) ≺ ⋯
        g.sort_by_key(|x| match x.id {
            GenId::A1(0) => (0, 0),
            GenId::W => (1, 0),
            GenId::B => (2, 0),
            GenId::A1(i) => (3, i),
            GenId::A2(i) => (4, i),
            GenId::C | GenId::D => (5, 0),
        });
    }
}

/// Relation leaders keyed by generator ids, before placement in a list.
struct LeaderSpec {
    factors: Vec<(GenId, u32)>,
    minimal: Minimality,
    boxed: bool,
}

fn quad(a: GenId, b: GenId) -> LeaderSpec {
    let factors = if a == b { vec![(a, 2)] } else { vec![(a, 1), (b, 1)] };
    LeaderSpec { factors, minimal: Minimality::Minimal, boxed: false }
}

fn one_point_leader_specs(alpha: Rational) -> Result<Vec<LeaderSpec>> {
    let r = best_lower_approximations(alpha)?.last_index();
    let bucket = classify_frac_neg_inv(alpha)?.bucket;
    let (has_b, has_c, has_d) = (bucket.below_half(), bucket.has_type_c(), bucket.open_below_half());
    let a = GenId::A1;
    let mut out = Vec::new();
    for i in 3..=r {
        for j in (0..=i - 2).filter(|&j| j != 1) {
            if i == 3 && j == 0 && bucket.top() {
                continue;
            }
            out.push(quad(a(i), a(j)));
        }
        for (exists, id) in [(has_b, GenId::B), (has_c, GenId::C), (has_d, GenId::D)] {
            if exists {
                out.push(quad(a(i), id));
            }
        }
    }
    let (b, c, d) = (GenId::B, GenId::C, GenId::D);
    match bucket {
        Bucket::Zero | Bucket::HalfTwoThirds => out.push(quad(c, c)),
        Bucket::ZeroThird => {
            for (x, y) in [(c, c), (b, d), (c, d), (d, d), (a(0), d), (a(0), a(2))] {
                out.push(quad(x, y));
            }
        }
        Bucket::ThirdHalf => {
            out.push(LeaderSpec { factors: vec![(a(0), 2), (a(2), 2)], minimal: Minimality::NotMinimal, boxed: true });
            for (x, y) in [(a(0), d), (b, d), (d, d)] {
                out.push(quad(x, y));
            }
        }
        Bucket::TwoThirdsThreeQuarters | Bucket::ThreeQuartersOne => {
            if r >= 3 {
                let minimal = Minimality::from(bucket == Bucket::TwoThirdsThreeQuarters);
                out.push(LeaderSpec { factors: vec![(a(0), 1), (a(3), 2)], minimal, boxed: true });
            }
        }
    }
    Ok(out)
}

fn two_point_leader_specs(a1: Rational, a2: Rational, unequal: bool, t: Transcription) -> Result<Vec<LeaderSpec>> {
    let r1 = best_lower_approximations(a1)?.last_index();
    let r2 = best_lower_approximations(a2)?.last_index();
    let bucket = classify_frac_neg_inv(a1)?.bucket;
    let (u, w) = (GenId::A1(0), GenId::W);
    let p = |k: u8, i: usize| if k == 1 { GenId::A1(i) } else { GenId::A2(i) };
    let mut out = Vec::new();
    if unequal {
        out = one_point_leader_specs(a1)?;
        for i in 2..=r2 {
            out.push(quad(u, p(2, i)));
        }
        for i in 3..=r2 {
            out.push(quad(w, p(2, i)));
        }
        for i in 2..=r2 {
            for j in 2..=r2 {
                if i >= j + 2 {
                    out.push(quad(p(2, i), p(2, j)));
                }
            }
        }
        let mut old: Vec<GenId> = (2..=r1).map(|i| p(1, i)).collect();
        if bucket.below_half() {
            old.push(GenId::B);
        }
        if bucket.has_type_c() {
            old.push(GenId::C);
        }
        if bucket.open_below_half() {
            old.push(GenId::D);
        }
        let mut new: Vec<GenId> = (2..=r2).map(|j| p(2, j)).collect();
        new.push(w);
        for &x in &old {
            for &y in &new {
                out.push(quad(x, y));
            }
        }
        return Ok(out);
    }
    let case_a = bucket.below_half();
    let printed = t == Transcription::Printed;
    if case_a {
        out.push(quad(GenId::B, GenId::B));
        if !printed {
            for (k, r) in [(1u8, r1), (2u8, r2)] {
                for i in 2..=r {
                    out.push(quad(GenId::B, p(k, i)));
                }
            }
        }
    } else {
        let factors = if printed { vec![(p(1, 2), 1), (w, 2)] } else { vec![(u, 1), (p(1, 2), 2)] };
        out.push(LeaderSpec { factors, minimal: Minimality::Unknown, boxed: true });
    }
    for (k, r) in [(1u8, r1), (2u8, r2)] {
        let lo = if k == 1 && !case_a { 3 } else { 2 };
        for i in lo..=r {
            out.push(quad(u, p(k, i)));
        }
    }
    for (k, r) in [(1u8, r1), (2u8, r2)] {
        for i in 3..=r {
            out.push(quad(w, p(k, i)));
        }
    }
    for (k, r) in [(1u8, r1), (2u8, r2)] {
        for i in 2..=r {
            for j in 2..=r {
                if i >= j + 2 {
                    out.push(quad(p(k, i), p(k, j)));
                }
            }
        }
    }
    for i in 2..=r1 {
        for j in 2..=r2 {
            out.push(quad(p(1, i), p(2, j)));
        }
    }
    Ok(out)
}

fn place(gens: &[LabeledGenerator], specs: Vec<LeaderSpec>) -> Vec<RelationLeader> {
    specs
        .into_iter()
        .map(|s| {
            let mut m = vec![0u32; gens.len()];
            for (id, e) in s.factors {
                let i = gens.iter().position(|g| g.id == id).expect("leader factor is a generator");
                m[i] += e;
            }
            RelationLeader { monomial: m, minimal: s.minimal, boxed: s.boxed }
        })
        .collect()
}

fn sort_leaders(rels: &mut [RelationLeader], order: &dyn TermOrder) {
    rels.sort_by(|a, b| order.cmp(&a.monomial, &b.monomial));
}

pub fn present_one_point(alpha: Rational) -> Result<Presentation> {
    let generators = generators_one_point(alpha)?;
    let bucket = classify_frac_neg_inv(alpha)?.bucket;
    let order = registry::term_order(Regime::OnePoint.order_name(Transcription::Corrected), &generators)?;
    let mut relations = place(&generators, one_point_leader_specs(alpha)?);
    sort_leaders(&mut relations, order.as_ref());
    Ok(Presentation {
        alphas: vec![alpha],
        swapped: false,
        regime: Regime::OnePoint,
        transcription: Transcription::Corrected,
        bucket,
        generators,
        relations,
        order,
    })
}

pub fn present_two_point(alpha1: Rational, alpha2: Rational) -> Result<Presentation> {
    present_two_point_as(alpha1, alpha2, Transcription::Corrected)
}

pub fn present_two_point_as(alpha1: Rational, alpha2: Rational, transcription: Transcription) -> Result<Presentation> {
    let (a1, a2, swapped) = ordered_pair(alpha1, alpha2)?;
    let unequal = ceilings_unequal(a1, a2);
    let regime = if unequal { Regime::Unequal } else { Regime::Equal };
    let generators = generators_two_point(a1, a2)?;
    let bucket = classify_frac_neg_inv(a1)?.bucket;
    let order = registry::term_order(regime.order_name(transcription), &generators)?;
    let mut relations = place(&generators, two_point_leader_specs(a1, a2, unequal, transcription)?);
    sort_leaders(&mut relations, order.as_ref());
    Ok(Presentation { alphas: vec![a1, a2], swapped, regime, transcription, bucket, generators, relations, order })
}

pub fn relations_one_point(alpha: Rational) -> Result<Vec<RelationLeader>> {
    Ok(present_one_point(alpha)?.relations)
}

pub fn relations_two_point(alpha1: Rational, alpha2: Rational) -> Result<Vec<RelationLeader>> {
    Ok(present_two_point(alpha1, alpha2)?.relations)
}

/// Compare two monomials over [`generators_one_point`]`(α)`.
pub fn compare_one_point(alpha: Rational, m1: &[u32], m2: &[u32]) -> Result<Ordering> {
    present_one_point(alpha)?.compare(m1, m2)
}

/// Compare two monomials over [`generators_two_point`]`(α1, α2)` under the
/// order of `regime`, which must be the one the ceilings test selects.
pub fn compare_two_point(alpha1: Rational, alpha2: Rational, regime: Regime, m1: &[u32], m2: &[u32]) -> Result<Ordering> {
    let p = present_two_point(alpha1, alpha2)?;
    if p.regime != regime {
        return domain(format!("regime {:?} requested but the ceilings select {:?}", regime, p.regime));
    }
    p.compare(m1, m2)
}
