//! The section ring `S_D = ⊕_d L(⌊dD⌋)` of a ℚ-divisor, recomputed from
//! Riemann–Roch spaces: graded pieces, minimal generators, and Gröbner
//! leading terms of the relation ideal under a supplied term order.
//!
//! Elements of `S_d` are handled through their Laurent expansions at the
//! primary point `P1`. With `E = ⌊dD⌋`, `lo = −E(P1)` and `n = deg E`, an
//! element of `L(E)` is determined by its coefficients at `t^lo ..= t^(lo+n)`:
//! one vanishing there lies in `L(E − (n+1)·P1)`, of negative degree. Those
//! `n + 1` coefficients are the coordinates for all linear algebra, so
//! products only need expanding once and never need reducing back to `(a, b)`
//! form.

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::curve::{Curve, CurveFunction, Point, RationalFunction};
use crate::divisor::{self, riemann_roch_space, Divisor};
use crate::error::{domain, Error, Result};
use crate::field::Field;
use crate::linalg::{self, Echelon, TrackedEchelon};
use crate::local::{self, LocalExpander};
use crate::order::TermOrder;
use crate::rational::Rational;
use crate::series::{self, Series};

/// A ℚ-divisor; the first point is the primary one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDivisor<E: Ord> {
    pub terms: Vec<(Point<E>, Rational)>,
}

impl<E: Ord + Clone> QDivisor<E> {
    pub fn new(terms: Vec<(Point<E>, Rational)>) -> Result<Self> {
        if terms.is_empty() {
            return domain("a divisor needs at least one point");
        }
        for (i, (p, _)) in terms.iter().enumerate() {
            if terms[..i].iter().any(|(q, _)| q == p) {
                return domain("repeated point in a divisor");
            }
        }
        Ok(QDivisor { terms })
    }

    pub fn one_point(p: Point<E>, alpha: Rational) -> Self {
        QDivisor { terms: vec![(p, alpha)] }
    }

    pub fn two_point(p1: Point<E>, a1: Rational, p2: Point<E>, a2: Rational) -> Result<Self> {
        Self::new(vec![(p1, a1), (p2, a2)])
    }

    pub fn primary(&self) -> &Point<E> {
        &self.terms[0].0
    }

    pub fn secondary(&self) -> Option<&Point<E>> {
        self.terms.get(1).map(|t| &t.0)
    }

    pub fn degree(&self) -> Rational {
        self.terms.iter().fold(Rational::from_int(0), |acc, (_, m)| acc + *m)
    }

    pub fn is_effective(&self) -> bool {
        self.terms.iter().all(|(_, m)| !(*m < Rational::from_int(0)))
    }

    /// `⌊d·D⌋`, flooring each signed multiplicity: `−3/5` at `d = 1` gives
    /// `−1`, i.e. a required zero of order `⌈3/5⌉ = 1`.
    pub fn floor(&self, d: i64) -> Divisor<E> {
        Divisor::from_terms(self.terms.iter().map(|(p, m)| (p.clone(), m.floor_mul(d))))
    }
}

pub fn floor_divisor<E: Ord + Clone>(d: &QDivisor<E>, k: i64) -> Divisor<E> {
    d.floor(k)
}

/// `dim S_d` from Riemann–Roch alone.
pub fn hilbert_dim<F: Field>(c: &Curve<F>, d: &QDivisor<F::E>, k: i64) -> Result<usize> {
    if k < 0 {
        return domain("negative degree");
    }
    let e = d.floor(k);
    let n = e.degree();
    Ok(if n >= 1 {
        n as usize
    } else if n == 0 && c.divisor_sum(&e)? == Point::Inf {
        1
    } else {
        0
    })
}

/// A basis of `S_d`, echelonized so the pole orders at `P1` strictly
/// decrease along the list.
#[derive(Clone, Debug)]
pub struct GradedBasis<E: Ord> {
    pub degree: i64,
    pub divisor: Divisor<E>,
    /// Lowest order an element may have at `P1`.
    pub lo: i64,
    /// Number of window coordinates, `deg ⌊dD⌋ + 1` or zero.
    pub ncols: usize,
    pub functions: Vec<RationalFunction<E>>,
    pub series: Vec<Series<E>>,
    /// Orders at `P1`, strictly increasing.
    pub ords: Vec<i64>,
}

impl<E: Ord + Clone> GradedBasis<E> {
    pub fn dim(&self) -> usize {
        self.functions.len()
    }

    pub fn poles(&self) -> Vec<i64> {
        self.ords.iter().map(|o| -o).collect()
    }

    /// Window coordinates of an expansion at `P1`.
    pub fn coords<F: Field<E = E>>(&self, f: &F, s: &Series<E>) -> Result<Vec<E>> {
        if let Some(v) = series::valuation(f, s) {
            if v < self.lo {
                return domain(format!("order {v} at the primary point is below {} in degree {}", self.lo, self.degree));
            }
        }
        (0..self.ncols as i64)
            .map(|j| {
                series::coeff(f, s, self.lo + j)
                    .ok_or_else(|| Error::Precision(format!("degree {} needs t^{}", self.degree, self.lo + j)))
            })
            .collect()
    }
}

/// Expansions at `p` known up to `t^prec`. The relative precision is sized
/// from the orders of numerator and denominator; numerators are assembled
/// from one table of `x^i` and `x^i·y`, and equal denominators are inverted
/// once.
fn expand_all<F: Field>(c: &Curve<F>, gs: &[RationalFunction<F::E>], p: &Point<F::E>, prec: i64) -> Result<Vec<Series<F::E>>> {
    let f = &c.field;
    let mut rel = 1;
    for g in gs {
        let vn = local::order_at(c, &g.num, p)?;
        let vd = local::order_at(c, &g.den, p)?;
        rel = rel.max(prec - (vn - vd) + vn.max(0) + vd.max(0) + 2);
    }
    let ex = LocalExpander::new(c, p, rel as usize);
    let top = gs.iter().map(|g| g.num.a.len().max(g.num.b.len()).max(g.den.a.len()).max(g.den.b.len())).max().unwrap_or(1);
    let mut xp = vec![series::constant(f, f.one())];
    for i in 1..top {
        xp.push(series::mul(f, &xp[i - 1], &ex.x));
    }
    let xyp: Vec<_> = xp.iter().map(|s| series::mul(f, s, &ex.y)).collect();
    let eval = |g: &CurveFunction<F::E>| {
        let mut acc = Series::zero(series::EXACT);
        for (cs, table) in [(&g.a, &xp), (&g.b, &xyp)] {
            for (coef, s) in cs.iter().zip(table) {
                if !f.is_zero(coef) {
                    acc = series::add(f, &acc, &series::scale(f, s, coef));
                }
            }
        }
        acc
    };
    let mut inv_cache: Option<(&CurveFunction<F::E>, Series<F::E>)> = None;
    let mut out = Vec::with_capacity(gs.len());
    for g in gs {
        let inv = match &inv_cache {
            Some((d, s)) if *d == &g.den => s.clone(),
            _ => {
                let s = series::inv(f, &eval(&g.den)).ok_or_else(|| Error::Precision("denominator expands to zero".into()))?;
                inv_cache = Some((&g.den, s.clone()));
                s
            }
        };
        let s = series::mul(f, &eval(&g.num), &inv);
        out.push(if s.prec >= prec { series::truncate(f, &s, prec) } else { local::expand_rf(c, g, p, prec)? });
    }
    Ok(out)
}

fn build_piece<F: Field>(c: &Curve<F>, d: &QDivisor<F::E>, k: i64, width: i64) -> Result<GradedBasis<F::E>> {
    let f = &c.field;
    let div = d.floor(k);
    let p1 = d.primary();
    let lo = -div.get(p1);
    let ncols = (div.degree() + 1).max(0) as usize;
    let raw = if k == 0 { vec![c.rf(c.func_const(f.one()))] } else { riemann_roch_space(c, &div)? };
    let mut out =
        GradedBasis { degree: k, divisor: div, lo, ncols, functions: Vec::new(), series: Vec::new(), ords: Vec::new() };
    if raw.is_empty() {
        return Ok(out);
    }
    debug_assert!(raw.iter().all(|g| g.den == raw[0].den));
    let raw_series = expand_all(c, &raw, p1, lo + width)?;
    let m = raw.len();
    let mut rows = Vec::with_capacity(m);
    for (i, s) in raw_series.iter().enumerate() {
        let mut row = out.coords(f, s)?;
        row.extend((0..m).map(|j| if i == j { f.one() } else { f.zero() }));
        rows.push(row);
    }
    let pivots = linalg::rref(f, &mut rows, ncols + m);
    if pivots.len() != m || pivots.iter().any(|&p| p >= ncols) {
        return Err(Error::Precision(format!("window of degree {k} does not separate L(⌊dD⌋)")));
    }
    for (row, &p) in rows.iter().zip(&pivots) {
        let mut num = c.func_const(f.zero());
        let mut s = Series::zero(lo + width);
        for ((coef, g), gs) in row[ncols..].iter().zip(&raw).zip(&raw_series) {
            if !f.is_zero(coef) {
                num = c.func_add(&num, &c.func_scale(&g.num, coef));
                s = series::add(f, &s, &series::scale(f, gs, coef));
            }
        }
        out.functions.push(RationalFunction { num, den: raw[0].den.clone() });
        out.series.push(s);
        out.ords.push(lo + p as i64);
    }
    Ok(out)
}

/// `L(⌊dD⌋)`, echelonized.
pub fn graded_piece<F: Field>(c: &Curve<F>, d: &QDivisor<F::E>, k: i64) -> Result<GradedBasis<F::E>> {
    if k < 0 {
        return domain("negative degree");
    }
    build_piece(c, d, k, d.floor(k).degree().max(0) + 2)
}

/// One minimal generator found by the oracle.
#[derive(Clone, Debug)]
pub struct GeneratorRep<E: Ord> {
    pub degree: i64,
    pub ord_p1: i64,
    pub ord_p2: i64,
    pub function: RationalFunction<E>,
    pub series: Series<E>,
}

impl<E: Ord> GeneratorRep<E> {
    pub fn pole(&self) -> i64 {
        (-self.ord_p1).max(0)
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorProfile<E: Ord> {
    pub d_max: i64,
    /// `dim S_d` for `d = 0..=d_max`.
    pub dims: Vec<usize>,
    /// Minimal generator count per degree (index 0 unused).
    pub counts: Vec<usize>,
    /// Ordered by degree, then by decreasing pole order at `P1`.
    pub generators: Vec<GeneratorRep<E>>,
}

impl<E: Ord> GeneratorProfile<E> {
    /// Generator degrees with multiplicity.
    pub fn degrees(&self) -> Vec<i64> {
        self.generators.iter().map(|g| g.degree).collect()
    }

    /// Nonzero counts.
    pub fn count_map(&self) -> BTreeMap<i64, usize> {
        self.counts.iter().enumerate().filter(|(_, &n)| n > 0).map(|(d, &n)| (d as i64, n)).collect()
    }

    /// `(degree, ord_p1, ord_p2)` for each generator.
    pub fn signatures(&self) -> Vec<(i64, i64, i64)> {
        self.generators.iter().map(|g| (g.degree, g.ord_p1, g.ord_p2)).collect()
    }
}

/// A monomial in the generators, as an exponent vector.
pub type Monomial = Vec<u32>;

/// A relation `Σ c·m`, leading monomial first with coefficient 1.
pub type Relation<E> = Vec<(Monomial, E)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleLeader {
    pub degree: i64,
    pub monomial: Monomial,
    /// Whether the reduced Gröbner element with this leader lies outside the
    /// ideal generated by relations of lower degree.
    pub minimal: bool,
}

#[derive(Clone, Debug)]
pub struct RelationProfile<E> {
    pub d_max: i64,
    /// Leaders not divisible by leaders of lower degree, by degree.
    pub leaders: Vec<OracleLeader>,
    /// The reduced relation for each leader.
    pub relations: Vec<Relation<E>>,
    /// `dim I_d − dim (R·I_{<d})_d` per degree.
    pub minimal_counts: Vec<usize>,
}

impl<E> RelationProfile<E> {
    pub fn minimal_total(&self) -> usize {
        self.minimal_counts.iter().sum()
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn mono_sub(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn mono_add(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// All exponent vectors of weighted degree `d`.
pub fn monomials_of_degree(degs: &[i64], d: i64) -> Vec<Monomial> {
    fn go(degs: &[i64], i: usize, left: i64, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if i == degs.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut e = 0;
        while e as i64 * degs[i] <= left {
            cur[i] = e;
            go(degs, i + 1, left - e as i64 * degs[i], cur, out);
            e += 1;
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if degs.iter().all(|&g| g > 0) {
        go(degs, 0, d, &mut vec![0; degs.len()], &mut out);
    }
    out
}

/// The graded pieces of `S_D` up to a degree bound, with coordinates of a
/// common width so products can be compared directly.
pub struct SectionRing<F: Field> {
    pub curve: Curve<F>,
    pub divisor: QDivisor<F::E>,
    pub d_max: i64,
    width: i64,
    pieces: Vec<GradedBasis<F::E>>,
}

impl<F: Field> SectionRing<F> {
    pub fn new(curve: &Curve<F>, divisor: &QDivisor<F::E>, d_max: i64) -> Result<Self> {
        if d_max < 0 {
            return domain("negative degree bound");
        }
        for (p, _) in &divisor.terms {
            if !curve.is_on(p) {
                return domain(format!("{} is not on the curve", curve.render_point(p)));
            }
        }
        // Every series is kept to t^(lo_d + width). A product of elements of
        // degrees e and d − e then is known past t^(lo_e + lo_(d−e) + width),
        // which covers the window of degree d since lo_e + lo_(d−e) ≥ lo_d.
        let width = (0..=d_max).map(|k| divisor.floor(k).degree()).max().unwrap_or(0).max(0) + 2;
        let pieces: Vec<GradedBasis<F::E>> =
            (0..=d_max).into_par_iter().map(|k| build_piece(curve, divisor, k, width)).collect::<Result<_>>()?;
        for p in &pieces {
            let h = hilbert_dim(curve, divisor, p.degree)?;
            if p.dim() != h {
                return domain(format!("degree {}: basis of size {} but Riemann–Roch gives {h}", p.degree, p.dim()));
            }
        }
        Ok(SectionRing { curve: curve.clone(), divisor: divisor.clone(), d_max, width, pieces })
    }

    pub fn piece(&self, d: i64) -> &GradedBasis<F::E> {
        &self.pieces[d as usize]
    }

    pub fn pieces(&self) -> &[GradedBasis<F::E>] {
        &self.pieces
    }

    /// Expansion at `P1` at the precision used for degree `d`.
    pub fn expand(&self, g: &RationalFunction<F::E>, d: i64) -> Result<Series<F::E>> {
        local::expand_rf(&self.curve, g, self.divisor.primary(), self.piece(d).lo + self.width)
    }

    pub fn contains(&self, g: &RationalFunction<F::E>, d: i64) -> Result<bool> {
        divisor::is_in_riemann_roch(&self.curve, g, &self.divisor.floor(d))
    }

    fn ord_p2(&self, g: &RationalFunction<F::E>) -> Result<i64> {
        match self.divisor.secondary() {
            Some(p) => local::order_at_rf(&self.curve, g, p),
            None => Ok(0),
        }
    }

    /// Per degree, the codimension of the span of products `S_e·S_(d−e)`;
    /// representatives are the basis vectors whose pole orders the products
    /// do not reach, which makes their pole orders canonical.
    pub fn generator_profile(&self) -> Result<GeneratorProfile<F::E>> {
        let f = &self.curve.field;
        let mut counts = vec![0; self.d_max as usize + 1];
        let mut gens: Vec<GeneratorRep<F::E>> = Vec::new();
        for d in 1..=self.d_max {
            let pc = self.piece(d);
            if pc.dim() == 0 {
                continue;
            }
            // S_e·S_(d−e) is spanned by g·S_(d − deg g) over generators g
            let mut ech = Echelon::new(pc.ncols);
            'products: for g in gens.iter() {
                for s in &self.piece(d - g.degree).series {
                    ech.insert(f, &pc.coords(f, &series::mul(f, &g.series, s))?);
                    if ech.rank() == pc.dim() {
                        break 'products;
                    }
                }
            }
            let reached: HashSet<usize> = ech.pivots().into_iter().collect();
            let mut new = Vec::new();
            for (i, &o) in pc.ords.iter().enumerate() {
                if reached.contains(&((o - pc.lo) as usize)) {
                    continue;
                }
                let function = pc.functions[i].clone();
                let ord_p2 = self.ord_p2(&function)?;
                new.push(GeneratorRep { degree: d, ord_p1: o, ord_p2, function, series: pc.series[i].clone() });
            }
            counts[d as usize] = new.len();
            debug_assert_eq!(new.len(), pc.dim() - ech.rank());
            gens.extend(new);
        }
        Ok(GeneratorProfile { d_max: self.d_max, dims: self.pieces.iter().map(|p| p.dim()).collect(), counts, generators: gens })
    }

    /// Gröbner leading terms of the kernel of `k[g_1, …] → S_D`, degree by
    /// degree up to `d_max`. Generators of degree above `d_max` may be given
    /// and are ignored.
    ///
    /// In each degree the monomials not divisible by an earlier leader are
    /// taken in increasing order; one whose value depends on the values of
    /// the smaller standard monomials is a new leader.
    pub fn relation_profile(&self, gens: &[(i64, Series<F::E>)], order: &dyn TermOrder) -> Result<RelationProfile<F::E>> {
        let f = &self.curve.field;
        let k = gens.len();
        let degs: Vec<i64> = gens.iter().map(|(d, _)| *d).collect();
        if degs.iter().any(|&d| d < 1) {
            return domain("generators must have positive degree");
        }
        let mut standard: Vec<Vec<(Monomial, Series<F::E>)>> = vec![vec![(vec![0; k], series::constant(f, f.one()))]];
        let mut old: Vec<(i64, Monomial, Relation<F::E>)> = Vec::new();
        let mut leaders = Vec::new();
        let mut minimal_counts = vec![0; self.d_max as usize + 1];
        for d in 1..=self.d_max {
            let pc = self.piece(d);
            let mut cand: BTreeMap<Monomial, Series<F::E>> = BTreeMap::new();
            for (i, (e, g)) in gens.iter().enumerate() {
                if *e > d {
                    continue;
                }
                for (m, s) in &standard[(d - e) as usize] {
                    let mut m2 = m.clone();
                    m2[i] += 1;
                    if cand.contains_key(&m2) || old.iter().any(|(_, l, _)| divides(l, &m2)) {
                        continue;
                    }
                    let v = series::mul(f, s, g);
                    cand.insert(m2, v);
                }
            }
            let mut cand: Vec<_> = cand.into_iter().collect();
            cand.sort_by(|a, b| order.cmp(&a.0, &b.0));
            let mut te = TrackedEchelon::new(pc.ncols);
            let mut std_d: Vec<(Monomial, Series<F::E>)> = Vec::new();
            let mut new: Vec<(Monomial, Relation<F::E>)> = Vec::new();
            for (m, s) in cand {
                match te.insert(f, &pc.coords(f, &s)?) {
                    Ok(_) => std_d.push((m, s)),
                    Err(combo) => {
                        let mut rel = vec![(m.clone(), f.one())];
                        for (c, (sm, _)) in combo.iter().zip(&std_d) {
                            if !f.is_zero(c) {
                                rel.push((sm.clone(), f.neg(c)));
                            }
                        }
                        new.push((m, rel));
                    }
                }
            }
            if std_d.len() < pc.dim() {
                let have: HashSet<usize> = te.pivots().into_iter().collect();
                let o = pc.ords.iter().find(|&&o| !have.contains(&((o - pc.lo) as usize))).expect("a missed pivot");
                return Err(Error::NotGenerated { degree: d, pole: -o });
            }
            if !new.is_empty() {
                let std_set: HashSet<&Monomial> = std_d.iter().map(|(m, _)| m).collect();
                let (flags, count) = minimality(f, d, &degs, &std_set, &new, &old, order);
                minimal_counts[d as usize] = count;
                for ((m, rel), minimal) in new.into_iter().zip(flags) {
                    leaders.push((OracleLeader { degree: d, monomial: m.clone(), minimal }, rel.clone()));
                    old.push((d, m, rel));
                }
            }
            standard.push(std_d);
        }
        let (leaders, relations) = leaders.into_iter().unzip();
        Ok(RelationProfile { d_max: self.d_max, leaders, relations, minimal_counts })
    }
}

/// Which of the degree-`d` leaders `new` carry minimal relations, and how many
/// minimal relations degree `d` has.
///
/// Write `I_d` for the relations of degree `d` and `J_d` for the part
/// generated by lower degrees. Projecting onto the non-standard monomials is
/// an isomorphism on `I_d` (the reduced relation with leader `m` maps to
/// `e_m`). For each non-standard `m` that is not a new leader, one row
/// `μ·r_λ` with leader `m` is kept; every other row with the same leader is
/// reduced against those, leaving a residue supported on the new leaders.
/// `J_d` is the kept rows plus the residues, so a new leader is minimal iff
/// its unit vector is outside the residue span.
fn minimality<F: Field>(
    f: &F,
    d: i64,
    degs: &[i64],
    std_set: &HashSet<&Monomial>,
    new: &[(Monomial, Relation<F::E>)],
    old: &[(i64, Monomial, Relation<F::E>)],
    order: &dyn TermOrder,
) -> (Vec<bool>, usize) {
    let new_idx: HashMap<&Monomial, usize> = new.iter().enumerate().map(|(i, (m, _))| (m, i)).collect();
    let project = |mu: &[u32], rel: &Relation<F::E>| -> BTreeMap<Monomial, F::E> {
        let mut out = BTreeMap::new();
        for (m, c) in rel {
            let m2 = mono_add(mu, m);
            if !std_set.contains(&m2) {
                out.insert(m2, c.clone());
            }
        }
        out
    };
    let mut kept: HashMap<Monomial, BTreeMap<Monomial, F::E>> = HashMap::new();
    let mut pending = Vec::new();
    for m in monomials_of_degree(degs, d) {
        if std_set.contains(&m) || new_idx.contains_key(&m) {
            continue;
        }
        let divs: Vec<_> = old.iter().filter(|(_, l, _)| divides(l, &m)).collect();
        let first = divs[0];
        let row = project(&mono_sub(&m, &first.1), &first.2);
        for other in &divs[1..] {
            // coprime leaders: the difference has a standard representation
            // through the two relations themselves
            if coprime(&first.1, &other.1) {
                continue;
            }
            let mut diff = project(&mono_sub(&m, &other.1), &other.2);
            for (mm, c) in &row {
                let e = diff.entry(mm.clone()).or_insert_with(|| f.zero());
                *e = f.sub(e, c);
            }
            pending.push(diff);
        }
        kept.insert(m, row);
    }
    let mut ech = Echelon::new(new.len());
    for mut v in pending {
        loop {
            v.retain(|_, c| !f.is_zero(c));
            let top = v.keys().filter(|m| !new_idx.contains_key(m)).max_by(|a, b| order.cmp(a, b)).cloned();
            let Some(top) = top else { break };
            let c = v[&top].clone();
            for (mm, x) in &kept[&top] {
                let e = v.entry(mm.clone()).or_insert_with(|| f.zero());
                *e = f.sub(e, &f.mul(&c, x));
            }
        }
        let mut res = vec![f.zero(); new.len()];
        for (m, c) in v {
            res[new_idx[&m]] = c;
        }
        ech.insert(f, &res);
        if ech.rank() == new.len() {
            break;
        }
    }
    let flags = (0..new.len())
        .map(|i| {
            let mut e = vec![f.zero(); new.len()];
            e[i] = f.one();
            !ech.contains(f, &e)
        })
        .collect();
    (flags, new.len() - ech.rank())
}

pub fn minimal_generator_profile<F: Field>(c: &Curve<F>, d: &QDivisor<F::E>, d_max: i64) -> Result<GeneratorProfile<F::E>> {
    if d_max < 1 {
        return domain("degree bound must be at least 1");
    }
    SectionRing::new(c, d, d_max)?.generator_profile()
}

/// Relation profile for explicit generator functions `(degree, f)`.
pub fn minimal_relation_profile<F: Field>(
    ring: &SectionRing<F>,
    generators: &[(i64, RationalFunction<F::E>)],
    order: &dyn TermOrder,
) -> Result<RelationProfile<F::E>> {
    let mut gens = Vec::with_capacity(generators.len());
    for (d, g) in generators {
        if *d <= ring.d_max && !ring.contains(g, *d)? {
            return domain(format!("a generator of degree {d} is not in L(⌊dD⌋)"));
        }
        let s = if *d <= ring.d_max { ring.expand(g, *d)? } else { Series::zero(0) };
        gens.push((*d, s));
    }
    ring.relation_profile(&gens, order)
}
