//! Integral divisors, principal divisors, and Riemann–Roch spaces, plus the
//! normalized functions `t_c^(i)` and `w` attached to a pair of points.

use std::collections::BTreeMap;

use crate::curve::{Curve, CurveFunction, Point, RationalFunction};
use crate::error::{domain, Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::local::{self, LocalExpander};
use crate::poly;
use crate::series;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor<E: Ord> {
    coeffs: BTreeMap<Point<E>, i64>,
}

impl<E: Ord + Clone> Default for Divisor<E> {
    fn default() -> Self {
        Divisor { coeffs: BTreeMap::new() }
    }
}

impl<E: Ord + Clone> Divisor<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Point<E>, i64)>) -> Self {
        let mut d = Self::new();
        for (p, m) in terms {
            d.add_term(p, m);
        }
        d
    }

    pub fn add_term(&mut self, p: Point<E>, m: i64) {
        let e = self.coeffs.entry(p.clone()).or_insert(0);
        *e += m;
        if *e == 0 {
            self.coeffs.remove(&p);
        }
    }

    pub fn get(&self, p: &Point<E>) -> i64 {
        self.coeffs.get(p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Point<E>, i64)> {
        self.coeffs.iter().map(|(p, m)| (p, *m))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut d = self.clone();
        for (p, m) in other.terms() {
            d.add_term(p.clone(), m);
        }
        d
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut d = self.clone();
        for (p, m) in other.terms() {
            d.add_term(p.clone(), -m);
        }
        d
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&m| m >= 0)
    }
}

impl<F: Field> Curve<F> {
    pub fn render_divisor(&self, d: &Divisor<F::E>) -> String {
        if d.coeffs.is_empty() {
            return "0".into();
        }
        d.terms().map(|(p, m)| format!("{m}*{}", self.render_point(p))).collect::<Vec<_>>().join(" + ")
    }

    /// `Σ m_P · P` in the group law.
    pub fn divisor_sum(&self, d: &Divisor<F::E>) -> Result<Point<F::E>> {
        let mut acc = Point::Inf;
        for (p, m) in d.terms() {
            acc = self.group_add(&acc, &self.scalar_mul(m, p)?)?;
        }
        Ok(acc)
    }
}

/// `div(g)`; fails with `UnresolvedPlace` if some zero is not defined over
/// the field (its orders then do not balance).
pub fn divisor_of<F: Field>(c: &Curve<F>, g: &CurveFunction<F::E>) -> Result<Divisor<F::E>> {
    let Some(pole) = g.pole_at_infinity() else {
        return domain("divisor of the zero function");
    };
    let f = &c.field;
    let norm = c.func_norm(g);
    let mut d = Divisor::new();
    d.add_term(Point::Inf, -pole);
    if poly::degree(f, &norm) > 0 {
        for x0 in f.roots(&norm)? {
            for p in c.points_over_x(&x0) {
                let m = local::order_at(c, g, &p)?;
                d.add_term(p, m);
            }
        }
    }
    if d.degree() != 0 {
        return Err(Error::UnresolvedPlace(format!(
            "zeros of {} over the base field account for {} of {}",
            c.render_func(g),
            d.degree() + pole,
            pole
        )));
    }
    Ok(d)
}

pub fn divisor_of_rf<F: Field>(c: &Curve<F>, g: &RationalFunction<F::E>) -> Result<Divisor<F::E>> {
    Ok(divisor_of(c, &g.num)?.sub(&divisor_of(c, &g.den)?))
}

/// Basis of `L(n·O)`: `x^i` with `2i ≤ n` and `x^i·y` with `2i + 3 ≤ n`.
pub fn infinity_basis<F: Field>(c: &Curve<F>, n: i64) -> Vec<CurveFunction<F::E>> {
    let mut out = Vec::new();
    if n < 0 {
        return out;
    }
    for i in 0..=(n / 2) {
        out.push(c.func_monomial(i as usize, false));
    }
    if n >= 3 {
        for i in 0..=((n - 3) / 2) {
            out.push(c.func_monomial(i as usize, true));
        }
    }
    out
}

/// A basis of `L(D) = {f : div f + D ≥ 0} ∪ {0}`.
///
/// Positive finite parts of `D` are cleared with a denominator `h(x)` so the
/// numerators live in `L(n·O)` for some `n`; the remaining conditions are
/// vanishing orders at finite points, imposed on local expansions.
pub fn riemann_roch_space<F: Field>(c: &Curve<F>, d: &Divisor<F::E>) -> Result<Vec<RationalFunction<F::E>>> {
    let f = &c.field;
    for (p, _) in d.terms() {
        if !c.is_on(p) {
            return domain(format!("{} is not on the curve", c.render_point(p)));
        }
    }
    if d.degree() < 0 {
        return Ok(Vec::new());
    }
    // x-coordinate groups of the positive finite part
    let mut groups: BTreeMap<F::E, i64> = BTreeMap::new();
    for (p, m) in d.terms() {
        if let (Point::Aff(x0, _), true) = (p, m > 0) {
            let need = if c.is_two_torsion(p) { (m + 1) / 2 } else { m };
            let e = groups.entry(x0.clone()).or_insert(0);
            *e = (*e).max(need);
        }
    }
    let mut h = vec![f.one()];
    let mut h_total = 0;
    let mut check: BTreeMap<Point<F::E>, i64> = BTreeMap::new();
    for (x0, &e) in &groups {
        h = poly::mul(f, &h, &poly::pow(f, &poly::linear(f, x0), e as u32));
        h_total += e;
        for p in c.points_over_x(x0) {
            let ord_h = if c.is_two_torsion(&p) { 2 * e } else { e };
            check.insert(p.clone(), ord_h);
        }
    }
    for (p, _) in d.terms() {
        if !p.is_inf() {
            check.entry(p.clone()).or_insert(0);
        }
    }
    let n = d.get(&Point::Inf) + 2 * h_total;
    let basis = infinity_basis(c, n);
    let mut rows: Vec<Vec<F::E>> = Vec::new();
    for (p, ord_h) in &check {
        let need = ord_h - d.get(p);
        if need <= 0 {
            continue;
        }
        let ex = LocalExpander::new(c, p, need as usize);
        let cols: Vec<_> = basis.iter().map(|g| ex.expand(c, g)).collect();
        for k in 0..need {
            rows.push(cols.iter().map(|s| series::coeff(f, s, k).expect("expanded far enough")).collect());
        }
    }
    let null = linalg::nullspace(f, &rows, basis.len());
    let den = c.func_poly_x(h);
    Ok(null
        .into_iter()
        .map(|v| {
            let mut g = CurveFunction { a: Vec::new(), b: Vec::new() };
            for (coef, m) in v.iter().zip(&basis) {
                if !f.is_zero(coef) {
                    g = c.func_add(&g, &c.func_scale(m, coef));
                }
            }
            RationalFunction { num: g, den: den.clone() }
        })
        .collect())
}

/// Whether `g ∈ L(D)`. Poles of `num/den` lie at `O` or over roots of the
/// norm of `den`, so only those places and the support of `D` are checked.
pub fn is_in_riemann_roch<F: Field>(c: &Curve<F>, g: &RationalFunction<F::E>, d: &Divisor<F::E>) -> Result<bool> {
    if g.num.is_zero() {
        return Ok(true);
    }
    let mut places: Vec<Point<F::E>> = vec![Point::Inf];
    places.extend(d.terms().map(|(p, _)| p.clone()));
    let norm = c.func_norm(&g.den);
    if norm.len() > 1 {
        for x0 in c.field.roots(&norm)? {
            places.extend(c.points_over_x(&x0));
        }
    }
    places.sort();
    places.dedup();
    for p in &places {
        if local::order_at_rf(c, g, p)? + d.get(p) < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A function whose only pole is of order exactly `k` at `p` (`k ≠ 1`),
/// leading coefficient 1; at `O` this is `x^(k/2)` or `x^((k−3)/2)·y`.
pub fn pole_function<F: Field>(c: &Curve<F>, p: &Point<F::E>, k: i64) -> Result<RationalFunction<F::E>> {
    if k < 0 || k == 1 {
        return domain(format!("no function has a single pole of order {k}"));
    }
    if k == 0 {
        return Ok(c.rf(c.func_const(c.field.one())));
    }
    if p.is_inf() {
        let g = if k % 2 == 0 { c.func_monomial((k / 2) as usize, false) } else { c.func_monomial(((k - 3) / 2) as usize, true) };
        return normalize_at(c, &c.rf(g), p);
    }
    for g in riemann_roch_space(c, &Divisor::from_terms([(p.clone(), k)]))? {
        if local::order_at_rf(c, &g, p)? == -k {
            return normalize_at(c, &g, p);
        }
    }
    Err(Error::Domain(format!("L({k}·P) has no element with a pole of order {k}")))
}

/// Leading coefficient of the expansion at `p`.
fn leading_at<F: Field>(c: &Curve<F>, g: &RationalFunction<F::E>, p: &Point<F::E>) -> Result<(i64, F::E)> {
    let v = local::order_at_rf(c, g, p)?;
    let s = local::expand_rf(c, g, p, v + 1)?;
    Ok((v, series::coeff(&c.field, &s, v).expect("leading term known")))
}

fn normalize_at<F: Field>(c: &Curve<F>, g: &RationalFunction<F::E>, p: &Point<F::E>) -> Result<RationalFunction<F::E>> {
    let (_, lead) = leading_at(c, g, p)?;
    Ok(c.rf_scale(g, &c.field.inv(&lead).expect("nonzero leading coefficient")))
}

/// `t_k`: spans `L(k·P − (k−1)·Q)`, leading coefficient 1 at `P`; `t_0 = t_1 = 1`.
fn t_general<F: Field>(c: &Curve<F>, p: &Point<F::E>, q: &Point<F::E>, k: i64) -> Result<RationalFunction<F::E>> {
    if k <= 1 {
        return Ok(c.rf(c.func_const(c.field.one())));
    }
    let d = Divisor::from_terms([(p.clone(), k), (q.clone(), 1 - k)]);
    let basis = riemann_roch_space(c, &d)?;
    if basis.len() != 1 {
        return Err(Error::Domain(format!("L({}) has dimension {}", c.render_divisor(&d), basis.len())));
    }
    normalize_at(c, &basis[0], p)
}

/// `t_c^(1)` for the pair `(P1, P2)`; for `c < 0` this is `t_{1−c}^(2)`.
pub fn t_function<F: Field>(c: &Curve<F>, p1: &Point<F::E>, p2: &Point<F::E>, k: i64) -> Result<RationalFunction<F::E>> {
    if p1 == p2 {
        return domain("t-functions need two distinct points");
    }
    if k < 0 {
        t_general(c, p2, p1, 1 - k)
    } else {
        t_general(c, p1, p2, k)
    }
}

/// The non-constant element of `L(P1 + P2)`, with leading coefficient 1 at
/// `P1` and zero constant term in its expansion at `O`.
pub fn w_function<F: Field>(c: &Curve<F>, p1: &Point<F::E>, p2: &Point<F::E>) -> Result<RationalFunction<F::E>> {
    if p1 == p2 {
        return domain("w needs two distinct points");
    }
    let f = &c.field;
    let d = Divisor::from_terms([(p1.clone(), 1), (p2.clone(), 1)]);
    let basis = riemann_roch_space(c, &d)?;
    let mut w = None;
    for g in basis {
        if local::order_at_rf(c, &g, p1)? == -1 {
            w = Some(g);
            break;
        }
    }
    let w = normalize_at(c, &w.ok_or_else(|| Error::Domain("L(P1 + P2) has no pole at P1".into()))?, p1)?;
    let s = local::expand_rf(c, &w, &Point::Inf, 1)?;
    let c0 = series::coeff(f, &s, 0).expect("constant term known");
    let shift = c.rf(c.func_const(f.neg(&c0)));
    Ok(c.rf_add(&w, &shift))
}

/// Basis of `L(a1·P1 + a2·P2)` for `a1, a2 ≥ 0` not both zero: `1`, then `w`
/// when both are positive, then `t_2^(1), …, t_a1^(1)` and
/// `t_2^(2), …, t_a2^(2)`. The orders at `P1` (or at `P2` for the second
/// family) are pairwise distinct, so the list is independent.
pub fn effective_basis<F: Field>(
    c: &Curve<F>,
    a1: i64,
    a2: i64,
    p1: &Point<F::E>,
    p2: &Point<F::E>,
) -> Result<Vec<RationalFunction<F::E>>> {
    if a1 < 0 || a2 < 0 || a1 + a2 == 0 {
        return domain(format!("need a nonzero effective divisor, got {a1}, {a2}"));
    }
    let mut out = vec![c.rf(c.func_const(c.field.one()))];
    if a1 > 0 && a2 > 0 {
        out.push(w_function(c, p1, p2)?);
    }
    for k in 2..=a1 {
        out.push(t_function(c, p1, p2, k)?);
    }
    for k in 2..=a2 {
        out.push(t_function(c, p1, p2, 1 - k)?);
    }
    Ok(out)
}
