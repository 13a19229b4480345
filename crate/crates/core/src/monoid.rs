//! The lattice monoid `M(α) = {(d, c) : 0 ≤ c ≤ αd, c ≠ 1}` and its
//! combinatorics: irreducibles, minimal decompositions, relation leaders.
//!
//! Everything here is computed by enumeration and never consults the closed
//! forms in [`crate::presentation`]; it is the oracle those are checked against.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::rational::Rational;

/// `(d, c)`: degree and pole order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePoint {
    pub d: i64,
    pub c: i64,
}

impl LatticePoint {
    pub const ZERO: LatticePoint = LatticePoint { d: 0, c: 0 };

    pub const fn new(d: i64, c: i64) -> Self {
        LatticePoint { d, c }
    }

    pub fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.d + o.d, self.c + o.c)
    }

    pub fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.d - o.d, self.c - o.c)
    }

    pub fn scale(self, k: i64) -> LatticePoint {
        LatticePoint::new(self.d * k, self.c * k)
    }
}

impl std::fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.d, self.c)
    }
}

pub fn contains(alpha: Rational, p: LatticePoint) -> bool {
    p.c >= 0 && p.c <= alpha.floor_mul(p.d) && p.c != 1
}

/// `p ∈ M ∪ {0}`.
fn contains_or_zero(alpha: Rational, p: LatticePoint) -> bool {
    p == LatticePoint::ZERO || (p.d >= 1 && contains(alpha, p))
}

/// Is `p` a sum of two nonzero elements of `M`? Every nonzero element has
/// degree at least one, so it suffices to scan the degree `e` of one summand
/// and check whether the admissible pole orders for it form a nonempty set.
fn is_reducible(alpha: Rational, p: LatticePoint) -> bool {
    for e in 1..p.d {
        let hi = alpha.floor_mul(e).min(p.c);
        let lo = (p.c - alpha.floor_mul(p.d - e)).max(0);
        if (lo..=hi).any(|c1| c1 != 1 && p.c - c1 != 1) {
            return true;
        }
    }
    false
}

/// All irreducibles of `M(α)` with degree at most `d_max`, sorted by
/// `(degree, pole order)`.
pub fn irreducibles_up_to(alpha: Rational, d_max: i64) -> Result<Vec<LatticePoint>> {
    if !alpha.is_positive() {
        return domain(format!("monoid needs α > 0, got {alpha}"));
    }
    let mut out = Vec::new();
    for d in 1..=d_max {
        for c in 0..=alpha.floor_mul(d) {
            let p = LatticePoint::new(d, c);
            if contains(alpha, p) && !is_reducible(alpha, p) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// A degree bound beyond which `M(α)` has no irreducibles.
///
/// Any irreducible `(d, c)` must satisfy `c > α(d - 1)` (else subtract
/// `(1, 0)`), and subtracting `k·(q, p)` for `α = p/q` with `k ∈ {1, 2, 3}`
/// shows `c ≤ 3p + 1`, whence `d < 4q + 2`.
pub fn irreducible_degree_bound(alpha: Rational) -> i64 {
    4 * alpha.denom() + 2
}

/// Exponent vector over a generator list.
pub type ExponentVector = Vec<u32>;

/// Total `(degree, pole)` of an exponent vector.
pub fn project(gens: &[LatticePoint], v: &[u32]) -> LatticePoint {
    gens.iter()
        .zip(v)
        .fold(LatticePoint::ZERO, |acc, (g, &a)| acc.add(g.scale(a as i64)))
}

/// Compare exponents from the highest generator downwards; the larger
/// exponent is the larger monomial. This is the tie-break among monomials of
/// equal degree and pole order.
pub fn cmp_reverse_exponents(a: &[u32], b: &[u32]) -> std::cmp::Ordering {
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            std::cmp::Ordering::Equal => continue,
            o => return o,
        }
    }
    std::cmp::Ordering::Equal
}

/// Enumeration tables for `M(α)` up to a degree bound: the minimal
/// decomposition of every point, over the irreducibles sorted by
/// `(degree, pole order)`.
pub struct MonoidTables {
    pub alpha: Rational,
    pub bound: i64,
    pub gens: Vec<LatticePoint>,
    md: HashMap<LatticePoint, ExponentVector>,
}

impl MonoidTables {
    pub fn build(alpha: Rational, bound: i64) -> Result<Self> {
        let gens = irreducibles_up_to(alpha, irreducible_degree_bound(alpha))?;
        let g = gens.len();
        let mut md: HashMap<LatticePoint, ExponentVector> = HashMap::new();
        md.insert(LatticePoint::ZERO, vec![0; g]);
        for d in 1..=bound {
            for c in 0..=alpha.floor_mul(d) {
                let p = LatticePoint::new(d, c);
                if !contains(alpha, p) {
                    continue;
                }
                let mut best: Option<ExponentVector> = None;
                for (i, gi) in gens.iter().enumerate() {
                    let rest = p.sub(*gi);
                    if let Some(w) = md.get(&rest) {
                        let mut v = w.clone();
                        v[i] += 1;
                        best = match best {
                            Some(b) if cmp_reverse_exponents(&b, &v).is_le() => Some(b),
                            _ => Some(v),
                        };
                    }
                }
                let v = best.expect("M is atomic: every element decomposes");
                md.insert(p, v);
            }
        }
        Ok(MonoidTables { alpha, bound, gens, md })
    }

    pub fn minimal_decomposition(&self, p: LatticePoint) -> Result<&ExponentVector> {
        if !contains_or_zero(self.alpha, p) {
            return domain(format!("{p} is not in M({})", self.alpha));
        }
        self.md
            .get(&p)
            .ok_or_else(|| crate::error::Error::Domain(format!("{p} beyond degree bound {}", self.bound)))
    }

    pub fn degree_of(&self, v: &[u32]) -> i64 {
        project(&self.gens, v).d
    }

    fn is_md(&self, v: &[u32]) -> bool {
        let p = project(&self.gens, v);
        self.md.get(&p).is_some_and(|w| w.as_slice() == v)
    }

    /// All relation leaders of total degree `≤ deg_max` (at most `self.bound`).
    pub fn relation_leaders(&self, deg_max: i64) -> Vec<ExponentVector> {
        let deg_max = deg_max.min(self.bound);
        let mut found = BTreeSet::new();
        // Every leader is (an MD) + (one generator).
        for (q, w) in &self.md {
            for (i, gi) in self.gens.iter().enumerate() {
                if q.d + gi.d > deg_max {
                    continue;
                }
                let mut v = w.clone();
                v[i] += 1;
                if self.is_md(&v) {
                    continue;
                }
                let subs_ok = (0..v.len()).filter(|&j| v[j] > 0).all(|j| {
                    let mut s = v.clone();
                    s[j] -= 1;
                    self.is_md(&s)
                });
                if subs_ok {
                    found.insert(v);
                }
            }
        }
        let mut out: Vec<_> = found.into_iter().collect();
        out.sort_by_key(|v| (project(&self.gens, v), v.iter().rev().cloned().collect::<Vec<_>>()));
        out
    }

    /// Whether the binomial `v − MD(π(v))` is a minimal generator of the
    /// toric ideal of `M`. The factorizations of `p` fall into connected
    /// classes, two being joined when they share a generator; generator `i`
    /// occurs in some factorization iff `p − vᵢ ∈ M ∪ {0}`, and `i, j` occur
    /// together iff `p − vᵢ − vⱼ ∈ M ∪ {0}`. The binomial is minimal iff `v`
    /// and `MD(p)` lie in different classes.
    pub fn toric_minimal(&self, v: &[u32]) -> bool {
        let p = project(&self.gens, v);
        let md = match self.md.get(&p) {
            Some(m) => m,
            None => return false,
        };
        let present: Vec<usize> = (0..self.gens.len())
            .filter(|&i| contains_or_zero(self.alpha, p.sub(self.gens[i])))
            .collect();
        let mut comp: HashMap<usize, usize> = present.iter().map(|&i| (i, i)).collect();
        fn find(comp: &mut HashMap<usize, usize>, i: usize) -> usize {
            let mut r = i;
            while comp[&r] != r {
                r = comp[&r];
            }
            comp.insert(i, r);
            r
        }
        for (a, &i) in present.iter().enumerate() {
            for &j in &present[a + 1..] {
                let rest = p.sub(self.gens[i]).sub(self.gens[j]);
                if contains_or_zero(self.alpha, rest) {
                    let (ri, rj) = (find(&mut comp, i), find(&mut comp, j));
                    comp.insert(ri, rj);
                }
            }
        }
        let sv = (0..v.len()).find(|&i| v[i] > 0).expect("nonzero vector");
        let sm = (0..md.len()).find(|&i| md[i] > 0).expect("nonzero vector");
        find(&mut comp, sv) != find(&mut comp, sm)
    }

    /// Number of minimal toric relations in the fiber over `p`.
    pub fn toric_relation_count(&self, p: LatticePoint) -> usize {
        let present: Vec<usize> = (0..self.gens.len())
            .filter(|&i| contains_or_zero(self.alpha, p.sub(self.gens[i])))
            .collect();
        let mut comps = 0usize;
        let mut seen = vec![false; self.gens.len()];
        for &s in &present {
            if seen[s] {
                continue;
            }
            comps += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(i) = stack.pop() {
                for &j in &present {
                    if !seen[j] && contains_or_zero(self.alpha, p.sub(self.gens[i]).sub(self.gens[j])) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        comps.saturating_sub(1)
    }
}

/// A leader found by enumeration, with its toric minimality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonoidLeader {
    pub vector: ExponentVector,
    pub point: LatticePoint,
    pub minimal: bool,
}

/// Leaders of total degree `≤ deg_max` over the irreducibles of `M(α)`.
pub fn relation_leaders_oracle(alpha: Rational, deg_max: i64) -> Result<(Vec<LatticePoint>, Vec<MonoidLeader>)> {
    let t = MonoidTables::build(alpha, deg_max)?;
    let leaders = t
        .relation_leaders(deg_max)
        .into_iter()
        .map(|v| MonoidLeader { point: project(&t.gens, &v), minimal: t.toric_minimal(&v), vector: v })
        .collect();
    Ok((t.gens, leaders))
}

/// Default leader-search bound: four times the largest generator degree.
pub fn default_leader_bound(gens: &[LatticePoint]) -> i64 {
    4 * gens.iter().map(|g| g.d).max().unwrap_or(1)
}

/// Brute-force minimal decomposition of a single point.
pub fn minimal_decomposition(alpha: Rational, p: LatticePoint) -> Result<(Vec<LatticePoint>, ExponentVector)> {
    if !contains_or_zero(alpha, p) {
        return domain(format!("{p} is not in M({alpha})"));
    }
    let t = MonoidTables::build(alpha, p.d.max(1))?;
    let v = t.minimal_decomposition(p)?.clone();
    Ok((t.gens, v))
}

/// Every decomposition of `p` over `gens` (bounded knapsack over the degree).
pub fn all_decompositions(gens: &[LatticePoint], p: LatticePoint) -> Vec<ExponentVector> {
    fn rec(gens: &[LatticePoint], k: usize, rest: LatticePoint, cur: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if k == 0 {
            if rest == LatticePoint::ZERO {
                out.push(cur.clone());
            }
            return;
        }
        let g = gens[k - 1];
        let mut m = 0u32;
        let mut r = rest;
        loop {
            cur[k - 1] = m;
            rec(gens, k - 1, r, cur, out);
            r = r.sub(g);
            m += 1;
            if r.d < 0 || r.c < 0 || g.d == 0 {
                break;
            }
        }
        cur[k - 1] = 0;
    }
    let mut out = Vec::new();
    let mut cur = vec![0; gens.len()];
    rec(gens, gens.len(), p, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }
    fn pt(d: i64, c: i64) -> LatticePoint {
        LatticePoint::new(d, c)
    }

    #[test]
    fn membership() {
        assert!(!contains(r("1"), pt(1, 1)));
        assert!(contains(r("1"), pt(2, 2)));
        assert!(!contains(r("1"), pt(3, 4)));
    }

    #[test]
    fn irreducible_examples() {
        assert_eq!(irreducibles_up_to(r("1"), 6).unwrap(), vec![pt(1, 0), pt(2, 2), pt(3, 3)]);
        assert_eq!(
            irreducibles_up_to(r("3/2"), 6).unwrap(),
            vec![pt(1, 0), pt(2, 2), pt(2, 3), pt(3, 4)]
        );
        assert_eq!(
            irreducibles_up_to(r("5"), 3).unwrap(),
            vec![pt(1, 0), pt(1, 2), pt(1, 3), pt(1, 4), pt(1, 5)]
        );
    }

    /// Pairwise search over all elements, the literal definition.
    fn irreducible_naive(alpha: Rational, p: LatticePoint) -> bool {
        for e in 1..p.d {
            for c in 0..=p.c {
                let a = pt(e, c);
                let b = p.sub(a);
                if contains(alpha, a) && contains(alpha, b) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn interval_reducibility_matches_pairwise() {
        for a in ["1", "3/2", "7/5", "1/4", "13/5", "2/7"] {
            let alpha = r(a);
            for d in 1..=20 {
                for c in 0..=alpha.floor_mul(d) {
                    let p = pt(d, c);
                    if contains(alpha, p) {
                        assert_eq!(!is_reducible(alpha, p), irreducible_naive(alpha, p), "{a} {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn degree_bound_is_safe() {
        for q in 1..=8 {
            for p in 1..=5 * q {
                let alpha = Rational::new(p, q);
                let b = irreducible_degree_bound(alpha);
                let far = irreducibles_up_to(alpha, 3 * b).unwrap();
                assert!(far.iter().all(|g| g.d <= b), "{alpha}");
            }
        }
    }

    #[test]
    fn minimal_decomposition_examples() {
        let (g, v) = minimal_decomposition(r("1"), pt(5, 4)).unwrap();
        assert_eq!(g, vec![pt(1, 0), pt(2, 2), pt(3, 3)]);
        assert_eq!(v, vec![1, 2, 0]);
        let (g, v) = minimal_decomposition(r("2"), pt(3, 3)).unwrap();
        assert_eq!(g, vec![pt(1, 0), pt(1, 2), pt(2, 3)]);
        assert_eq!(v, vec![1, 0, 1]);
        let (_, v) = minimal_decomposition(r("1"), pt(1, 0)).unwrap();
        assert_eq!(v, vec![1, 0, 0]);
        assert!(minimal_decomposition(r("1"), pt(1, 1)).is_err());
    }

    #[test]
    fn md_is_min_over_all_decompositions() {
        for a in ["3/2", "7/5", "5/2", "3", "4/7"] {
            let alpha = r(a);
            let t = MonoidTables::build(alpha, 14).unwrap();
            for d in 1..=14 {
                for c in 0..=alpha.floor_mul(d) {
                    let p = pt(d, c);
                    if !contains(alpha, p) {
                        continue;
                    }
                    let all = all_decompositions(&t.gens, p);
                    assert!(!all.is_empty(), "atomicity {a} {p}");
                    let min = all.iter().min_by(|x, y| cmp_reverse_exponents(x, y)).unwrap();
                    assert_eq!(t.minimal_decomposition(p).unwrap(), min, "{a} {p}");
                }
            }
        }
    }

    fn leaders_as_points(a: &str, deg: i64) -> Vec<Vec<(LatticePoint, u32)>> {
        let (gens, ls) = relation_leaders_oracle(r(a), deg).unwrap();
        ls.iter()
            .map(|l| l.vector.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, &e)| (gens[i], e)).collect())
            .collect()
    }

    #[test]
    fn leader_examples() {
        assert_eq!(leaders_as_points("1", 8), vec![vec![(pt(3, 3), 2)]]);
        let got = leaders_as_points("3/2", 10);
        let want = vec![
            vec![(pt(1, 0), 1), (pt(3, 4), 1)],
            vec![(pt(1, 0), 2), (pt(2, 3), 2)],
            vec![(pt(2, 2), 1), (pt(3, 4), 1)],
            vec![(pt(3, 4), 2)],
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        let mut want_sorted = want;
        want_sorted.sort();
        assert_eq!(got_sorted, want_sorted);
        assert_eq!(leaders_as_points("3", 6), vec![vec![(pt(1, 0), 1), (pt(1, 3), 2)]]);
    }

    #[test]
    fn toric_minimality_of_boxed_leaders() {
        let (_, ls) = relation_leaders_oracle(r("3/2"), 10).unwrap();
        let quartic = ls.iter().find(|l| l.vector.iter().sum::<u32>() == 4).unwrap();
        assert!(!quartic.minimal);
        assert!(ls.iter().filter(|l| l.vector.iter().sum::<u32>() == 2).all(|l| l.minimal));
        let (_, ls) = relation_leaders_oracle(r("3"), 6).unwrap();
        assert!(ls[0].minimal);
        let (_, ls) = relation_leaders_oracle(r("4"), 8).unwrap();
        let cubic = ls.iter().find(|l| l.vector == vec![1, 0, 2, 0]).unwrap();
        assert!(!cubic.minimal);
    }
}
