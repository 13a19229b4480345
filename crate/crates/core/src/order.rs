//! Monomial orders on the free commutative monoid over a generator list.
//!
//! Each order is built from the generators' weights and assumes the list is
//! already sorted in that order's generator sequence.

use std::cmp::Ordering;

use crate::monoid::cmp_reverse_exponents;

/// Weights a term order may consult for one generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenWeight {
    pub degree: i64,
    /// Pole order at the primary point (zero when there is no pole).
    pub pole1: i64,
    /// Pole order at the secondary point.
    pub pole2: i64,
}

pub trait TermOrder: Send + Sync {
    fn name(&self) -> &'static str;

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering;

    /// Whether the order refines total degree. Only such orders make
    /// per-degree leading-term extraction agree with the global order, but
    /// every homogeneous relation can be handled degree by degree regardless.
    fn graded(&self) -> bool;
}

fn dot(w: &[GenWeight], a: &[u32], f: impl Fn(&GenWeight) -> i64) -> i64 {
    w.iter().zip(a).map(|(g, &e)| f(g) * e as i64).sum()
}

/// Degree, then pole order, then exponents from the highest generator down.
pub struct OnePointOrder {
    pub weights: Vec<GenWeight>,
}

impl TermOrder for OnePointOrder {
    fn name(&self) -> &'static str {
        "one-point"
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let w = &self.weights;
        dot(w, a, |g| g.degree)
            .cmp(&dot(w, b, |g| g.degree))
            .then_with(|| dot(w, a, |g| g.pole1).cmp(&dot(w, b, |g| g.pole1)))
            .then_with(|| cmp_reverse_exponents(a, b))
    }

    fn graded(&self) -> bool {
        true
    }
}

/// Pole order at the secondary point, then degree, then pole order at the
/// primary point, then exponents from the highest generator down.
///
/// With `p1_everywhere` unset the primary-point key only separates monomials
/// with no pole at the secondary point. The unrestricted key makes `f_w^k`
/// outrank `u·f_2^(2)` whenever they share degree and secondary pole, which
/// breaks the consecutive-product structure of the new generators.
pub struct UnequalOrder {
    pub weights: Vec<GenWeight>,
    pub p1_everywhere: bool,
}

impl TermOrder for UnequalOrder {
    fn name(&self) -> &'static str {
        if self.p1_everywhere {
            "unequal-printed"
        } else {
            "unequal"
        }
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        let w = &self.weights;
        let p2 = dot(w, a, |g| g.pole2);
        p2.cmp(&dot(w, b, |g| g.pole2))
            .then_with(|| dot(w, a, |g| g.degree).cmp(&dot(w, b, |g| g.degree)))
            .then_with(|| {
                if self.p1_everywhere || p2 == 0 {
                    dot(w, a, |g| g.pole1).cmp(&dot(w, b, |g| g.pole1))
                } else {
                    Ordering::Equal
                }
            })
            .then_with(|| cmp_reverse_exponents(a, b))
    }

    fn graded(&self) -> bool {
        false
    }
}

/// Pure lex, largest generator first.
pub struct LexOrder;

impl TermOrder for LexOrder {
    fn name(&self) -> &'static str {
        "equal"
    }

    fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        cmp_reverse_exponents(a, b)
    }

    fn graded(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(degree: i64, pole1: i64, pole2: i64) -> GenWeight {
        GenWeight { degree, pole1, pole2 }
    }

    #[test]
    fn one_point_keys_in_sequence() {
        // u, f_b, f_c for D = (O)
        let o = OnePointOrder { weights: vec![w(1, 0, 0), w(2, 2, 0), w(3, 3, 0)] };
        assert_eq!(o.cmp(&[1, 0, 2], &[0, 3, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[2, 0, 0], &[0, 1, 0]), Ordering::Less);
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 1, 0]), Ordering::Less);
    }

    #[test]
    fn unequal_pole2_dominates() {
        // u, f_b, f_c, f_w for α1 = 1, α2 = 1/2
        for p1_everywhere in [false, true] {
            let o = UnequalOrder { weights: vec![w(1, 0, 0), w(2, 2, 0), w(3, 3, 0), w(2, 1, 1)], p1_everywhere };
            assert_eq!(o.cmp(&[0, 0, 0, 1], &[0, 0, 1, 0]), Ordering::Greater);
            assert_eq!(o.cmp(&[3, 0, 0, 0], &[1, 1, 0, 0]), Ordering::Less);
        }
    }

    #[test]
    fn primary_tiebreak_scope() {
        // u, f_w, f_2^(2) for α2 = 2/3: f_w² and u·f_2^(2) share degree 4 and pole 2 at P2
        let weights = vec![w(1, 0, 0), w(2, 1, 1), w(3, 0, 2)];
        let printed = UnequalOrder { weights: weights.clone(), p1_everywhere: true };
        let scoped = UnequalOrder { weights, p1_everywhere: false };
        assert_eq!(printed.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(scoped.cmp(&[0, 2, 0], &[1, 0, 1]), Ordering::Less);
    }

    #[test]
    fn lex_largest_first() {
        // u, f_w, f_b
        assert_eq!(LexOrder.cmp(&[0, 0, 2], &[0, 4, 0]), Ordering::Greater);
        assert_eq!(LexOrder.cmp(&[5, 0, 0], &[0, 1, 0]), Ordering::Less);
    }
}
