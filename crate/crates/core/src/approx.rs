//! Best lower and upper rational approximations, and the `{-1/α}` case split.
//!
//! "Best" is taken in the non-strict sense: `c/d ≤ α` qualifies when no
//! fraction with a *smaller* denominator lies in `(c/d, α]`. A fraction with
//! the same denominator lying closer does not disqualify it. This is the
//! reading under which `α ≥ 3` yields the integer approximations `2, 3, …`
//! and hence the degree-one generators `(1,2), (1,3), …`.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::rational::Rational;
use num::integer::gcd;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

/// A sequence of reduced fractions `c/d`, stored as `(c, d)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ApproxSequence {
    pub direction: Direction,
    pub entries: Vec<(i64, i64)>,
}

impl ApproxSequence {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> (i64, i64) {
        self.entries[i]
    }

    pub fn as_rationals(&self) -> Vec<Rational> {
        self.entries.iter().map(|&(c, d)| Rational::new(c, d)).collect()
    }

    /// Index of the last entry (`r` in the generator lists).
    pub fn last_index(&self) -> usize {
        self.entries.len() - 1
    }
}

/// Non-strict best lower approximations `0/1 < c₁/d₁ < ⋯ < α`.
pub fn best_lower_approximations(alpha: Rational) -> Result<ApproxSequence> {
    if !alpha.is_positive() {
        return domain(format!("best lower approximations need α > 0, got {alpha}"));
    }
    let q = alpha.denom();
    let mut entries = Vec::new();
    for d in 1..=q {
        for c in 0..=alpha.floor_mul(d) {
            if gcd(c, d) != 1 {
                continue;
            }
            // c/d ≥ ⌊αd'⌋/d' for every smaller denominator d'
            let ok = (1..d).all(|dp| alpha.floor_mul(dp) * d <= c * dp);
            if ok {
                entries.push((c, d));
            }
        }
    }
    entries.sort_by(|a, b| Rational::new(a.0, a.1).cmp(&Rational::new(b.0, b.1)));
    Ok(ApproxSequence { direction: Direction::Lower, entries })
}

/// Non-strict best upper approximations, decreasing from `⌈α⌉/1` to `α`.
pub fn best_upper_approximations(alpha: Rational) -> Result<ApproxSequence> {
    if !alpha.is_positive() {
        return domain(format!("best upper approximations need α > 0, got {alpha}"));
    }
    let q = alpha.denom();
    let top = alpha.ceil();
    let mut entries = Vec::new();
    for d in 1..=q {
        for c in alpha.ceil_mul(d)..=top * d {
            if gcd(c, d) != 1 {
                continue;
            }
            let ok = (1..d).all(|dp| alpha.ceil_mul(dp) * d >= c * dp);
            if ok {
                entries.push((c, d));
            }
        }
    }
    entries.sort_by(|a, b| Rational::new(b.0, b.1).cmp(&Rational::new(a.0, a.1)));
    Ok(ApproxSequence { direction: Direction::Upper, entries })
}

/// Cells of `[0, 1)` used by every case split on `{-1/α}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Bucket {
    /// `{0}`
    Zero,
    /// `(0, 1/3)`
    ZeroThird,
    /// `[1/3, 1/2)`
    ThirdHalf,
    /// `[1/2, 2/3)`
    HalfTwoThirds,
    /// `[2/3, 3/4)`
    TwoThirdsThreeQuarters,
    /// `[3/4, 1)`
    ThreeQuartersOne,
}

impl Bucket {
    pub const ALL: [Bucket; 6] = [
        Bucket::Zero,
        Bucket::ZeroThird,
        Bucket::ThirdHalf,
        Bucket::HalfTwoThirds,
        Bucket::TwoThirdsThreeQuarters,
        Bucket::ThreeQuartersOne,
    ];

    pub fn of(v: Rational) -> Bucket {
        let third = Rational::new(1, 3);
        let half = Rational::new(1, 2);
        let two_thirds = Rational::new(2, 3);
        let three_quarters = Rational::new(3, 4);
        if v.is_zero() {
            Bucket::Zero
        } else if v < third {
            Bucket::ZeroThird
        } else if v < half {
            Bucket::ThirdHalf
        } else if v < two_thirds {
            Bucket::HalfTwoThirds
        } else if v < three_quarters {
            Bucket::TwoThirdsThreeQuarters
        } else {
            Bucket::ThreeQuartersOne
        }
    }

    /// `[0, 1/2)`
    pub fn below_half(self) -> bool {
        matches!(self, Bucket::Zero | Bucket::ZeroThird | Bucket::ThirdHalf)
    }

    /// `(0, 1/2)`
    pub fn open_below_half(self) -> bool {
        matches!(self, Bucket::ZeroThird | Bucket::ThirdHalf)
    }

    /// `[0, 1/3) ∪ [1/2, 2/3)`
    pub fn has_type_c(self) -> bool {
        matches!(self, Bucket::Zero | Bucket::ZeroThird | Bucket::HalfTwoThirds)
    }

    /// `[2/3, 1)`, the merged top cell.
    pub fn top(self) -> bool {
        matches!(self, Bucket::TwoThirdsThreeQuarters | Bucket::ThreeQuartersOne)
    }

    pub fn label(self) -> &'static str {
        match self {
            Bucket::Zero => "{0}",
            Bucket::ZeroThird => "(0,1/3)",
            Bucket::ThirdHalf => "[1/3,1/2)",
            Bucket::HalfTwoThirds => "[1/2,2/3)",
            Bucket::TwoThirdsThreeQuarters => "[2/3,3/4)",
            Bucket::ThreeQuartersOne => "[3/4,1)",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalClass {
    pub value: Rational,
    pub bucket: Bucket,
}

/// `{-1/α}` and its cell.
pub fn classify_frac_neg_inv(alpha: Rational) -> Result<IntervalClass> {
    if !alpha.is_positive() {
        return domain(format!("classifier needs α > 0, got {alpha}"));
    }
    let value = (-alpha.recip()).fract();
    Ok(IntervalClass { value, bucket: Bucket::of(value) })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// Interval definition, independent of the floor test above: `c/d` is kept
    /// when no fraction with a smaller denominator lies in `(c/d, α]`.
    fn lower_by_interval(alpha: Rational) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        for d in 1..=alpha.denom() {
            for c in 0..=(alpha.numer() * d) {
                let x = Rational::new(c, d);
                if x.denom() != d || x > alpha {
                    continue;
                }
                let blocked = (1..d).any(|b| {
                    (0..=alpha.numer() * b + b).any(|a| {
                        let y = Rational::new(a, b);
                        y > x && y <= alpha
                    })
                });
                if !blocked {
                    out.push((c, d));
                }
            }
        }
        out.sort_by_key(|&(c, d)| Rational::new(c, d));
        out
    }

    fn upper_by_interval(alpha: Rational) -> Vec<(i64, i64)> {
        let top = alpha.ceil();
        let mut out = Vec::new();
        for d in 1..=alpha.denom() {
            for c in 0..=(top * d) {
                let x = Rational::new(c, d);
                if x.denom() != d || x < alpha {
                    continue;
                }
                let blocked = (1..d).any(|b| {
                    (0..=top * b).any(|a| {
                        let y = Rational::new(a, b);
                        y >= alpha && y < x
                    })
                });
                if !blocked {
                    out.push((c, d));
                }
            }
        }
        out.sort_by_key(|&(c, d)| std::cmp::Reverse(Rational::new(c, d)));
        out
    }

    #[test]
    fn lower_examples() {
        let cases = [
            ("1", vec![(0, 1), (1, 1)]),
            ("7/5", vec![(0, 1), (1, 1), (4, 3), (7, 5)]),
            ("5", vec![(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)]),
            ("5/2", vec![(0, 1), (1, 1), (2, 1), (5, 2)]),
        ];
        for (a, want) in cases {
            assert_eq!(best_lower_approximations(r(a)).unwrap().entries, want, "α = {a}");
        }
    }

    #[test]
    fn upper_examples() {
        let seventh: Vec<(i64, i64)> = (1..=7).map(|d| (1, d)).collect();
        assert_eq!(best_upper_approximations(r("1/7")).unwrap().entries, seventh);
        assert_eq!(best_upper_approximations(r("1")).unwrap().entries, vec![(1, 1)]);
        assert_eq!(
            best_upper_approximations(r("3/5")).unwrap().entries,
            vec![(1, 1), (2, 3), (3, 5)]
        );
    }

    #[test]
    fn matches_interval_definition() {
        for q in 1..=12 {
            for p in 1..=(6 * q) {
                let a = Rational::new(p, q);
                if a.denom() != q {
                    continue;
                }
                assert_eq!(best_lower_approximations(a).unwrap().entries, lower_by_interval(a), "{a}");
                assert_eq!(best_upper_approximations(a).unwrap().entries, upper_by_interval(a), "{a}");
            }
        }
    }

    #[test]
    fn classifier_examples() {
        let c = classify_frac_neg_inv(r("1")).unwrap();
        assert_eq!((c.value, c.bucket), (Rational::ZERO, Bucket::Zero));
        let c = classify_frac_neg_inv(r("3/2")).unwrap();
        assert_eq!((c.value, c.bucket), (r("1/3"), Bucket::ThirdHalf));
        let c = classify_frac_neg_inv(r("3")).unwrap();
        assert_eq!((c.value, c.bucket), (r("2/3"), Bucket::TwoThirdsThreeQuarters));
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(best_lower_approximations(Rational::ZERO).is_err());
        assert!(best_upper_approximations(r("-1/2")).is_err());
        assert!(classify_frac_neg_inv(r("-3")).is_err());
    }
}
