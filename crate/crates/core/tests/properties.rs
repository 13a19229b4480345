use proptest::prelude::*;

use section_ring::curve::{Curve, Point};
use section_ring::divisor::{divisor_of_rf, t_function};
use section_ring::explorer::{frobenius_dimension, FrobeniusInstance};
use section_ring::field::{Field, Fp, Q};
use section_ring::local::order_at_rf;
use section_ring::section::{graded_piece, hilbert_dim, QDivisor, SectionRing};
use section_ring::Rational;

type E = <Q as Field>::E;

fn setup() -> (Curve<Q>, Point<E>, Point<E>) {
    let c = Curve::default_q();
    let g = c.point(Q.zero(), Q.zero()).unwrap();
    (c, Point::Inf, g)
}

fn alpha(max: i64) -> impl Strategy<Value = Rational> {
    (1..=5i64).prop_flat_map(move |q| (1..=max * q).prop_map(move |p| Rational::new(p, q)))
}

/// `α1 > α2 > 0`, both with denominator at most 5 and α1 at most `max`.
fn ineffective_pair(max: i64) -> impl Strategy<Value = (Rational, Rational)> {
    (alpha(max), alpha(max)).prop_filter_map("need α1 > α2", |(a, b)| match a.cmp(&b) {
        std::cmp::Ordering::Greater => Some((a, b)),
        std::cmp::Ordering::Less => Some((b, a)),
        std::cmp::Ordering::Equal => None,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn one_point_dims_follow_riemann_roch(a in alpha(4), d in 1..=4i64) {
        let (c, o, _) = setup();
        let dv = QDivisor::one_point(o, a);
        let h = hilbert_dim(&c, &dv, d).unwrap();
        prop_assert_eq!(h as i64, a.floor_mul(d).max(1));
        prop_assert_eq!(graded_piece(&c, &dv, d).unwrap().dim(), h);
    }

    // P2 − P1 is not torsion, so kP1 − kP2 with k ≠ 0 has no sections
    #[test]
    fn ineffective_dims((a1, a2) in ineffective_pair(3), d in 1..=5i64) {
        let (c, p1, p2) = setup();
        let dv = QDivisor::two_point(p1, a1, p2, -a2).unwrap();
        let want = (a1.floor_mul(d) - a2.ceil_mul(d)).max(0);
        prop_assert_eq!(hilbert_dim(&c, &dv, d).unwrap() as i64, want);
        prop_assert_eq!(graded_piece(&c, &dv, d).unwrap().dim() as i64, want);
    }

    #[test]
    fn excluded_pole_orders((a1, a2) in ineffective_pair(3), b in alpha(3)) {
        let (c, p1, p2) = setup();
        let ring = SectionRing::new(&c, &QDivisor::two_point(p1.clone(), a1, p2, -a2).unwrap(), 5).unwrap();
        for (d, piece) in ring.pieces().iter().enumerate().skip(1) {
            let poles = piece.poles();
            prop_assert!(!poles.contains(&a2.ceil_mul(d as i64)), "degree {}: {:?}", d, poles);
        }
        let ring = SectionRing::new(&c, &QDivisor::one_point(p1, b), 5).unwrap();
        for piece in ring.pieces() {
            prop_assert!(!piece.poles().contains(&1));
        }
    }

    #[test]
    fn order_additivity(k in -4..=4i64, l in -4..=4i64) {
        prop_assume!(k != 0 && k != 1 && l != 0 && l != 1);
        let (c, p1, p2) = setup();
        let f = t_function(&c, &p1, &p2, k).unwrap();
        let g = t_function(&c, &p1, &p2, l).unwrap();
        let fg = c.rf_mul(&f, &g);
        let (df, dg, dfg) = (divisor_of_rf(&c, &f).unwrap(), divisor_of_rf(&c, &g).unwrap(), divisor_of_rf(&c, &fg).unwrap());
        prop_assert_eq!(&dfg, &df.add(&dg));
        prop_assert_eq!(dfg.degree(), 0);
        for p in [&p1, &p2] {
            prop_assert_eq!(
                order_at_rf(&c, &fg, p).unwrap(),
                order_at_rf(&c, &f, p).unwrap() + order_at_rf(&c, &g, p).unwrap()
            );
        }
    }

    #[test]
    fn frobenius_count_is_h0(p in 1..=5i64, q in 2..=7i64, d in 1..=40i64) {
        prop_assume!(p < q && Rational::new(p, q).denom() == q);
        let inst = FrobeniusInstance::new(p, q).unwrap();
        let f = frobenius_dimension(inst, d).unwrap();
        prop_assert!(f.matches_a());
        let (c, p1, p2) = setup();
        let (a1, a2) = inst.alphas();
        let dv = QDivisor::two_point(p1, a1, p2, -a2).unwrap();
        prop_assert_eq!(f.count, hilbert_dim(&c, &dv, d).unwrap() as i64);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    // the generator profile is a property of the divisor, not of the field
    #[test]
    fn profile_invariant_under_field(a in alpha(3), prime in prop::sample::select(vec![10007u64, 32003])) {
        let (c, o, _) = setup();
        let q_degs = SectionRing::new(&c, &QDivisor::one_point(o, a), 7).unwrap().generator_profile().unwrap().signatures();
        let cp = Curve::from_ints(Fp::new(prime).unwrap(), [0, 0, 1, -1, 0]).unwrap();
        let p_degs = SectionRing::new(&cp, &QDivisor::one_point(Point::Inf, a), 7).unwrap().generator_profile().unwrap().signatures();
        prop_assert_eq!(q_degs, p_degs);
    }
}

#[test]
fn t_duality() {
    let (c, p1, p2) = setup();
    for k in (-6..=6).filter(|k| *k != 0 && *k != 1) {
        let f = t_function(&c, &p1, &p2, k).unwrap();
        let g = t_function(&c, &p2, &p1, 1 - k).unwrap();
        assert_eq!(divisor_of_rf(&c, &f).unwrap(), divisor_of_rf(&c, &g).unwrap(), "k = {k}");
    }
}
