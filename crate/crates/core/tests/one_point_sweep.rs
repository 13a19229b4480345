use section_ring::approx::Bucket;
use section_ring::monoid::{contains, LatticePoint, MonoidTables};
use section_ring::presentation::present_one_point;
use section_ring::table::{
    angle_coords, closed_form_min_decomposition, decomposition_points, decomposition_sum, erratum_for, table_row,
    TableVariant,
};
use section_ring::verify::{point_monomial, MonoidOracle, PresentationOracle};
use section_ring::Rational;

fn sweep() -> Vec<Rational> {
    let mut out = Vec::new();
    for q in 1..=10 {
        for p in 1..=6 * q {
            let a = Rational::new(p, q);
            if a.denom() == q {
                out.push(a);
            }
        }
    }
    out
}

#[test]
fn closed_forms_agree_with_monoid_on_sweep() {
    let alphas = sweep();
    assert!(alphas.len() > 150);
    let mut failures = Vec::new();
    for a in alphas {
        let p = present_one_point(a).unwrap();
        let v = MonoidOracle.verify(&p, None).unwrap();
        if !v.is_match() {
            failures.push(format!("{a}: {:?}", v.diffs));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

/// One α per cell, both top cells included.
const TABLE_ALPHAS: [&str; 6] = ["1", "4/11", "3/2", "2", "3", "4"];

#[test]
fn table_matches_minimal_decompositions() {
    let mut cells = std::collections::BTreeSet::new();
    for s in TABLE_ALPHAS {
        let alpha: Rational = s.parse().unwrap();
        let t = MonoidTables::build(alpha, 20).unwrap();
        let mut checked = 0;
        for d in 1..=20 {
            for c in 0..=alpha.floor_mul(d) {
                let p = LatticePoint::new(d, c);
                if !contains(alpha, p) || angle_coords(alpha, p).is_err() {
                    continue;
                }
                let dec = closed_form_min_decomposition(alpha, p, TableVariant::Corrected).unwrap();
                let closed = decomposition_points(alpha, &dec).unwrap();
                let brute = point_monomial(&t.gens, t.minimal_decomposition(p).unwrap());
                assert_eq!(closed, brute, "α = {s}, p = {p}");
                checked += 1;
            }
        }
        assert!(checked > 20);
        cells.insert(section_ring::approx::classify_frac_neg_inv(alpha).unwrap().bucket);
    }
    assert_eq!(cells.len(), Bucket::ALL.len());
}

#[test]
fn printed_table_errata_are_exactly_the_known_rows() {
    for s in TABLE_ALPHAS {
        let alpha: Rational = s.parse().unwrap();
        for d in 1..=20 {
            for c in 0..=alpha.floor_mul(d) {
                let p = LatticePoint::new(d, c);
                if !contains(alpha, p) || angle_coords(alpha, p).is_err() {
                    continue;
                }
                let printed = closed_form_min_decomposition(alpha, p, TableVariant::Printed);
                let consistent = match printed {
                    Ok(dec) => decomposition_sum(&decomposition_points(alpha, &dec).unwrap()) == p,
                    Err(_) => false,
                };
                let row = table_row(alpha, p).unwrap();
                assert_eq!(consistent, erratum_for(row).is_none(), "α = {s}, p = {p}, row {row:?}");
            }
        }
    }
}
