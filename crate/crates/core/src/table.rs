//! Closed-form minimal decompositions of monoid elements in the angle
//! spanned by `v0 = (1, 0)` and `v2 = (d2, c2)`.
//!
//! Points are written as `a1·v1 + a0·v0` (between `v0` and `v1 = (d1, 1)`)
//! or `a2·v2 + a1·v1` (between `v1` and `v2`), and the decomposition depends
//! on the parity of `a1` and the cell of `{-1/α}`. Three of the printed
//! formulas do not project back onto the point they decompose; the
//! [`TableVariant::Printed`] variant keeps them as printed so the discrepancy
//! can be exhibited, and [`TableVariant::Corrected`] carries the fix.

use serde::Serialize;

use crate::approx::{best_lower_approximations, classify_frac_neg_inv, Bucket};
use crate::error::{domain, Result};
use crate::monoid::{contains, LatticePoint};
use crate::presentation::{generators_one_point, GenId};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableVariant {
    Corrected,
    Printed,
}

/// Which formula of the table applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub bucket: Bucket,
    /// `false` for `a1·v1 + a0·v0`, `true` for `a2·v2 + a1·v1`.
    pub upper_angle: bool,
    pub a1_odd: bool,
}

/// A known disagreement between the printed table and exact bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub row: TableRow,
    pub printed: &'static str,
    pub corrected: &'static str,
}

pub const ERRATA: [Erratum; 3] = [
    Erratum {
        row: TableRow { bucket: Bucket::HalfTwoThirds, upper_angle: false, a1_odd: true },
        printed: "v0 coefficient (a1-3)/2 + a0",
        corrected: "v0 coefficient (a1-3)/2 + a0 + 1",
    },
    Erratum {
        row: TableRow { bucket: Bucket::TwoThirdsThreeQuarters, upper_angle: false, a1_odd: true },
        printed: "v0 coefficient (a1-3)/2 + a0",
        corrected: "v0 coefficient (a1-3)/2 + a0 + 2",
    },
    Erratum {
        row: TableRow { bucket: Bucket::HalfTwoThirds, upper_angle: true, a1_odd: true },
        printed: "v2 coefficient a2 + (a1-1)/2",
        corrected: "v2 coefficient a2 + (a1-3)/2",
    },
];

/// Coordinates of `p` in the angle `∠v0v2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AngleCoords {
    Lower { a1: i64, a0: i64 },
    Upper { a2: i64, a1: i64 },
}

pub fn angle_coords(alpha: Rational, p: LatticePoint) -> Result<AngleCoords> {
    let bla = best_lower_approximations(alpha)?;
    let (_, d1) = bla.get(1);
    let a0 = p.d - p.c * d1;
    if p.c >= 0 && a0 >= 0 {
        return Ok(AngleCoords::Lower { a1: p.c, a0 });
    }
    if bla.len() > 2 {
        let (c2, d2) = bla.get(2);
        // det(v1, v2) = c2·d1 - d2 = 1
        let a2 = p.c * d1 - p.d;
        let a1 = c2 * p.d - d2 * p.c;
        if a2 >= 0 && a1 >= 0 {
            return Ok(AngleCoords::Upper { a2, a1 });
        }
    }
    domain(format!("{p} is outside the angle v0 v2 for α = {alpha}"))
}

/// The table's decomposition of `p`, as generator multiplicities.
pub fn closed_form_min_decomposition(alpha: Rational, p: LatticePoint, variant: TableVariant) -> Result<Vec<(GenId, u32)>> {
    if !contains(alpha, p) {
        return domain(format!("{p} is not in M({alpha})"));
    }
    let coords = angle_coords(alpha, p)?;
    let bucket = classify_frac_neg_inv(alpha)?.bucket;
    let printed = variant == TableVariant::Printed;
    let (v0, v2, v3) = (GenId::A1(0), GenId::A1(2), GenId::A1(3));
    let (vb, vc, vd) = (GenId::B, GenId::C, GenId::D);
    let terms: Vec<(GenId, i64)> = match coords {
        AngleCoords::Lower { a1, a0 } => {
            let even = a1 % 2 == 0;
            let h = a1 / 2;
            let k = (a1 - 3) / 2;
            match bucket {
                Bucket::Zero | Bucket::ZeroThird if even => vec![(vb, h), (v0, a0)],
                Bucket::Zero | Bucket::ZeroThird => vec![(vc, 1), (vb, k), (v0, a0)],
                Bucket::ThirdHalf if even => vec![(vb, h), (v0, a0)],
                Bucket::ThirdHalf => vec![(v2, 1), (vb, k), (v0, a0 + 1)],
                Bucket::HalfTwoThirds if even => vec![(v2, h), (v0, h + a0)],
                Bucket::HalfTwoThirds => vec![(vc, 1), (v2, k), (v0, k + a0 + if printed { 0 } else { 1 })],
                _ if even => vec![(v2, h), (v0, h + a0)],
                _ => vec![(v3, 1), (v2, k), (v0, k + a0 + if printed { 0 } else { 2 })],
            }
        }
        AngleCoords::Upper { a2, a1 } => {
            let even = a1 % 2 == 0;
            let h = a1 / 2;
            let k = (a1 - 3) / 2;
            match bucket {
                Bucket::Zero => unreachable!("no v2 when 1/α is an integer"),
                Bucket::ZeroThird | Bucket::ThirdHalf if even => vec![(v2, a2), (vb, h)],
                Bucket::ZeroThird | Bucket::ThirdHalf if a1 == 1 => vec![(vd, 1), (v2, a2 - 1)],
                Bucket::ZeroThird => vec![(v2, a2), (vc, 1), (vb, k)],
                Bucket::ThirdHalf => vec![(v2, a2 + 1), (vb, k), (v0, 1)],
                Bucket::HalfTwoThirds if even => vec![(v2, a2 + h), (v0, h)],
                Bucket::HalfTwoThirds => {
                    let c2 = if printed { a2 + (a1 - 1) / 2 } else { a2 + k };
                    vec![(vc, 1), (v2, c2), (v0, (a1 - 1) / 2)]
                }
                _ if even => vec![(v2, a2 + h), (v0, h)],
                _ => vec![(v3, 1), (v2, a2 + k), (v0, (a1 + 1) / 2)],
            }
        }
    };
    let mut out: Vec<(GenId, u32)> = Vec::new();
    for (id, e) in terms {
        if e < 0 {
            return domain(format!("table formula gives a negative coefficient at {p} for α = {alpha}"));
        }
        if e > 0 {
            out.push((id, e as u32));
        }
    }
    out.sort();
    Ok(out)
}

/// The lattice points underlying a decomposition, with multiplicities.
pub fn decomposition_points(alpha: Rational, dec: &[(GenId, u32)]) -> Result<Vec<(LatticePoint, u32)>> {
    let gens = generators_one_point(alpha)?;
    let mut out = Vec::new();
    for &(id, e) in dec {
        match gens.iter().find(|g| g.id == id) {
            Some(g) => out.push((g.lattice, e)),
            None => return domain(format!("{id:?} is not a generator for α = {alpha}")),
        }
    }
    out.sort();
    Ok(out)
}

/// `Σ e·v` over a decomposition.
pub fn decomposition_sum(points: &[(LatticePoint, u32)]) -> LatticePoint {
    points.iter().fold(LatticePoint::ZERO, |acc, (p, e)| acc.add(p.scale(*e as i64)))
}

/// Which row a point falls under.
pub fn table_row(alpha: Rational, p: LatticePoint) -> Result<TableRow> {
    let bucket = classify_frac_neg_inv(alpha)?.bucket;
    Ok(match angle_coords(alpha, p)? {
        AngleCoords::Lower { a1, .. } => TableRow { bucket, upper_angle: false, a1_odd: a1 % 2 == 1 },
        AngleCoords::Upper { a1, .. } => TableRow { bucket, upper_angle: true, a1_odd: a1 % 2 == 1 },
    })
}

/// The erratum covering a row, merging the two top cells.
pub fn erratum_for(row: TableRow) -> Option<&'static Erratum> {
    let norm = |b: Bucket| if b.top() { Bucket::TwoThirdsThreeQuarters } else { b };
    ERRATA
        .iter()
        .find(|e| norm(e.row.bucket) == norm(row.bucket) && e.row.upper_angle == row.upper_angle && e.row.a1_odd == row.a1_odd)
}
