//! Lattice diagrams: degree across, pole order at the primary point up.
//! Generators are filled dots (with their type letter when known), other
//! basis elements open dots, forbidden pole orders crosses, and the region's
//! boundary rays are drawn at the divisor's slopes.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::explorer::{CandidateType, ConjectureReport};
use crate::monoid::{self, LatticePoint};
use crate::presentation::generators_one_point;
use crate::rational::Rational;

/// Layout constants, in SVG user units.
mod layout {
    pub const UNIT: f64 = 28.0;
    pub const MARGIN: f64 = 36.0;
    pub const DOT: f64 = 5.0;
    pub const CROSS: f64 = 4.0;
    pub const FONT: f64 = 11.0;
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mark", rename_all = "lowercase")]
pub enum Mark {
    Generator { label: Option<char> },
    Element,
    Excluded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramPoint {
    pub degree: i64,
    pub pole: i64,
    #[serde(flatten)]
    pub mark: Mark,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDiagram {
    pub title: String,
    pub d_max: i64,
    pub c_max: i64,
    /// Boundary rays through the origin.
    pub slopes: Vec<Rational>,
    pub points: Vec<DiagramPoint>,
}

impl LatticeDiagram {
    pub fn mark_at(&self, d: i64, c: i64) -> Option<&Mark> {
        self.points.iter().find(|p| p.degree == d && p.pole == c).map(|p| &p.mark)
    }

    pub fn generators(&self) -> Vec<(i64, i64, Option<char>)> {
        self.points
            .iter()
            .filter_map(|p| match p.mark {
                Mark::Generator { label } => Some((p.degree, p.pole, label)),
                _ => None,
            })
            .collect()
    }

    fn push(&mut self, degree: i64, pole: i64, mark: Mark) {
        if self.mark_at(degree, pole).is_none() {
            self.points.push(DiagramPoint { degree, pole, mark });
        }
    }

    fn finish(mut self) -> Self {
        self.points.sort_by_key(|p| (p.degree, p.pole));
        self
    }

    pub fn to_svg(&self) -> String {
        use layout::*;
        let w = 2.0 * MARGIN + UNIT * self.d_max as f64;
        let h = 2.0 * MARGIN + UNIT * self.c_max as f64;
        let x = |d: f64| MARGIN + UNIT * d;
        let y = |c: f64| h - MARGIN - UNIT * c;
        let mut s = String::new();
        let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
        let _ = writeln!(s, r#"<title>{}</title>"#, escape(&self.title));
        let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
        let _ = writeln!(s, r##"<g stroke="#ddd" stroke-width="0.5">"##);
        for d in 0..=self.d_max {
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(d as f64), y(0.0), x(d as f64), y(self.c_max as f64));
        }
        for c in 0..=self.c_max {
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, x(0.0), y(c as f64), x(self.d_max as f64), y(c as f64));
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="{FONT}" fill="black">"#);
        for d in 0..=self.d_max {
            let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="middle">{d}</text>"#, x(d as f64), y(0.0) + 2.0 * FONT);
        }
        for c in 0..=self.c_max {
            let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{c}</text>"#, x(0.0) - FONT, y(c as f64) + FONT / 3.0);
        }
        let _ = writeln!(s, "</g>");
        for a in &self.slopes {
            let v = a.numer() as f64 / a.denom() as f64;
            let (d_end, c_end) = if v * self.d_max as f64 > self.c_max as f64 {
                (self.c_max as f64 / v, self.c_max as f64)
            } else {
                (self.d_max as f64, v * self.d_max as f64)
            };
            let _ = writeln!(
                s,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#36c" stroke-width="1.2"><title>slope {a}</title></line>"##,
                x(0.0),
                y(0.0),
                x(d_end),
                y(c_end)
            );
        }
        for p in &self.points {
            let (cx, cy) = (x(p.degree as f64), y(p.pole as f64));
            match p.mark {
                Mark::Generator { label } => {
                    let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="{DOT}" fill="black"/>"#);
                    if let Some(l) = label {
                        let _ = writeln!(
                            s,
                            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="{FONT}">{l}</text>"#,
                            cx + DOT + 1.0,
                            cy - DOT - 1.0
                        );
                    }
                }
                Mark::Element => {
                    let _ = writeln!(s, r#"<circle cx="{cx}" cy="{cy}" r="{DOT}" fill="white" stroke="black"/>"#);
                }
                Mark::Excluded => {
                    let _ = writeln!(
                        s,
                        r#"<path d="M{} {}L{} {}M{} {}L{} {}" stroke="black" stroke-width="1.2"/>"#,
                        cx - CROSS,
                        cy - CROSS,
                        cx + CROSS,
                        cy + CROSS,
                        cx - CROSS,
                        cy + CROSS,
                        cx + CROSS,
                        cy - CROSS
                    );
                }
            }
        }
        let _ = writeln!(s, "</svg>");
        s
    }

    /// Text rendering: a letter or `*` for generators, `o` for other
    /// elements, `x` for forbidden points, `.` elsewhere.
    pub fn to_ascii(&self) -> String {
        let mut s = format!("{}\n", self.title);
        let width = self.c_max.to_string().len();
        for c in (0..=self.c_max).rev() {
            let _ = write!(s, "{c:>width$} |");
            for d in 0..=self.d_max {
                let ch = match self.mark_at(d, c) {
                    Some(Mark::Generator { label: Some(l) }) => *l,
                    Some(Mark::Generator { label: None }) => '*',
                    Some(Mark::Element) => 'o',
                    Some(Mark::Excluded) => 'x',
                    None => '.',
                };
                let _ = write!(s, " {ch}");
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{:>width$} +{}", "", "-".repeat(2 * (self.d_max as usize + 1)));
        let _ = write!(s, "{:>width$}  ", "");
        for d in 0..=self.d_max {
            let _ = write!(s, "{:<2}", d % 10);
        }
        s.push('\n');
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// The one-point diagram of `α·P` up to degree `d_max`, from the lattice
/// monoid and the closed-form generators.
pub fn one_point_diagram(alpha: Rational, d_max: i64) -> Result<LatticeDiagram> {
    let mut dg = LatticeDiagram {
        title: format!("D = {alpha}·P, degrees ≤ {d_max}"),
        d_max,
        c_max: alpha.floor_mul(d_max).max(1),
        slopes: vec![alpha],
        points: Vec::new(),
    };
    for g in generators_one_point(alpha)?.iter().filter(|g| g.degree <= d_max) {
        let l = g.label.to_string().chars().next();
        dg.push(g.lattice.d, g.lattice.c, Mark::Generator { label: l });
    }
    for d in 0..=d_max {
        for c in 0..=alpha.floor_mul(d) {
            if monoid::contains(alpha, LatticePoint { d, c }) {
                dg.push(d, c, Mark::Element);
            } else if c == 1 {
                dg.push(d, c, Mark::Excluded);
            }
        }
    }
    Ok(dg.finish())
}

/// The diagram of an ineffective run: computed generators, labeled with the
/// candidate type the report's reading assigns to the same point; basis
/// elements; and crosses at the forbidden pole order `⌈dα2⌉`.
pub fn ineffective_diagram(r: &ConjectureReport) -> LatticeDiagram {
    let c_max = r.basis_poles.iter().flatten().copied().max().unwrap_or(0).max(r.alpha1.floor_mul(r.d_max).min(4 * r.d_max)).max(1);
    let mut dg = LatticeDiagram {
        title: format!("D = {}·P1 − {}·P2, degrees ≤ {}", r.alpha1, r.alpha2, r.d_max),
        d_max: r.d_max,
        c_max,
        slopes: vec![r.alpha1, r.alpha2],
        points: Vec::new(),
    };
    for &(d, o1, _) in &r.generators {
        let c = (-o1).max(0);
        let label = r.candidates.iter().find(|x| x.degree == d && x.pole == c).map(|x| match x.kind {
            CandidateType::A => 'a',
            CandidateType::B => 'b',
            CandidateType::C => 'c',
        });
        dg.push(d, c, Mark::Generator { label });
    }
    for (d, poles) in r.basis_poles.iter().enumerate() {
        for &c in poles {
            dg.push(d as i64, c, Mark::Element);
        }
    }
    for d in 1..=r.d_max {
        let c = r.alpha2.ceil_mul(d);
        if c <= r.alpha1.floor_mul(d) {
            dg.push(d, c, Mark::Excluded);
        }
    }
    dg.finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weierstrass_picture() {
        let dg = one_point_diagram("1".parse().unwrap(), 5).unwrap();
        assert_eq!(dg.generators(), vec![(1, 0, Some('a')), (2, 2, Some('b')), (3, 3, Some('c'))]);
        for d in 1..=5 {
            assert_eq!(dg.mark_at(d, 1), Some(&Mark::Excluded));
        }
        assert_eq!(dg.mark_at(4, 4), Some(&Mark::Element));
        let svg = dg.to_svg();
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches(r#"fill="black"/>"#).count(), 3);
        let ascii = dg.to_ascii();
        assert!(ascii.contains("x"), "{ascii}");
    }

    #[test]
    fn five_halves_panel() {
        let dg = one_point_diagram("5/2".parse().unwrap(), 4).unwrap();
        let g: Vec<_> = dg.generators().into_iter().map(|(d, c, _)| (d, c)).collect();
        assert_eq!(g, vec![(1, 0), (1, 2), (2, 3), (2, 5)]);
    }
}
