//! Acceptance run: one PASS/FAIL line per criterion, exact comparisons only.
//! Built with `harness = false` so the lines appear in `cargo test` output.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use section_ring::curve::{Curve, Point, RationalFunction};
use section_ring::curve_oracle::{realize, CurveOracle};
use section_ring::divisor::{
    divisor_of_rf, effective_basis, is_in_riemann_roch, riemann_roch_space, t_function, w_function, Divisor,
};
use section_ring::explorer::{conjecture_check, frobenius_dimension, ConjectureReading, ConjectureReport, FrobeniusInstance};
use section_ring::field::{Field, Q};
use section_ring::local::order_at_rf;
use section_ring::monoid::{contains, LatticePoint, MonoidTables};
use section_ring::order::TermOrder;
use section_ring::presentation::{generators_one_point, present_one_point, present_two_point};
use section_ring::section::{graded_piece, hilbert_dim, minimal_relation_profile, QDivisor, SectionRing};
use section_ring::table::{
    angle_coords, closed_form_min_decomposition, decomposition_points, decomposition_sum, erratum_for, table_row,
    TableVariant, ERRATA,
};
use section_ring::verify::{point_monomial, MonoidOracle, PresentationOracle};
use section_ring::Rational;

type E = <Q as Field>::E;
type Outcome = Result<String, String>;

/// Criteria that fail for reasons recorded in the ledger. Any other failure,
/// or one of these starting to pass, fails the run.
const KNOWN_FAILURES: [usize; 1] = [2];

const BIN: &str = env!("CARGO_BIN_EXE_section-ring");

fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Duration, limit: Duration) -> Result<(), String> {
    ensure(t < limit, format!("took {:.2?}, limit {:.0?}", t, limit))
}

/// State shared between criteria: the graded pieces seen, for the invariant
/// checks at the end.
#[derive(Default)]
struct Runs {
    /// (one-point α, pole orders per degree)
    one_point: Vec<(Rational, Vec<Vec<i64>>)>,
    /// (description, divisor, degree bound) of every curve run
    divisors: Vec<(String, QDivisor<E>, i64)>,
    ineffective: Vec<ConjectureReport>,
}

fn setup() -> (Curve<Q>, Point<E>, Point<E>) {
    let c = Curve::default_q();
    let p2 = c.point(Q.zero(), Q.zero()).unwrap();
    (c, Point::Inf, p2)
}

fn criterion_1(runs: &mut Runs) -> Outcome {
    let t = Instant::now();
    let out = Command::new(BIN).args(["verify", "--alpha", "1", "--max-degree", "12"]).env_remove("SECTION_RING_FIELD").output().map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), format!("verify exited with {:?}", out.status.code()))?;

    let (c, p1, _) = setup();
    let p = present_one_point(r("1")).map_err(|e| e.to_string())?;
    let dv = QDivisor::one_point(p1.clone(), r("1"));
    let ring = SectionRing::new(&c, &dv, 12).map_err(|e| e.to_string())?;
    let prof = ring.generator_profile().map_err(|e| e.to_string())?;
    ensure(prof.degrees() == vec![1, 2, 3], format!("generator degrees {:?}", prof.degrees()))?;
    let gens: Vec<(i64, RationalFunction<E>)> =
        p.generators.iter().map(|g| Ok((g.degree, realize(&c, &p1, None, g.function_kind)?))).collect::<Result<_, section_ring::Error>>().map_err(|e| e.to_string())?;
    let rel = minimal_relation_profile(&ring, &gens, p.order.as_ref() as &dyn TermOrder).map_err(|e| e.to_string())?;
    let minimal: Vec<_> = rel.leaders.iter().filter(|l| l.minimal).collect();
    ensure(rel.minimal_total() == 1 && minimal.len() == 1, format!("{} minimal relations", rel.minimal_total()))?;
    let lead = p.monomial_symbol(&minimal[0].monomial);
    ensure(lead == "fc^2" && minimal[0].degree == 6, format!("leader {lead} in degree {}", minimal[0].degree))?;
    let el = t.elapsed();
    within(el, Duration::from_secs(1))?;
    runs.one_point.push((r("1"), ring.pieces().iter().map(|b| b.poles()).collect()));
    runs.divisors.push(("1·O".into(), dv, 12));
    Ok(format!("degrees {{1,2,3}}, one minimal relation f_c² (= y² on the curve) in degree 6, CLI exit 0; {el:.2?}"))
}

/// One-point panels: α, labeled generators, and the highest drawn pole order per
/// degree 1..=4.
const PANELS: [(&str, &[(i64, i64, char)], [i64; 4]); 6] = [
    ("7/5", &[(1, 0, 'a'), (2, 2, 'b'), (3, 3, 'c'), (3, 4, 'a'), (4, 5, 'd')], [1, 2, 4, 5]),
    ("8/5", &[(1, 0, 'a'), (2, 2, 'b'), (2, 3, 'a'), (3, 4, 'd')], [1, 3, 4, 6]),
    ("9/5", &[(1, 0, 'a'), (2, 2, 'b'), (2, 3, 'a'), (3, 4, 'd'), (3, 5, 'a')], [1, 3, 5, 6]),
    ("9/4", &[(1, 0, 'a'), (1, 2, 'a'), (2, 3, 'c')], [2, 4, 6, 8]),
    ("11/4", &[(1, 0, 'a'), (1, 2, 'a'), (2, 3, 'c'), (2, 5, 'a')], [2, 5, 8, 8]),
    ("4", &[(1, 0, 'a'), (1, 2, 'a'), (1, 3, 'a'), (1, 4, 'a')], [4, 8, 8, 8]),
];

fn panel_generators(a: &str, cap: [i64; 4]) -> Result<BTreeSet<(i64, i64, char)>, String> {
    Ok(generators_one_point(r(a))
        .map_err(|e| e.to_string())?
        .iter()
        .filter(|g| (1..=4).contains(&g.lattice.d) && g.lattice.c <= cap[g.lattice.d as usize - 1])
        .map(|g| (g.lattice.d, g.lattice.c, g.label.to_string().chars().next().unwrap()))
        .collect())
}

fn criterion_2(_: &mut Runs) -> Outcome {
    let t = Instant::now();
    let mut bad = Vec::new();
    for (a, want, cap) in PANELS {
        let got = panel_generators(a, cap)?;
        let want: BTreeSet<_> = want.iter().copied().collect();
        if got != want {
            bad.push(format!("α = {a}: extra {:?}, missing {:?}", got.difference(&want).collect::<Vec<_>>(), want.difference(&got).collect::<Vec<_>>()));
        }
    }
    // the same panel at an α below 8/3, where (3, 8) is outside M
    let (_, want, cap) = PANELS[4];
    let alt = panel_generators("13/5", cap)? == want.iter().copied().collect();
    let el = t.elapsed();
    within(el, Duration::from_secs(1))?;
    if bad.is_empty() {
        Ok(format!("6 panels, labeled dots equal inside each drawn window; {el:.2?}"))
    } else {
        Err(format!("{}; the panel draws (3, 8) open, a generator for every α ≥ 8/3 in it (13/5 in the same panel matches: {alt})", bad.join("; ")))
    }
}

fn criterion_3(_: &mut Runs) -> Outcome {
    let t = Instant::now();
    let mut n = 0;
    for q in 1..=10 {
        for p in 1..=6 * q {
            let a = Rational::new(p, q);
            if a.denom() != q {
                continue;
            }
            let v = MonoidOracle.verify(&present_one_point(a).map_err(|e| e.to_string())?, None).map_err(|e| e.to_string())?;
            ensure(v.is_match(), format!("α = {a}: {:?}", v.diffs))?;
            n += 1;
        }
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(60))?;
    Ok(format!("{n} values of α, generators and leaders with minimality equal to the monoid oracle; {el:.2?}"))
}

fn criterion_4(_: &mut Runs) -> Outcome {
    let t = Instant::now();
    let mut checked = 0;
    let mut printed_bad = BTreeSet::new();
    for a in ["1", "4/11", "3/2", "2", "3", "4"] {
        let alpha = r(a);
        let tabs = MonoidTables::build(alpha, 20).map_err(|e| e.to_string())?;
        for d in 1..=20 {
            for c in 0..=alpha.floor_mul(d) {
                let p = LatticePoint::new(d, c);
                if !contains(alpha, p) || angle_coords(alpha, p).is_err() {
                    continue;
                }
                let dec = closed_form_min_decomposition(alpha, p, TableVariant::Corrected).map_err(|e| e.to_string())?;
                let closed = decomposition_points(alpha, &dec).map_err(|e| e.to_string())?;
                let brute = point_monomial(&tabs.gens, tabs.minimal_decomposition(p).map_err(|e| e.to_string())?);
                ensure(closed == brute, format!("α = {a}, {p}: closed form {closed:?}, brute force {brute:?}"))?;
                checked += 1;
                let printed_ok = closed_form_min_decomposition(alpha, p, TableVariant::Printed)
                    .ok()
                    .and_then(|dec| decomposition_points(alpha, &dec).ok())
                    .is_some_and(|pts| decomposition_sum(&pts) == p);
                if !printed_ok {
                    let row = table_row(alpha, p).map_err(|e| e.to_string())?;
                    ensure(erratum_for(row).is_some(), format!("printed table fails at α = {a}, {p} outside the known errata"))?;
                    printed_bad.insert(format!("{:?}", erratum_for(row).map(|e| e.row)));
                }
            }
        }
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(10))?;
    ensure(printed_bad.len() == ERRATA.len(), format!("errata hit: {printed_bad:?}"))?;
    Ok(format!("{checked} points agree with brute force; printed table wrong exactly where the {} recorded errata say; {el:.2?}", ERRATA.len()))
}

fn criterion_5(runs: &mut Runs) -> Outcome {
    let t = Instant::now();
    let (_, p1, p2) = setup();
    let o = CurveOracle::default_over(Q).map_err(|e| e.to_string())?;
    let pairs = [("1", "1"), ("1", "1/2"), ("2", "1/2"), ("3/2", "3/2"), ("5/2", "1/3"), ("2", "2/3")];
    for (a1, a2) in pairs {
        let p = present_two_point(r(a1), r(a2)).map_err(|e| e.to_string())?;
        let v = o.verify(&p, Some(16)).map_err(|e| e.to_string())?;
        ensure(v.is_match(), format!("({a1}, {a2}): {:?}", v.diffs))?;
        let dv = QDivisor::two_point(p1.clone(), r(a1), p2.clone(), r(a2)).map_err(|e| e.to_string())?;
        runs.divisors.push((format!("{a1}·O + {a2}·(0,0)"), dv, 16));
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(120))?;
    Ok(format!("6 pairs at degree ≤ 16: generators and Gröbner leaders match the curve; {el:.2?}"))
}

fn criterion_6(runs: &mut Runs) -> Outcome {
    let t = Instant::now();
    let (c, _, g) = setup();
    let mut pieces = 0;
    for (name, dv, d_max) in &runs.divisors {
        for d in 0..=*d_max {
            let b = graded_piece(&c, dv, d).map_err(|e| e.to_string())?;
            let h = hilbert_dim(&c, dv, d).map_err(|e| e.to_string())?;
            ensure(b.dim() == h, format!("{name}, degree {d}: basis {} vs Riemann–Roch {h}", b.dim()))?;
            pieces += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let multiples: Vec<Point<E>> = (1..=4).map(|k| c.scalar_mul(k, &g).unwrap()).collect();
    for _ in 0..50 {
        let a1 = rng.gen_range(0..=12i64);
        let a2 = rng.gen_range(0..=12 - a1);
        let (a1, a2) = if a1 + a2 == 0 { (1, 0) } else { (a1, a2) };
        let i = rng.gen_range(0..=multiples.len());
        let p1 = if i == multiples.len() { Point::Inf } else { multiples[i].clone() };
        let p2 = loop {
            let q = multiples[rng.gen_range(0..multiples.len())].clone();
            if q != p1 {
                break q;
            }
        };
        let d = Divisor::from_terms([(p1.clone(), a1), (p2.clone(), a2)]);
        let rr = riemann_roch_space(&c, &d).map_err(|e| e.to_string())?;
        ensure(rr.len() as i64 == a1 + a2, format!("L({a1}P1 + {a2}P2) has dimension {}", rr.len()))?;
        let basis = effective_basis(&c, a1, a2, &p1, &p2).map_err(|e| e.to_string())?;
        ensure(basis.len() as i64 == a1 + a2, "basis length")?;
        let mut want = vec![(0, 0)];
        if a1 > 0 && a2 > 0 {
            want.push((-1, -1));
        }
        want.extend((2..=a1).map(|k| (-k, k - 1)));
        want.extend((2..=a2).map(|k| (k - 1, -k)));
        let mut seen = BTreeSet::new();
        for (f, w) in basis.iter().zip(&want) {
            ensure(is_in_riemann_roch(&c, f, &d).map_err(|e| e.to_string())?, "basis function outside L(D)")?;
            let got = (order_at_rf(&c, f, &p1).map_err(|e| e.to_string())?, order_at_rf(&c, f, &p2).map_err(|e| e.to_string())?);
            ensure(got == *w, format!("{a1}P1 + {a2}P2: orders {got:?}, pattern {w:?}"))?;
            seen.insert(got.0);
        }
        ensure(seen.len() == basis.len(), "orders at P1 not distinct")?;
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(30))?;
    Ok(format!("{pieces} graded pieces equal Riemann–Roch; 50 random effective divisors have the 1, w, t_k pattern; {el:.2?}"))
}

fn explore_degrees(field: &str) -> Result<(Vec<i64>, Duration), String> {
    let t = Instant::now();
    let out = Command::new(BIN)
        .args(["--field", field, "explore", "--alpha1", "2/3", "--alpha2", "3/5", "--max-degree", "40", "--json"])
        .output()
        .map_err(|e| e.to_string())?;
    let el = t.elapsed();
    ensure(out.status.success(), format!("explore exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)))?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let degs = v["conjecture"]["generator_degrees"].as_array().ok_or("no degree list")?.iter().map(|d| d.as_i64().unwrap()).collect();
    Ok((degs, el))
}

fn criterion_7(runs: &mut Runs) -> Outcome {
    let want = vec![15, 18, 20, 21, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32, 33, 34, 35, 37];
    let (q, tq) = explore_degrees("q")?;
    ensure(q == want, format!("rational mode: {q:?}"))?;
    within(tq, Duration::from_secs(300))?;
    let (fp, tf) = explore_degrees("fp:32003")?;
    ensure(fp == want, format!("prime-field mode: {fp:?}"))?;
    within(tf, Duration::from_secs(60))?;
    let (c, p1, p2) = setup();
    for (a1, a2, d) in [("2/3", "3/5", 40), ("13/5", "1/7", 14), ("4", "1", 8)] {
        let rep = conjecture_check(&c, &p1, &p2, r(a1), r(a2), d, ConjectureReading::literal()).map_err(|e| e.to_string())?;
        let dv = QDivisor::two_point(p1.clone(), r(a1), p2.clone(), -r(a2)).map_err(|e| e.to_string())?;
        runs.divisors.push((format!("{a1}·O − {a2}·(0,0)"), dv, d));
        runs.ineffective.push(rep);
    }
    Ok(format!("degrees {{15,18,20,21,23,…,35,37}} in both fields; ℚ {tq:.2?}, F_32003 {tf:.2?}"))
}

fn criterion_8(_: &mut Runs) -> Outcome {
    let t = Instant::now();
    let (c, p1, p2) = setup();
    let mut checked = 0;
    let mut b_bad = Vec::new();
    for (p, q) in [(2, 3), (3, 5), (2, 5), (3, 4), (4, 5)] {
        let inst = FrobeniusInstance::new(p, q).map_err(|e| e.to_string())?;
        let (a1, a2) = inst.alphas();
        let dv = QDivisor::two_point(p1.clone(), a1, p2.clone(), -a2).map_err(|e| e.to_string())?;
        for d in p * q..2 * p * q {
            let f = frobenius_dimension(inst, d).map_err(|e| e.to_string())?;
            let h = hilbert_dim(&c, &dv, d).map_err(|e| e.to_string())? as i64;
            ensure(f.count == h && f.matches_a(), format!("(p,q) = ({p},{q}), d = {d}: count {}, h⁰ {h}, formula {}", f.count, f.formula_a))?;
            if !f.matches_b() {
                b_bad.push((p, q, d));
            }
            checked += 1;
        }
        ensure(b_bad.contains(&(p, q, p * q)), format!("printed formula not flagged at d = pq for ({p},{q})"))?;
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(10))?;
    Ok(format!(
        "{checked} degrees: count = h⁰ = ⌊ad/p⌋ − ⌈bd/q⌉; printed \"− 1\" form wrong at d = pq for all 5 and at {} degrees overall; {el:.2?}",
        b_bad.len()
    ))
}

fn criterion_9(runs: &mut Runs) -> Outcome {
    let (c, p1, _) = setup();
    for (a, _, _) in PANELS {
        let ring = SectionRing::new(&c, &QDivisor::one_point(p1.clone(), r(a)), 6).map_err(|e| e.to_string())?;
        runs.one_point.push((r(a), ring.pieces().iter().map(|b| b.poles()).collect()));
    }
    let mut pieces = 0;
    for (a, poles) in &runs.one_point {
        for (d, ps) in poles.iter().enumerate() {
            ensure(!ps.contains(&1), format!("α = {a}, degree {d}: pole order 1"))?;
            pieces += 1;
        }
    }
    for rep in &runs.ineffective {
        ensure(rep.excluded_pole_violations.is_empty(), format!("{}, {}: {:?}", rep.alpha1, rep.alpha2, rep.excluded_pole_violations))?;
        for (d, ps) in rep.basis_poles.iter().enumerate().skip(1) {
            ensure(!ps.contains(&rep.alpha2.ceil_mul(d as i64)), format!("{}, {}: degree {d}", rep.alpha1, rep.alpha2))?;
            pieces += 1;
        }
    }
    Ok(format!("{pieces} graded pieces from {} one-point and {} ineffective runs, no forbidden pole order", runs.one_point.len(), runs.ineffective.len()))
}

fn expected_t_divisor(c: &Curve<Q>, p1: &Point<E>, p2: &Point<E>, k: i64) -> Divisor<E> {
    // −k(P1) + (k − 1)(P2) + (P3), the third point fixed by the group law
    let s = c.group_add(&c.scalar_mul(-k, p1).unwrap(), &c.scalar_mul(k - 1, p2).unwrap()).unwrap();
    let p3 = c.group_neg(&s).unwrap();
    let mut d = Divisor::from_terms([(p1.clone(), -k), (p2.clone(), k - 1)]);
    d.add_term(p3, 1);
    d
}

fn criterion_10(_: &mut Runs) -> Outcome {
    let t = Instant::now();
    let (c, p1, p2) = setup();
    let mut pool: Vec<RationalFunction<E>> = Vec::new();
    for k in (-6..=6).filter(|k| *k != 0 && *k != 1) {
        let f = t_function(&c, &p1, &p2, k).map_err(|e| e.to_string())?;
        let div = divisor_of_rf(&c, &f).map_err(|e| e.to_string())?;
        ensure(div == expected_t_divisor(&c, &p1, &p2, k), format!("div t_{k}^(1) = {}", c.render_divisor(&div)))?;
        // the same divisor read from the second point: t_{1−k}^(2)
        ensure(div == expected_t_divisor(&c, &p2, &p1, 1 - k), format!("t_{k}^(1) and t_{}^(2) differ", 1 - k))?;
        pool.push(f);
    }
    pool.push(w_function(&c, &p1, &p2).map_err(|e| e.to_string())?);
    pool.push(c.rf(c.func_x()));
    pool.push(c.rf(c.func_y()));
    // zeros at rational points only, so divisors are defined over ℚ
    pool.push(c.rf(c.func_add(&c.func_y(), &c.func_const(Q.one()))));
    pool.push(c.rf(c.func_add(&c.func_x(), &c.func_const(Q.one()))));
    let g = c.point(Q.zero(), Q.zero()).unwrap();
    let probes: Vec<Point<E>> = [-2, 2, 3].iter().map(|&k| c.scalar_mul(k, &g).unwrap()).chain([p1.clone(), p2.clone()]).collect();

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..200 {
        let f = &pool[rng.gen_range(0..pool.len())];
        let h = &pool[rng.gen_range(0..pool.len())];
        let fh = c.rf_mul(f, h);
        let (df, dh, dfh) = (
            divisor_of_rf(&c, f).map_err(|e| e.to_string())?,
            divisor_of_rf(&c, h).map_err(|e| e.to_string())?,
            divisor_of_rf(&c, &fh).map_err(|e| e.to_string())?,
        );
        ensure(dfh == df.add(&dh), "div(fg) ≠ div f + div g")?;
        ensure(dfh.degree() == 0, format!("degree {}", dfh.degree()))?;
        ensure(c.divisor_sum(&dfh).map_err(|e| e.to_string())?.is_inf(), "points of div(fg) do not sum to O")?;
        for p in &probes {
            let (a, b, ab) = (
                order_at_rf(&c, f, p).map_err(|e| e.to_string())?,
                order_at_rf(&c, h, p).map_err(|e| e.to_string())?,
                order_at_rf(&c, &fh, p).map_err(|e| e.to_string())?,
            );
            ensure(ab == a + b, format!("order at {}: {ab} ≠ {a} + {b}", c.render_point(p)))?;
        }
    }
    let el = t.elapsed();
    within(el, Duration::from_secs(30))?;
    Ok(format!("t_k^(1) ∝ t_(1−k)^(2) for |k| ≤ 6; 200 random products obey order additivity, degree 0 and sum O; {el:.2?}"))
}

fn main() {
    let criteria: [(&str, fn(&mut Runs) -> Outcome); 10] = [
        ("Weierstrass baseline", criterion_1),
        ("one-point figure panels", criterion_2),
        ("one-point closed form vs monoid", criterion_3),
        ("minimal decomposition table", criterion_4),
        ("two-point effective vs curve", criterion_5),
        ("Riemann–Roch consistency", criterion_6),
        ("ineffective degree list", criterion_7),
        ("Frobenius pattern", criterion_8),
        ("excluded pole orders", criterion_9),
        ("function-field laws", criterion_10),
    ];
    let mut runs = Runs::default();
    let mut failed = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f(&mut runs) {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg}", i + 1),
            Err(msg) => {
                failed.push(i + 1);
                println!("criterion {:>2} FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed.len());
    // a failure traced to the source figures; see the decisions ledger
    if failed != KNOWN_FAILURES {
        println!("acceptance: failures {failed:?} differ from the recorded set {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
}
