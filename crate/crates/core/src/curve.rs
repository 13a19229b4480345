//! Weierstrass curves `y² + a1·xy + a3·y = x³ + a2·x² + a4·x + a6`, their
//! points and group law, and the coordinate ring `k[x, y]` in the canonical
//! form `a(x) + b(x)·y`.

use std::fmt;

use crate::error::{domain, Error, Result};
use crate::field::{Field, Q};
use crate::poly::{self, Poly};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point<E> {
    Inf,
    Aff(E, E),
}

impl<E> Point<E> {
    pub fn is_inf(&self) -> bool {
        matches!(self, Point::Inf)
    }
}

#[derive(Clone, Debug)]
pub struct Curve<F: Field> {
    pub field: F,
    pub a1: F::E,
    pub a2: F::E,
    pub a3: F::E,
    pub a4: F::E,
    pub a6: F::E,
}

impl Curve<Q> {
    /// `y² + y = x³ − x`, of rank one with `(0,0)` generating.
    pub fn default_q() -> Self {
        Curve::from_ints(Q, [0, 0, 1, -1, 0]).expect("nonsingular")
    }
}

impl<F: Field> Curve<F> {
    pub fn new(field: F, a: [F::E; 5]) -> Result<Self> {
        let [a1, a2, a3, a4, a6] = a;
        let c = Curve { field, a1, a2, a3, a4, a6 };
        if c.field.is_zero(&c.discriminant()) {
            return domain("singular Weierstrass equation (zero discriminant)");
        }
        Ok(c)
    }

    pub fn from_ints(field: F, a: [i64; 5]) -> Result<Self> {
        let e = a.map(|n| field.from_i64(n));
        Curve::new(field, e)
    }

    /// Parses `"a1,a2,a3,a4,a6"`.
    pub fn parse(field: F, s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 5 {
            return Err(Error::Parse(format!("curve needs five coefficients a1,a2,a3,a4,a6, got {s:?}")));
        }
        let mut v = Vec::with_capacity(5);
        for p in parts {
            v.push(field.parse(p)?);
        }
        let a: [F::E; 5] = v.try_into().map_err(|_| Error::Parse("curve coefficients".into()))?;
        Curve::new(field, a)
    }

    pub fn render(&self) -> String {
        let f = &self.field;
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6].iter().map(|c| f.render(c)).collect::<Vec<_>>().join(",")
    }

    pub fn discriminant(&self) -> F::E {
        let f = &self.field;
        let i = |n| f.from_i64(n);
        let (a1, a2, a3, a4, a6) = (&self.a1, &self.a2, &self.a3, &self.a4, &self.a6);
        let b2 = f.add(&f.mul(a1, a1), &f.mul(&i(4), a2));
        let b4 = f.add(&f.mul(&i(2), a4), &f.mul(a1, a3));
        let b6 = f.add(&f.mul(a3, a3), &f.mul(&i(4), a6));
        let b8 = {
            let t1 = f.mul(&f.mul(a1, a1), a6);
            let t2 = f.mul(&i(4), &f.mul(a2, a6));
            let t3 = f.mul(&f.mul(a1, a3), a4);
            let t4 = f.mul(&f.mul(a2, a3), a3);
            let t5 = f.mul(a4, a4);
            f.sub(&f.sub(&f.add(&f.add(&t1, &t2), &t4), &t3), &t5)
        };
        // Δ = -b2²b8 - 8b4³ - 27b6² + 9b2b4b6
        let t1 = f.mul(&f.mul(&b2, &b2), &b8);
        let t2 = f.mul(&i(8), &f.mul(&b4, &f.mul(&b4, &b4)));
        let t3 = f.mul(&i(27), &f.mul(&b6, &b6));
        let t4 = f.mul(&i(9), &f.mul(&b2, &f.mul(&b4, &b6)));
        f.sub(&f.sub(&f.sub(&t4, &t1), &t2), &t3)
    }

    /// `x³ + a2x² + a4x + a6`
    pub fn rhs_poly(&self) -> Poly<F::E> {
        let f = &self.field;
        poly::trim(f, vec![self.a6.clone(), self.a4.clone(), self.a2.clone(), f.one()])
    }

    /// `a1·x + a3`
    pub fn lin_poly(&self) -> Poly<F::E> {
        poly::trim(&self.field, vec![self.a3.clone(), self.a1.clone()])
    }

    pub fn is_on(&self, p: &Point<F::E>) -> bool {
        match p {
            Point::Inf => true,
            Point::Aff(x, y) => {
                let f = &self.field;
                let lhs = f.add(&f.mul(y, y), &f.mul(y, &poly::eval(f, &self.lin_poly(), x)));
                f.is_zero(&f.sub(&lhs, &poly::eval(f, &self.rhs_poly(), x)))
            }
        }
    }

    pub fn point(&self, x: F::E, y: F::E) -> Result<Point<F::E>> {
        let p = Point::Aff(x, y);
        if !self.is_on(&p) {
            return domain(format!("{} is not on the curve", self.render_point(&p)));
        }
        Ok(p)
    }

    /// Parses `"x,y"`, `"(x,y)"` or `"O"`.
    pub fn parse_point(&self, s: &str) -> Result<Point<F::E>> {
        let s = s.trim();
        let s = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
        if s.eq_ignore_ascii_case("o") || s.eq_ignore_ascii_case("inf") {
            return Ok(Point::Inf);
        }
        let (x, y) = s.split_once(',').ok_or_else(|| Error::Parse(format!("point must be \"x,y\" or \"O\", got {s:?}")))?;
        self.point(self.field.parse(x)?, self.field.parse(y)?)
    }

    pub fn render_point(&self, p: &Point<F::E>) -> String {
        match p {
            Point::Inf => "O".into(),
            Point::Aff(x, y) => format!("({},{})", self.field.render(x), self.field.render(y)),
        }
    }

    fn check(&self, p: &Point<F::E>) -> Result<()> {
        if self.is_on(p) {
            Ok(())
        } else {
            domain(format!("{} is not on the curve", self.render_point(p)))
        }
    }

    /// `∂F/∂y = 2y + a1x + a3`
    pub fn f_y(&self, x: &F::E, y: &F::E) -> F::E {
        let f = &self.field;
        f.add(&f.add(y, y), &poly::eval(f, &self.lin_poly(), x))
    }

    pub fn neg(&self, p: &Point<F::E>) -> Point<F::E> {
        match p {
            Point::Inf => Point::Inf,
            Point::Aff(x, y) => {
                let f = &self.field;
                Point::Aff(x.clone(), f.neg(&f.add(y, &poly::eval(f, &self.lin_poly(), x))))
            }
        }
    }

    pub fn group_neg(&self, p: &Point<F::E>) -> Result<Point<F::E>> {
        self.check(p)?;
        Ok(self.neg(p))
    }

    fn add_unchecked(&self, p: &Point<F::E>, q: &Point<F::E>) -> Point<F::E> {
        let f = &self.field;
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Inf, _) => return q.clone(),
            (_, Point::Inf) => return p.clone(),
            (Point::Aff(x1, y1), Point::Aff(x2, y2)) => (x1, y1, x2, y2),
        };
        let lambda = if x1 == x2 {
            if *q == self.neg(p) {
                return Point::Inf;
            }
            // tangent: (3x² + 2a2x + a4 - a1y) / (2y + a1x + a3)
            let num = f.sub(
                &f.add(&f.add(&f.mul(&f.from_i64(3), &f.mul(x1, x1)), &f.mul(&f.from_i64(2), &f.mul(&self.a2, x1))), &self.a4),
                &f.mul(&self.a1, y1),
            );
            f.div(&num, &self.f_y(x1, y1)).expect("non-2-torsion doubling")
        } else {
            f.div(&f.sub(y2, y1), &f.sub(x2, x1)).expect("distinct x")
        };
        let nu = f.sub(y1, &f.mul(&lambda, x1));
        let x3 = f.sub(&f.sub(&f.sub(&f.add(&f.mul(&lambda, &lambda), &f.mul(&self.a1, &lambda)), &self.a2), x1), x2);
        let y3 = f.sub(&f.sub(&f.neg(&f.mul(&f.add(&lambda, &self.a1), &x3)), &nu), &self.a3);
        Point::Aff(x3, y3)
    }

    pub fn group_add(&self, p: &Point<F::E>, q: &Point<F::E>) -> Result<Point<F::E>> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn scalar_mul(&self, n: i64, p: &Point<F::E>) -> Result<Point<F::E>> {
        self.check(p)?;
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = Point::Inf;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// The least `n ≤ bound` with `n·P = O`, if any.
    pub fn torsion_order_up_to(&self, p: &Point<F::E>, bound: u32) -> Result<Option<u32>> {
        self.check(p)?;
        if p.is_inf() {
            return domain("torsion test needs a point other than O");
        }
        let mut acc = p.clone();
        for n in 1..=bound {
            if acc.is_inf() {
                return Ok(Some(n));
            }
            acc = self.add_unchecked(&acc, p);
        }
        Ok(None)
    }

    pub fn is_torsion_up_to(&self, p: &Point<F::E>, bound: u32) -> Result<bool> {
        Ok(self.torsion_order_up_to(p, bound)?.is_some())
    }

    pub fn is_two_torsion(&self, p: &Point<F::E>) -> bool {
        *p == self.neg(p)
    }

    /// Points with the given x-coordinate that are defined over the field.
    pub fn points_over_x(&self, x: &F::E) -> Vec<Point<F::E>> {
        let f = &self.field;
        // y² + B y - C = 0
        let b = poly::eval(f, &self.lin_poly(), x);
        let c = poly::eval(f, &self.rhs_poly(), x);
        let disc = f.add(&f.mul(&b, &b), &f.mul(&f.from_i64(4), &c));
        let two_inv = f.inv(&f.from_i64(2)).expect("characteristic is not 2");
        match f.sqrt(&disc) {
            None => Vec::new(),
            Some(s) => {
                let y1 = f.mul(&f.sub(&s, &b), &two_inv);
                let y2 = f.mul(&f.sub(&f.neg(&s), &b), &two_inv);
                let mut v = vec![Point::Aff(x.clone(), y1.clone())];
                if y2 != y1 {
                    v.push(Point::Aff(x.clone(), y2));
                }
                v
            }
        }
    }

    // ---- coordinate ring ----

    pub fn func_const(&self, c: F::E) -> CurveFunction<F::E> {
        CurveFunction { a: poly::constant(&self.field, c), b: Vec::new() }
    }

    pub fn func_x(&self) -> CurveFunction<F::E> {
        CurveFunction { a: vec![self.field.zero(), self.field.one()], b: Vec::new() }
    }

    pub fn func_y(&self) -> CurveFunction<F::E> {
        CurveFunction { a: Vec::new(), b: vec![self.field.one()] }
    }

    /// `x^i` or `x^i·y`
    pub fn func_monomial(&self, i: usize, with_y: bool) -> CurveFunction<F::E> {
        let f = &self.field;
        let mut m = vec![f.zero(); i + 1];
        m[i] = f.one();
        if with_y {
            CurveFunction { a: Vec::new(), b: m }
        } else {
            CurveFunction { a: m, b: Vec::new() }
        }
    }

    pub fn func_poly_x(&self, p: Poly<F::E>) -> CurveFunction<F::E> {
        CurveFunction { a: poly::trim(&self.field, p), b: Vec::new() }
    }

    pub fn func_add(&self, g: &CurveFunction<F::E>, h: &CurveFunction<F::E>) -> CurveFunction<F::E> {
        let f = &self.field;
        CurveFunction { a: poly::add(f, &g.a, &h.a), b: poly::add(f, &g.b, &h.b) }
    }

    pub fn func_sub(&self, g: &CurveFunction<F::E>, h: &CurveFunction<F::E>) -> CurveFunction<F::E> {
        let f = &self.field;
        CurveFunction { a: poly::sub(f, &g.a, &h.a), b: poly::sub(f, &g.b, &h.b) }
    }

    pub fn func_scale(&self, g: &CurveFunction<F::E>, c: &F::E) -> CurveFunction<F::E> {
        let f = &self.field;
        CurveFunction { a: poly::scale(f, &g.a, c), b: poly::scale(f, &g.b, c) }
    }

    /// Product, reduced with `y² = rhs(x) − (a1x + a3)·y`.
    pub fn func_mul(&self, g: &CurveFunction<F::E>, h: &CurveFunction<F::E>) -> CurveFunction<F::E> {
        let f = &self.field;
        let bb = poly::mul(f, &g.b, &h.b);
        let a = poly::add(f, &poly::mul(f, &g.a, &h.a), &poly::mul(f, &bb, &self.rhs_poly()));
        let cross = poly::add(f, &poly::mul(f, &g.a, &h.b), &poly::mul(f, &g.b, &h.a));
        let b = poly::sub(f, &cross, &poly::mul(f, &bb, &self.lin_poly()));
        CurveFunction { a, b }
    }

    pub fn func_pow(&self, g: &CurveFunction<F::E>, e: u32) -> CurveFunction<F::E> {
        let mut acc = self.func_const(self.field.one());
        for _ in 0..e {
            acc = self.func_mul(&acc, g);
        }
        acc
    }

    /// Image under the negation map: `y ↦ −y − a1x − a3`.
    pub fn func_conj(&self, g: &CurveFunction<F::E>) -> CurveFunction<F::E> {
        let f = &self.field;
        let a = poly::sub(f, &g.a, &poly::mul(f, &g.b, &self.lin_poly()));
        let b = poly::scale(f, &g.b, &f.from_i64(-1));
        CurveFunction { a, b }
    }

    /// `g · conj(g)`, a polynomial in `x`.
    pub fn func_norm(&self, g: &CurveFunction<F::E>) -> Poly<F::E> {
        let n = self.func_mul(g, &self.func_conj(g));
        debug_assert!(n.b.is_empty());
        n.a
    }

    pub fn func_eval(&self, g: &CurveFunction<F::E>, p: &Point<F::E>) -> Option<F::E> {
        match p {
            Point::Inf => None,
            Point::Aff(x, y) => {
                let f = &self.field;
                Some(f.add(&poly::eval(f, &g.a, x), &f.mul(&poly::eval(f, &g.b, x), y)))
            }
        }
    }

    pub fn render_func(&self, g: &CurveFunction<F::E>) -> String {
        let f = &self.field;
        let term = |p: &[F::E], suffix: &str| -> Vec<String> {
            p.iter()
                .enumerate()
                .rev()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(i, c)| {
                    let mono = match i {
                        0 => String::new(),
                        1 => "x".into(),
                        _ => format!("x^{i}"),
                    };
                    let var = [mono, suffix.to_string()].iter().filter(|s| !s.is_empty()).cloned().collect::<Vec<_>>().join("*");
                    if var.is_empty() {
                        f.render(c)
                    } else if *c == f.one() {
                        var
                    } else {
                        format!("{}*{var}", f.render(c))
                    }
                })
                .collect()
        };
        let mut t = term(&g.b, "y");
        t.extend(term(&g.a, ""));
        if t.is_empty() {
            "0".into()
        } else {
            t.join(" + ")
        }
    }
}

/// `a(x) + b(x)·y`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFunction<E> {
    pub a: Poly<E>,
    pub b: Poly<E>,
}

impl<E> CurveFunction<E> {
    pub fn is_zero(&self) -> bool {
        self.a.is_empty() && self.b.is_empty()
    }

    /// `−ord_O`, from the degrees alone: `max(2·deg a, 3 + 2·deg b)`.
    pub fn pole_at_infinity(&self) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        let da = if self.a.is_empty() { i64::MIN } else { 2 * (self.a.len() as i64 - 1) };
        let db = if self.b.is_empty() { i64::MIN } else { 3 + 2 * (self.b.len() as i64 - 1) };
        Some(da.max(db))
    }
}

/// `num / den`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction<E> {
    pub num: CurveFunction<E>,
    pub den: CurveFunction<E>,
}

impl<F: Field> Curve<F> {
    pub fn rf(&self, num: CurveFunction<F::E>) -> RationalFunction<F::E> {
        RationalFunction { num, den: self.func_const(self.field.one()) }
    }

    pub fn rf_mul(&self, g: &RationalFunction<F::E>, h: &RationalFunction<F::E>) -> RationalFunction<F::E> {
        RationalFunction { num: self.func_mul(&g.num, &h.num), den: self.func_mul(&g.den, &h.den) }
    }

    pub fn rf_scale(&self, g: &RationalFunction<F::E>, c: &F::E) -> RationalFunction<F::E> {
        RationalFunction { num: self.func_scale(&g.num, c), den: g.den.clone() }
    }

    pub fn rf_add(&self, g: &RationalFunction<F::E>, h: &RationalFunction<F::E>) -> RationalFunction<F::E> {
        if g.den == h.den {
            return RationalFunction { num: self.func_add(&g.num, &h.num), den: g.den.clone() };
        }
        let num = self.func_add(&self.func_mul(&g.num, &h.den), &self.func_mul(&h.num, &g.den));
        RationalFunction { num, den: self.func_mul(&g.den, &h.den) }
    }

    pub fn render_rf(&self, g: &RationalFunction<F::E>) -> String {
        let one = self.func_const(self.field.one());
        if g.den == one {
            self.render_func(&g.num)
        } else {
            format!("({}) / ({})", self.render_func(&g.num), self.render_func(&g.den))
        }
    }
}

impl<E: fmt::Debug> fmt::Display for CurveFunction<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + {:?}*y", self.a, self.b)
    }
}
