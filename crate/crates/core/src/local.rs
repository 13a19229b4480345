//! Laurent expansions of curve functions at a point, and orders of vanishing.
//!
//! At `O` the local parameter is `z = −x/y`; the curve equation becomes
//! `w = z³ + a1·zw + a2·z²w + a3·w² + a4·zw² + a6·w³` in `w = −1/y`, solved by
//! Newton iteration, and then `x = z/w`, `y = −1/w`. At a finite point `P`
//! the parameter is `x − x(P)` unless `P` is 2-torsion (vertical tangent), in
//! which case it is `y − y(P)`; the other coordinate is again found by Newton.

use crate::curve::{Curve, CurveFunction, Point, RationalFunction};
use crate::error::{domain, Result};
use crate::field::Field;
use crate::poly;
use crate::series::{self, Series, EXACT};

/// Coordinate expansions at a fixed point, with relative precision `n`.
#[derive(Clone, Debug)]
pub struct LocalExpander<F: Field> {
    pub point: Point<F::E>,
    pub rel_prec: usize,
    pub x: Series<F::E>,
    pub y: Series<F::E>,
}

/// One Newton run: `g` returns `(G(s), G'(s))`; starts from an approximation
/// correct to `init.prec` and stops at absolute precision `target`.
fn newton<F: Field>(
    f: &F,
    init: Series<F::E>,
    target: i64,
    g: impl Fn(&Series<F::E>) -> (Series<F::E>, Series<F::E>),
) -> Series<F::E> {
    let mut s = init;
    let mut cur = s.prec;
    let mut extra = 2;
    loop {
        let step = if cur >= target { target } else { (2 * cur).max(cur + 1).min(target) };
        let approx = Series { prec: step, ..s.clone() };
        let (val, der) = g(&approx);
        let d_inv = series::inv_to(f, &der, (step - der.start.max(0)).max(1) as usize + 2).expect("unit derivative");
        let corr = series::mul(f, &val, &d_inv);
        s = series::truncate(f, &series::sub(f, &approx, &corr), step);
        cur = step;
        if cur >= target {
            extra -= 1;
            if extra == 0 {
                break;
            }
        }
    }
    s
}

impl<F: Field> LocalExpander<F> {
    pub fn new(c: &Curve<F>, p: &Point<F::E>, rel_prec: usize) -> Self {
        let f = &c.field;
        let n = rel_prec.max(1) as i64;
        let t = series::monomial(f, f.one(), 1);
        let cst = |e: &F::E| series::constant(f, e.clone());
        match p {
            Point::Inf => {
                let target = n + 3;
                let z = t;
                let z2 = series::mul(f, &z, &z);
                let z3 = series::mul(f, &z2, &z);
                let init = Series { start: 3, coeffs: vec![f.one()], prec: 4 };
                let w = newton(f, init, target, |w| {
                    let w2 = series::mul(f, w, w);
                    let w3 = series::mul(f, &w2, w);
                    let zw = series::mul(f, &z, w);
                    let mut val = series::sub(f, w, &z3);
                    val = series::sub(f, &val, &series::scale(f, &zw, &c.a1));
                    val = series::sub(f, &val, &series::scale(f, &series::mul(f, &z2, w), &c.a2));
                    val = series::sub(f, &val, &series::scale(f, &w2, &c.a3));
                    val = series::sub(f, &val, &series::scale(f, &series::mul(f, &z, &w2), &c.a4));
                    val = series::sub(f, &val, &series::scale(f, &w3, &c.a6));
                    let two = f.from_i64(2);
                    let mut der = series::constant(f, f.one());
                    der = series::sub(f, &der, &series::scale(f, &z, &c.a1));
                    der = series::sub(f, &der, &series::scale(f, &z2, &c.a2));
                    der = series::sub(f, &der, &series::scale(f, w, &f.mul(&two, &c.a3)));
                    der = series::sub(f, &der, &series::scale(f, &zw, &f.mul(&two, &c.a4)));
                    der = series::sub(f, &der, &series::scale(f, &w2, &f.mul(&f.from_i64(3), &c.a6)));
                    (val, der)
                });
                let w_inv = series::inv(f, &w).expect("w has valuation 3");
                let x = series::mul(f, &z, &w_inv);
                let y = series::neg(f, &w_inv);
                LocalExpander { point: p.clone(), rel_prec: n as usize, x, y }
            }
            Point::Aff(x0, y0) => {
                let fy = c.f_y(x0, y0);
                let rhs = c.rhs_poly();
                let lin = c.lin_poly();
                if !f.is_zero(&fy) {
                    let x = series::add(f, &cst(x0), &t);
                    let init = Series { start: 0, coeffs: vec![y0.clone()], prec: 1 };
                    let init = series::normalize(f, init);
                    let lin_x = series::compose_poly(f, &lin, &x);
                    let rhs_x = series::compose_poly(f, &rhs, &x);
                    let y = newton(f, init, n, |y| {
                        let val = series::sub(f, &series::mul(f, y, &series::add(f, y, &lin_x)), &rhs_x);
                        let der = series::add(f, &series::add(f, y, y), &lin_x);
                        (val, der)
                    });
                    LocalExpander { point: p.clone(), rel_prec: n as usize, x, y }
                } else {
                    let y = series::add(f, &cst(y0), &t);
                    let init = series::normalize(f, Series { start: 0, coeffs: vec![x0.clone()], prec: 1 });
                    let rhs_d = poly::derivative(f, &rhs);
                    let y2 = series::mul(f, &y, &y);
                    let x = newton(f, init, n, |x| {
                        let lin_x = series::compose_poly(f, &lin, x);
                        let val = series::sub(
                            f,
                            &series::compose_poly(f, &rhs, x),
                            &series::add(f, &y2, &series::mul(f, &lin_x, &y)),
                        );
                        let der = series::sub(f, &series::compose_poly(f, &rhs_d, x), &series::scale(f, &y, &c.a1));
                        (val, der)
                    });
                    LocalExpander { point: p.clone(), rel_prec: n as usize, x, y }
                }
            }
        }
    }

    /// Expansion of `a(x) + b(x)·y`, to whatever precision the coordinates allow.
    pub fn expand(&self, c: &Curve<F>, g: &CurveFunction<F::E>) -> Series<F::E> {
        let f = &c.field;
        let a = series::compose_poly(f, &g.a, &self.x);
        if g.b.is_empty() {
            return a;
        }
        let b = series::compose_poly(f, &g.b, &self.x);
        series::add(f, &a, &series::mul(f, &b, &self.y))
    }

    pub fn expand_rf(&self, c: &Curve<F>, g: &RationalFunction<F::E>) -> Option<Series<F::E>> {
        let f = &c.field;
        let num = self.expand(c, &g.num);
        let den = self.expand(c, &g.den);
        let d_inv = series::inv(f, &den)?;
        Some(series::mul(f, &num, &d_inv))
    }
}

/// Relative precision that guarantees absolute precision `abs_prec` for `g`
/// at `p`.
pub fn rel_prec_for<F: Field>(g: &CurveFunction<F::E>, p: &Point<F::E>, abs_prec: i64) -> usize {
    let pole = match p {
        Point::Inf => g.pole_at_infinity().unwrap_or(0),
        Point::Aff(..) => 0,
    };
    (abs_prec + pole + 4).max(1) as usize
}

/// Expansion of a polynomial function at `p`, known at least up to `t^abs_prec`.
pub fn expand_func<F: Field>(c: &Curve<F>, g: &CurveFunction<F::E>, p: &Point<F::E>, abs_prec: i64) -> Series<F::E> {
    let ex = LocalExpander::new(c, p, rel_prec_for::<F>(g, p, abs_prec));
    series::truncate(&c.field, &ex.expand(c, g), abs_prec)
}

/// `ord_P(g)` for a nonzero polynomial function.
pub fn order_at<F: Field>(c: &Curve<F>, g: &CurveFunction<F::E>, p: &Point<F::E>) -> Result<i64> {
    let Some(pole) = g.pole_at_infinity() else {
        return domain("order of the zero function");
    };
    match p {
        Point::Inf => Ok(-pole),
        Point::Aff(..) => {
            if !c.is_on(p) {
                return domain(format!("{} is not on the curve", c.render_point(p)));
            }
            if let Some(v) = c.func_eval(g, p) {
                if !c.field.is_zero(&v) {
                    return Ok(0);
                }
            }
            // a function with a pole of order `pole` at O has `pole` zeros in total
            let s = expand_func(c, g, p, pole + 1);
            Ok(series::valuation(&c.field, &s).expect("order bounded by the pole at O"))
        }
    }
}

pub fn order_at_rf<F: Field>(c: &Curve<F>, g: &RationalFunction<F::E>, p: &Point<F::E>) -> Result<i64> {
    Ok(order_at(c, &g.num, p)? - order_at(c, &g.den, p)?)
}

/// Expansion of `num/den` at `p`, known at least up to `t^abs_prec`.
pub fn expand_rf<F: Field>(c: &Curve<F>, g: &RationalFunction<F::E>, p: &Point<F::E>, abs_prec: i64) -> Result<Series<F::E>> {
    let f = &c.field;
    let vn = order_at(c, &g.num, p)?;
    let vd = order_at(c, &g.den, p)?;
    // num/den = (num t^-vn)/(den t^-vd) · t^(vn - vd): both quotients need
    // relative precision abs_prec - (vn - vd).
    let rel = (abs_prec - (vn - vd)).max(1);
    let num = expand_func(c, &g.num, p, vn + rel);
    let den = expand_func(c, &g.den, p, vd + rel);
    let d_inv = series::inv(f, &den).expect("nonzero denominator");
    let out = series::mul(f, &num, &d_inv);
    debug_assert!(out.prec >= abs_prec || out.prec >= EXACT);
    Ok(series::truncate(f, &out, abs_prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn coordinates_at_infinity() {
        let c = Curve::default_q();
        let f = &c.field;
        let ex = LocalExpander::new(&c, &Point::Inf, 12);
        assert_eq!(ex.x.start, -2);
        assert_eq!(ex.y.start, -3);
        assert_eq!(ex.x.coeffs[0], f.one());
        assert_eq!(ex.y.coeffs[0], f.from_i64(-1));
        // the curve equation holds to the known precision
        let g = c.func_sub(&c.func_add(&c.func_mul(&c.func_y(), &c.func_y()), &c.func_y()), &c.func_poly_x(c.rhs_poly()));
        assert!(g.is_zero());
        let lhs = series::add(f, &series::mul(f, &ex.y, &ex.y), &ex.y);
        let rhs = series::compose_poly(f, &c.rhs_poly(), &ex.x);
        let d = series::sub(f, &lhs, &rhs);
        assert!(d.coeffs.is_empty());
        assert!(d.prec >= 3);
    }

    #[test]
    fn orders_of_coordinates() {
        let c = Curve::default_q();
        let f = &c.field;
        assert_eq!(order_at(&c, &c.func_x(), &Point::Inf).unwrap(), -2);
        assert_eq!(order_at(&c, &c.func_y(), &Point::Inf).unwrap(), -3);
        let p = Point::Aff(f.zero(), f.zero());
        let q = Point::Aff(f.zero(), f.from_i64(-1));
        assert_eq!(order_at(&c, &c.func_x(), &p).unwrap(), 1);
        assert_eq!(order_at(&c, &c.func_x(), &q).unwrap(), 1);
        // y vanishes at (0,0), (1,0), (-1,0)
        assert_eq!(order_at(&c, &c.func_y(), &p).unwrap(), 1);
        // y + x²·... tangent line at (0,0): y = -x, meets with multiplicity 2
        let tangent = c.func_add(&c.func_y(), &c.func_x());
        assert_eq!(order_at(&c, &tangent, &p).unwrap(), 2);
    }

    #[test]
    fn vertical_tangent_parameter() {
        // y² = x³ − x, (0,0) is 2-torsion; x vanishes to order 2 there
        let c = Curve::from_ints(Q, [0, 0, 0, -1, 0]).unwrap();
        let p = Point::Aff(Q.zero(), Q.zero());
        assert_eq!(order_at(&c, &c.func_x(), &p).unwrap(), 2);
        assert_eq!(order_at(&c, &c.func_y(), &p).unwrap(), 1);
    }

    #[test]
    fn rational_expansion() {
        let c = Curve::default_q();
        let g = RationalFunction { num: c.func_y(), den: c.func_x() };
        let s = expand_rf(&c, &g, &Point::Inf, 5).unwrap();
        assert_eq!(s.start, -1);
        assert!(s.prec >= 5);
    }
}
