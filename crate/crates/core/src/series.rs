//! Truncated Laurent series in a local parameter, with absolute precision.
//!
//! `coeffs[i]` is the coefficient of `t^(start + i)`; coefficients from
//! `start + coeffs.len()` up to `prec - 1` are zero, and nothing is known
//! from `prec` on. Exact finite series use [`EXACT`] as precision.

use crate::field::Field;

pub const EXACT: i64 = i64::MAX / 4;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<E> {
    pub start: i64,
    pub coeffs: Vec<E>,
    pub prec: i64,
}

impl<E: Clone> Series<E> {
    pub fn zero(prec: i64) -> Self {
        Series { start: if prec >= EXACT { 0 } else { prec }, coeffs: Vec::new(), prec }
    }

    pub fn prec(&self) -> i64 {
        self.prec
    }
}

pub fn constant<F: Field>(f: &F, c: F::E) -> Series<F::E> {
    normalize(f, Series { start: 0, coeffs: vec![c], prec: EXACT })
}

/// `c · t^k`, exact.
pub fn monomial<F: Field>(f: &F, c: F::E, k: i64) -> Series<F::E> {
    normalize(f, Series { start: k, coeffs: vec![c], prec: EXACT })
}

/// Drop leading zeros and anything at or beyond the precision.
pub fn normalize<F: Field>(f: &F, mut s: Series<F::E>) -> Series<F::E> {
    let known = (s.prec - s.start).max(0) as usize;
    if s.coeffs.len() > known {
        s.coeffs.truncate(known);
    }
    let lead = s.coeffs.iter().position(|c| !f.is_zero(c));
    match lead {
        Some(k) => {
            s.coeffs.drain(..k);
            s.start += k as i64;
            while s.coeffs.last().is_some_and(|c| f.is_zero(c)) {
                s.coeffs.pop();
            }
        }
        None => {
            s.coeffs.clear();
            s.start = if s.prec >= EXACT { 0 } else { s.prec };
        }
    }
    s
}

pub fn coeff<F: Field>(f: &F, s: &Series<F::E>, k: i64) -> Option<F::E> {
    if k >= s.prec {
        return None;
    }
    if k < s.start || k >= s.start + s.coeffs.len() as i64 {
        return Some(f.zero());
    }
    Some(s.coeffs[(k - s.start) as usize].clone())
}

/// Valuation, if a nonzero coefficient is known.
pub fn valuation<F: Field>(_f: &F, s: &Series<F::E>) -> Option<i64> {
    (!s.coeffs.is_empty()).then_some(s.start)
}

pub fn truncate<F: Field>(f: &F, s: &Series<F::E>, prec: i64) -> Series<F::E> {
    normalize(f, Series { start: s.start, coeffs: s.coeffs.clone(), prec: s.prec.min(prec) })
}

pub fn add<F: Field>(f: &F, a: &Series<F::E>, b: &Series<F::E>) -> Series<F::E> {
    let prec = a.prec.min(b.prec);
    let start = a.start.min(b.start).min(prec);
    let end = (a.start + a.coeffs.len() as i64).max(b.start + b.coeffs.len() as i64).min(prec);
    let coeffs = (start..end.max(start))
        .map(|k| f.add(&coeff(f, a, k).unwrap_or_else(|| f.zero()), &coeff(f, b, k).unwrap_or_else(|| f.zero())))
        .collect();
    normalize(f, Series { start, coeffs, prec })
}

pub fn neg<F: Field>(f: &F, a: &Series<F::E>) -> Series<F::E> {
    Series { start: a.start, coeffs: a.coeffs.iter().map(|c| f.neg(c)).collect(), prec: a.prec }
}

pub fn sub<F: Field>(f: &F, a: &Series<F::E>, b: &Series<F::E>) -> Series<F::E> {
    add(f, a, &neg(f, b))
}

pub fn scale<F: Field>(f: &F, a: &Series<F::E>, c: &F::E) -> Series<F::E> {
    if f.is_zero(c) {
        return Series::zero(a.prec);
    }
    Series { start: a.start, coeffs: a.coeffs.iter().map(|x| f.mul(x, c)).collect(), prec: a.prec }
}

/// Multiply by `t^k`.
pub fn shift<F: Field>(_f: &F, a: &Series<F::E>, k: i64) -> Series<F::E> {
    let prec = if a.prec >= EXACT { EXACT } else { a.prec + k };
    Series { start: a.start + k, coeffs: a.coeffs.clone(), prec }
}

pub fn mul<F: Field>(f: &F, a: &Series<F::E>, b: &Series<F::E>) -> Series<F::E> {
    if a.coeffs.is_empty() || b.coeffs.is_empty() {
        // O(t^pa) times something starting at sb is O(t^(pa + sb)).
        let lo = |s: &Series<F::E>| if s.coeffs.is_empty() { s.prec } else { s.start };
        let prec = match (a.coeffs.is_empty(), b.coeffs.is_empty()) {
            (true, true) => sat_add(a.prec, b.prec),
            (true, false) => sat_add(a.prec, lo(b)),
            _ => sat_add(b.prec, lo(a)),
        };
        return Series::zero(prec);
    }
    let start = a.start + b.start;
    let prec = sat_add(a.start, b.prec).min(sat_add(b.start, a.prec));
    let full = a.coeffs.len() + b.coeffs.len() - 1;
    let len = full.min((prec - start).max(0) as usize);
    let mut out = vec![f.zero(); len];
    for (i, x) in a.coeffs.iter().enumerate().take(len) {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate().take(len - i) {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    normalize(f, Series { start, coeffs: out, prec })
}

fn sat_add(a: i64, b: i64) -> i64 {
    if a >= EXACT || b >= EXACT {
        EXACT
    } else {
        a + b
    }
}

/// Multiplicative inverse, keeping the relative precision. `None` when no
/// nonzero coefficient is known.
pub fn inv<F: Field>(f: &F, a: &Series<F::E>) -> Option<Series<F::E>> {
    let v = valuation(f, a)?;
    let rel = if a.prec >= EXACT { None } else { Some((a.prec - v) as usize) };
    let n = rel.unwrap_or(a.coeffs.len()).max(1);
    let n = if rel.is_none() { n.max(64) } else { n };
    inv_to(f, a, n)
}

/// Inverse with `n` known coefficients (for exact inputs, `n` is chosen by
/// the caller).
pub fn inv_to<F: Field>(f: &F, a: &Series<F::E>, n: usize) -> Option<Series<F::E>> {
    let v = valuation(f, a)?;
    let a0inv = f.inv(&a.coeffs[0])?;
    let mut out: Vec<F::E> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = if k == 0 { f.one() } else { f.zero() };
        for j in 1..=k.min(a.coeffs.len() - 1) {
            acc = f.sub(&acc, &f.mul(&a.coeffs[j], &out[k - j]));
        }
        out.push(f.mul(&acc, &a0inv));
    }
    let known_rel = if a.prec >= EXACT { n as i64 } else { (a.prec - v).min(n as i64) };
    Some(normalize(f, Series { start: -v, coeffs: out, prec: -v + known_rel }))
}

/// `p(s)` by Horner's rule.
pub fn compose_poly<F: Field>(f: &F, p: &[F::E], s: &Series<F::E>) -> Series<F::E> {
    let mut acc: Series<F::E> = Series::zero(EXACT);
    for c in p.iter().rev() {
        acc = add(f, &mul(f, &acc, s), &constant(f, c.clone()));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn inverse_of_geometric() {
        let f = Q;
        // 1 - t, exact; inverse 1 + t + t^2 + ...
        let s = normalize(&f, Series { start: 0, coeffs: vec![f.one(), f.from_i64(-1)], prec: EXACT });
        let i = inv_to(&f, &s, 6).unwrap();
        assert_eq!(i.prec, 6);
        assert!(i.coeffs.iter().all(|c| *c == f.one()));
        let p = mul(&f, &s, &i);
        assert_eq!(p.prec, 6);
        assert_eq!(p.coeffs, vec![f.one()]);
    }

    #[test]
    fn precision_tracks_through_products() {
        let f = Q;
        let a = Series { start: -2, coeffs: vec![f.one(), f.one()], prec: 3 };
        let b = Series { start: 1, coeffs: vec![f.one()], prec: 4 };
        let p = mul(&f, &a, &b);
        assert_eq!(p.start, -1);
        assert_eq!(p.prec, 2);
    }
}
