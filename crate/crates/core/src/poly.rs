//! Dense univariate polynomials as coefficient vectors, constant term first.
//! The zero polynomial is the empty vector.

use crate::field::Field;

pub type Poly<E> = Vec<E>;

pub fn trim<F: Field>(f: &F, mut a: Poly<F::E>) -> Poly<F::E> {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
    a
}

/// Degree, with `-1` for the zero polynomial.
pub fn degree<F: Field>(f: &F, a: &[F::E]) -> i64 {
    a.iter().rposition(|c| !f.is_zero(c)).map_or(-1, |i| i as i64)
}

pub fn constant<F: Field>(f: &F, c: F::E) -> Poly<F::E> {
    trim(f, vec![c])
}

/// `x - r`
pub fn linear<F: Field>(f: &F, r: &F::E) -> Poly<F::E> {
    vec![f.neg(r), f.one()]
}

pub fn add<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Poly<F::E> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.add(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Poly<F::E> {
    let n = a.len().max(b.len());
    let z = f.zero();
    let out = (0..n).map(|i| f.sub(a.get(i).unwrap_or(&z), b.get(i).unwrap_or(&z))).collect();
    trim(f, out)
}

pub fn scale<F: Field>(f: &F, a: &[F::E], c: &F::E) -> Poly<F::E> {
    trim(f, a.iter().map(|x| f.mul(x, c)).collect())
}

pub fn mul<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> Poly<F::E> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    trim(f, out)
}

pub fn pow<F: Field>(f: &F, a: &[F::E], e: u32) -> Poly<F::E> {
    let mut acc = vec![f.one()];
    for _ in 0..e {
        acc = mul(f, &acc, a);
    }
    acc
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem<F: Field>(f: &F, a: &[F::E], b: &[F::E]) -> (Poly<F::E>, Poly<F::E>) {
    let b = trim(f, b.to_vec());
    let db = b.len().checked_sub(1).expect("division by the zero polynomial");
    let lead_inv = f.inv(&b[db]).expect("nonzero leading coefficient");
    let mut r = trim(f, a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![f.zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1 - db;
        let c = f.mul(&r[r.len() - 1], &lead_inv);
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = f.sub(&r[k + j], &f.mul(&c, bj));
        }
        q[k] = c;
        r = trim(f, r);
    }
    (trim(f, q), r)
}

pub fn eval<F: Field>(f: &F, a: &[F::E], x: &F::E) -> F::E {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.add(&f.mul(&acc, x), c);
    }
    acc
}

pub fn derivative<F: Field>(f: &F, a: &[F::E]) -> Poly<F::E> {
    trim(f, a.iter().enumerate().skip(1).map(|(i, c)| f.mul(&f.from_i64(i as i64), c)).collect())
}

pub fn is_zero<F: Field>(f: &F, a: &[F::E]) -> bool {
    a.iter().all(|c| f.is_zero(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;

    #[test]
    fn divrem_roundtrip() {
        let f = Q;
        let a: Vec<_> = [3, 0, -2, 5, 1].iter().map(|&n| f.from_i64(n)).collect();
        let b: Vec<_> = [1, 1].iter().map(|&n| f.from_i64(n)).collect();
        let (q, r) = divrem(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), a);
        assert!(degree(&f, &r) < 1);
    }
}
