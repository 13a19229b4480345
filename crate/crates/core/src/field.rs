//! Coefficient fields: exact rationals and prime fields.
//!
//! A field is a small context object; elements are plain values and every
//! operation goes through the context, so `F_p` elements stay bare `u64`s.

use std::fmt::Debug;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

pub trait Field: Clone + Debug + Send + Sync + 'static {
    type E: Clone + PartialEq + Eq + Ord + std::hash::Hash + Debug + Send + Sync;

    fn name(&self) -> String;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn from_i64(&self, n: i64) -> Self::E;
    /// `None` when the denominator vanishes in the field.
    fn from_rational(&self, r: Rational) -> Option<Self::E>;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn neg(&self, a: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Option<Self::E>;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sqrt(&self, a: &Self::E) -> Option<Self::E>;
    /// Distinct roots in the field of a nonzero polynomial, coefficients
    /// listed from the constant term up.
    fn roots(&self, poly: &[Self::E]) -> Result<Vec<Self::E>>;
    fn render(&self, a: &Self::E) -> String;
    fn parse(&self, s: &str) -> Result<Self::E>;
    /// Characteristic zero: torsion questions are meaningful.
    fn is_rational(&self) -> bool;

    fn div(&self, a: &Self::E, b: &Self::E) -> Option<Self::E> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn pow(&self, a: &Self::E, mut e: u64) -> Self::E {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// The rationals, with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Q;

fn factor_small(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    const LIMIT: u64 = 2_000_000;
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2u64;
    while p <= LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let bp = BigInt::from(p);
        if &bp * &bp <= n {
            return Err(Error::Unsupported(format!("integer {n} too large to factor for rational root search")));
        }
        out.push((n, 1));
    }
    Ok(out)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut ds = vec![BigInt::one()];
    for (p, e) in factor_small(n)? {
        let mut next = Vec::new();
        for d in &ds {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        ds = next;
    }
    Ok(ds)
}

impl Field for Q {
    type E = BigRational;

    fn name(&self) -> String {
        "Q".into()
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn from_rational(&self, r: Rational) -> Option<BigRational> {
        Some(BigRational::new(r.numer().into(), r.denom().into()))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sqrt(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_negative() {
            return None;
        }
        let (n, d) = (a.numer(), a.denom());
        let (sn, sd) = (n.sqrt(), d.sqrt());
        (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
    }
    fn roots(&self, poly: &[BigRational]) -> Result<Vec<BigRational>> {
        // Clear denominators, strip the power of x, then try every p/q with
        // p | a0 and q | an.
        let mut lcm = BigInt::one();
        for c in poly {
            lcm = num::integer::lcm(lcm, c.denom().clone());
        }
        let mut ints: Vec<BigInt> = poly.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
        while ints.last().is_some_and(|c| c.is_zero()) {
            ints.pop();
        }
        if ints.is_empty() {
            return Err(Error::Domain("roots of the zero polynomial".into()));
        }
        let mut out = Vec::new();
        let lead_zeros = ints.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            out.push(BigRational::zero());
            ints.drain(..lead_zeros);
        }
        if ints.len() <= 1 {
            return Ok(out);
        }
        let a0 = ints[0].clone();
        let an = ints.last().unwrap().clone();
        let eval = |x: &BigRational| {
            let mut acc = BigRational::zero();
            for c in ints.iter().rev() {
                acc = acc * x + BigRational::from_integer(c.clone());
            }
            acc
        };
        let nums = divisors(&a0)?;
        let dens = divisors(&an)?;
        let mut seen = std::collections::BTreeSet::new();
        for p in &nums {
            for q in &dens {
                for s in [Sign::Plus, Sign::Minus] {
                    let x = BigRational::new(BigInt::from_biguint(s, p.magnitude().clone()), q.clone());
                    if seen.insert(x.clone()) && eval(&x).is_zero() {
                        out.push(x);
                    }
                }
            }
        }
        Ok(out)
    }
    fn render(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let bad = || Error::Parse(format!("not a rational: {s:?}"));
        let s = s.trim();
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    }
    fn is_rational(&self) -> bool {
        true
    }
}

/// The prime field `F_p`, `p < 2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

pub const DEFAULT_PRIME: u64 = 32003;

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        if p < 5 || p >= 1 << 32 || !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not a prime in [5, 2^32)")));
        }
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for Fp {
    type E = u64;

    fn name(&self) -> String {
        format!("F_{}", self.p)
    }
    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
    fn from_rational(&self, r: Rational) -> Option<u64> {
        let n = self.reduce_i64(r.numer());
        let d = self.reduce_i64(r.denom());
        self.div(&n, &d)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        (*a != 0).then(|| self.pow(a, self.p - 2))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn sqrt(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return Some(0);
        }
        let p = self.p;
        if self.pow(a, (p - 1) / 2) != 1 {
            return None;
        }
        // Tonelli–Shanks
        let (mut q, mut s) = (p - 1, 0u32);
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let mut z = 2;
        while self.pow(&z, (p - 1) / 2) != p - 1 {
            z += 1;
        }
        let mut m = s;
        let mut c = self.pow(&z, q);
        let mut t = self.pow(a, q);
        let mut r = self.pow(a, q.div_ceil(2));
        while t != 1 {
            let mut i = 0;
            let mut tt = t;
            while tt != 1 {
                tt = self.mul(&tt, &tt);
                i += 1;
            }
            let b = self.pow(&c, 1 << (m - i - 1));
            m = i;
            c = self.mul(&b, &b);
            t = self.mul(&t, &c);
            r = self.mul(&r, &b);
        }
        Some(r)
    }
    fn roots(&self, poly: &[u64]) -> Result<Vec<u64>> {
        if poly.iter().all(|c| *c == 0) {
            return Err(Error::Domain("roots of the zero polynomial".into()));
        }
        Ok((0..self.p)
            .filter(|x| {
                let mut acc = 0;
                for c in poly.iter().rev() {
                    acc = self.add(&self.mul(&acc, x), c);
                }
                acc == 0
            })
            .collect())
    }
    fn render(&self, a: &u64) -> String {
        a.to_string()
    }
    fn parse(&self, s: &str) -> Result<u64> {
        let r: Rational = s.parse()?;
        self.from_rational(r).ok_or_else(|| Error::Parse(format!("{s} has a denominator divisible by {}", self.p)))
    }
    fn is_rational(&self) -> bool {
        false
    }
}

/// Which coefficient field to compute over, as named by `q` or `fp:<prime>`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FieldChoice {
    #[default]
    Q,
    Fp(u64),
}

pub const FIELD_ENV: &str = "SECTION_RING_FIELD";

impl FieldChoice {
    /// Reads [`FIELD_ENV`]; unset means `q`.
    pub fn from_env() -> Result<Self> {
        match std::env::var(FIELD_ENV) {
            Ok(s) => s.parse(),
            Err(_) => Ok(FieldChoice::Q),
        }
    }
}

impl std::str::FromStr for FieldChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldChoice::Q);
        }
        if s.eq_ignore_ascii_case("fp") {
            return Ok(FieldChoice::Fp(DEFAULT_PRIME));
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::Parse(format!("field must be q or fp:<prime>, got {s:?}")))?;
        Fp::new(p)?;
        Ok(FieldChoice::Fp(p))
    }
}

impl std::fmt::Display for FieldChoice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldChoice::Q => write!(f, "q"),
            FieldChoice::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Exact conversion of a small rational element back to [`Rational`].
pub fn q_to_rational(x: &BigRational) -> Option<Rational> {
    Some(Rational::new(x.numer().to_i64()?, x.denom().to_i64()?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_roots_and_sqrt() {
        let f = Q;
        // (x - 1/2)(x + 3) x = x^3 + 5/2 x^2 - 3/2 x
        let p = vec![f.zero(), f.parse("-3/2").unwrap(), f.parse("5/2").unwrap(), f.one()];
        let mut r: Vec<String> = f.roots(&p).unwrap().iter().map(|x| f.render(x)).collect();
        r.sort();
        assert_eq!(r, vec!["-3", "0", "1/2"]);
        assert_eq!(f.sqrt(&f.parse("9/4").unwrap()), Some(f.parse("3/2").unwrap()));
        assert_eq!(f.sqrt(&f.parse("2").unwrap()), None);
    }

    #[test]
    fn fp_arithmetic() {
        let f = Fp::new(32003).unwrap();
        let a = f.from_i64(-5);
        assert_eq!(f.add(&a, &5), 0);
        let i = f.inv(&a).unwrap();
        assert_eq!(f.mul(&a, &i), 1);
        for x in [2u64, 3, 10, 31999] {
            let sq = f.mul(&x, &x);
            let r = f.sqrt(&sq).unwrap();
            assert_eq!(f.mul(&r, &r), sq);
        }
        assert_eq!(f.from_rational(Rational::new(1, 2)), Some(16002));
        assert!(Fp::new(32001).is_err());
    }

    #[test]
    fn fp_roots() {
        let f = Fp::new(10007).unwrap();
        // (x - 3)(x - 7) = x^2 - 10x + 21
        let p = vec![21, f.from_i64(-10), 1];
        assert_eq!(f.roots(&p).unwrap(), vec![3, 7]);
    }
}
