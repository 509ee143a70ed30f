//! Exact arithmetic in GF(p) and GF(p^s).
//!
//! A [`Field`] is a cheap, shareable handle. Elements are [`FieldElement`]
//! values that only make sense together with the field that produced them:
//! every coefficient of the polynomial representative occupies a fixed-width
//! bit slot of a `u64`. For characteristic 2 this is the usual bit-packed
//! representation and addition is XOR.
//!
//! The modulus is the smallest monic irreducible polynomial of degree `s`
//! when polynomials are ordered by the integer `c_0 + c_1 p + ... +
//! c_{s-1} p^{s-1}`, and the generator is the smallest primitive element in
//! the same order. Fields up to `2^16` elements carry log/exp tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ntheory::{is_prime, prime_divisors};

const TABLE_LIMIT: u64 = 1 << 16;
const ORDER_LIMIT: u64 = 1 << 40;

/// An element of some [`Field`], stored as packed base-`p` digits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Raw packed representation.
    pub fn packed(self) -> u64 {
        self.0
    }
}

struct Tables {
    exp: Vec<FieldElement>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    degree: usize,
    modulus: Vec<u64>,
    order: u64,
    width: u32,
    digit_mask: u64,
    generator: FieldElement,
    tables: Option<Tables>,
}

/// The finite field GF(p^s).
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.degree)
        }
    }
}

impl Field {
    /// Builds GF(p^s) with the deterministic modulus and generator.
    pub fn new(p: u64, s: usize) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if s == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let order = (p as u128).checked_pow(s as u32).unwrap_or(u128::MAX);
        if order > ORDER_LIMIT as u128 {
            return Err(Error::FieldTooLarge { p, degree: s });
        }
        let order = order as u64;
        let width = 64 - (p - 1).leading_zeros();
        let modulus = find_irreducible(p, s)
            .ok_or_else(|| Error::InvalidField(format!("no irreducible of degree {s} over GF({p})")))?;
        let mut inner = Inner {
            p,
            degree: s,
            modulus,
            order,
            width,
            digit_mask: (1u64 << width) - 1,
            generator: FieldElement(0),
            tables: None,
        };
        let factors = prime_divisors(order - 1);
        let generator = (1..order)
            .map(|v| inner.element_at(v))
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| inner.pow_slow(g, (order - 1) / r) != inner.one())
            })
            .ok_or_else(|| Error::InvalidField("no primitive element found".into()))?;
        inner.generator = generator;
        if order <= TABLE_LIMIT {
            inner.tables = Some(inner.build_tables());
        }
        Ok(Field(Arc::new(inner)))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// Number of elements, `p^s`.
    pub fn order(&self) -> u64 {
        self.0.order
    }

    /// Ascending coefficients of the monic modulus (length `s + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn generator(&self) -> FieldElement {
        self.0.generator
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        self.0.one()
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u64)
    }

    /// Builds an element from ascending coefficients over GF(p); missing
    /// coefficients are zero. Fails if there are more than `s` of them.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElement> {
        if coeffs.len() > self.0.degree && coeffs[self.0.degree..].iter().any(|&c| c.rem_euclid(self.0.p as i64) != 0) {
            return Err(Error::Shape(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.0.degree
            )));
        }
        let mut packed = 0u64;
        for (i, &c) in coeffs.iter().take(self.0.degree).enumerate() {
            packed |= (c.rem_euclid(self.0.p as i64) as u64) << (i as u32 * self.0.width);
        }
        Ok(FieldElement(packed))
    }

    /// Ascending coefficients over GF(p), always of length `s`.
    pub fn coeffs(&self, x: FieldElement) -> Vec<u64> {
        self.0.digits(x)
    }

    /// Position of `x` in the canonical enumeration order.
    pub fn index(&self, x: FieldElement) -> u64 {
        self.0.digits(x).iter().rev().fold(0, |acc, &d| acc * self.0.p + d)
    }

    pub fn from_index(&self, v: u64) -> FieldElement {
        self.0.element_at(v)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.order).map(move |v| self.0.element_at(v))
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.0.add(a, b)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.0.add(a, self.0.neg(b))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.0.neg(a)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match &self.0.tables {
            Some(t) => {
                if a.is_zero() || b.is_zero() {
                    return FieldElement(0);
                }
                let la = t.log[a.0 as usize] as u64;
                let lb = t.log[b.0 as usize] as u64;
                t.exp[((la + lb) % (self.0.order - 1)) as usize]
            }
            None => self.0.mul_slow(a, b),
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    /// Panics if `a` is zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero");
        match &self.0.tables {
            Some(t) => {
                let n = self.0.order - 1;
                let la = t.log[a.0 as usize] as u64;
                t.exp[((n - la) % n) as usize]
            }
            None => self.0.pow_slow(a, self.0.order - 2),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return self.one();
        }
        if a.is_zero() {
            return a;
        }
        match &self.0.tables {
            Some(t) => {
                let n = (self.0.order - 1) as u128;
                let la = t.log[a.0 as usize] as u128;
                t.exp[(la * e as u128 % n) as usize]
            }
            None => self.0.pow_slow(a, e),
        }
    }

    /// `generator^e`.
    pub fn exp(&self, e: u64) -> FieldElement {
        match &self.0.tables {
            Some(t) => t.exp[(e % (self.0.order - 1)) as usize],
            None => self.0.pow_slow(self.0.generator, e % (self.0.order - 1)),
        }
    }

    /// Discrete logarithm to the base of the generator.
    pub fn log(&self, a: FieldElement) -> Option<u64> {
        if a.is_zero() {
            return None;
        }
        match &self.0.tables {
            Some(t) => Some(t.log[a.0 as usize] as u64),
            None => Some(self.0.bsgs(a)),
        }
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: FieldElement) -> u64 {
        assert!(!a.is_zero(), "order of zero");
        let mut ord = self.0.order - 1;
        for r in prime_divisors(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        ord
    }

    /// Comma-separated ascending coefficients, trailing zeros dropped
    /// (zero serializes as `"0"`).
    pub fn format(&self, x: FieldElement) -> String {
        let mut d = self.coeffs(x);
        while d.len() > 1 && *d.last().unwrap() == 0 {
            d.pop();
        }
        d.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
    }

    /// Inverse of [`Field::format`]; negative integers are reduced mod p.
    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        let coeffs = parse_int_list(s)?;
        self.from_coeffs(&coeffs)
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| {
            t.trim().parse::<i64>().map_err(|e| Error::Parse {
                line: 0,
                msg: format!("bad coefficient {:?}: {e}", t.trim()),
            })
        })
        .collect()
}

impl Inner {
    fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    fn digits(&self, x: FieldElement) -> Vec<u64> {
        (0..self.degree)
            .map(|i| (x.0 >> (i as u32 * self.width)) & self.digit_mask)
            .collect()
    }

    fn pack(&self, digits: &[u64]) -> FieldElement {
        let mut packed = 0;
        for (i, &d) in digits.iter().enumerate() {
            packed |= d << (i as u32 * self.width);
        }
        FieldElement(packed)
    }

    fn element_at(&self, mut v: u64) -> FieldElement {
        let mut packed = 0;
        for i in 0..self.degree {
            packed |= (v % self.p) << (i as u32 * self.width);
            v /= self.p;
        }
        FieldElement(packed)
    }

    fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let mut out = 0;
        for i in 0..self.degree {
            let sh = i as u32 * self.width;
            let d = (((a.0 >> sh) & self.digit_mask) + ((b.0 >> sh) & self.digit_mask)) % self.p;
            out |= d << sh;
        }
        FieldElement(out)
    }

    fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let mut out = 0;
        for i in 0..self.degree {
            let sh = i as u32 * self.width;
            let d = (a.0 >> sh) & self.digit_mask;
            out |= ((self.p - d) % self.p) << sh;
        }
        FieldElement(out)
    }

    fn mul_slow(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let da = self.digits(a);
        let db = self.digits(b);
        let prod = gfp::mul(&da, &db, self.p);
        self.pack(&gfp::rem(&prod, &self.modulus, self.p))
    }

    fn pow_slow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&self) -> Tables {
        let n = (self.order - 1) as usize;
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![u32::MAX; 1usize << (self.width as usize * self.degree)];
        let mut x = self.one();
        for i in 0..n {
            exp.push(x);
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        Tables { exp, log }
    }

    /// Baby-step giant-step logarithm for fields without tables.
    fn bsgs(&self, a: FieldElement) -> u64 {
        let n = self.order - 1;
        let step = (n as f64).sqrt().ceil() as u64 + 1;
        let mut baby = HashMap::with_capacity(step as usize);
        let mut x = self.one();
        for j in 0..step {
            baby.entry(x).or_insert(j);
            x = self.mul_slow(x, self.generator);
        }
        let giant = self.pow_slow(self.pow_slow(self.generator, step), n - 1);
        let mut y = a;
        for i in 0..=step {
            if let Some(&j) = baby.get(&y) {
                return (i * step + j) % n;
            }
            y = self.mul_slow(y, giant);
        }
        unreachable!("element has no logarithm")
    }
}

/// Smallest monic irreducible polynomial of degree `s` over GF(p).
fn find_irreducible(p: u64, s: usize) -> Option<Vec<u64>> {
    let count = p.checked_pow(s as u32)?;
    (0..count).find_map(|v| {
        let mut f = Vec::with_capacity(s + 1);
        let mut r = v;
        for _ in 0..s {
            f.push(r % p);
            r /= p;
        }
        f.push(1);
        gfp::is_irreducible(&f, p).then_some(f)
    })
}

/// Dense polynomial arithmetic over GF(p) on plain coefficient vectors.
mod gfp {
    use crate::ntheory::prime_divisors;

    fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    fn inv(a: u64, p: u64) -> u64 {
        crate::ntheory::pow_mod(a, p - 2, p)
    }

    pub fn rem(a: &[u64], f: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let f = trim(f.to_vec());
        let df = f.len() - 1;
        let lead_inv = inv(f[df], p);
        while r.len() > df {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            if c != 0 {
                for (i, &fi) in f.iter().enumerate() {
                    let idx = top - df + i;
                    r[idx] = (r[idx] + p - c * fi % p) % p;
                }
            }
            r.pop();
            r = trim(r);
        }
        r
    }

    fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect();
        trim(out)
    }

    fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let mut a = trim(a.to_vec());
        let mut b = trim(b.to_vec());
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    /// `x^(p^k) mod f`.
    fn frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
        let mut h = rem(&[0, 1], f, p);
        for _ in 0..k {
            let mut acc = vec![1u64];
            let mut base = h.clone();
            let mut e = p;
            while e > 0 {
                if e & 1 == 1 {
                    acc = rem(&mul(&acc, &base, p), f, p);
                }
                base = rem(&mul(&base, &base, p), f, p);
                e >>= 1;
            }
            h = acc;
        }
        h
    }

    /// Rabin's irreducibility test for a monic `f`.
    pub fn is_irreducible(f: &[u64], p: u64) -> bool {
        let s = f.len() - 1;
        let x = rem(&[0, 1], f, p);
        if sub(&frobenius_power(f, p, s), &x, p) != Vec::<u64>::new() {
            return false;
        }
        prime_divisors(s as u64).into_iter().all(|r| {
            let h = sub(&frobenius_power(f, p, s / r as usize), &x, p);
            gcd(f, &h, p).len() == 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_gf2() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.generator(), f.one());
        assert_eq!(f.add(f.one(), f.one()), f.zero());
    }

    #[test]
    fn gf2_11_uses_trinomial() {
        let f = Field::new(2, 11).unwrap();
        // x^11 + x^2 + 1 is the first irreducible in the canonical order.
        let mut expected = vec![0u64; 12];
        expected[0] = 1;
        expected[2] = 1;
        expected[11] = 1;
        assert_eq!(f.modulus(), expected.as_slice());
        assert_eq!(f.element_order(f.generator()), 2047);
    }

    #[test]
    fn gf27_and_rejections() {
        let f = Field::new(3, 3).unwrap();
        assert_eq!(f.order(), 27);
        assert_eq!(f.element_order(f.generator()), 26);
        assert!(matches!(Field::new(4, 1), Err(Error::NotPrime(4))));
        assert!(Field::new(3, 0).is_err());
    }

    #[test]
    fn untabled_field_matches_definition() {
        // 3^11 > 2^16, so this exercises the slow paths.
        let f = Field::new(3, 11).unwrap();
        let g = f.generator();
        let x = f.pow(g, 12345);
        assert_eq!(f.log(x), Some(12345));
        assert_eq!(f.mul(x, f.inv(x)), f.one());
        assert_eq!(f.pow(x, f.order()), x);
    }

    #[test]
    fn serialization() {
        let f = Field::new(3, 3).unwrap();
        let x = f.parse("1,0,2").unwrap();
        assert_eq!(f.coeffs(x), vec![1, 0, 2]);
        assert_eq!(f.format(x), "1,0,2");
        assert_eq!(f.format(f.zero()), "0");
        assert_eq!(f.parse("-1").unwrap(), f.from_int(2));
        assert!(f.parse("1,x").is_err());
        assert!(f.parse("1,0,0,1").is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, s) in [(2, 4), (3, 2), (5, 2), (7, 1)] {
            let f = Field::new(p, s).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.pow(a, f.order()), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a)), f.one());
                }
                for &b in &els {
                    assert_eq!(f.mul(a, b), f.0.mul_slow(a, b));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }
}
