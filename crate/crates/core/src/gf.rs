//! Exact arithmetic in GF(p^m).
//!
//! Elements are plain `u32` handles: the value `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`
//! encodes the residue `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` modulo the field's
//! monic modulus. The raw API on [`Field`] is what matrices and polynomials use in
//! their inner loops; [`FieldElement`] carries its field along and checks that
//! operands agree.
//!
//! The default modulus for `(p, m)` is the first primitive polynomial when the
//! monic candidates are ordered by the integer value of their lower coefficients,
//! so the primitive element `alpha` (the residue of `x`) is reproducible.

use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use thiserror::Error;

use crate::arith;

/// Largest supported field cardinality.
pub const MAX_FIELD_SIZE: u64 = 1 << 20;

/// Fields up to this size get log/antilog tables.
const TABLE_LIMIT: u32 = 1 << 16;

/// Odd-characteristic fields up to this size get a full addition table.
const ADD_TABLE_LIMIT: u32 = 256;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{m} exceeds the cap of 2^20")]
    TooLarge { p: u64, m: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("{q0} is not the size of a subfield of GF({q})")]
    NotASubfield { q0: u64, q: u64 },
    #[error("no primitive {n}-th root of unity: {n} does not divide {order}")]
    NoRootOfUnity { n: u64, order: u64 },
    #[error("modulus must be monic of degree {m} with coefficients below {p}")]
    MalformedModulus { p: u64, m: u32 },
    #[error("modulus is reducible over GF({0})")]
    Reducible(u64),
    #[error("the residue of x does not generate the multiplicative group")]
    NotPrimitive,
    #[error("value {value} is not an element of GF({q})")]
    OutOfRange { value: u64, q: u64 },
}

/// Immutable description of GF(p^m) together with its lookup tables.
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    alpha: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    add: Vec<u32>,
    neg: Vec<u32>,
}

impl FieldSpec {
    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Cardinality `p^m`.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Monic modulus, lowest-degree coefficient first (length `m + 1`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed primitive element (residue of `x`).
    pub fn alpha(&self) -> u32 {
        self.alpha
    }

    fn has_tables(&self) -> bool {
        !self.log.is_empty()
    }

    fn digits(&self, mut v: u32) -> Vec<u32> {
        let mut out = vec![0; self.m as usize];
        for d in out.iter_mut() {
            *d = v % self.p;
            v /= self.p;
        }
        out
    }

    fn pack_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add_digitwise(&self, mut a: u32, mut b: u32) -> u32 {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((a % p + b % p) % p) * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    fn neg_digitwise(&self, mut a: u32) -> u32 {
        let p = self.p;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.m {
            out += ((p - a % p) % p) * place;
            place *= p;
            a /= p;
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let prod = mulmod(&self.digits(a), &self.digits(b), &self.modulus, self.p);
        self.pack_digits(&prod)
    }
}

/// Shared handle to a finite field. Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<FieldSpec>);

impl Deref for Field {
    type Target = FieldSpec;

    fn deref(&self) -> &FieldSpec {
        &self.0
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.p == other.p && self.m == other.m && self.modulus == other.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

impl Field {
    /// GF(p^m) with the deterministic default modulus.
    pub fn new(p: u64, m: u32) -> Result<Field, GfError> {
        check_size(p, m)?;
        let (p32, q) = (p as u32, (p as u32).pow(m));
        for tail in 0..q {
            let mut modulus = digits_of(tail, p32, m);
            modulus.push(1);
            if modulus[0] == 0 {
                continue;
            }
            if is_primitive(&modulus, p32) && is_irreducible(&modulus, p32) {
                return Ok(Field::build(p32, m, modulus));
            }
        }
        unreachable!("every finite field has a primitive polynomial")
    }

    /// GF(p^m) with an explicit modulus (lowest-degree coefficient first).
    pub fn with_modulus(p: u64, m: u32, modulus: &[u32]) -> Result<Field, GfError> {
        check_size(p, m)?;
        let p32 = p as u32;
        let well_formed =
            modulus.len() == m as usize + 1 && modulus.last() == Some(&1) && modulus.iter().all(|&c| c < p32);
        if !well_formed {
            return Err(GfError::MalformedModulus { p, m });
        }
        if !is_irreducible(modulus, p32) {
            return Err(GfError::Reducible(p));
        }
        if !is_primitive(modulus, p32) {
            return Err(GfError::NotPrimitive);
        }
        Ok(Field::build(p32, m, modulus.to_vec()))
    }

    /// GF(q) for a prime power `q`.
    pub fn of_size(q: u64) -> Result<Field, GfError> {
        let (p, m) = arith::prime_power(q).ok_or(GfError::NotPrimePower(q))?;
        Field::new(p, m)
    }

    fn build(p: u32, m: u32, modulus: Vec<u32>) -> Field {
        let q = p.pow(m);
        let alpha = {
            let x = x_residue(&modulus, p);
            x.iter().rev().fold(0, |acc, &d| acc * p + d)
        };
        let mut spec =
            FieldSpec { p, m, q, modulus, alpha, exp: Vec::new(), log: Vec::new(), add: Vec::new(), neg: Vec::new() };
        if q <= TABLE_LIMIT {
            let order = (q - 1) as usize;
            let mut exp = vec![0u32; 2 * order.max(1)];
            let mut log = vec![0u32; q as usize];
            let mut cur = 1u32;
            for (i, e) in exp.iter_mut().take(order).enumerate() {
                *e = cur;
                log[cur as usize] = i as u32;
                cur = spec.mul_slow(cur, alpha);
            }
            for i in order..exp.len() {
                exp[i] = exp[i - order];
            }
            spec.exp = exp;
            spec.log = log;
            spec.neg = (0..q).map(|a| spec.neg_digitwise(a)).collect();
        }
        if p != 2 && q <= ADD_TABLE_LIMIT {
            let mut add = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = spec.add_digitwise(a, b);
                }
            }
            spec.add = add;
        }
        Field(Arc::new(spec))
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn contains(&self, a: u32) -> bool {
        a < self.q
    }

    /// All element handles, `0..q`.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// The element `c` of the prime subfield.
    pub fn from_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            a ^ b
        } else if !self.add.is_empty() {
            self.add[(a * self.q + b) as usize]
        } else {
            self.add_digitwise(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            a
        } else if !self.neg.is_empty() {
            self.neg[a as usize]
        } else {
            self.neg_digitwise(a)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.has_tables() {
            self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
        } else if self.m == 1 {
            (a as u64 * b as u64 % self.p as u64) as u32
        } else {
            self.mul_slow(a, b)
        }
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.has_tables() {
            let order = self.q - 1;
            Some(self.exp[((order - self.log[a as usize]) % order) as usize])
        } else {
            Some(self.pow(a, self.q as u64 - 2))
        }
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|ib| self.mul(a, ib))
    }

    /// `a^e`; for nonzero `a` the exponent is reduced modulo `q - 1`.
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.q - 1) as u64;
        let e = e % order;
        if self.has_tables() {
            let l = self.log[a as usize] as u64;
            return self.exp[(l * e % order) as usize];
        }
        let (mut base, mut e, mut acc) = (a, e, 1u32);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a^e` for a signed exponent; negative exponents need a nonzero base.
    pub fn pow_signed(&self, a: u32, e: i64) -> Option<u32> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|ia| self.pow(ia, e.unsigned_abs()))
        }
    }

    /// Discrete logarithm to base `alpha`.
    pub fn log(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        if self.has_tables() {
            return Some(self.log[a as usize]);
        }
        let mut cur = 1;
        for i in 0..self.q - 1 {
            if cur == a {
                return Some(i);
            }
            cur = self.mul(cur, self.alpha);
        }
        None
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let group = (self.q - 1) as u64;
        let mut ord = group;
        for r in arith::prime_factors(group) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == 1 {
                ord /= r;
            }
        }
        Some(ord)
    }

    /// Checks that `q0` is the cardinality of a subfield and returns its degree.
    pub fn subfield_degree(&self, q0: u64) -> Result<u32, GfError> {
        let err = GfError::NotASubfield { q0, q: self.q as u64 };
        match arith::prime_power(q0) {
            Some((p, s)) if p == self.p as u64 && self.m.is_multiple_of(s) => Ok(s),
            _ => Err(err),
        }
    }

    /// `x^{q0}`, the Frobenius power relative to the subfield GF(q0).
    pub fn frobenius(&self, a: u32, q0: u64) -> Result<u32, GfError> {
        self.subfield_degree(q0)?;
        Ok(self.pow(a, q0))
    }

    pub fn in_subfield(&self, a: u32, q0: u64) -> bool {
        self.pow(a, q0) == a
    }

    /// Elements of the subfield GF(q0): zero followed by increasing powers of its
    /// generator `alpha^{(q-1)/(q0-1)}`.
    pub fn subfield_elements(&self, q0: u64) -> Result<Vec<u32>, GfError> {
        self.subfield_degree(q0)?;
        let gen = self.pow(self.alpha, (self.q as u64 - 1) / (q0 - 1));
        let mut out = Vec::with_capacity(q0 as usize);
        out.push(0);
        let mut cur = 1;
        for _ in 0..q0 - 1 {
            out.push(cur);
            cur = self.mul(cur, gen);
        }
        Ok(out)
    }

    /// `beta = alpha^{(q-1)/n}`, of multiplicative order exactly `n`.
    pub fn nth_root_of_unity(&self, n: u64) -> Result<u32, GfError> {
        let order = self.q as u64 - 1;
        if n == 0 || !order.is_multiple_of(n) {
            return Err(GfError::NoRootOfUnity { n, order });
        }
        Ok(self.pow(self.alpha, order / n))
    }

    pub fn element(&self, value: u32) -> Result<FieldElement, GfError> {
        FieldElement::new(self, value)
    }
}

/// A field element that knows its field; binary operations check that both
/// operands come from the same field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.value, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn new(field: &Field, value: u32) -> Result<Self, GfError> {
        if !field.contains(value) {
            return Err(GfError::OutOfRange { value: value as u64, q: field.q as u64 });
        }
        Ok(FieldElement { field: field.clone(), value })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Coefficient vector over GF(p), lowest degree first.
    pub fn coeffs(&self) -> Vec<u32> {
        self.field.digits(self.value)
    }

    fn same_field(&self, other: &Self) -> Result<(), GfError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(GfError::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> Self {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn add(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, GfError> {
        self.same_field(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn neg(&self) -> Self {
        self.with(self.field.neg(self.value))
    }

    pub fn inv(&self) -> Result<Self, GfError> {
        let v = self.field.inv(self.value).ok_or(GfError::InverseOfZero)?;
        Ok(self.with(v))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }

    pub fn frobenius(&self, q0: u64) -> Result<Self, GfError> {
        Ok(self.with(self.field.frobenius(self.value, q0)?))
    }
}

fn check_size(p: u64, m: u32) -> Result<(), GfError> {
    if !arith::is_prime(p) {
        return Err(GfError::NotPrime(p));
    }
    if m == 0 {
        return Err(GfError::ZeroDegree);
    }
    match p.checked_pow(m) {
        Some(q) if q <= MAX_FIELD_SIZE => Ok(()),
        _ => Err(GfError::TooLarge { p, m }),
    }
}

fn digits_of(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize + 1);
    for _ in 0..m {
        out.push(v % p);
        v /= p;
    }
    out
}

/// Residue of `x` modulo the monic `f`, as `deg f` digits.
fn x_residue(f: &[u32], p: u32) -> Vec<u32> {
    let m = f.len() - 1;
    if m == 1 {
        vec![(p - f[0]) % p]
    } else {
        let mut x = vec![0; m];
        x[1] = 1;
        x
    }
}

/// Product of two residues modulo the monic `f` over GF(p).
fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let m = f.len() - 1;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    for deg in (m..prod.len()).rev() {
        let c = prod[deg] % p64;
        if c == 0 {
            continue;
        }
        for (k, &fk) in f.iter().enumerate() {
            let idx = deg - m + k;
            prod[idx] = (prod[idx] + (p64 - c) * fk as u64) % p64;
        }
    }
    prod.truncate(m);
    prod.into_iter().map(|c| c as u32).collect()
}

fn powmod(base: &[u32], mut e: u64, f: &[u32], p: u32) -> Vec<u32> {
    let m = f.len() - 1;
    let mut acc = vec![0; m];
    acc[0] = 1;
    let mut base = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &base, f, p);
        }
        base = mulmod(&base, &base, f, p);
        e >>= 1;
    }
    acc
}

fn is_primitive(f: &[u32], p: u32) -> bool {
    let m = f.len() - 1;
    let group = (p as u64).pow(m as u32) - 1;
    let x = x_residue(f, p);
    let is_one = |v: &[u32]| v[0] == 1 && v[1..].iter().all(|&c| c == 0);
    if !is_one(&powmod(&x, group, f, p)) {
        return false;
    }
    arith::prime_factors(group).into_iter().all(|r| !is_one(&powmod(&x, group / r, f, p)))
}

/// Remainder of `a` by the monic `g` over GF(p); both lowest-degree first.
fn rem_monic(a: &[u32], g: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if lead != 0 {
            for (k, &gk) in g.iter().enumerate() {
                r[shift + k] = (r[shift + k] + (p - lead) * gk) % p;
            }
        }
        r.pop();
    }
    r
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let m = (f.len() - 1) as u32;
    for d in 1..=m / 2 {
        for tail in 0..p.pow(d) {
            let mut g = digits_of(tail, p, d);
            g.push(1);
            if rem_monic(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_is_prime_field_with_modulus_x_plus_1() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.modulus(), &[1, 1]);
        assert_eq!(f.alpha(), 1);
        assert_eq!(f.order(1), Some(1));
    }

    #[test]
    fn gf4_uses_the_only_irreducible_quadratic() {
        // Exhaustive: x^2, x^2+1 = (x+1)^2, x^2+x = x(x+1) all reducible.
        let irreducible: Vec<u32> = (0..4).filter(|&t| is_irreducible(&[t % 2, t / 2, 1], 2)).collect();
        assert_eq!(irreducible, vec![3]);
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn gf9_modulus_is_first_primitive_quadratic() {
        // Brute force over all 9 monic quadratics: which have x of order 8?
        let p = 3;
        let mut primitive = Vec::new();
        for t in 0..9u32 {
            let f = [t % 3, t / 3, 1];
            // x^k for k = 1, 2, ...; order is the first k with x^k = 1
            let mut x = vec![0, 1];
            let mut ord = None;
            for k in 1..=8 {
                if x == [1, 0] {
                    ord = Some(k);
                    break;
                }
                x = mulmod(&x, &[0, 1], &f, p);
            }
            if ord == Some(8) {
                primitive.push(t);
            }
        }
        // x^2+x+2 (t = 5) and x^2+2x+2 (t = 8)
        assert_eq!(primitive, vec![5, 8]);
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[2, 1, 1]);
    }

    #[test]
    fn gf2_8_default_is_the_usual_primitive_polynomial() {
        let f = Field::new(2, 8).unwrap();
        // x^8 + x^4 + x^3 + x^2 + 1
        assert_eq!(f.modulus(), &[1, 0, 1, 1, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn small_identities() {
        let gf4 = Field::new(2, 2).unwrap();
        let a = gf4.alpha();
        assert_eq!(gf4.mul(a, gf4.mul(a, a)), 1);

        let gf3 = Field::new(3, 1).unwrap();
        assert_eq!(gf3.inv(2), Some(2));

        let gf9 = Field::new(3, 2).unwrap();
        let a = gf9.alpha();
        let mut acc = 1;
        for _ in 0..8 {
            acc = gf9.mul(acc, a);
        }
        assert_eq!(acc, 1);
        assert_eq!(gf9.pow(a, 8), 1);
        assert_eq!(gf9.order(a), Some(8));
    }

    #[test]
    fn frobenius_examples() {
        let gf4 = Field::new(2, 2).unwrap();
        let a = gf4.alpha();
        assert_eq!(gf4.frobenius(a, 2).unwrap(), gf4.mul(a, a));
        assert_eq!(gf4.frobenius(1, 2).unwrap(), 1);
        assert!(gf4.frobenius(a, 3).is_err());

        let gf9 = Field::new(3, 2).unwrap();
        for x in gf9.elements() {
            let y = gf9.frobenius(gf9.frobenius(x, 3).unwrap(), 3).unwrap();
            assert_eq!(y, x);
        }
        // 9 is GF(9) itself; 27 is not a subfield.
        assert!(gf9.frobenius(1, 9).is_ok());
        assert!(gf9.frobenius(1, 27).is_err());
    }

    #[test]
    fn roots_of_unity() {
        let gf4 = Field::new(2, 2).unwrap();
        assert_eq!(gf4.nth_root_of_unity(3).unwrap(), gf4.alpha());
        let gf9 = Field::new(3, 2).unwrap();
        assert_eq!(gf9.nth_root_of_unity(8).unwrap(), gf9.alpha());
        let b = gf9.nth_root_of_unity(4).unwrap();
        assert_eq!(b, gf9.mul(gf9.alpha(), gf9.alpha()));
        let powers: Vec<u32> = (1..=4).map(|k| gf9.pow(b, k)).collect();
        assert_eq!(powers.iter().position(|&x| x == 1), Some(3));
        assert!(matches!(gf9.nth_root_of_unity(5), Err(GfError::NoRootOfUnity { .. })));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(Field::new(4, 1).unwrap_err(), GfError::NotPrime(4));
        assert_eq!(Field::new(2, 21).unwrap_err(), GfError::TooLarge { p: 2, m: 21 });
        assert_eq!(Field::new(2, 0).unwrap_err(), GfError::ZeroDegree);
        assert!(Field::new(2, 20).is_ok());
        assert_eq!(Field::with_modulus(3, 2, &[1, 0, 1]).unwrap_err(), GfError::NotPrimitive);
        assert_eq!(Field::with_modulus(3, 2, &[2, 0, 1]).unwrap_err(), GfError::Reducible(3));
        assert!(matches!(Field::with_modulus(3, 2, &[2, 1]), Err(GfError::MalformedModulus { .. })));
        let f = Field::with_modulus(3, 2, &[2, 2, 1]).unwrap();
        assert_eq!(f.order(f.alpha()), Some(8));
    }

    #[test]
    fn checked_elements() {
        let gf4 = Field::new(2, 2).unwrap();
        let gf9 = Field::new(3, 2).unwrap();
        let a = gf4.element(2).unwrap();
        let b = gf9.element(2).unwrap();
        assert_eq!(a.add(&b).unwrap_err(), GfError::FieldMismatch);
        assert_eq!(gf4.element(0).unwrap().inv().unwrap_err(), GfError::InverseOfZero);
        assert!(gf4.element(4).is_err());
        let a3 = a.mul(&a).unwrap().mul(&a).unwrap();
        assert_eq!(a3.value(), 1);
        assert_eq!(a.inv().unwrap().mul(&a).unwrap().value(), 1);
        assert_eq!(gf9.element(5).unwrap().coeffs(), vec![2, 1]);
    }

    #[test]
    fn large_field_without_tables_agrees_with_tables() {
        // GF(2^17) runs the slow path; compare a few products against a table field
        // only indirectly: alpha has full order and inverses work.
        let f = Field::new(2, 17).unwrap();
        assert!(!f.has_tables());
        let a = f.alpha();
        assert_eq!(f.order(a), Some((1 << 17) - 1));
        let x = f.pow(a, 12345);
        assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
        let g = Field::new(1048573, 1).unwrap();
        assert_eq!(g.mul(g.inv(12).unwrap(), 12), 1);
    }

    #[test]
    fn subfields() {
        let gf16 = Field::new(2, 4).unwrap();
        let gf4 = gf16.subfield_elements(4).unwrap();
        assert_eq!(gf4.len(), 4);
        assert!(gf4.iter().all(|&x| gf16.in_subfield(x, 4)));
        assert_eq!(gf16.elements().filter(|&x| gf16.in_subfield(x, 4)).count(), 4);
        assert!(gf16.subfield_elements(8).is_err());
    }
}
