//! Dense polynomials over a finite field, and the bridge between defining sets
//! and generator polynomials of cyclic codes.

use std::fmt;

use thiserror::Error;

use crate::arith;
use crate::defset::{cyclotomic_coset, DefiningSet, DefsetError};
use crate::gf::{Field, FieldElement, GfError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error(transparent)]
    Field(#[from] GfError),
    #[error(transparent)]
    Defset(#[from] DefsetError),
    #[error("polynomials are over different fields")]
    FieldMismatch,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("coefficient {0} is not a field element")]
    BadCoefficient(u32),
    #[error("{q} is not a prime power")]
    NotPrimePower { q: u64 },
    #[error("length n must be positive")]
    ZeroLength,
    #[error("gcd(n={n}, q={q}) != 1, so x^n - 1 is not separable")]
    NotCoprime { n: usize, q: u64 },
    #[error("defining set is for n={set_n}, q={set_q} but the space is n={n}, q={q}")]
    SpaceMismatch { set_n: usize, set_q: u64, n: usize, q: u64 },
    #[error("field {ext} cannot host length {n} codes over GF({q})")]
    BadExtension { ext: String, n: usize, q: u64 },
    #[error("product has coefficients outside GF({q})")]
    OutsideBaseField { q: u64 },
    #[error("polynomial does not divide x^{n} - 1")]
    NotADivisor { n: usize },
}

/// Polynomial with coefficients lowest degree first; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u32>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly{:?} over {:?}", self.coeffs, self.field)
    }
}

impl Poly {
    pub fn new(field: &Field, coeffs: Vec<u32>) -> Result<Self, PolyError> {
        if let Some(&c) = coeffs.iter().find(|&&c| !field.contains(c)) {
            return Err(PolyError::BadCoefficient(c));
        }
        Ok(Self::trimmed(field, coeffs))
    }

    fn trimmed(field: &Field, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        Poly { field: field.clone(), coeffs: vec![1] }
    }

    /// `c x^k`.
    pub fn monomial(field: &Field, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::trimmed(field, coeffs)
    }

    /// `x^n - 1`.
    pub fn x_n_minus_1(field: &Field, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg(1);
        coeffs[n] = field.add(coeffs[n], 1);
        Self::trimmed(field, coeffs)
    }

    /// Monic polynomial with exactly the given roots (with multiplicity).
    pub fn from_roots(field: &Field, roots: impl IntoIterator<Item = u32>) -> Self {
        let mut coeffs = vec![1u32];
        for r in roots {
            // multiply by (x - r)
            let neg_r = field.neg(r);
            let mut next = vec![0u32; coeffs.len() + 1];
            for (i, &c) in coeffs.iter().enumerate() {
                next[i + 1] = field.add(next[i + 1], c);
                next[i] = field.add(next[i], field.mul(c, neg_r));
            }
            coeffs = next;
        }
        Self::trimmed(field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn check(&self, other: &Self) -> Result<(), PolyError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(PolyError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::trimmed(f, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Self::trimmed(f, coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(f));
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Self::trimmed(f, out))
    }

    pub fn scale(&self, c: u32) -> Self {
        let f = &self.field;
        Self::trimmed(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.field.inv(self.leading()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    /// `(quotient, remainder)` with `self = quotient * divisor + remainder`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        self.check(divisor)?;
        let f = &self.field;
        let db = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(f), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - db];
        for shift in (0..quot.len()).rev() {
            let c = f.mul(rem[shift + db], lead_inv);
            quot[shift] = c;
            if c == 0 {
                continue;
            }
            for (k, &d) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = f.sub(rem[shift + k], f.mul(c, d));
            }
        }
        rem.truncate(db);
        Ok((Self::trimmed(f, quot), Self::trimmed(f, rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Monic least common multiple.
    pub fn lcm(&self, other: &Self) -> Result<Self, PolyError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field));
        }
        let g = self.gcd(other)?;
        let (q, _) = self.mul(other)?.divmod(&g)?;
        Ok(q.monic())
    }

    /// Horner evaluation at a raw element of the same field.
    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn eval_at(&self, x: &FieldElement) -> Result<FieldElement, PolyError> {
        if x.field() != &self.field {
            return Err(PolyError::FieldMismatch);
        }
        Ok(self.field.element(self.eval(x.value()))?)
    }

    /// True when every coefficient lies in the subfield GF(q0).
    pub fn in_subfield(&self, q0: u64) -> bool {
        self.coeffs.iter().all(|&c| self.field.in_subfield(c, q0))
    }

    /// `x^deg * p(1/x)`, the coefficient reversal with respect to `deg`.
    pub fn reversed(&self, deg: usize) -> Self {
        let mut coeffs = vec![0u32; deg + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i <= deg {
                coeffs[deg - i] = c;
            }
        }
        Self::trimmed(&self.field, coeffs)
    }
}

/// Codes of length `n` over GF(q), realised inside the splitting field `ext`
/// of `x^n - 1`. `beta = alpha^{(|ext| - 1)/n}` is fixed by the field's default
/// primitive element, so every defining set is relative to this `beta`.
#[derive(Clone, Debug)]
pub struct CyclicSpace {
    q: u64,
    n: usize,
    ext: Field,
    beta: u32,
}

impl CyclicSpace {
    /// Characteristic and degree over GF(p) of the smallest field holding a
    /// primitive n-th root of unity and containing GF(q).
    pub fn extension_for(q: u64, n: usize) -> Result<(u64, u32), PolyError> {
        if n == 0 {
            return Err(PolyError::ZeroLength);
        }
        let (p, s) = arith::prime_power(q).ok_or(PolyError::NotPrimePower { q })?;
        let ord = arith::multiplicative_order(q, n as u64).ok_or(PolyError::NotCoprime { n, q })?;
        Ok((p, s * ord))
    }

    pub fn new(q: u64, n: usize) -> Result<Self, PolyError> {
        let (p, m) = Self::extension_for(q, n)?;
        Self::with_field(q, n, Field::new(p, m)?)
    }

    /// Uses a caller-supplied extension field, which must contain GF(q) and an
    /// n-th root of unity.
    pub fn with_field(q: u64, n: usize, ext: Field) -> Result<Self, PolyError> {
        if n == 0 {
            return Err(PolyError::ZeroLength);
        }
        if arith::gcd(n as u64, q) != 1 {
            return Err(PolyError::NotCoprime { n, q });
        }
        let bad = || PolyError::BadExtension { ext: format!("{ext:?}"), n, q };
        ext.subfield_degree(q).map_err(|_| bad())?;
        let beta = ext.nth_root_of_unity(n as u64).map_err(|_| bad())?;
        Ok(CyclicSpace { q, n, ext, beta })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// `beta^i`.
    pub fn root(&self, i: usize) -> u32 {
        self.ext.pow(self.beta, i as u64)
    }

    pub fn x_n_minus_1(&self) -> Poly {
        Poly::x_n_minus_1(&self.ext, self.n)
    }

    fn check_set(&self, z: &DefiningSet) -> Result<(), PolyError> {
        if z.n() != self.n || z.q() != self.q {
            return Err(PolyError::SpaceMismatch { set_n: z.n(), set_q: z.q(), n: self.n, q: self.q });
        }
        Ok(())
    }
}

/// Minimal polynomial of `beta^i` over GF(q): the product of `x - beta^j` over
/// the cyclotomic coset of `i`.
pub fn minimal_polynomial(i: usize, space: &CyclicSpace) -> Result<Poly, PolyError> {
    let coset = cyclotomic_coset(i % space.n, space.n, space.q)?;
    let m = Poly::from_roots(&space.ext, coset.iter().map(|j| space.root(j)));
    if !m.in_subfield(space.q) {
        return Err(PolyError::OutsideBaseField { q: space.q });
    }
    Ok(m)
}

/// `g(x) = prod_{i in Z} (x - beta^i)` for a coset-closed `Z`.
pub fn generator_from_defset(z: &DefiningSet, space: &CyclicSpace) -> Result<Poly, PolyError> {
    space.check_set(z)?;
    z.require_coset_closed()?;
    let g = Poly::from_roots(&space.ext, z.iter().map(|i| space.root(i)));
    if !g.in_subfield(space.q) {
        return Err(PolyError::OutsideBaseField { q: space.q });
    }
    Ok(g)
}

/// `{ i : g(beta^i) = 0 }` for a divisor `g` of `x^n - 1`.
pub fn defset_from_generator(g: &Poly, space: &CyclicSpace) -> Result<DefiningSet, PolyError> {
    if g.field() != &space.ext {
        return Err(PolyError::FieldMismatch);
    }
    let (_, r) = space.x_n_minus_1().divmod(g)?;
    if !r.is_zero() {
        return Err(PolyError::NotADivisor { n: space.n });
    }
    let roots = (0..space.n).filter(|&i| g.eval(space.root(i)) == 0);
    Ok(DefiningSet::new(space.n, space.q, roots)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defset::CosetPartition;

    fn poly(f: &Field, c: &[u32]) -> Poly {
        Poly::new(f, c.to_vec()).unwrap()
    }

    #[test]
    fn gcd_over_gf2() {
        let f = Field::new(2, 1).unwrap();
        let g = poly(&f, &[1, 0, 1]).gcd(&poly(&f, &[1, 1])).unwrap();
        assert_eq!(g, poly(&f, &[1, 1]));
    }

    #[test]
    fn divmod_x3_minus_1_over_gf3() {
        let f = Field::new(3, 1).unwrap();
        let (q, r) = Poly::x_n_minus_1(&f, 3).divmod(&poly(&f, &[2, 1])).unwrap();
        assert_eq!(q, poly(&f, &[1, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(poly(&f, &[1]).divmod(&Poly::zero(&f)).unwrap_err(), PolyError::DivisionByZero);
    }

    #[test]
    fn lcm_of_conjugate_linear_factors_over_gf4() {
        let f = Field::new(2, 2).unwrap();
        let a = f.alpha();
        let a2 = f.mul(a, a);
        let l = Poly::from_roots(&f, [a]).lcm(&Poly::from_roots(&f, [a2])).unwrap();
        assert_eq!(l, poly(&f, &[1, 1, 1]));
        assert_eq!(l.eval(a), 0);
        assert_eq!(l.eval(a2), 0);
    }

    #[test]
    fn evaluation() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(poly(&f, &[1, 1, 1]).eval(f.alpha()), 0);
        assert_eq!(Poly::zero(&f).eval(3), 0);
        let s = CyclicSpace::new(2, 7).unwrap();
        assert_eq!(s.x_n_minus_1().eval(s.beta()), 0);
        let other = Field::new(3, 1).unwrap();
        assert_eq!(poly(&f, &[1]).eval_at(&other.element(1).unwrap()).unwrap_err(), PolyError::FieldMismatch);
        assert_eq!(poly(&f, &[1, 1]).add(&poly(&other, &[1])).unwrap_err(), PolyError::FieldMismatch);
    }

    #[test]
    fn minimal_polynomials() {
        let s = CyclicSpace::new(2, 7).unwrap();
        let m0 = minimal_polynomial(0, &s).unwrap();
        assert_eq!(m0, poly(s.ext(), &[1, 1])); // x - 1 = x + 1
        let m1 = minimal_polynomial(1, &s).unwrap();
        assert_eq!(m1.degree(), Some(3));
        let x3x1 = poly(s.ext(), &[1, 1, 0, 1]);
        let x3x21 = poly(s.ext(), &[1, 0, 1, 1]);
        assert!(m1 == x3x1 || m1 == x3x21);

        let s = CyclicSpace::new(3, 8).unwrap();
        let m1 = minimal_polynomial(1, &s).unwrap();
        assert_eq!(m1.degree(), Some(2));
        assert_eq!(m1.eval(s.root(1)), 0);
        assert_eq!(m1.eval(s.root(3)), 0);
        assert!(m1.in_subfield(3));
    }

    #[test]
    fn generator_examples() {
        let s = CyclicSpace::new(2, 7).unwrap();
        let empty = DefiningSet::empty(7, 2).unwrap();
        assert_eq!(generator_from_defset(&empty, &s).unwrap(), Poly::one(s.ext()));
        let full = DefiningSet::full(7, 2).unwrap();
        assert_eq!(generator_from_defset(&full, &s).unwrap(), s.x_n_minus_1());
        let ham = DefiningSet::new(7, 2, [1, 2, 4]).unwrap();
        let g = generator_from_defset(&ham, &s).unwrap();
        assert_eq!(g.degree(), Some(3));
        let (_, r) = s.x_n_minus_1().divmod(&g).unwrap();
        assert!(r.is_zero());
        for z in [empty, full, ham] {
            let g = generator_from_defset(&z, &s).unwrap();
            assert_eq!(defset_from_generator(&g, &s).unwrap(), z);
        }
        let open = DefiningSet::new(7, 2, [1]).unwrap();
        assert!(matches!(generator_from_defset(&open, &s), Err(PolyError::Defset(_))));
        let wrong = DefiningSet::new(8, 3, [1, 3]).unwrap();
        assert!(matches!(generator_from_defset(&wrong, &s), Err(PolyError::SpaceMismatch { .. })));
        let nondivisor = poly(s.ext(), &[1, 1, 1]);
        assert_eq!(defset_from_generator(&nondivisor, &s).unwrap_err(), PolyError::NotADivisor { n: 7 });
    }

    #[test]
    fn generator_round_trip_all_closed_sets() {
        for q in [2u64, 3, 4] {
            for n in 1..=15usize {
                if arith::gcd(n as u64, q) != 1 {
                    continue;
                }
                let s = CyclicSpace::new(q, n).unwrap();
                let part = CosetPartition::new(n, q).unwrap();
                for z in part.all_unions().unwrap() {
                    let g = generator_from_defset(&z, &s).unwrap();
                    assert_eq!(g.degree(), Some(z.len()), "q={q} n={n} z={z}");
                    assert_eq!(defset_from_generator(&g, &s).unwrap(), z);
                }
                for rep in part.representatives() {
                    let m = minimal_polynomial(rep, &s).unwrap();
                    let (_, r) = s.x_n_minus_1().divmod(&m).unwrap();
                    assert!(r.is_zero());
                    // irreducible over GF(q): no proper coset-closed subset of its
                    // roots, i.e. its root set is a single coset
                    let roots = DefiningSet::new(n, q, (0..n).filter(|&i| m.eval(s.root(i)) == 0)).unwrap();
                    assert_eq!(roots, cyclotomic_coset(rep, n, q).unwrap());
                }
            }
        }
    }

    #[test]
    fn space_construction_errors() {
        assert_eq!(CyclicSpace::new(2, 6).unwrap_err(), PolyError::NotCoprime { n: 6, q: 2 });
        assert_eq!(CyclicSpace::new(6, 5).unwrap_err(), PolyError::NotPrimePower { q: 6 });
        assert_eq!(CyclicSpace::new(2, 0).unwrap_err(), PolyError::ZeroLength);
        let s = CyclicSpace::new(2, 13).unwrap();
        assert_eq!(s.ext().q(), 4096);
        let gf9 = Field::new(3, 2).unwrap();
        assert!(CyclicSpace::with_field(3, 5, gf9.clone()).is_err());
        assert!(CyclicSpace::with_field(9, 8, gf9).is_ok());
    }
}
