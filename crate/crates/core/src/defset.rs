//! Subsets of Z_n: cyclotomic cosets, dual defining sets, intersections and the
//! BCH bound. Everything here is integer bookkeeping; no field arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;

/// Cap on the number of cosets when enumerating all coset-closed subsets.
pub const MAX_ENUMERATED_COSETS: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DefsetError {
    #[error("length n must be positive")]
    ZeroLength,
    #[error("gcd({n}, {q}) != 1")]
    NotCoprime { n: usize, q: u64 },
    #[error("element {elem} is not a residue mod {n}")]
    OutOfRange { elem: usize, n: usize },
    #[error("defining sets live in different rings (n={n1}, q={q1} vs n={n2}, q={q2})")]
    Mismatch { n1: usize, q1: u64, n2: usize, q2: u64 },
    #[error("coset base {0} is not the square of an integer")]
    NotSquareBase(u64),
    #[error("defining set {0} is not closed under multiplication by {1}")]
    NotCosetClosed(String, u64),
    #[error("dimension k = {k} must satisfy 1 <= k <= n = {n}")]
    DimensionRange { n: usize, k: usize },
    #[error("{count} cosets is too many to enumerate all unions (cap {MAX_ENUMERATED_COSETS})")]
    TooManyCosets { count: usize },
}

/// A sorted, duplicate-free subset of Z_n together with the coset base `q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DefiningSet {
    n: usize,
    q: u64,
    elems: Vec<usize>,
}

impl fmt::Display for DefiningSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl DefiningSet {
    pub fn new(n: usize, q: u64, elems: impl IntoIterator<Item = usize>) -> Result<Self, DefsetError> {
        if n == 0 {
            return Err(DefsetError::ZeroLength);
        }
        let mut v: Vec<usize> = elems.into_iter().collect();
        if let Some(&elem) = v.iter().find(|&&e| e >= n) {
            return Err(DefsetError::OutOfRange { elem, n });
        }
        v.sort_unstable();
        v.dedup();
        Ok(DefiningSet { n, q, elems: v })
    }

    /// Builds a set from arbitrary integers, reducing each into `[0, n)`.
    pub fn from_residues(n: usize, q: u64, elems: impl IntoIterator<Item = i64>) -> Result<Self, DefsetError> {
        if n == 0 {
            return Err(DefsetError::ZeroLength);
        }
        Self::new(n, q, elems.into_iter().map(|e| e.rem_euclid(n as i64) as usize))
    }

    pub fn empty(n: usize, q: u64) -> Result<Self, DefsetError> {
        Self::new(n, q, std::iter::empty())
    }

    pub fn full(n: usize, q: u64) -> Result<Self, DefsetError> {
        Self::new(n, q, 0..n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elems.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for &e in &self.elems {
            m[e] = true;
        }
        m
    }

    fn with_mask(&self, mask: &[bool]) -> Self {
        DefiningSet { n: self.n, q: self.q, elems: (0..self.n).filter(|&i| mask[i]).collect() }
    }

    fn same_ring(&self, other: &Self) -> Result<(), DefsetError> {
        if self.n == other.n && self.q == other.q {
            Ok(())
        } else {
            Err(DefsetError::Mismatch { n1: self.n, q1: self.q, n2: other.n, q2: other.q })
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self, DefsetError> {
        self.same_ring(other)?;
        let mut m = self.mask();
        for &e in &other.elems {
            m[e] = true;
        }
        Ok(self.with_mask(&m))
    }

    pub fn intersection(&self, other: &Self) -> Result<Self, DefsetError> {
        self.same_ring(other)?;
        let elems = self.elems.iter().copied().filter(|&e| other.contains(e)).collect();
        Ok(DefiningSet { n: self.n, q: self.q, elems })
    }

    pub fn difference(&self, other: &Self) -> Result<Self, DefsetError> {
        self.same_ring(other)?;
        let elems = self.elems.iter().copied().filter(|&e| !other.contains(e)).collect();
        Ok(DefiningSet { n: self.n, q: self.q, elems })
    }

    pub fn complement(&self) -> Self {
        let m = self.mask();
        let inv: Vec<bool> = m.iter().map(|b| !b).collect();
        self.with_mask(&inv)
    }

    /// `{ factor * i mod n }` for a possibly negative factor.
    pub fn scaled(&self, factor: i64) -> Self {
        let n = self.n as i128;
        let mut m = vec![false; self.n];
        for &e in &self.elems {
            m[(factor as i128 * e as i128).rem_euclid(n) as usize] = true;
        }
        self.with_mask(&m)
    }

    pub fn negated(&self) -> Self {
        self.scaled(-1)
    }

    /// Same elements, reinterpreted with another coset base.
    pub fn with_base(&self, q: u64) -> Self {
        DefiningSet { n: self.n, q, elems: self.elems.clone() }
    }

    pub fn is_coset_closed(&self) -> bool {
        let qn = self.q % self.n as u64;
        self.elems.iter().all(|&i| self.contains((i as u64 * qn % self.n as u64) as usize))
    }

    pub fn require_coset_closed(&self) -> Result<(), DefsetError> {
        if self.is_coset_closed() {
            Ok(())
        } else {
            Err(DefsetError::NotCosetClosed(self.to_string(), self.q))
        }
    }
}

/// Orbit of `i` under multiplication by `q` modulo `n`.
pub fn cyclotomic_coset(i: usize, n: usize, q: u64) -> Result<DefiningSet, DefsetError> {
    if n == 0 {
        return Err(DefsetError::ZeroLength);
    }
    if arith::gcd(n as u64, q) != 1 {
        return Err(DefsetError::NotCoprime { n, q });
    }
    if i >= n {
        return Err(DefsetError::OutOfRange { elem: i, n });
    }
    let qn = q % n as u64;
    let mut orbit = vec![i];
    let mut x = (i as u64 * qn % n as u64) as usize;
    while x != i {
        orbit.push(x);
        x = (x as u64 * qn % n as u64) as usize;
    }
    DefiningSet::new(n, q, orbit)
}

/// The cyclotomic cosets of Z_n, ordered by their minimal representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetPartition {
    n: usize,
    q: u64,
    cosets: Vec<DefiningSet>,
}

impl CosetPartition {
    pub fn new(n: usize, q: u64) -> Result<Self, DefsetError> {
        let mut seen = vec![false; n];
        let mut cosets = Vec::new();
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let c = cyclotomic_coset(i, n, q)?;
            for e in c.iter() {
                seen[e] = true;
            }
            cosets.push(c);
        }
        if n == 0 {
            return Err(DefsetError::ZeroLength);
        }
        Ok(CosetPartition { n, q, cosets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn cosets(&self) -> &[DefiningSet] {
        &self.cosets
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.cosets.iter().map(|c| c.elems[0]).collect()
    }

    /// Every union of cosets, in increasing bitmask order over the cosets.
    pub fn all_unions(&self) -> Result<Vec<DefiningSet>, DefsetError> {
        let count = self.cosets.len();
        if count > MAX_ENUMERATED_COSETS {
            return Err(DefsetError::TooManyCosets { count });
        }
        let mut out = Vec::with_capacity(1 << count);
        for mask in 0u32..(1u32 << count) {
            let elems = (0..count).filter(|&j| mask >> j & 1 == 1).flat_map(|j| self.cosets[j].iter());
            out.push(DefiningSet::new(self.n, self.q, elems)?);
        }
        Ok(out)
    }
}

/// Union of the cosets `C_i` for `i` in `reps`.
pub fn union_of_cosets(reps: impl IntoIterator<Item = usize>, n: usize, q: u64) -> Result<DefiningSet, DefsetError> {
    let mut acc = DefiningSet::empty(n, q)?;
    for i in reps {
        acc = acc.union(&cyclotomic_coset(i % n, n, q)?)?;
    }
    Ok(acc)
}

/// Euclidean dual: `Z_n \ { -i : i in Z }`.
pub fn euclidean_dual_defset(z: &DefiningSet) -> DefiningSet {
    z.negated().complement()
}

/// Hermitian dual over GF(q^2), where the set's coset base is `q^2`:
/// `Z_n \ { -q i : i in Z }`.
pub fn hermitian_dual_defset(z: &DefiningSet) -> Result<DefiningSet, DefsetError> {
    let q0 = arith::exact_sqrt(z.q).ok_or(DefsetError::NotSquareBase(z.q))?;
    Ok(z.scaled(-(q0 as i64)).complement())
}

/// `n - |Z1 ∪ Z2|`, the dimension of the intersection of the two cyclic codes.
pub fn intersection_dim(z1: &DefiningSet, z2: &DefiningSet) -> Result<usize, DefsetError> {
    Ok(z1.n - z1.union(z2)?.len())
}

/// One more than the longest run of cyclically consecutive elements.
pub fn bch_bound(z: &DefiningSet) -> usize {
    let n = z.n;
    if z.len() == n {
        return n + 1;
    }
    let mut best = 0;
    for &start in &z.elems {
        if z.contains((start + n - 1) % n) {
            continue;
        }
        let mut len = 0;
        while z.contains((start + len) % n) {
            len += 1;
        }
        best = best.max(len);
    }
    best + 1
}

pub fn is_lcd_euclidean(z: &DefiningSet) -> bool {
    z.union(&euclidean_dual_defset(z)).map(|u| u.len() == z.n).unwrap_or(false)
}

pub fn is_lcd_hermitian(z: &DefiningSet) -> Result<bool, DefsetError> {
    Ok(z.union(&hermitian_dual_defset(z)?)?.len() == z.n)
}

fn check_rs(n: usize, k: usize) -> Result<(), DefsetError> {
    if n == 0 {
        return Err(DefsetError::ZeroLength);
    }
    if k == 0 || k > n {
        return Err(DefsetError::DimensionRange { n, k });
    }
    Ok(())
}

/// `{b, b+1, ..., b+n-k-1} mod n`, the defining set of `RS_k(n, b)`.
pub fn rs_defset(q: u64, n: usize, k: usize, b: usize) -> Result<DefiningSet, DefsetError> {
    check_rs(n, k)?;
    DefiningSet::new(n, q, (0..n - k).map(|j| (b + j) % n))
}

/// `{n-b+1, ..., n-b+k} mod n`, the defining set of the dual of `RS_k(n, b)`.
pub fn rs_dual_defset(q: u64, n: usize, k: usize, b: usize) -> Result<DefiningSet, DefsetError> {
    check_rs(n, k)?;
    let start = (n as i64 - b as i64 + 1).rem_euclid(n as i64) as usize;
    DefiningSet::new(n, q, (0..k).map(|j| (start + j) % n))
}
