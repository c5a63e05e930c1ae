//! Entanglement-assisted quantum code parameters `[[n, k, d; c]]_q` obtained
//! from cyclic codes, one function per construction family.
//!
//! Dimensions and entanglement counts are always recomputed from defining-set
//! arithmetic. Where a family also has a closed form, the closed form is
//! evaluated alongside and any disagreement is reported as a warning.

use std::fmt;
use std::str::FromStr;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::defset::{
    cyclotomic_coset, euclidean_dual_defset, hermitian_dual_defset, is_lcd_euclidean, is_lcd_hermitian, rs_defset,
    DefiningSet, DefsetError,
};

pub const WARN_DEGENERATE: &str = "degenerate";
pub const WARN_CLOSED_FORM: &str = "closed_form_mismatch";
pub const WARN_FORMULA_MODE: &str = "formula_mode";
pub const WARN_ABOVE_BOUND: &str = "claimed_distance_exceeds_bound";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuentaError {
    #[error("{param} = {value} is out of range: expected {expected}")]
    Range { param: &'static str, value: String, expected: String },
    #[error(transparent)]
    Defset(#[from] DefsetError),
    #[error("defining set {0} is not Euclidean LCD")]
    NotLcd(String),
    #[error("defining set {0} is not Hermitian LCD")]
    NotHermitianLcd(String),
    #[error("a = {a}, b = {b} (q = {q}) falls in the cell a >= q - b, b = q, which the construction does not cover")]
    UncoveredCell { q: u64, a: u64, b: u64 },
    #[error("coset of {rep} has {size} elements, expected {expected}")]
    CosetSize { rep: usize, size: usize, expected: usize },
    #[error("cosets of {0} and {1} coincide")]
    CosetOverlap(usize, usize),
    #[error("[[{n},{k},{d};{c}]] has exact distance above the quantum Singleton bound {bound}")]
    NegativeDefect { n: u64, k: u64, d: u64, c: u64, bound: u64 },
    #[error("delta = {0} matches no branch")]
    NoBranch(u64),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("{what} evaluates to {value}, which is negative")]
    Negative { what: &'static str, value: i64 },
    #[error("intersection count: closed form {closed}, explicit sets {brute}")]
    IntersectionMismatch { closed: u64, brute: u64 },
}

type Result<T> = std::result::Result<T, QuentaError>;

fn require(ok: bool, param: &'static str, value: impl fmt::Display, expected: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(QuentaError::Range { param, value: value.to_string(), expected: expected.to_string() })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceKind {
    Exact,
    LowerBound,
}

impl DistanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DistanceKind::Exact => "exact",
            DistanceKind::LowerBound => "lower_bound",
        }
    }
}

impl FromStr for DistanceKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "exact" => Ok(DistanceKind::Exact),
            "lower_bound" => Ok(DistanceKind::LowerBound),
            _ => Err(format!("unknown distance kind `{s}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Distance {
    pub value: u64,
    pub kind: DistanceKind,
}

impl Distance {
    pub fn exact(value: u64) -> Self {
        Distance { value, kind: DistanceKind::Exact }
    }

    pub fn at_least(value: u64) -> Self {
        Distance { value, kind: DistanceKind::LowerBound }
    }

    pub fn is_exact(&self) -> bool {
        self.kind == DistanceKind::Exact
    }

    /// Minimum of two distances. The result is exact when the smaller value is
    /// exact and no lower bound could hide something smaller.
    pub fn min(self, other: Distance) -> Distance {
        let value = self.value.min(other.value);
        let exact = [self, other].iter().all(|d| d.is_exact() || d.value > value)
            && [self, other].iter().any(|d| d.is_exact() && d.value == value);
        Distance { value, kind: if exact { DistanceKind::Exact } else { DistanceKind::LowerBound } }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DistanceKind::Exact => write!(f, "{}", self.value),
            DistanceKind::LowerBound => write!(f, ">={}", self.value),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    EuclidPair,
    EuclidLcd,
    RsEuclid,
    RsMds,
    BchEuclid,
    Hermitian,
    HermitianLcd,
    RsHermit,
    BchHermit,
    LiLcd,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::EuclidPair,
        Family::EuclidLcd,
        Family::RsEuclid,
        Family::RsMds,
        Family::BchEuclid,
        Family::Hermitian,
        Family::HermitianLcd,
        Family::RsHermit,
        Family::BchHermit,
        Family::LiLcd,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::EuclidPair => "euclid-pair",
            Family::EuclidLcd => "euclid-lcd",
            Family::RsEuclid => "rs-euclid",
            Family::RsMds => "rs-mds",
            Family::BchEuclid => "bch-euclid",
            Family::Hermitian => "hermitian",
            Family::HermitianLcd => "hermitian-lcd",
            Family::RsHermit => "rs-hermit",
            Family::BchHermit => "bch-hermit",
            Family::LiLcd => "li-lcd",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL.into_iter().find(|f| f.as_str() == s).ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// One echoed input parameter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum InputValue {
    Int(i64),
    Set(Vec<usize>),
    Text(String),
}

impl From<u64> for InputValue {
    fn from(v: u64) -> Self {
        InputValue::Int(v as i64)
    }
}

impl From<i64> for InputValue {
    fn from(v: i64) -> Self {
        InputValue::Int(v)
    }
}

impl From<&DefiningSet> for InputValue {
    fn from(z: &DefiningSet) -> Self {
        InputValue::Set(z.elems().to_vec())
    }
}

impl From<&str> for InputValue {
    fn from(v: &str) -> Self {
        InputValue::Text(v.to_string())
    }
}

/// The classical codes behind an instance, as defining sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassicalSets {
    /// `C1`, `C2` over GF(q) with the given defining sets.
    Euclid { z1: DefiningSet, z2: DefiningSet },
    /// One code over GF(q^2); `z` uses coset base `q^2`.
    Hermitian { z: DefiningSet },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuentaParams {
    pub family: Family,
    pub case: String,
    pub q: u64,
    pub n: u64,
    pub k: u64,
    pub d: Distance,
    pub c: u64,
    pub inputs: IndexMap<String, InputValue>,
    pub warnings: Vec<String>,
    pub sets: Option<ClassicalSets>,
}

impl QuentaParams {
    pub fn maximal_entanglement(&self) -> bool {
        self.c == self.n - self.k
    }

    pub fn echo(&mut self, key: &str, value: impl Into<InputValue>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        let w = w.into();
        if !self.warnings.contains(&w) {
            self.warnings.push(w);
        }
    }

    fn finish(mut self) -> Result<Self> {
        if self.k == 0 || self.c == 0 || self.k == self.n {
            self.warn(WARN_DEGENERATE);
        }
        let report = singleton(&self)?;
        if report.defect < 0 {
            self.warn(WARN_ABOVE_BOUND);
        }
        Ok(self)
    }
}

impl fmt::Display for QuentaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{},{};{}]]_{}", self.n, self.k, self.d, self.c, self.q)
    }
}

fn new_params(family: Family, case: &str, q: u64, n: u64, k: u64, d: Distance, c: u64) -> QuentaParams {
    QuentaParams {
        family,
        case: case.to_string(),
        q,
        n,
        k,
        d,
        c,
        inputs: IndexMap::new(),
        warnings: Vec::new(),
        sets: None,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    #[serde(rename = "MDS")]
    Mds,
    #[serde(rename = "almost-MDS")]
    AlmostMds,
    #[serde(rename = "near-MDS-or-worse")]
    NearMdsOrWorse,
    #[serde(rename = "indeterminate")]
    Indeterminate,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Mds => "MDS",
            Classification::AlmostMds => "almost-MDS",
            Classification::NearMdsOrWorse => "near-MDS-or-worse",
            Classification::Indeterminate => "indeterminate",
        }
    }
}

impl FromStr for Classification {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [Classification::Mds, Classification::AlmostMds, Classification::NearMdsOrWorse, Classification::Indeterminate]
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown classification `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SingletonReport {
    pub bound: u64,
    pub defect: i64,
    pub classification: Classification,
}

/// `d <= floor((n - k + c) / 2) + 1`; the defect is `bound - d`.
pub fn singleton(p: &QuentaParams) -> Result<SingletonReport> {
    let bound = (p.n - p.k + p.c) / 2 + 1;
    let defect = bound as i64 - p.d.value as i64;
    let classification = match (p.d.kind, defect) {
        (DistanceKind::LowerBound, _) => Classification::Indeterminate,
        (DistanceKind::Exact, d) if d < 0 => {
            return Err(QuentaError::NegativeDefect { n: p.n, k: p.k, d: p.d.value, c: p.c, bound });
        }
        (DistanceKind::Exact, 0) => Classification::Mds,
        (DistanceKind::Exact, 1) => Classification::AlmostMds,
        (DistanceKind::Exact, _) => Classification::NearMdsOrWorse,
    };
    Ok(SingletonReport { bound, defect, classification })
}

fn same_space(z1: &DefiningSet, z2: &DefiningSet) -> Result<()> {
    if z1.n() != z2.n() || z1.q() != z2.q() {
        return Err(DefsetError::Mismatch { n1: z1.n(), q1: z1.q(), n2: z2.n(), q2: z2.q() }.into());
    }
    require(arith::gcd(z1.n() as u64, z1.q()) == 1, "n", z1.n(), "gcd(n, q) = 1")?;
    z1.require_coset_closed()?;
    z2.require_coset_closed()?;
    Ok(())
}

/// Sizes `(k1, k2, t)` for the pair construction: `k_i = n - |Z_i|` and
/// `t = |Z(C1^⊥) ∩ Z2|`.
fn pair_counts(z1: &DefiningSet, z2: &DefiningSet) -> Result<(u64, u64, u64)> {
    let n = z1.n();
    let t = euclidean_dual_defset(z1).intersection(z2)?.len();
    Ok(((n - z1.len()) as u64, (n - z2.len()) as u64, t as u64))
}

fn pair_params(family: Family, case: &str, z1: &DefiningSet, z2: &DefiningSet, d: Distance) -> Result<QuentaParams> {
    let (k1, k2, t) = pair_counts(z1, z2)?;
    let n = z1.n() as u64;
    let mut p = new_params(family, case, z1.q(), n, k1 - t, d, n - k2 - t);
    p.sets = Some(ClassicalSets::Euclid { z1: z1.clone(), z2: z2.clone() });
    Ok(p)
}

/// Two cyclic codes `C1`, `C2` over GF(q):
/// `[[n, k1 - t, min(d1, d2); n - k2 - t]]` with `t = |Z(C1^⊥) ∩ Z(C2)|`.
pub fn euclid_pair(z1: &DefiningSet, z2: &DefiningSet, d1: Distance, d2: Distance) -> Result<QuentaParams> {
    same_space(z1, z2)?;
    let (_, _, t) = pair_counts(z1, z2)?;
    let case = if t == 0 { "disjoint" } else { "overlapping" };
    let mut p = pair_params(Family::EuclidPair, case, z1, z2, d1.min(d2))?;
    p.echo("z1", z1);
    p.echo("z2", z2);
    p.echo("d1", d1.value);
    p.echo("d2", d2.value);
    p.echo("t", t);
    p.finish()
}

/// An LCD cyclic code gives `[[n, k, d; n - k]]`.
pub fn euclid_lcd(z: &DefiningSet, d: Distance) -> Result<QuentaParams> {
    same_space(z, z)?;
    if !is_lcd_euclidean(z) {
        return Err(QuentaError::NotLcd(z.to_string()));
    }
    let mut p = pair_params(Family::EuclidLcd, "lcd", z, z, d)?;
    p.echo("z", z);
    p.finish()
}

fn closed_form_check(p: &mut QuentaParams, k: i64, d: u64, c: i64) {
    p.echo("stated_k", k);
    p.echo("stated_d", d);
    p.echo("stated_c", c);
    if k != p.k as i64 || c != p.c as i64 || d != p.d.value {
        p.warn(WARN_CLOSED_FORM);
    }
}

fn rs_ranges(q: u64, n: u64) -> Result<()> {
    require(arith::prime_power(q).is_some(), "q", q, "a prime power")?;
    require(n >= 2 && n <= q, "n", n, &format!("2 <= n <= q = {q}"))
}

fn rs_pair(family: Family, q: u64, n: u64, k1: u64, b1: u64, k2: u64, b2: u64) -> Result<QuentaParams> {
    let nn = n as usize;
    let z1 = rs_defset(q, nn, k1 as usize, b1 as usize)?;
    let z2 = rs_defset(q, nn, k2 as usize, b2 as usize)?;
    let d = Distance::exact(n - k1.max(k2) + 1);
    let case = if k1 - b1 >= b2 { "k1-b1>=b2" } else { "k1-b1<b2" };
    let mut p = pair_params(family, case, &z1, &z2, d)?;
    if n != q - 1 {
        // lengths below q - 1 are not cyclic over GF(q): set arithmetic only
        p.sets = None;
        p.warn(WARN_FORMULA_MODE);
    }
    Ok(p)
}

/// Two Reed-Solomon codes `RS_{k1}(n, b1)`, `RS_{k2}(n, b2)` over GF(q).
pub fn rs_euclid(q: u64, n: u64, k1: u64, b1: u64, k2: u64, b2: u64) -> Result<QuentaParams> {
    rs_ranges(q, n)?;
    require(k1 > 0 && k1 < n, "k1", k1, "0 < k1 < n")?;
    require(k2 > 0 && k2 < n, "k2", k2, "0 < k2 < n")?;
    require(b1 <= k1, "b1", b1, "0 <= b1 <= k1")?;
    require(b1 + b2 <= k2 + 1, "b2", b2, "b1 + b2 <= k2 + 1")?;
    let mut p = rs_pair(Family::RsEuclid, q, n, k1, b1, k2, b2)?;
    for (key, v) in [("k1", k1), ("b1", b1), ("k2", k2), ("b2", b2)] {
        p.echo(key, v);
    }
    let (k1i, b1i, k2i, b2i, ni) = (k1 as i64, b1 as i64, k2 as i64, b2 as i64, n as i64);
    let stated_d = n - k1.min(k2) + 1;
    if k1 - b1 >= b2 {
        closed_form_check(&mut p, b1i + b2i - 1, stated_d, ni + b1i + b2i - k1i - k2i - 1);
    } else {
        closed_form_check(&mut p, k1i, stated_d, ni - k2i);
    }
    p.finish()
}

/// `C1 = C2 = RS_k(n, b)` with `0 < b <= (k + 1) / 2`.
pub fn rs_euclid_mds(q: u64, n: u64, k: u64, b: u64) -> Result<QuentaParams> {
    rs_ranges(q, n)?;
    require(k > 0 && k < n, "k", k, "0 < k < n")?;
    require(b > 0 && 2 * b <= k + 1, "b", b, "0 < b <= (k + 1) / 2")?;
    let mut p = rs_pair(Family::RsMds, q, n, k, b, k, b)?;
    p.case = if 2 * b == k + 1 { "b=(k+1)/2" } else { "b<(k+1)/2" }.to_string();
    p.echo("k_classical", k);
    p.echo("b", b);
    let (ki, bi, ni) = (k as i64, b as i64, n as i64);
    closed_form_check(&mut p, 2 * bi - 1, n - k + 1, ni + 2 * bi - 2 * ki - 1);
    p.finish()
}

/// BCH pair of length `q^2 - 1`: `Z(C1^⊥) = C_0 ∪ ... ∪ C_a` and
/// `Z(C2) = C_{q-1} ∪ ... ∪ C_{q-b}`.
pub fn bch_euclid(q: u64, a: u64, b: u64) -> Result<QuentaParams> {
    require(q > 2 && arith::prime_power(q).is_some(), "q", q, "a prime power above 2")?;
    require(a < q, "a", a, &format!("0 <= a <= q - 1 = {}", q - 1))?;
    require(b >= 1 && b <= q, "b", b, &format!("1 <= b <= q = {q}"))?;
    if a >= q - b && b == q {
        return Err(QuentaError::UncoveredCell { q, a, b });
    }
    let n = (q * q - 1) as usize;
    let dual1 = crate::defset::union_of_cosets((0..=a).map(|i| i as usize), n, q)?;
    let z2 = crate::defset::union_of_cosets((1..=b).map(|i| (q - i) as usize), n, q)?;
    let z1 = euclidean_dual_defset(&dual1);
    let case = if a >= q - b { "a>=q-b" } else { "a<q-b" };
    let mut p = pair_params(Family::BchEuclid, case, &z1, &z2, Distance::at_least(b + 1))?;
    p.echo("a", a);
    p.echo("b", b);
    p.echo("z1_dual", &dual1);
    p.echo("z2", &z2);
    let (qi, ai, bi) = (q as i64, a as i64, b as i64);
    if a >= q - b {
        closed_form_check(&mut p, 2 * (qi - bi) - 1, b + 1, 2 * (qi - ai - 1));
    } else {
        closed_form_check(&mut p, 2 * ai + 1, b + 1, 2 * bi - bi / qi);
    }
    p.finish()
}

fn hermitian_space(q: u64, z: &DefiningSet) -> Result<()> {
    require(arith::prime_power(q).is_some(), "q", q, "a prime power")?;
    require(z.q() == q * q, "coset base", z.q(), &format!("q^2 = {}", q * q))?;
    same_space(z, z)
}

fn hermitian_params(family: Family, case: &str, q: u64, z: &DefiningSet, d: Distance) -> Result<QuentaParams> {
    let n = z.n() as u64;
    let s = hermitian_dual_defset(z)?.intersection(z)?.len() as u64;
    let kc = n - z.len() as u64;
    let mut p = new_params(family, case, q, n, kc - s, d, n - kc - s);
    p.sets = Some(ClassicalSets::Hermitian { z: z.clone() });
    p.echo("z", z);
    p.echo("k_classical", kc);
    p.echo("s", s);
    Ok(p)
}

/// A cyclic code over GF(q^2) with defining set `Z` (coset base `q^2`):
/// `[[n, k - s, d; n - k - s]]_q` with `s = |Z(C^{⊥_h}) ∩ Z|`.
pub fn hermitian_code(q: u64, z: &DefiningSet, d: Distance) -> Result<QuentaParams> {
    hermitian_space(q, z)?;
    let mut p = hermitian_params(Family::Hermitian, "general", q, z, d)?;
    if p.inputs["s"] == InputValue::Int(0) {
        p.case = "s=0".to_string();
    }
    p.finish()
}

/// A Hermitian LCD cyclic code over GF(q^2) gives `[[n, k, d; n - k]]_q`.
pub fn hermitian_lcd(q: u64, z: &DefiningSet, d: Distance) -> Result<QuentaParams> {
    hermitian_space(q, z)?;
    if !is_lcd_hermitian(z)? {
        return Err(QuentaError::NotHermitianLcd(z.to_string()));
    }
    hermitian_params(Family::HermitianLcd, "lcd", q, z, d)?.finish()
}

/// The two index sets written out in the Reed-Solomon Hermitian argument, for
/// `n = q^2` and `k = qt + r`: the code's set and its Hermitian dual's set.
pub fn rs_hermit_index_sets(q: u64, t: u64, r: u64) -> (Vec<u64>, Vec<u64>) {
    let mut zc = Vec::new();
    for i in 0..(q - t).saturating_sub(1) {
        for j in 0..q {
            zc.push(q * i + j);
        }
    }
    for j in 0..(q - r).saturating_sub(1) {
        zc.push((q - t - 1) * q + j);
    }
    let mut zh = Vec::new();
    for i in 0..q {
        for j in 0..t {
            zh.push(q * i + j);
        }
    }
    for i in 0..=r {
        zh.push(q * i + t);
    }
    let norm = |mut v: Vec<u64>| {
        v.sort_unstable();
        v.dedup();
        v
    };
    (norm(zc), norm(zh))
}

/// Closed-form size of the intersection of the two index sets.
pub fn rs_hermit_intersection_closed(q: u64, t: u64, r: u64) -> u64 {
    if t + r + 1 >= q {
        (q - t - 1) * (t + 1) + q - r - 1
    } else {
        (q - t) * t + r + 1
    }
}

/// Size of the intersection, counted element by element.
pub fn rs_hermit_intersection_brute(q: u64, t: u64, r: u64) -> u64 {
    let (zc, zh) = rs_hermit_index_sets(q, t, r);
    zc.iter().filter(|x| zh.binary_search(x).is_ok()).count() as u64
}

/// `RS_k(q^2, 1)` over GF(q^2) with `k = qt + r`.
pub fn rs_hermit(q: u64, t: u64, r: u64) -> Result<QuentaParams> {
    require(arith::prime_power(q).is_some(), "q", q, "a prime power")?;
    require(t >= 1, "t", t, "t >= 1")?;
    require(r < q, "r", r, &format!("0 <= r <= q - 1 = {}", q - 1))?;
    let n = q.checked_mul(q).ok_or(QuentaError::Overflow("q^2"))?;
    let kc = q * t + r;
    require(kc < n, "t", t, "q t + r < q^2")?;
    let closed = rs_hermit_intersection_closed(q, t, r);
    let brute = rs_hermit_intersection_brute(q, t, r);
    if closed != brute {
        return Err(QuentaError::IntersectionMismatch { closed, brute });
    }
    let (case, k, c) = if t + r + 1 >= q {
        ("t>=q-r-1", (t + 1) * (t + 1) + 1 - 2 * (q - r), (q - t - 1) * (q - t - 1) + 1)
    } else {
        ("t<q-r-1", t * t - 1, (q - t) * (q - t) - 2 * r - 1)
    };
    let d = Distance::exact(q * (q - t) - r + 1);
    let mut p = new_params(Family::RsHermit, case, q, n, k, d, c);
    p.echo("t", t);
    p.echo("r", r);
    p.echo("k_classical", kc);
    p.echo("s", closed);
    // the explicit sets and the closed form must describe the same counts
    if kc as i64 - closed as i64 != k as i64 || n as i64 - kc as i64 - closed as i64 != c as i64 {
        p.warn(WARN_CLOSED_FORM);
    }
    p.finish()
}

/// BCH code of length `q^4 - 1` over GF(q^2) with
/// `Z = C_0 ∪ C_{q^2+1} ∪ C_{q^2+2} ∪ ... ∪ C_{q^2+a}` (cosets base `q^2`).
pub fn bch_hermit(q: u64, a: u64) -> Result<QuentaParams> {
    require(q >= 3 && arith::prime_power(q).is_some(), "q", q, "a prime power >= 3")?;
    let q2 = q * q;
    require(a >= 2 && a < q2, "a", a, &format!("2 <= a <= q^2 - 1 = {}", q2 - 1))?;
    let n64 = q2.checked_mul(q2).ok_or(QuentaError::Overflow("q^4"))? - 1;
    let n = n64 as usize;
    let mut z = cyclotomic_coset(0, n, q2)?;
    let mut seen = vec![0usize];
    for i in 1..=a {
        let rep = (q2 + i) as usize;
        let coset = cyclotomic_coset(rep, n, q2)?;
        let expected = if i == 1 { 1 } else { 2 };
        if coset.len() != expected {
            return Err(QuentaError::CosetSize { rep, size: coset.len(), expected });
        }
        if let Some(&other) = seen.iter().find(|&&s| coset.contains(s)) {
            return Err(QuentaError::CosetOverlap(other, rep));
        }
        seen.push(rep);
        z = z.union(&coset)?;
    }
    let mut p = hermitian_params(Family::BchHermit, "bch", q, &z, Distance::at_least(a + 1))?;
    p.echo("a", a);
    let ni = n64 as i64;
    let ai = a as i64;
    closed_form_check(&mut p, ni - 4 * (ai - 1) - 3, a + 1, 1);
    let bound = (p.n - p.k + p.c) / 2 + 1;
    p.echo("stated_singleton_gap", a - 1);
    p.echo("singleton_gap_at_claimed_d", bound as i64 - (a + 1) as i64);
    p.finish()
}

/// Which line of the odd-`m` dimension formula applies to `delta`, with its
/// parameters `u`, `v` where they exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiBranch {
    Base,
    Band { u: u64 },
    Step { u: u64, v: u64 },
    Top,
}

impl LiBranch {
    pub fn index(self) -> u8 {
        match self {
            LiBranch::Base => 1,
            LiBranch::Band { .. } => 2,
            LiBranch::Step { .. } => 3,
            LiBranch::Top => 4,
        }
    }
}

/// First matching branch, tested in the listed order.
pub fn li_branch(q: u64, m: u32, delta: u64) -> Option<LiBranch> {
    let qm = q.checked_pow(m)?;
    if (2..=qm - 1).contains(&delta) {
        return Some(LiBranch::Base);
    }
    for u in 1..q {
        if u * qm <= delta && delta <= (u + 1) * (qm - 1) {
            return Some(LiBranch::Band { u });
        }
    }
    for u in 1..q {
        for v in 0..u {
            if delta == (u + 1) * (qm - 1) + v + 1 {
                return Some(LiBranch::Step { u, v });
            }
        }
    }
    let top = q.checked_mul(qm)?;
    if delta == top || delta == top + 1 {
        return Some(LiBranch::Top);
    }
    None
}

/// Maximal-entanglement codes of length `q^{2m} - 1` from LCD cyclic codes of
/// designed distance `delta`; parameters are consumed as closed forms.
pub fn li_lcd(q: u64, m: u32, delta: u64) -> Result<QuentaParams> {
    require(arith::prime_power(q).is_some(), "q", q, "a prime power")?;
    require(m >= 2, "m", m, "m >= 2")?;
    let ov = |what| QuentaError::Overflow(what);
    let len = q.checked_pow(2 * m).ok_or(ov("q^(2m)"))?;
    require(len <= i64::MAX as u64 / 4, "m", m, "q^(2m) small enough for exact arithmetic")?;
    let top = q.checked_pow(2 * m.div_ceil(2)).ok_or(ov("delta range"))? + 1;
    require((2..=top).contains(&delta), "delta", delta, &format!("2 <= delta <= {top}"))?;
    let n = len - 1;
    let q2 = q * q;
    let mi = m as i64;
    let e = (delta - 1 - (delta - 1) / q2) as i64;
    let kappa = len as i64 - 2 - 2 * e * mi;
    let dist = Distance::at_least(delta + 1 + (delta - 1) / q);
    let (case, k, branch) = if m % 2 == 1 {
        let branch = li_branch(q, m, delta).ok_or(QuentaError::NoBranch(delta))?;
        let k = match branch {
            LiBranch::Base => kappa,
            LiBranch::Band { u } => kappa + (u * u) as i64 * mi,
            LiBranch::Step { u, v } => kappa + (u * u + 2 * v + 1) as i64 * mi,
            LiBranch::Top => kappa + q2 as i64 * mi,
        };
        (format!("m-odd-branch-{}", branch.index()), k, Some(branch))
    } else {
        ("m-even".to_string(), kappa, None)
    };
    if k < 0 {
        return Err(QuentaError::Negative { what: "k", value: k });
    }
    let k = k as u64;
    require(k <= n, "delta", delta, "a dimension k <= n")?;
    let c = if m % 2 == 1 { n - k } else { (2 * e * mi + 1) as u64 };
    let mut p = new_params(Family::LiLcd, &case, q, n, k, dist, c);
    p.echo("m", m as u64);
    p.echo("delta", delta);
    p.echo("kappa", kappa);
    match branch {
        Some(LiBranch::Band { u }) => p.echo("u", u),
        Some(LiBranch::Step { u, v }) => {
            p.echo("u", u);
            p.echo("v", v);
        }
        _ => {}
    }
    p.finish()
}
