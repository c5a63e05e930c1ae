//! Brute-force cross-checks of the family formulas: materialize the classical
//! codes, measure ranks, dimensions and distances, and compare.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith;
use crate::code::{
    cyclic_code, min_distance, min_distance_by_columns, min_distance_exhaustive, min_weight_outside,
    row_space_intersection_dim, CodeError, DistanceError, LinearCode,
};
use crate::config::Config;
use crate::defset::{
    bch_bound, euclidean_dual_defset, hermitian_dual_defset, CosetPartition, DefiningSet, DefsetError,
};
use crate::poly::PolyError;
use crate::quenta::{self, ClassicalSets, Distance, Family, QuentaError, QuentaParams};

/// Most pairs an `euclid-pair` sweep will enumerate.
pub const MAX_PAIR_SWEEP: usize = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Quenta(#[from] QuentaError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Defset(#[from] DefsetError),
    #[error(transparent)]
    Distance(#[from] DistanceError),
    #[error("rank {rank} disagrees with the dimension count {dims}")]
    IdentityMismatch { rank: usize, dims: usize },
    #[error("sweep over {family} needs --{param}")]
    MissingRange { family: Family, param: &'static str },
    #[error("sweep would produce {count} instances, above the cap of {cap}")]
    SweepTooLarge { count: usize, cap: usize },
}

type Result<T> = std::result::Result<T, OracleError>;

/// One fully specified family instance, before distances are resolved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    EuclidPair { q: u64, n: usize, z1: Vec<usize>, z2: Vec<usize> },
    EuclidLcd { q: u64, n: usize, z: Vec<usize> },
    RsEuclid { q: u64, n: u64, k1: u64, b1: u64, k2: u64, b2: u64 },
    RsMds { q: u64, n: u64, k: u64, b: u64 },
    BchEuclid { q: u64, a: u64, b: u64 },
    Hermitian { q: u64, n: usize, z: Vec<usize> },
    HermitianLcd { q: u64, n: usize, z: Vec<usize> },
    RsHermit { q: u64, t: u64, r: u64 },
    BchHermit { q: u64, a: u64 },
    LiLcd { q: u64, m: u32, delta: u64 },
}

fn fmt_set(z: &[usize]) -> String {
    let parts: Vec<String> = z.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::EuclidPair { q, n, z1, z2 } => {
                write!(f, "q={q} n={n} z1={} z2={}", fmt_set(z1), fmt_set(z2))
            }
            Instance::EuclidLcd { q, n, z } | Instance::Hermitian { q, n, z } | Instance::HermitianLcd { q, n, z } => {
                write!(f, "q={q} n={n} z={}", fmt_set(z))
            }
            Instance::RsEuclid { q, n, k1, b1, k2, b2 } => write!(f, "q={q} n={n} k1={k1} b1={b1} k2={k2} b2={b2}"),
            Instance::RsMds { q, n, k, b } => write!(f, "q={q} n={n} k={k} b={b}"),
            Instance::BchEuclid { q, a, b } => write!(f, "q={q} a={a} b={b}"),
            Instance::RsHermit { q, t, r } => write!(f, "q={q} t={t} r={r}"),
            Instance::BchHermit { q, a } => write!(f, "q={q} a={a}"),
            Instance::LiLcd { q, m, delta } => write!(f, "q={q} m={m} delta={delta}"),
        }
    }
}

impl Instance {
    pub fn family(&self) -> Family {
        match self {
            Instance::EuclidPair { .. } => Family::EuclidPair,
            Instance::EuclidLcd { .. } => Family::EuclidLcd,
            Instance::RsEuclid { .. } => Family::RsEuclid,
            Instance::RsMds { .. } => Family::RsMds,
            Instance::BchEuclid { .. } => Family::BchEuclid,
            Instance::Hermitian { .. } => Family::Hermitian,
            Instance::HermitianLcd { .. } => Family::HermitianLcd,
            Instance::RsHermit { .. } => Family::RsHermit,
            Instance::BchHermit { .. } => Family::BchHermit,
            Instance::LiLcd { .. } => Family::LiLcd,
        }
    }
}

fn can_materialize(n: usize, coset_base: u64, cfg: &Config) -> bool {
    n <= cfg.max_matrix_length && arith::gcd(n as u64, coset_base) == 1
}

/// Exact distance when a search fits the cap, else the BCH bound. The zero
/// code gets `n + 1` so that it never decides a minimum.
fn resolve_distance(z: &DefiningSet, cfg: &Config) -> Result<Distance> {
    let n = z.n();
    if z.len() == n {
        return Ok(Distance::exact(n as u64 + 1));
    }
    if can_materialize(n, z.q(), cfg) {
        let code = cyclic_code(z, &cfg.space(z.q(), n)?)?;
        if let Ok(Some(d)) = min_distance(&code, cfg.max_enumeration) {
            return Ok(Distance::exact(d as u64));
        }
    }
    Ok(Distance::at_least(bch_bound(z) as u64))
}

/// Builds the instance's parameters, resolving any distances it needs.
pub fn construct(inst: &Instance, cfg: &Config) -> Result<QuentaParams> {
    let params = match inst {
        Instance::EuclidPair { q, n, z1, z2 } => {
            let z1 = DefiningSet::new(*n, *q, z1.iter().copied())?;
            let z2 = DefiningSet::new(*n, *q, z2.iter().copied())?;
            z1.require_coset_closed()?;
            z2.require_coset_closed()?;
            quenta::euclid_pair(&z1, &z2, resolve_distance(&z1, cfg)?, resolve_distance(&z2, cfg)?)?
        }
        Instance::EuclidLcd { q, n, z } => {
            let z = DefiningSet::new(*n, *q, z.iter().copied())?;
            z.require_coset_closed()?;
            quenta::euclid_lcd(&z, resolve_distance(&z, cfg)?)?
        }
        Instance::RsEuclid { q, n, k1, b1, k2, b2 } => quenta::rs_euclid(*q, *n, *k1, *b1, *k2, *b2)?,
        Instance::RsMds { q, n, k, b } => quenta::rs_euclid_mds(*q, *n, *k, *b)?,
        Instance::BchEuclid { q, a, b } => {
            let mut p = quenta::bch_euclid(*q, *a, *b)?;
            if let Some(ClassicalSets::Euclid { z1, z2 }) = p.sets.clone() {
                let (d1, d2) = (resolve_distance(&z1, cfg)?, resolve_distance(&z2, cfg)?);
                let d = d1.min(d2);
                if d.is_exact() {
                    p.echo("designed_d", p.d.value);
                    p.d = d;
                }
            }
            p
        }
        Instance::Hermitian { q, n, z } | Instance::HermitianLcd { q, n, z } => {
            let base = q.checked_mul(*q).ok_or(QuentaError::Overflow("q^2"))?;
            let z = DefiningSet::new(*n, base, z.iter().copied())?;
            z.require_coset_closed()?;
            let d = resolve_distance(&z, cfg)?;
            if matches!(inst, Instance::Hermitian { .. }) {
                quenta::hermitian_code(*q, &z, d)?
            } else {
                quenta::hermitian_lcd(*q, &z, d)?
            }
        }
        Instance::RsHermit { q, t, r } => quenta::rs_hermit(*q, *t, *r)?,
        Instance::BchHermit { q, a } => quenta::bch_hermit(*q, *a)?,
        Instance::LiLcd { q, m, delta } => quenta::li_lcd(*q, *m, *delta)?,
    };
    // re-check the bound now that distances may have been upgraded
    quenta::singleton(&params)?;
    Ok(params)
}

/// `rk(H1 H2^T)`, checked against `dim C1^⊥ - dim(C1^⊥ ∩ C2)`.
pub fn entanglement_rank_euclid(c1: &LinearCode, c2: &LinearCode) -> Result<usize> {
    if c1.n() != c2.n() {
        return Err(CodeError::LengthMismatch(c1.n(), c2.n()).into());
    }
    let h1 = c1.parity_check();
    let h2 = c2.parity_check();
    let rank = h1.product(&h2.transpose()).map_err(CodeError::from)?.rank();
    let inter = row_space_intersection_dim(h1, c2.generator()).map_err(CodeError::from)?;
    let dims = h1.rank() - inter;
    if rank != dims {
        return Err(OracleError::IdentityMismatch { rank, dims });
    }
    Ok(rank)
}

/// `rk(H H^*)` with `H^*` the conjugate transpose over GF(q0^2), checked
/// against `dim C^{⊥_h} - dim(C^{⊥_h} ∩ C)`.
pub fn entanglement_rank_hermitian(c: &LinearCode, q0: u64) -> Result<usize> {
    let h = c.parity_check();
    let hstar = h.conj_transpose_q(q0).map_err(CodeError::from)?;
    let rank = h.product(&hstar).map_err(CodeError::from)?.rank();
    let hd = c.hermitian_dual_code(q0)?;
    let inter = row_space_intersection_dim(hd.generator(), c.generator()).map_err(CodeError::from)?;
    let dims = hd.k() - inter;
    if rank != dims {
        return Err(OracleError::IdentityMismatch { rank, dims });
    }
    Ok(rank)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Exact,
    LowerBoundOk,
    SkippedCap,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Exact => "exact",
            CheckKind::LowerBoundOk => "lower_bound_ok",
            CheckKind::SkippedCap => "skipped_cap",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub name: String,
    pub predicted: Option<i64>,
    pub measured: Option<i64>,
    pub kind: CheckKind,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRow {
    fn exact(name: &str, predicted: i64, measured: i64) -> Self {
        CheckRow {
            name: name.into(),
            predicted: Some(predicted),
            measured: Some(measured),
            kind: CheckKind::Exact,
            pass: predicted == measured,
            note: None,
        }
    }

    fn at_least(name: &str, predicted: i64, measured: i64) -> Self {
        CheckRow {
            name: name.into(),
            predicted: Some(predicted),
            measured: Some(measured),
            kind: CheckKind::LowerBoundOk,
            pass: measured >= predicted,
            note: None,
        }
    }

    fn skipped(name: &str, predicted: Option<i64>, note: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            predicted,
            measured: None,
            kind: CheckKind::SkippedCap,
            pass: true,
            note: Some(note.into()),
        }
    }

    fn failed(name: &str, note: impl Into<String>) -> Self {
        CheckRow {
            name: name.into(),
            predicted: None,
            measured: None,
            kind: CheckKind::Exact,
            pass: false,
            note: Some(note.into()),
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: Family,
    pub instance: String,
    pub params: Option<String>,
    pub rows: Vec<CheckRow>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn skipped_rows(&self) -> usize {
        self.rows.iter().filter(|r| r.kind == CheckKind::SkippedCap).count()
    }

    /// The row with the given name, if present.
    pub fn row(&self, name: &str) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

const NOTE_LENGTH_CAP: &str = "length exceeds the matrix cap";
const NOTE_NON_CYCLIC: &str = "non-cyclic length";

/// Exact distance of one code by the message walk, falling back to the
/// column search; `n + 1` for the zero code.
fn measured_distance(code: &LinearCode, cfg: &Config) -> Option<u64> {
    let d = match min_distance_exhaustive(code, cfg.max_enumeration) {
        Ok(d) => d,
        Err(_) => min_distance_by_columns(code, cfg.max_enumeration).ok()?,
    };
    Some(d.map_or(code.n() as u64 + 1, |d| d as u64))
}

fn distance_row(p: &QuentaParams, measured: Option<u64>, bch: u64) -> CheckRow {
    let predicted = p.d.value as i64;
    match (measured, p.d.is_exact()) {
        (Some(m), true) => CheckRow::exact("d", predicted, m as i64),
        (Some(m), false) => CheckRow::at_least("d", predicted, m as i64),
        (None, false) if bch >= p.d.value => CheckRow::at_least("d", predicted, bch as i64).with_note("bch bound"),
        (None, _) => CheckRow::skipped("d", Some(predicted), "distance search exceeds the enumeration cap"),
    }
}

/// Smallest weight among codewords outside a subspace, minimized over the
/// listed (code, syndrome) pairs; `None` means every candidate set was empty.
fn relative_row(floor: Option<u64>, parts: &[(&LinearCode, &crate::code::Matrix)], cfg: &Config) -> CheckRow {
    let Some(floor) = floor else {
        return CheckRow::skipped("d_relative", None, "code distances not measured");
    };
    let mut best: Option<usize> = None;
    for (code, syndrome) in parts {
        match min_weight_outside(code, syndrome, cfg.max_relative_enumeration) {
            Ok(Some(w)) => best = Some(best.map_or(w, |b| b.min(w))),
            Ok(None) => {}
            Err(_) => {
                return CheckRow::skipped("d_relative", Some(floor as i64), "relative search exceeds its cap");
            }
        }
    }
    match best {
        Some(w) => CheckRow::at_least("d_relative", floor as i64, w as i64),
        None => CheckRow::skipped("d_relative", Some(floor as i64), "no codeword outside the subcode"),
    }
}

fn euclid_rows(p: &QuentaParams, z1: &DefiningSet, z2: &DefiningSet, cfg: &Config) -> Result<Vec<CheckRow>> {
    let n = z1.n();
    let space = cfg.space(z1.q(), n)?;
    let c1 = cyclic_code(z1, &space)?;
    let c2 = cyclic_code(z2, &space)?;
    let mut rows = Vec::new();
    let dual1 = euclidean_dual_defset(z1);
    match entanglement_rank_euclid(&c1, &c2) {
        Ok(c) => {
            rows.push(CheckRow::exact("c", p.c as i64, c as i64));
            let k = c1.k() as i64 + c2.k() as i64 - n as i64 + c as i64;
            rows.push(CheckRow::exact("k", p.k as i64, k));
        }
        Err(e) => rows.push(CheckRow::failed("c", e.to_string())),
    }
    let c1_dual = c1.dual_code();
    let hull_sets = n - z1.union(&dual1)?.len();
    rows.push(CheckRow::exact("hull", hull_sets as i64, c1.hull_dim() as i64));
    let inter_sets = n - dual1.union(z2)?.len();
    rows.push(CheckRow::exact("intersection", inter_sets as i64, c1_dual.intersection_dim(&c2)? as i64));

    let d1 = measured_distance(&c1, cfg);
    let d2 = measured_distance(&c2, cfg);
    let d = d1.zip(d2).map(|(a, b)| a.min(b));
    let bch = bch_bound(z1).min(bch_bound(z2)) as u64;
    rows.push(distance_row(p, d, bch));
    if let (Some(quenta::InputValue::Int(designed)), Some(d)) = (p.inputs.get("designed_d"), d) {
        rows.push(CheckRow::at_least("d_designed", *designed, d as i64));
    }
    // C1 \ C2^⊥ and C2 \ C1^⊥; x lies in C2^⊥ exactly when G2 x = 0
    rows.push(relative_row(d, &[(&c1, c2.generator()), (&c2, c1.generator())], cfg));
    Ok(rows)
}

fn hermitian_rows(p: &QuentaParams, z: &DefiningSet, cfg: &Config) -> Result<Vec<CheckRow>> {
    let n = z.n();
    let space = cfg.space(z.q(), n)?;
    let code = cyclic_code(z, &space)?;
    let q0 = p.q;
    let mut rows = Vec::new();
    match entanglement_rank_hermitian(&code, q0) {
        Ok(c) => {
            rows.push(CheckRow::exact("c", p.c as i64, c as i64));
            let k = 2 * code.k() as i64 - n as i64 + c as i64;
            rows.push(CheckRow::exact("k", p.k as i64, k));
        }
        Err(e) => rows.push(CheckRow::failed("c", e.to_string())),
    }
    let s = hermitian_dual_defset(z)?.intersection(z)?.len();
    rows.push(CheckRow::exact("hull", s as i64, code.hermitian_hull_dim(q0)? as i64));
    let d = measured_distance(&code, cfg);
    rows.push(distance_row(p, d, bch_bound(z) as u64));
    // x lies in C^{⊥_h} exactly when G^{(q0)} x = 0
    let conj = code.generator().map_frobenius(q0).map_err(CodeError::from)?;
    rows.push(relative_row(d, &[(&code, &conj)], cfg));
    Ok(rows)
}

fn skipped_matrix_rows(p: &QuentaParams, note: &str) -> Vec<CheckRow> {
    vec![
        CheckRow::skipped("k", Some(p.k as i64), note),
        CheckRow::skipped("c", Some(p.c as i64), note),
        CheckRow::skipped("d", Some(p.d.value as i64), note),
    ]
}

fn rs_hermit_rows(p: &QuentaParams) -> Vec<CheckRow> {
    let int = |key: &str| match p.inputs.get(key) {
        Some(quenta::InputValue::Int(v)) => *v,
        _ => 0,
    };
    let (q, t, r, kc) = (p.q, int("t") as u64, int("r") as u64, int("k_classical"));
    let brute = quenta::rs_hermit_intersection_brute(q, t, r) as i64;
    let closed = quenta::rs_hermit_intersection_closed(q, t, r) as i64;
    vec![
        CheckRow::exact("intersection", closed, brute),
        CheckRow::exact("k", p.k as i64, kc - brute),
        CheckRow::exact("c", p.c as i64, p.n as i64 - kc - brute),
        CheckRow::skipped("d", Some(p.d.value as i64), NOTE_NON_CYCLIC),
    ]
}

/// Dimension for odd `m`, from a table of every delta in range built by
/// walking the branches in their listed order.
fn li_dimension_by_table(q: u64, m: u32, delta: u64) -> Option<i64> {
    let qm = q.pow(m);
    let q2 = q * q;
    let mi = m as i64;
    let top = q.pow(m + 1) + 1;
    let kappa = |d: u64| (q.pow(2 * m) as i64) - 2 - 2 * (d - 1 - (d - 1) / q2) as i64 * mi;
    let mut table: BTreeMap<u64, i64> = BTreeMap::new();
    let mut put = |d: u64, extra: i64| {
        if (2..=top).contains(&d) {
            table.entry(d).or_insert(kappa(d) + extra);
        }
    };
    for d in 2..qm {
        put(d, 0);
    }
    for u in 1..q {
        for d in u * qm..=(u + 1) * (qm - 1) {
            put(d, (u * u) as i64 * mi);
        }
    }
    for u in 1..q {
        for v in 0..u {
            put((u + 1) * (qm - 1) + v + 1, (u * u + 2 * v + 1) as i64 * mi);
        }
    }
    put(q * qm, (q2 as i64) * mi);
    put(q * qm + 1, (q2 as i64) * mi);
    table.get(&delta).copied()
}

fn li_rows(p: &QuentaParams) -> Vec<CheckRow> {
    let int = |key: &str| match p.inputs.get(key) {
        Some(quenta::InputValue::Int(v)) => *v,
        _ => 0,
    };
    let (m, delta) = (int("m") as u32, int("delta") as u64);
    let mut rows = Vec::new();
    if m % 2 == 1 {
        match li_dimension_by_table(p.q, m, delta) {
            Some(k) => rows.push(CheckRow::exact("k", p.k as i64, k)),
            None => rows.push(CheckRow::failed("k", "delta not covered by any branch")),
        }
    } else {
        rows.push(CheckRow::exact("k", p.k as i64, int("kappa")));
    }
    rows.push(CheckRow::exact("c", p.c as i64, (p.n - p.k) as i64).with_note("maximal entanglement"));
    rows.push(CheckRow::skipped("d", Some(p.d.value as i64), "no classical code is materialized"));
    rows
}

fn rows_for(p: &QuentaParams, cfg: &Config) -> Result<Vec<CheckRow>> {
    match (&p.sets, p.family) {
        (_, Family::RsHermit) => Ok(rs_hermit_rows(p)),
        (_, Family::LiLcd) => Ok(li_rows(p)),
        (Some(ClassicalSets::Euclid { z1, z2 }), _) => {
            if can_materialize(z1.n(), z1.q(), cfg) {
                euclid_rows(p, z1, z2, cfg)
            } else {
                Ok(skipped_matrix_rows(p, NOTE_LENGTH_CAP))
            }
        }
        (Some(ClassicalSets::Hermitian { z }), _) => {
            if can_materialize(z.n(), z.q(), cfg) {
                hermitian_rows(p, z, cfg)
            } else {
                Ok(skipped_matrix_rows(p, NOTE_LENGTH_CAP))
            }
        }
        (None, _) => Ok(skipped_matrix_rows(p, NOTE_NON_CYCLIC)),
    }
}

/// Verifies one instance; every problem becomes a failing row.
pub fn verify_instance(inst: &Instance, cfg: &Config) -> VerificationReport {
    let family = inst.family();
    let instance = inst.to_string();
    let (params, rows) = match construct(inst, cfg) {
        Ok(p) => {
            let rows = rows_for(&p, cfg).unwrap_or_else(|e| vec![CheckRow::failed("materialize", e.to_string())]);
            (Some(p.to_string()), rows)
        }
        Err(e) => (None, vec![CheckRow::failed("construct", e.to_string())]),
    };
    let pass = rows.iter().all(|r| r.pass);
    VerificationReport { family, instance, params, rows, pass }
}

/// Ranges for a sweep; which fields matter depends on the family.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepRange {
    pub q: Option<u64>,
    pub n: Option<usize>,
    pub m: Option<u32>,
    pub a_max: Option<u64>,
    pub delta_min: Option<u64>,
    pub delta_max: Option<u64>,
}

fn need<T: Copy>(v: Option<T>, family: Family, param: &'static str) -> Result<T> {
    v.ok_or(OracleError::MissingRange { family, param })
}

fn closed_sets(n: usize, base: u64) -> Result<Vec<DefiningSet>> {
    Ok(CosetPartition::new(n, base)?.all_unions()?)
}

/// Every instance of the family within the ranges, in lexicographic order of
/// the parameter tuple.
pub fn instances(family: Family, range: &SweepRange) -> Result<Vec<Instance>> {
    let q = need(range.q, family, "q")?;
    if arith::prime_power(q).is_none() {
        return Err(QuentaError::Range { param: "q", value: q.to_string(), expected: "a prime power".into() }.into());
    }
    let mut out = Vec::new();
    match family {
        Family::EuclidPair | Family::EuclidLcd => {
            let n = need(range.n, family, "n")?;
            let sets = closed_sets(n, q)?;
            if family == Family::EuclidPair {
                let count = sets.len() * sets.len();
                if count > MAX_PAIR_SWEEP {
                    return Err(OracleError::SweepTooLarge { count, cap: MAX_PAIR_SWEEP });
                }
                for z1 in &sets {
                    for z2 in &sets {
                        out.push(Instance::EuclidPair { q, n, z1: z1.elems().to_vec(), z2: z2.elems().to_vec() });
                    }
                }
            } else {
                for z in sets.iter().filter(|z| crate::defset::is_lcd_euclidean(z)) {
                    out.push(Instance::EuclidLcd { q, n, z: z.elems().to_vec() });
                }
            }
        }
        Family::Hermitian | Family::HermitianLcd => {
            let n = need(range.n, family, "n")?;
            for z in closed_sets(n, q * q)? {
                let lcd = crate::defset::is_lcd_hermitian(&z)?;
                let z = z.elems().to_vec();
                match family {
                    Family::Hermitian => out.push(Instance::Hermitian { q, n, z }),
                    _ if lcd => out.push(Instance::HermitianLcd { q, n, z }),
                    _ => {}
                }
            }
        }
        Family::RsEuclid => {
            let n = range.n.map_or(q - 1, |n| n as u64);
            for k1 in 1..n {
                for b1 in 0..=k1 {
                    for k2 in (1..n).filter(|&k2| b1 <= k2 + 1) {
                        for b2 in 0..=k2 + 1 - b1 {
                            out.push(Instance::RsEuclid { q, n, k1, b1, k2, b2 });
                        }
                    }
                }
            }
        }
        Family::RsMds => {
            let n = range.n.map_or(q - 1, |n| n as u64);
            for k in 1..n {
                for b in 1..=k.div_ceil(2) {
                    out.push(Instance::RsMds { q, n, k, b });
                }
            }
        }
        Family::BchEuclid => {
            for a in 0..q {
                for b in 1..=q {
                    if !(a >= q - b && b == q) {
                        out.push(Instance::BchEuclid { q, a, b });
                    }
                }
            }
        }
        Family::RsHermit => {
            for t in 1..q {
                for r in 0..q {
                    if q * t + r < q * q {
                        out.push(Instance::RsHermit { q, t, r });
                    }
                }
            }
        }
        Family::BchHermit => {
            let a_max = range.a_max.unwrap_or(q * q - 1);
            for a in 2..=a_max {
                out.push(Instance::BchHermit { q, a });
            }
        }
        Family::LiLcd => {
            let m = need(range.m, family, "m")?;
            let top = q.checked_pow(2 * m.div_ceil(2)).ok_or(QuentaError::Overflow("delta range"))? + 1;
            let lo = range.delta_min.unwrap_or(2);
            let hi = range.delta_max.unwrap_or(top);
            for delta in lo..=hi {
                out.push(Instance::LiLcd { q, m, delta });
            }
        }
    }
    Ok(out)
}

/// Verifies all instances; output order follows input order.
pub fn sweep(instances: &[Instance], cfg: &Config) -> Vec<VerificationReport> {
    instances.par_iter().map(|i| verify_instance(i, cfg)).collect()
}

/// Constructs all instances in parallel; output order follows input order.
pub fn construct_all(instances: &[Instance], cfg: &Config) -> Vec<Result<QuentaParams>> {
    instances.par_iter().map(|i| construct(i, cfg)).collect()
}

/// Instance pass/fail counts and the number of skipped check rows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            if r.pass {
                s.passed += 1;
            } else {
                s.failed += 1;
            }
            s.skipped += r.skipped_rows();
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} passed, {} failed, {} skipped", self.passed, self.failed, self.skipped)
    }
}

/// The sweeps run by `verify --family all`.
pub fn default_suite() -> Vec<(Family, SweepRange)> {
    let r = |q: u64, n: Option<usize>| SweepRange { q: Some(q), n, ..Default::default() };
    vec![
        (Family::EuclidPair, r(2, Some(7))),
        (Family::EuclidLcd, r(2, Some(7))),
        (Family::EuclidLcd, r(3, Some(8))),
        (Family::RsEuclid, r(7, Some(6))),
        (Family::RsMds, r(5, Some(4))),
        (Family::RsMds, r(7, Some(6))),
        (Family::BchEuclid, r(3, None)),
        (Family::BchEuclid, r(4, None)),
        (Family::Hermitian, r(2, Some(3))),
        (Family::Hermitian, r(2, Some(5))),
        (Family::Hermitian, r(2, Some(15))),
        (Family::HermitianLcd, r(2, Some(3))),
        (Family::HermitianLcd, r(2, Some(5))),
        (Family::HermitianLcd, r(2, Some(15))),
        (Family::RsHermit, r(2, None)),
        (Family::RsHermit, r(3, None)),
        (Family::RsHermit, r(4, None)),
        (Family::BchHermit, SweepRange { q: Some(3), a_max: Some(4), ..Default::default() }),
        (Family::LiLcd, SweepRange { q: Some(2), m: Some(3), ..Default::default() }),
        (Family::LiLcd, SweepRange { q: Some(3), m: Some(2), delta_max: Some(10), ..Default::default() }),
    ]
}
