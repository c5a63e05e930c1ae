//! Exact minimum distance by exhaustive search.
//!
//! Two independent routes: walking the message space in p-ary Gray order
//! (one basis vector added per step), and finding the smallest set of
//! linearly dependent parity-check columns.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use thiserror::Error;

use super::{LinearCode, Matrix};
use crate::gf::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistanceError {
    #[error("search needs {cost} steps, above the cap of {cap}")]
    CapExceeded { cost: u128, cap: u64 },
    #[error("syndrome matrix has {cols} columns but the code has length {n}")]
    SyndromeShape { cols: usize, n: usize },
}

/// Number of nonzero messages visited by the message-space walk, `q^k - 1`.
pub fn enumeration_cost(code: &LinearCode) -> u128 {
    (code.q() as u128).checked_pow(code.k() as u32).unwrap_or(u128::MAX) - 1
}

/// Column subsets examined by the dependent-columns search in the worst case:
/// sizes 1 through `n - k + 1` (any `n - k + 1` columns are dependent).
pub fn column_search_cost(code: &LinearCode) -> u128 {
    let n = code.n();
    let top = (n - code.k() + 1).min(n);
    let mut total: u128 = 0;
    let mut binom: u128 = 1;
    for w in 1..=top {
        binom = binom * (n + 1 - w) as u128 / w as u128;
        total = total.saturating_add(binom);
    }
    total
}

fn check_cap(cost: u128, cap: u64) -> Result<(), DistanceError> {
    if cost > cap as u128 {
        Err(DistanceError::CapExceeded { cost, cap })
    } else {
        Ok(())
    }
}

/// Minimum distance via whichever exhaustive route is cheaper.
/// `None` for the zero code.
pub fn min_distance(code: &LinearCode, cap: u64) -> Result<Option<usize>, DistanceError> {
    let by_messages = enumeration_cost(code);
    let by_columns = column_search_cost(code);
    if by_messages <= by_columns {
        check_cap(by_messages, cap)?;
        Ok(walk(code, None))
    } else {
        check_cap(by_columns, cap)?;
        Ok(dependent_columns(code))
    }
}

/// Minimum weight over all nonzero codewords by message-space enumeration.
pub fn min_distance_exhaustive(code: &LinearCode, cap: u64) -> Result<Option<usize>, DistanceError> {
    check_cap(enumeration_cost(code), cap)?;
    Ok(walk(code, None))
}

/// Smallest number of linearly dependent columns of the parity-check matrix.
pub fn min_distance_by_columns(code: &LinearCode, cap: u64) -> Result<Option<usize>, DistanceError> {
    check_cap(column_search_cost(code), cap)?;
    Ok(dependent_columns(code))
}

/// Minimum weight over codewords `c` with `S c != 0`, i.e. codewords outside
/// the kernel of `syndrome`. `None` if every codeword lies in that kernel.
pub fn min_weight_outside(code: &LinearCode, syndrome: &Matrix, cap: u64) -> Result<Option<usize>, DistanceError> {
    if syndrome.cols() != code.n() {
        return Err(DistanceError::SyndromeShape { cols: syndrome.cols(), n: code.n() });
    }
    check_cap(enumeration_cost(code), cap)?;
    Ok(walk(code, Some(syndrome)))
}

/// GF(p)-basis of the message space: `gamma^l * G_i` where `gamma` generates
/// GF(q)^*, so `1, gamma, ..., gamma^{s-1}` span GF(q) over GF(p).
fn message_basis(code: &LinearCode) -> Vec<Vec<u32>> {
    let f = code.field();
    let s = f.subfield_degree(code.q()).expect("alphabet is a subfield");
    let gamma = f.pow(f.alpha(), (f.q() as u64 - 1) / (code.q() - 1));
    let g = code.generator();
    let mut basis = Vec::with_capacity(g.rows() * s as usize);
    for r in 0..g.rows() {
        let mut scale = 1;
        for _ in 0..s {
            basis.push(g.row(r).iter().map(|&x| f.mul(x, scale)).collect());
            scale = f.mul(scale, gamma);
        }
    }
    basis
}

/// Walk state: the current codeword with its syndrome appended.
struct Walker<'a> {
    field: &'a Field,
    n: usize,
    state: Vec<u32>,
    weight: usize,
    syndrome_weight: usize,
}

impl<'a> Walker<'a> {
    fn new(field: &'a Field, n: usize, width: usize) -> Self {
        Walker { field, n, state: vec![0; width], weight: 0, syndrome_weight: 0 }
    }

    fn add(&mut self, v: &[u32], support: &[usize], times: u32) {
        for &j in support {
            let old = self.state[j];
            let mut new = old;
            for _ in 0..times {
                new = self.field.add(new, v[j]);
            }
            self.state[j] = new;
            let delta = (new != 0) as isize - (old != 0) as isize;
            if j < self.n {
                self.weight = (self.weight as isize + delta) as usize;
            } else {
                self.syndrome_weight = (self.syndrome_weight as isize + delta) as usize;
            }
        }
    }

    fn counts(&self, filtered: bool) -> bool {
        self.weight > 0 && (!filtered || self.syndrome_weight > 0)
    }
}

fn walk(code: &LinearCode, syndrome: Option<&Matrix>) -> Option<usize> {
    if code.k() == 0 {
        return None;
    }
    let f = code.field();
    let p = f.p() as u128;
    let n = code.n();
    let mut basis = message_basis(code);
    if let Some(s) = syndrome {
        for v in basis.iter_mut() {
            let tail = s.apply(v);
            v.extend(tail);
        }
    }
    let width = basis[0].len();
    let supports: Vec<Vec<usize>> = basis.iter().map(|v| (0..width).filter(|&j| v[j] != 0).collect()).collect();
    let digits = basis.len();

    // The top `split` digits index independent chunks; inside a chunk only
    // the low digits move.
    let mut split = 0;
    while split < digits && p.pow(split as u32) < 64 {
        split += 1;
    }
    let low = digits - split;
    let chunk_len = p.pow(low as u32);
    let chunks = p.pow(split as u32) as u64;

    let best = AtomicUsize::new(usize::MAX);
    let filtered = syndrome.is_some();
    (0..chunks).into_par_iter().for_each(|chunk| {
        let mut w = Walker::new(f, n, width);
        // Gray digit j of index i is (a_j - a_{j+1}) mod p.
        let start = chunk as u128 * chunk_len;
        let a: Vec<u32> = (0..=digits).map(|j| ((start / p.pow(j as u32)) % p) as u32).collect();
        for j in 0..digits {
            let g = (a[j] + f.p() - a[j + 1]) % f.p();
            w.add(&basis[j], &supports[j], g);
        }
        let mut local = usize::MAX;
        if w.counts(filtered) {
            local = w.weight;
        }
        let mut step: u128 = 1;
        while step < chunk_len {
            if step.is_multiple_of(4096) && best.load(Ordering::Relaxed) <= 1 {
                break;
            }
            let mut v = 0;
            let mut t = step;
            while t.is_multiple_of(p) {
                t /= p;
                v += 1;
            }
            w.add(&basis[v], &supports[v], 1);
            if w.weight < local && w.counts(filtered) {
                local = w.weight;
                if local == 1 {
                    break;
                }
            }
            step += 1;
        }
        best.fetch_min(local, Ordering::Relaxed);
    });
    match best.into_inner() {
        usize::MAX => None,
        d => Some(d),
    }
}

/// Echelon basis of the columns chosen so far, for incremental dependence tests.
struct Echelon<'a> {
    field: &'a Field,
    rows: Vec<(usize, Vec<u32>)>,
}

impl Echelon<'_> {
    /// Reduces `v`; returns the pivot and normalized vector if it is independent.
    fn reduce(&self, mut v: Vec<u32>) -> Option<(usize, Vec<u32>)> {
        let f = self.field;
        for (pivot, row) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x = f.sub(*x, f.mul(c, r));
                }
            }
        }
        let pivot = v.iter().position(|&x| x != 0)?;
        let inv = f.inv(v[pivot]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        Some((pivot, v))
    }
}

fn dependent_columns(code: &LinearCode) -> Option<usize> {
    if code.k() == 0 {
        return None;
    }
    let h = code.parity_check().transpose();
    let columns: Vec<Vec<u32>> = (0..h.rows()).map(|c| h.row(c).to_vec()).collect();
    let n = code.n();
    for w in 1..=n {
        let mut ech = Echelon { field: code.field(), rows: Vec::new() };
        if search(&columns, 0, w, &mut ech) {
            return Some(w);
        }
    }
    unreachable!("a nonzero code has n+1 > rank(H) dependent columns")
}

/// True if some `remaining` further columns from `start..` complete a
/// dependent set, given that the chosen ones are independent.
fn search(columns: &[Vec<u32>], start: usize, remaining: usize, ech: &mut Echelon) -> bool {
    for c in start..columns.len() {
        match ech.reduce(columns[c].clone()) {
            None => return true,
            Some(row) if remaining > 1 => {
                ech.rows.push(row);
                let found = search(columns, c + 1, remaining - 1, ech);
                ech.rows.pop();
                if found {
                    return true;
                }
            }
            Some(_) => {}
        }
    }
    false
}
