use std::fmt;

use thiserror::Error;

use crate::gf::{Field, GfError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("{op}: shapes {left:?} and {right:?} are incompatible")]
    Shape { op: &'static str, left: (usize, usize), right: (usize, usize) },
    #[error("matrices are over different fields")]
    FieldMismatch,
    #[error("row {row} has {len} entries, expected {cols}")]
    Ragged { row: usize, len: usize, cols: usize },
    #[error("entry {0} is not a field element")]
    BadEntry(u32),
    #[error(transparent)]
    Field(#[from] GfError),
}

/// Dense row-major matrix over a finite field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Row-reduced echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, k: usize) -> Self {
        let mut m = Self::zeros(field, k, k);
        for i in 0..k {
            m.data[i * k + i] = 1;
        }
        m
    }

    /// Builds from rows; `cols` fixes the width when there are no rows.
    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u32>]) -> Result<Self, MatrixError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(MatrixError::Ragged { row: i, len: r.len(), cols });
            }
            if let Some(&bad) = r.iter().find(|&&x| !field.contains(x)) {
                return Err(MatrixError::BadEntry(bad));
            }
            data.extend_from_slice(r);
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(self.field.contains(v));
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn product(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.rows {
            return Err(MatrixError::Shape {
                op: "product",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let f = &self.field;
        let mut out = Self::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let idx = r * other.cols + c;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, c)));
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.field != other.field {
            return Err(MatrixError::FieldMismatch);
        }
        if self.cols != other.cols {
            return Err(MatrixError::Shape {
                op: "vstack",
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(&self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    /// Entrywise `x -> x^{q0}`.
    pub fn map_frobenius(&self, q0: u64) -> Result<Self, MatrixError> {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x = self.field.frobenius(*x, q0)?;
        }
        Ok(out)
    }

    /// Conjugate transpose over GF(q0^2): transpose with entrywise `x -> x^{q0}`.
    pub fn conj_transpose_q(&self, q0: u64) -> Result<Self, MatrixError> {
        let q0sq = q0.checked_mul(q0).ok_or(GfError::NotASubfield { q0, q: self.field.q() as u64 })?;
        // the entries must live in GF(q0^2) for this to be an involution
        self.field.subfield_degree(q0sq)?;
        if let Some(&bad) = self.data.iter().find(|&&x| !self.field.in_subfield(x, q0sq)) {
            return Err(MatrixError::BadEntry(bad));
        }
        Ok(self.map_frobenius(q0)?.transpose())
    }

    /// Gauss-Jordan elimination; each column takes the first row at or below
    /// the current pivot row with a nonzero entry, so the result is canonical.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..m.cols {
            if prow == m.rows {
                break;
            }
            let Some(pr) = (prow..m.rows).find(|&r| m.get(r, col) != 0) else {
                continue;
            };
            if pr != prow {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, prow * m.cols + c);
                }
            }
            let inv = f.inv(m.get(prow, col)).expect("pivot is nonzero");
            for c in col..m.cols {
                let i = prow * m.cols + c;
                m.data[i] = f.mul(m.data[i], inv);
            }
            for r in 0..m.rows {
                let factor = m.get(r, col);
                if r == prow || factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let sub = f.mul(factor, m.data[prow * m.cols + c]);
                    let i = r * m.cols + c;
                    m.data[i] = f.sub(m.data[i], sub);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space `{ x : M x = 0 }`, one vector per row.
    pub fn kernel_basis(&self) -> Self {
        let f = &self.field;
        let Rref { matrix: r, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            out.data[i * self.cols + fc] = 1;
            for (pr, &pc) in pivots.iter().enumerate() {
                out.data[i * self.cols + pc] = f.neg(r.get(pr, fc));
            }
        }
        out
    }

    /// Nonzero rows of the RREF, a canonical basis of the row space.
    pub fn row_space_basis(&self) -> Self {
        let Rref { matrix, pivots } = self.rref();
        let mut data = matrix.data;
        data.truncate(pivots.len() * self.cols);
        Matrix { field: self.field.clone(), rows: pivots.len(), cols: self.cols, data }
    }

    /// `M x` for a column vector given as a slice.
    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        let f = &self.field;
        (0..self.rows).map(|r| self.row(r).iter().zip(x).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))).collect()
    }
}

/// `dim(rowspace(A) ∩ rowspace(B))` via `rk A + rk B - rk [A; B]`.
pub fn row_space_intersection_dim(a: &Matrix, b: &Matrix) -> Result<usize, MatrixError> {
    let stacked = a.vstack(b)?;
    Ok(a.rank() + b.rank() - stacked.rank())
}
