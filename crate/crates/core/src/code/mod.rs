//! Linear codes as generator/parity-check matrix pairs.

mod distance;
mod matrix;

pub use distance::{
    column_search_cost, enumeration_cost, min_distance, min_distance_by_columns, min_distance_exhaustive,
    min_weight_outside, DistanceError,
};
pub use matrix::{row_space_intersection_dim, Matrix, MatrixError, Rref};

use thiserror::Error;

use crate::defset::{DefiningSet, DefsetError};
use crate::gf::{Field, GfError};
use crate::poly::{generator_from_defset, CyclicSpace, Poly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CodeError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Defset(#[from] DefsetError),
    #[error(transparent)]
    Field(#[from] GfError),
    #[error("codes have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("codes are over different fields")]
    FieldMismatch,
    #[error("Hermitian duality needs an alphabet of size q0^2 = {expected}, got {q}")]
    NotSquareAlphabet { q: u64, expected: u64 },
    #[error("generator has entries outside GF({0})")]
    OutsideAlphabet(u64),
}

/// A linear `[n, k]` code over GF(q), with entries stored in a field that
/// contains GF(q) (for cyclic codes, the splitting field of `x^n - 1`).
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    q: u64,
    n: usize,
    generator: Matrix,
    parity_check: Matrix,
    origin: Option<DefiningSet>,
}

impl LinearCode {
    /// Row space of `g`; the generator is reduced to a basis and the parity
    /// check is its kernel.
    pub fn from_generator(q: u64, g: &Matrix) -> Result<Self, CodeError> {
        let field = g.field().clone();
        field.subfield_degree(q)?;
        if (0..g.rows()).any(|r| g.row(r).iter().any(|&x| !field.in_subfield(x, q))) {
            return Err(CodeError::OutsideAlphabet(q));
        }
        let generator = g.row_space_basis();
        let parity_check = generator.kernel_basis();
        Ok(LinearCode { field, q, n: g.cols(), generator, parity_check, origin: None })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity_check(&self) -> &Matrix {
        &self.parity_check
    }

    /// Defining set the code was built from, if any.
    pub fn origin(&self) -> Option<&DefiningSet> {
        self.origin.as_ref()
    }

    fn compatible(&self, other: &Self) -> Result<(), CodeError> {
        if self.field != other.field {
            return Err(CodeError::FieldMismatch);
        }
        if self.n != other.n {
            return Err(CodeError::LengthMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn dual_code(&self) -> LinearCode {
        LinearCode {
            field: self.field.clone(),
            q: self.q,
            n: self.n,
            generator: self.parity_check.row_space_basis(),
            parity_check: self.generator.clone(),
            origin: None,
        }
    }

    /// `{ x : x . c^{q0} = 0 for all c in C }`, the kernel of the entrywise
    /// `q0`-powered generator.
    pub fn hermitian_dual_code(&self, q0: u64) -> Result<LinearCode, CodeError> {
        let expected = q0 * q0;
        if self.q != expected {
            return Err(CodeError::NotSquareAlphabet { q: self.q, expected });
        }
        let conj = self.generator.map_frobenius(q0)?;
        Ok(LinearCode {
            field: self.field.clone(),
            q: self.q,
            n: self.n,
            generator: conj.kernel_basis(),
            parity_check: conj,
            origin: None,
        })
    }

    /// `dim(C ∩ C^⊥)`.
    pub fn hull_dim(&self) -> usize {
        let dual = self.generator.kernel_basis();
        row_space_intersection_dim(&self.generator, &dual).expect("same shape")
    }

    /// `dim(C ∩ C^{⊥_h})`.
    pub fn hermitian_hull_dim(&self, q0: u64) -> Result<usize, CodeError> {
        let dual = self.hermitian_dual_code(q0)?;
        Ok(row_space_intersection_dim(&self.generator, &dual.generator)?)
    }

    pub fn intersection_dim(&self, other: &Self) -> Result<usize, CodeError> {
        self.compatible(other)?;
        Ok(row_space_intersection_dim(&self.generator, &other.generator)?)
    }

    /// True when every row of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &Self) -> Result<bool, CodeError> {
        Ok(self.intersection_dim(other)? == self.k())
    }

    /// `{ i : c(beta^i) = 0 for every codeword c }`, read off the generator rows.
    pub fn defining_set(&self, space: &CyclicSpace) -> Result<DefiningSet, CodeError> {
        if space.ext() != &self.field {
            return Err(CodeError::FieldMismatch);
        }
        if space.n() != self.n {
            return Err(CodeError::LengthMismatch(space.n(), self.n));
        }
        let rows: Vec<Poly> =
            (0..self.k()).map(|r| Poly::new(&self.field, self.generator.row(r).to_vec())).collect::<Result<_, _>>()?;
        let zeros = (0..self.n).filter(|&i| {
            let x = space.root(i);
            rows.iter().all(|p| p.eval(x) == 0)
        });
        Ok(DefiningSet::new(self.n, space.q(), zeros)?)
    }
}

/// The cyclic code with defining set `z`: generator rows are the `k` shifts of
/// `g(x)`, parity-check rows the `n - k` shifts of the reversed check
/// polynomial `h(x) = (x^n - 1) / g(x)`.
pub fn cyclic_code(z: &DefiningSet, space: &CyclicSpace) -> Result<LinearCode, CodeError> {
    let field = space.ext().clone();
    let n = space.n();
    let g = generator_from_defset(z, space)?;
    let deg_g = g.degree().expect("generator is nonzero");
    let k = n - deg_g;
    let (h, _) = space.x_n_minus_1().divmod(&g)?;
    let h_rev = h.reversed(k);
    let shifts = |p: &Poly, count: usize| -> Vec<Vec<u32>> {
        (0..count)
            .map(|s| {
                let mut row = vec![0u32; n];
                for (i, &c) in p.coeffs().iter().enumerate() {
                    row[s + i] = c;
                }
                row
            })
            .collect()
    };
    let generator = Matrix::from_rows(&field, n, &shifts(&g, k))?;
    let parity_check = Matrix::from_rows(&field, n, &shifts(&h_rev, n - k))?;
    Ok(LinearCode { field, q: space.q(), n, generator, parity_check, origin: Some(z.clone()) })
}
