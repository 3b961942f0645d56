//! Square matrices over an exact scalar, and the canonical-representative map
//! that identifies every positive integer multiple of the identity with the
//! identity itself.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense square matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        Matrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, S::one())
    }

    /// `c·I`.
    pub fn scalar(dim: usize, c: S) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = c.clone();
        }
        m
    }

    /// The matrix unit with a single one at `(row, col)`.
    pub fn unit(dim: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zero(dim);
        m.entries[row * dim + col] = S::one();
        m
    }

    pub fn diagonal(diag: Vec<S>) -> Self {
        let mut m = Self::zero(diag.len());
        let dim = m.dim;
        for (i, d) in diag.into_iter().enumerate() {
            m.entries[i * dim + i] = d;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Shape("matrix has no rows".into()));
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {dim} for a square matrix",
                    i + 1,
                    row.len()
                )));
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    /// Parses `[[a,b],[c,d]]` with rational entries `p` or `p/q`.
    pub fn parse(src: &str) -> Result<Self> {
        let compact: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix("[[")
            .and_then(|s| s.strip_suffix("]]"))
            .ok_or_else(|| Error::Shape(format!("`{src}` is not a matrix literal")))?;
        let rows = inner
            .split("],[")
            .map(|row| {
                row.split(',')
                    .map(|e| {
                        S::parse_literal(e)
                            .ok_or_else(|| Error::Shape(format!("bad matrix entry `{e}`")))
                    })
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim)
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Shape(format!(
                "{0}x{0} and {1}x{1} matrices cannot be combined",
                self.dim, other.dim
            )));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let n = self.dim;
        let mut out = Self::zero(n);
        // Row-times-row accumulation, skipping zeros: most matrices seen by
        // the law checker are sparse (O, I, matrix units, diagonals).
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * n + j];
                        *slot = slot.clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Matrix {
            dim: self.dim,
            entries,
        })
    }

    /// Returns `c` when the matrix equals `c·I`.
    pub fn as_scalar_multiple(&self) -> Option<S> {
        let c = self.get(0, 0).clone();
        let n = self.dim;
        let ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let e = self.get(i, j);
                if i == j {
                    *e == c
                } else {
                    e.is_zero()
                }
            })
        });
        ok.then_some(c)
    }

    /// Maps `n·I` (integer `n ≥ 1`) to `I`; every other matrix, including the
    /// zero matrix and fractional multiples of `I`, is returned unchanged.
    pub fn normalize(&self) -> Self {
        match self.as_scalar_multiple() {
            Some(c) if c.is_integral() && c >= S::one() => Self::identity(self.dim),
            _ => self.clone(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        match self.as_scalar_multiple() {
            Some(c) => !(c.is_integral() && c > S::one()),
            None => true,
        }
    }
}

/// Free-function form of [`Matrix::normalize`].
pub fn normalize_matrix<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    m.normalize()
}

impl<S: Scalar> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
