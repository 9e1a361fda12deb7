//! Dense matrices of arbitrary-precision integers and exact determinants.
//!
//! Everything downstream (tree counts, twisted determinants) reduces to
//! `determinant`, so this module stays in exact integer arithmetic
//! throughout: fraction-free Bareiss elimination, where every intermediate
//! division is exact.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of `BigInt` entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// All-zero `rows x cols` matrix.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Build from nested rows; every row must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::invalid(format!(
                    "ragged rows: expected {} columns, found {}",
                    ncols,
                    row.len()
                )));
            }
            entries.extend(row.iter().cloned().map(Into::into));
        }
        Ok(IntMatrix {
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_index(&self, row: usize, col: usize) -> Result<()> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::IndexOutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.cols + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: impl Into<BigInt>) {
        self.entries[row * self.cols + col] = value.into();
    }

    /// Copy with row `row` and column `col` deleted.
    fn minor(&self, row: usize, col: usize) -> IntMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            for j in 0..self.cols {
                if j == col {
                    continue;
                }
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// The input is left untouched; the 0x0 determinant is 1. Pivoting takes
    /// the first nonzero entry in column order, and an all-zero pivot column
    /// short-circuits to 0.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.entries.clone();
        let mut negated = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            let pivot_row = match (k..n).find(|&r| !a[r * n + k].is_zero()) {
                Some(r) => r,
                None => return Ok(BigInt::zero()),
            };
            if pivot_row != k {
                for j in k..n {
                    a.swap(pivot_row * n + j, k * n + j);
                }
                negated = !negated;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // Bareiss step: the division by the previous pivot is
                    // exact because each entry is a (k+1)-minor of the
                    // row-permuted input.
                    let t = &a[k * n + k] * &a[i * n + j] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = t / &prev;
                }
                a[i * n + k] = BigInt::zero();
            }
            prev = a[k * n + k].clone();
        }
        let det = a[n * n - 1].clone();
        Ok(if negated { -det } else { det })
    }

    /// Signed cofactor `(-1)^(row+col) * det(minor(row, col))`.
    pub fn first_cofactor(&self, row: usize, col: usize) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.check_index(row, col)?;
        let det = self.minor(row, col).determinant()?;
        Ok(if (row + col).is_multiple_of(2) {
            det
        } else {
            -det
        })
    }

    /// True when every row and every column sums to zero (Laplacians do).
    pub fn has_zero_row_and_column_sums(&self) -> bool {
        (0..self.rows).all(|i| {
            (0..self.cols)
                .map(|j| self.get(i, j))
                .sum::<BigInt>()
                .is_zero()
        }) && (0..self.cols).all(|j| {
            (0..self.rows)
                .map(|i| self.get(i, j))
                .sum::<BigInt>()
                .is_zero()
        })
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let width = self
            .entries
            .iter()
            .map(|e| e.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:>width$}", self.get(i, j).to_string())?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
