//! Dense quaternion matrices and vectors.
//!
//! All user-facing indices are 1-based, matching the index sets
//! `{1, ..., n}` the determinant formulas range over. Storage is dense
//! row-major; matrices in scope are tiny, so no sparsity machinery.

use crate::error::{Error, Result};
use crate::quat::{Quaternion, Rational};

/// Row/column tag for [`QVector`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Row,
    Column,
}

/// A quaternion vector with an explicit orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QVector {
    orientation: Orientation,
    entries: Vec<Quaternion>,
}

impl QVector {
    pub fn row(entries: Vec<Quaternion>) -> Self {
        assert!(!entries.is_empty(), "vector must have at least one entry");
        Self { orientation: Orientation::Row, entries }
    }

    pub fn column(entries: Vec<Quaternion>) -> Self {
        assert!(!entries.is_empty(), "vector must have at least one entry");
        Self { orientation: Orientation::Column, entries }
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based entry access.
    pub fn at(&self, i: usize) -> &Quaternion {
        &self.entries[i - 1]
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.entries
    }

    /// The same data as an `n x 1` or `1 x n` matrix.
    pub fn as_matrix(&self) -> QMatrix {
        match self.orientation {
            Orientation::Row => QMatrix::new(1, self.entries.len(), self.entries.clone()),
            Orientation::Column => QMatrix::new(self.entries.len(), 1, self.entries.clone()),
        }
        .expect("vector entries always fill the matrix")
    }
}

/// Dense quaternion matrix with 1-based entry access.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quaternion>,
}

impl QMatrix {
    /// Builds a matrix from row-major entries.
    pub fn new(rows: usize, cols: usize, entries: Vec<Quaternion>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::ShapeMismatch(
                "matrix dimensions must be positive".to_string(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        if rows.is_empty() || rows[0].is_empty() {
            return Err(Error::ShapeMismatch(
                "matrix dimensions must be positive".to_string(),
            ));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".to_string()));
        }
        let nrows = rows.len();
        Ok(Self {
            rows: nrows,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix from a 1-based entry function.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be positive");
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Quaternion::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Quaternion::one()
            } else {
                Quaternion::zero()
            }
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

    /// 1-based entry access. Panics when out of range.
    pub fn at(&self, i: usize, j: usize) -> &Quaternion {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    /// 1-based entry assignment. Panics when out of range.
    pub fn set(&mut self, i: usize, j: usize, value: Quaternion) {
        assert!(
            (1..=self.rows).contains(&i) && (1..=self.cols).contains(&j),
            "entry ({i},{j}) out of range for a {}x{} matrix",
            self.rows,
            self.cols
        );
        self.entries[(i - 1) * self.cols + (j - 1)] = value;
    }

    pub fn row(&self, i: usize) -> Vec<Quaternion> {
        (1..=self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Quaternion> {
        (1..=self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row_vector(&self, i: usize) -> QVector {
        QVector::row(self.row(i))
    }

    pub fn col_vector(&self, j: usize) -> QVector {
        QVector::column(self.col(j))
    }

    /// Hermitian adjoint (conjugate transpose).
    pub fn adjoint(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    /// Exact matrix product. Each term multiplies the left factor's entry
    /// before the right factor's, and terms accumulate in index order.
    pub fn matmul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(QMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = Quaternion::zero();
            for t in 1..=self.cols {
                acc = &acc + &(self.at(i, t) * rhs.at(t, j));
            }
            acc
        }))
    }

    pub fn is_hermitian(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "hermiticity is defined for square matrices, got {}x{}",
                self.rows, self.cols
            )));
        }
        for i in 1..=self.rows {
            for j in i..=self.cols {
                if *self.at(i, j) != self.at(j, i).conj() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Copy of the matrix with column `j` replaced by `b`.
    pub fn replace_column(&self, j: usize, b: &[Quaternion]) -> Result<QMatrix> {
        if !(1..=self.cols).contains(&j) {
            return Err(Error::IndexOutOfRange { index: j, bound: self.cols });
        }
        if b.len() != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "replacement column has {} entries, matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |r, c| {
            if c == j {
                b[r - 1].clone()
            } else {
                self.at(r, c).clone()
            }
        }))
    }

    /// Copy of the matrix with row `i` replaced by `b`.
    pub fn replace_row(&self, i: usize, b: &[Quaternion]) -> Result<QMatrix> {
        if !(1..=self.rows).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, bound: self.rows });
        }
        if b.len() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "replacement row has {} entries, matrix has {} columns",
                b.len(),
                self.cols
            )));
        }
        Ok(QMatrix::from_fn(self.rows, self.cols, |r, c| {
            if r == i {
                b[c - 1].clone()
            } else {
                self.at(r, c).clone()
            }
        }))
    }

    /// The submatrix with row `i` and column `j` removed.
    pub fn delete_row_col(&self, i: usize, j: usize) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "row/column deletion needs a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if self.rows == 1 {
            return Err(Error::DegenerateSize);
        }
        if !(1..=self.rows).contains(&i) {
            return Err(Error::IndexOutOfRange { index: i, bound: self.rows });
        }
        if !(1..=self.cols).contains(&j) {
            return Err(Error::IndexOutOfRange { index: j, bound: self.cols });
        }
        Ok(QMatrix::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            let src_r = if r < i { r } else { r + 1 };
            let src_c = if c < j { c } else { c + 1 };
            self.at(src_r, src_c).clone()
        }))
    }

    /// Scales every entry by the rational `r`.
    pub fn scale(&self, r: &Rational) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).scale(r))
    }
}
