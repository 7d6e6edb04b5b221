//! Double cofactors, the adjugate analog over the quaternions, and the
//! determinantal inverse representations.
//!
//! For a square `A` with Gram matrices `A* A` and `A A*`:
//!
//! * the left double cofactor `L[i,j]` is `cdet_j` of `A* A` with column
//!   `j` replaced by the `i`th column of `A*`;
//! * the right double cofactor `R[i,j]` is `rdet_i` of `A A*` with row `i`
//!   replaced by the `j`th row of `A*`.
//!
//! These expand the double determinant along any column or row of `A`
//! itself, and arranging either family transposed and dividing by
//! `ddet A` yields the two-sided inverse. All divisions are by the real
//! scalar `ddet A`, applied coefficientwise.

use num_traits::Zero;

use crate::det::{cdet, ddet, det_hermitian, rdet, right_cofactor};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quat::Quaternion;

/// Which cofactor family a [`CofactorTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CofactorKind {
    Right,
    Left,
    DoubleRight,
    DoubleLeft,
}

/// Which double-cofactor family backs an adjugate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DoubleSide {
    Left,
    Right,
}

/// An `n x n` cofactor table in adjugate (transposed) arrangement: entry
/// `(i, j)` holds the `(j, i)` cofactor of the source matrix, matching the
/// layout of the determinantal inverse formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CofactorTable {
    pub kind: CofactorKind,
    pub values: QMatrix,
}

fn require_square(a: &QMatrix, what: &str) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{what} needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(a.rows())
}

fn check_indices(n: usize, i: usize, j: usize) -> Result<()> {
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, bound: n });
        }
    }
    Ok(())
}

fn double_left_from(gram: &QMatrix, astar: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    let replaced = gram.replace_column(j, &astar.col(i))?;
    cdet(&replaced, j)
}

fn double_right_from(gram: &QMatrix, astar: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    let replaced = gram.replace_row(i, &astar.row(j))?;
    rdet(&replaced, i)
}

/// Left double `ij`th cofactor of `a`.
pub fn double_left_cofactor(a: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    let n = require_square(a, "double cofactor")?;
    check_indices(n, i, j)?;
    let astar = a.adjoint();
    let gram = astar.matmul(a)?;
    double_left_from(&gram, &astar, i, j)
}

/// Right double `ij`th cofactor of `a`.
pub fn double_right_cofactor(a: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    let n = require_square(a, "double cofactor")?;
    check_indices(n, i, j)?;
    let astar = a.adjoint();
    let gram = a.matmul(&astar)?;
    double_right_from(&gram, &astar, i, j)
}

/// Table of cofactors of `a` in adjugate arrangement; see
/// [`CofactorTable`]. Plain kinds tabulate the row/column expansion
/// cofactors of `a` itself, double kinds the Gram-based families.
pub fn cofactor_table(a: &QMatrix, kind: CofactorKind) -> Result<CofactorTable> {
    let n = require_square(a, "cofactor table")?;
    let mut values = QMatrix::zeros(n, n);
    match kind {
        CofactorKind::Right => {
            for i in 1..=n {
                for j in 1..=n {
                    values.set(i, j, right_cofactor(a, j, i)?);
                }
            }
        }
        CofactorKind::Left => {
            for i in 1..=n {
                for j in 1..=n {
                    values.set(i, j, crate::det::left_cofactor(a, j, i)?);
                }
            }
        }
        CofactorKind::DoubleLeft => {
            let astar = a.adjoint();
            let gram = astar.matmul(a)?;
            for i in 1..=n {
                for j in 1..=n {
                    values.set(i, j, double_left_from(&gram, &astar, j, i)?);
                }
            }
        }
        CofactorKind::DoubleRight => {
            let astar = a.adjoint();
            let gram = a.matmul(&astar)?;
            for i in 1..=n {
                for j in 1..=n {
                    values.set(i, j, double_right_from(&gram, &astar, j, i)?);
                }
            }
        }
    }
    Ok(CofactorTable { kind, values })
}

/// Adjugate analog of `a`, by default from the left double cofactors.
/// `adjugate(a) / ddet(a)` is the inverse whenever `ddet(a) != 0`, but the
/// table itself is defined for every square matrix.
pub fn adjugate(a: &QMatrix) -> Result<CofactorTable> {
    adjugate_side(a, DoubleSide::Left)
}

/// Adjugate from the chosen double-cofactor family.
pub fn adjugate_side(a: &QMatrix, side: DoubleSide) -> Result<CofactorTable> {
    let kind = match side {
        DoubleSide::Left => CofactorKind::DoubleLeft,
        DoubleSide::Right => CofactorKind::DoubleRight,
    };
    cofactor_table(a, kind)
}

/// Inverse via the left double cofactors: `(1/ddet A) * (L[j,i])`.
pub fn left_inverse(a: &QMatrix) -> Result<QMatrix> {
    require_square(a, "inverse")?;
    let dd = ddet(a)?;
    if dd.is_zero() {
        return Err(Error::Singular { which: "A" });
    }
    let table = adjugate_side(a, DoubleSide::Left)?;
    Ok(table.values.scale(&dd.recip()))
}

/// Inverse via the right double cofactors: `(1/ddet A) * (R[j,i])`.
pub fn right_inverse(a: &QMatrix) -> Result<QMatrix> {
    require_square(a, "inverse")?;
    let dd = ddet(a)?;
    if dd.is_zero() {
        return Err(Error::Singular { which: "A" });
    }
    let table = adjugate_side(a, DoubleSide::Right)?;
    Ok(table.values.scale(&dd.recip()))
}

/// Inverse of a Hermitian matrix from its plain right cofactors:
/// `(1/det H) * (R[j,i])`.
pub fn hermitian_inverse(h: &QMatrix) -> Result<QMatrix> {
    let det = det_hermitian(h)?;
    if det.is_zero() {
        return Err(Error::Singular { which: "A" });
    }
    let table = cofactor_table(h, CofactorKind::Right)?;
    Ok(table.values.scale(&det.recip()))
}
