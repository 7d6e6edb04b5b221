//! Cramer-style solvers for quaternion linear systems and matrix equations.
//!
//! Five exact solvers are provided, all driven by column/row determinants
//! of Gram matrices with one column or row replaced; no solver forms an
//! inverse matrix internally:
//!
//! * `A x = y`:  `x_j = cdet_j (A*A)_{.j}(A* y) / ddet A`
//! * `x A = y`:  `x_i = rdet_i (AA*)_{i.}(y A*) / ddet A`
//! * `A X = B`:  `x_ij = cdet_i (A*A)_{.i}(col_j(A*B)) / ddet A`
//! * `X A = B`:  `x_ij = rdet_j (AA*)_{j.}(row_i(BA*)) / ddet A`
//! * `A X B = C`: two equivalent formulas through `A* C B*`, one that
//!   resolves rows first and one that resolves columns first.
//!
//! Every solver substitutes its solution back into the defining equation
//! and certifies the residual is exactly zero before returning.

use num_traits::Zero;

use crate::det::{cdet, det_hermitian, rdet};
use crate::error::{Error, Result};
use crate::matrix::{Orientation, QMatrix, QVector};
use crate::quat::{Quaternion, Rational};

/// Formula choice for the two-sided equation `A X B = C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    /// Resolve through the row vectors built from `cdet` numerators.
    Row,
    /// Resolve through the column vectors built from `rdet` numerators.
    Column,
    /// Evaluate both independently and assert they agree.
    Both,
}

/// Which solver produced a [`SolveReport`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveMethod {
    RightSystem,
    LeftSystem,
    MatrixRight,
    MatrixLeft,
    TwoSidedRow,
    TwoSidedColumn,
    TwoSidedBoth,
}

impl SolveMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveMethod::RightSystem => "right-system",
            SolveMethod::LeftSystem => "left-system",
            SolveMethod::MatrixRight => "right-matrix-equation",
            SolveMethod::MatrixLeft => "left-matrix-equation",
            SolveMethod::TwoSidedRow => "two-sided-row",
            SolveMethod::TwoSidedColumn => "two-sided-column",
            SolveMethod::TwoSidedBoth => "two-sided-both",
        }
    }
}

/// A solved system's payload.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Vector(QVector),
    Matrix(QMatrix),
}

impl Solution {
    pub fn as_matrix(&self) -> QMatrix {
        match self {
            Solution::Vector(v) => v.as_matrix(),
            Solution::Matrix(m) => m.clone(),
        }
    }
}

/// Solution together with the determinant data and the exact residual
/// certificate. `residual_zero` is recomputed from the original equation;
/// a successful solve always reports `true`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveReport {
    pub solution: Solution,
    pub ddet_a: Rational,
    pub ddet_b: Option<Rational>,
    pub residual_zero: bool,
    pub method: SolveMethod,
}

fn require_square(a: &QMatrix, what: &str) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{what} needs a square coefficient matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(a.rows())
}

/// `ddet` through a precomputed Gram matrix, tagging the singular operand.
fn nonzero_ddet(gram: &QMatrix, which: &'static str) -> Result<Rational> {
    let dd = det_hermitian(gram)?;
    if dd.is_zero() {
        return Err(Error::Singular { which });
    }
    Ok(dd)
}

/// Solves the right system `A x = y` for a column vector `y`.
pub fn solve_right_system(a: &QMatrix, y: &QVector) -> Result<SolveReport> {
    let n = require_square(a, "a right system")?;
    if y.orientation() != Orientation::Column {
        return Err(Error::ShapeMismatch(
            "a right system takes a column of constants".to_string(),
        ));
    }
    if y.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "constant column has {} entries, matrix order is {n}",
            y.len()
        )));
    }
    let astar = a.adjoint();
    let gram = astar.matmul(a)?;
    let dd = nonzero_ddet(&gram, "A")?;
    let f: Vec<Quaternion> = {
        let fy = astar.matmul(&y.as_matrix())?;
        fy.col(1)
    };
    let inv_dd = dd.recip();
    let mut entries = Vec::with_capacity(n);
    for j in 1..=n {
        let numerator = cdet(&gram.replace_column(j, &f)?, j)?;
        entries.push(numerator.scale(&inv_dd));
    }
    let x = QVector::column(entries);
    let residual_zero = a.matmul(&x.as_matrix())? == y.as_matrix();
    assert!(residual_zero, "exact solve must satisfy A x = y");
    Ok(SolveReport {
        solution: Solution::Vector(x),
        ddet_a: dd,
        ddet_b: None,
        residual_zero,
        method: SolveMethod::RightSystem,
    })
}

/// Solves the left system `x A = y` for a row vector `y`.
pub fn solve_left_system(a: &QMatrix, y: &QVector) -> Result<SolveReport> {
    let n = require_square(a, "a left system")?;
    if y.orientation() != Orientation::Row {
        return Err(Error::ShapeMismatch(
            "a left system takes a row of constants".to_string(),
        ));
    }
    if y.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "constant row has {} entries, matrix order is {n}",
            y.len()
        )));
    }
    let astar = a.adjoint();
    let gram = a.matmul(&astar)?;
    let dd = nonzero_ddet(&gram, "A")?;
    let z: Vec<Quaternion> = {
        let zy = y.as_matrix().matmul(&astar)?;
        zy.row(1)
    };
    let inv_dd = dd.recip();
    let mut entries = Vec::with_capacity(n);
    for i in 1..=n {
        let numerator = rdet(&gram.replace_row(i, &z)?, i)?;
        entries.push(numerator.scale(&inv_dd));
    }
    let x = QVector::row(entries);
    let residual_zero = x.as_matrix().matmul(a)? == y.as_matrix();
    assert!(residual_zero, "exact solve must satisfy x A = y");
    Ok(SolveReport {
        solution: Solution::Vector(x),
        ddet_a: dd,
        ddet_b: None,
        residual_zero,
        method: SolveMethod::LeftSystem,
    })
}

fn check_same_order(n: usize, m: &QMatrix, name: &str) -> Result<()> {
    if m.rows() != n || m.cols() != n {
        return Err(Error::ShapeMismatch(format!(
            "{name} must be {n}x{n}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Solves the right matrix equation `A X = B`.
pub fn solve_ax_b(a: &QMatrix, b: &QMatrix) -> Result<SolveReport> {
    let n = require_square(a, "a right matrix equation")?;
    check_same_order(n, b, "B")?;
    let astar = a.adjoint();
    let gram = astar.matmul(a)?;
    let dd = nonzero_ddet(&gram, "A")?;
    let bhat = astar.matmul(b)?;
    let inv_dd = dd.recip();
    let mut x = QMatrix::zeros(n, n);
    for j in 1..=n {
        let bcol = bhat.col(j);
        for i in 1..=n {
            let numerator = cdet(&gram.replace_column(i, &bcol)?, i)?;
            x.set(i, j, numerator.scale(&inv_dd));
        }
    }
    let residual_zero = a.matmul(&x)? == *b;
    assert!(residual_zero, "exact solve must satisfy A X = B");
    Ok(SolveReport {
        solution: Solution::Matrix(x),
        ddet_a: dd,
        ddet_b: None,
        residual_zero,
        method: SolveMethod::MatrixRight,
    })
}

/// Solves the left matrix equation `X A = B`.
pub fn solve_xa_b(a: &QMatrix, b: &QMatrix) -> Result<SolveReport> {
    let n = require_square(a, "a left matrix equation")?;
    check_same_order(n, b, "B")?;
    let astar = a.adjoint();
    let gram = a.matmul(&astar)?;
    let dd = nonzero_ddet(&gram, "A")?;
    let bcheck = b.matmul(&astar)?;
    let inv_dd = dd.recip();
    let mut x = QMatrix::zeros(n, n);
    for i in 1..=n {
        let brow = bcheck.row(i);
        for j in 1..=n {
            let numerator = rdet(&gram.replace_row(j, &brow)?, j)?;
            x.set(i, j, numerator.scale(&inv_dd));
        }
    }
    let residual_zero = x.matmul(a)? == *b;
    assert!(residual_zero, "exact solve must satisfy X A = B");
    Ok(SolveReport {
        solution: Solution::Matrix(x),
        ddet_a: dd,
        ddet_b: None,
        residual_zero,
        method: SolveMethod::MatrixLeft,
    })
}

fn two_sided_row_formula(
    gram_a: &QMatrix,
    gram_b: &QMatrix,
    ctilde: &QMatrix,
    scale: &Rational,
    n: usize,
) -> Result<QMatrix> {
    let mut x = QMatrix::zeros(n, n);
    for i in 1..=n {
        let mut ca_row = Vec::with_capacity(n);
        for m in 1..=n {
            ca_row.push(cdet(&gram_a.replace_column(i, &ctilde.col(m))?, i)?);
        }
        for j in 1..=n {
            let numerator = rdet(&gram_b.replace_row(j, &ca_row)?, j)?;
            x.set(i, j, numerator.scale(scale));
        }
    }
    Ok(x)
}

fn two_sided_column_formula(
    gram_a: &QMatrix,
    gram_b: &QMatrix,
    ctilde: &QMatrix,
    scale: &Rational,
    n: usize,
) -> Result<QMatrix> {
    let mut x = QMatrix::zeros(n, n);
    for j in 1..=n {
        let mut cb_col = Vec::with_capacity(n);
        for m in 1..=n {
            cb_col.push(rdet(&gram_b.replace_row(j, &ctilde.row(m))?, j)?);
        }
        for i in 1..=n {
            let numerator = cdet(&gram_a.replace_column(i, &cb_col)?, i)?;
            x.set(i, j, numerator.scale(scale));
        }
    }
    Ok(x)
}

/// Solves the two-sided matrix equation `A X B = C`.
pub fn solve_axb_c(a: &QMatrix, b: &QMatrix, c: &QMatrix, formula: Formula) -> Result<SolveReport> {
    let n = require_square(a, "a two-sided matrix equation")?;
    check_same_order(n, b, "B")?;
    check_same_order(n, c, "C")?;
    let astar = a.adjoint();
    let bstar = b.adjoint();
    let gram_a = astar.matmul(a)?;
    let gram_b = b.matmul(&bstar)?;
    let dd_a = nonzero_ddet(&gram_a, "A")?;
    let dd_b = nonzero_ddet(&gram_b, "B")?;
    let ctilde = astar.matmul(c)?.matmul(&bstar)?;
    let scale = (&dd_a * &dd_b).recip();

    let (x, method) = match formula {
        Formula::Row => (
            two_sided_row_formula(&gram_a, &gram_b, &ctilde, &scale, n)?,
            SolveMethod::TwoSidedRow,
        ),
        Formula::Column => (
            two_sided_column_formula(&gram_a, &gram_b, &ctilde, &scale, n)?,
            SolveMethod::TwoSidedColumn,
        ),
        Formula::Both => {
            let row = two_sided_row_formula(&gram_a, &gram_b, &ctilde, &scale, n)?;
            let col = two_sided_column_formula(&gram_a, &gram_b, &ctilde, &scale, n)?;
            assert!(row == col, "row and column formulas must agree");
            (row, SolveMethod::TwoSidedBoth)
        }
    };
    let residual_zero = a.matmul(&x)?.matmul(b)? == *c;
    assert!(residual_zero, "exact solve must satisfy A X B = C");
    Ok(SolveReport {
        solution: Solution::Matrix(x),
        ddet_a: dd_a,
        ddet_b: Some(dd_b),
        residual_zero,
        method,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{m, q, sample_a, sample_b, sample_c};
    use crate::inverse::{left_inverse, right_inverse};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn rand_quat(rng: &mut StdRng) -> Quaternion {
        Quaternion::from_ints(
            rng.random_range(-3..=3),
            rng.random_range(-3..=3),
            rng.random_range(-3..=3),
            rng.random_range(-3..=3),
        )
    }

    fn rand_matrix(rng: &mut StdRng, n: usize) -> QMatrix {
        QMatrix::from_fn(n, n, |_, _| rand_quat(rng))
    }

    fn rand_nonsingular(rng: &mut StdRng, n: usize) -> QMatrix {
        loop {
            let a = rand_matrix(rng, n);
            if !crate::det::ddet(&a).unwrap().is_zero() {
                return a;
            }
        }
    }

    #[test]
    fn identity_systems() {
        let y = QVector::column(vec![q("1+i"), q("j"), q("2-k")]);
        let report = solve_right_system(&QMatrix::identity(3), &y).unwrap();
        assert_eq!(report.solution, Solution::Vector(y.clone()));
        assert!(report.residual_zero);

        let y = QVector::row(vec![q("1+i"), q("j"), q("2-k")]);
        let report = solve_left_system(&QMatrix::identity(3), &y).unwrap();
        assert_eq!(report.solution, Solution::Vector(y));

        let b = sample_c();
        assert_eq!(
            solve_ax_b(&QMatrix::identity(3), &b).unwrap().solution.as_matrix(),
            b
        );
        assert_eq!(
            solve_xa_b(&QMatrix::identity(3), &b).unwrap().solution.as_matrix(),
            b
        );
        assert_eq!(
            solve_axb_c(&QMatrix::identity(3), &QMatrix::identity(3), &b, Formula::Both)
                .unwrap()
                .solution
                .as_matrix(),
            b
        );
    }

    #[test]
    fn scalar_systems_pick_the_correct_side() {
        let a = m(&["1+i"]);
        let p = q("2+j");
        let inv_norm = q("1+i").norm_sq().recip();

        let right = solve_right_system(&a, &QVector::column(vec![p.clone()])).unwrap();
        let expected = (&q("1+i").conj() * &p).scale(&inv_norm);
        assert_eq!(right.solution.as_matrix().at(1, 1), &expected);

        let left = solve_left_system(&a, &QVector::row(vec![p.clone()])).unwrap();
        let expected = (&p * &q("1+i").conj()).scale(&inv_norm);
        assert_eq!(left.solution.as_matrix().at(1, 1), &expected);
    }

    #[test]
    fn worked_two_sided_fixture() {
        let (a, b, c) = (sample_a(), sample_b(), sample_c());
        let report = solve_axb_c(&a, &b, &c, Formula::Both).unwrap();
        assert_eq!(report.ddet_a, Rational::from_integer(8.into()));
        assert_eq!(report.ddet_b, Some(Rational::from_integer(4.into())));
        assert!(report.residual_zero);
        let x = report.solution.as_matrix();
        assert_eq!(x.at(1, 1), &q("-1+i"));
        assert_eq!(a.matmul(&x).unwrap().matmul(&b).unwrap(), c);
    }

    #[test]
    fn matrix_solvers_match_column_and_row_systems() {
        let mut rng = StdRng::seed_from_u64(83);
        let a = rand_nonsingular(&mut rng, 3);
        let b = rand_matrix(&mut rng, 3);

        let x = solve_ax_b(&a, &b).unwrap().solution.as_matrix();
        for j in 1..=3 {
            let col = solve_right_system(&a, &b.col_vector(j)).unwrap();
            assert_eq!(col.solution.as_matrix().col(1), x.col(j));
        }

        let x = solve_xa_b(&a, &b).unwrap().solution.as_matrix();
        for i in 1..=3 {
            let row = solve_left_system(&a, &b.row_vector(i)).unwrap();
            assert_eq!(row.solution.as_matrix().row(1), x.row(i));
        }
    }

    #[test]
    fn solvers_agree_with_inverse_multiplication() {
        let mut rng = StdRng::seed_from_u64(89);
        let a = rand_nonsingular(&mut rng, 3);
        let b = rand_nonsingular(&mut rng, 3);
        let c = rand_matrix(&mut rng, 3);
        let a_inv = left_inverse(&a).unwrap();
        let b_inv = right_inverse(&b).unwrap();

        assert_eq!(
            solve_ax_b(&a, &c).unwrap().solution.as_matrix(),
            a_inv.matmul(&c).unwrap()
        );
        assert_eq!(
            solve_xa_b(&a, &c).unwrap().solution.as_matrix(),
            c.matmul(&a_inv).unwrap()
        );
        assert_eq!(
            solve_axb_c(&a, &b, &c, Formula::Both).unwrap().solution.as_matrix(),
            a_inv.matmul(&c).unwrap().matmul(&b_inv).unwrap()
        );
    }

    #[test]
    fn two_sided_reduces_to_one_sided_with_identity() {
        let mut rng = StdRng::seed_from_u64(97);
        let a = rand_nonsingular(&mut rng, 3);
        let c = rand_matrix(&mut rng, 3);
        let id = QMatrix::identity(3);

        assert_eq!(
            solve_axb_c(&a, &id, &c, Formula::Row).unwrap().solution,
            solve_ax_b(&a, &c).unwrap().solution
        );
        assert_eq!(
            solve_axb_c(&id, &a, &c, Formula::Column).unwrap().solution,
            solve_xa_b(&a, &c).unwrap().solution
        );
    }

    #[test]
    fn both_formula_runs_independently_and_matches() {
        let mut rng = StdRng::seed_from_u64(101);
        for n in 1..=3 {
            let a = rand_nonsingular(&mut rng, n);
            let b = rand_nonsingular(&mut rng, n);
            let c = rand_matrix(&mut rng, n);
            let row = solve_axb_c(&a, &b, &c, Formula::Row).unwrap();
            let col = solve_axb_c(&a, &b, &c, Formula::Column).unwrap();
            assert_eq!(row.solution, col.solution);
            let both = solve_axb_c(&a, &b, &c, Formula::Both).unwrap();
            assert_eq!(both.method, SolveMethod::TwoSidedBoth);
            assert_eq!(both.solution, row.solution);
        }
    }

    #[test]
    fn perturbing_a_solution_breaks_the_residual() {
        let mut rng = StdRng::seed_from_u64(103);
        let a = rand_nonsingular(&mut rng, 2);
        let b = rand_nonsingular(&mut rng, 2);
        let c = rand_matrix(&mut rng, 2);
        let x = solve_axb_c(&a, &b, &c, Formula::Row).unwrap().solution.as_matrix();
        let mut bad = x.clone();
        bad.set(1, 2, &x.at(1, 2).clone() + &Quaternion::one());
        assert_ne!(a.matmul(&bad).unwrap().matmul(&b).unwrap(), c);
    }

    #[test]
    fn singular_operands_are_identified() {
        let singular = m(&["1 i", "j -k"]);
        let fine = m(&["1 0", "0 i"]);
        let c = m(&["1 1", "1 1"]);

        assert_eq!(
            solve_axb_c(&singular, &fine, &c, Formula::Row),
            Err(Error::Singular { which: "A" })
        );
        assert_eq!(
            solve_axb_c(&fine, &singular, &c, Formula::Row),
            Err(Error::Singular { which: "B" })
        );
        assert_eq!(solve_ax_b(&singular, &c), Err(Error::Singular { which: "A" }));
        assert_eq!(solve_xa_b(&singular, &c), Err(Error::Singular { which: "A" }));
        assert_eq!(
            solve_right_system(&singular, &QVector::column(vec![q("1"), q("1")])),
            Err(Error::Singular { which: "A" })
        );
        assert_eq!(
            solve_left_system(&singular, &QVector::row(vec![q("1"), q("1")])),
            Err(Error::Singular { which: "A" })
        );
    }

    #[test]
    fn orientation_and_shape_mismatches() {
        let a = QMatrix::identity(2);
        let row = QVector::row(vec![q("1"), q("1")]);
        let col = QVector::column(vec![q("1"), q("1")]);
        assert!(matches!(solve_right_system(&a, &row), Err(Error::ShapeMismatch(_))));
        assert!(matches!(solve_left_system(&a, &col), Err(Error::ShapeMismatch(_))));
        let short = QVector::column(vec![q("1")]);
        assert!(matches!(solve_right_system(&a, &short), Err(Error::ShapeMismatch(_))));
        let b3 = QMatrix::identity(3);
        assert!(matches!(solve_ax_b(&a, &b3), Err(Error::ShapeMismatch(_))));
    }
}
