//! Exact linear algebra over the quaternion skew field.
//!
//! Everything is computed with arbitrary-precision rational coefficients,
//! so every identity in this crate holds exactly — there are no tolerances
//! anywhere. The centerpiece is the pair of noncommutative determinant
//! functionals `rdet_i` / `cdet_j` defined by permutation sums over
//! canonical cycle notations. On top of them sit:
//!
//! * the determinant of a Hermitian matrix (all 2n anchored determinants
//!   coincide and are real);
//! * the double determinant `ddet A = det(A* A) = det(A A*)`, whose
//!   nonvanishing characterizes invertibility;
//! * row/column cofactor expansions and double-cofactor adjugates giving
//!   the two-sided inverse `A^{-1} = Adj[[A]] / ddet A`;
//! * Cramer-style solvers for `A x = y`, `x A = y`, `A X = B`, `X A = B`
//!   and `A X B = C`, each returning an exact residual certificate;
//! * an independent oracle (classical determinant of the complex
//!   representation) used by the test suite, never by the solvers.
//!
//! Permutation sums cost `n!`; the [`det::size_cap`] guard (default 9)
//! keeps accidental blowups out. With the default `parallel` feature the
//! sums fan out over a rayon pool, and because quaternion addition is
//! commutative and exact, results are bitwise identical for any worker
//! count. Disabling the feature leaves a fully sequential build.

pub mod det;
pub mod error;
pub mod inverse;
pub mod matrix;
pub mod oracle;
pub mod perm;
pub mod quat;
pub mod solve;

pub use det::{
    cdet, cdet_seq, ddet, ddet_verified, det_hermitian, det_hermitian_verified, left_cofactor,
    rank_by_principal_minors, rdet, rdet_seq, right_cofactor, set_size_cap, size_cap,
    DEFAULT_SIZE_CAP,
};
pub use error::{Error, Result};
pub use inverse::{
    adjugate, adjugate_side, cofactor_table, double_left_cofactor, double_right_cofactor,
    hermitian_inverse, left_inverse, right_inverse, CofactorKind, CofactorTable, DoubleSide,
};
pub use matrix::{Orientation, QMatrix, QVector};
pub use num_bigint::BigInt;
pub use perm::{canonical_cycles, CycleDecomposition, CycleOrder};
pub use quat::{format_quat, parse_quat, rational, Quaternion, Rational};
pub use solve::{
    solve_ax_b, solve_axb_c, solve_left_system, solve_right_system, solve_xa_b, Formula, Solution,
    SolveMethod, SolveReport,
};
