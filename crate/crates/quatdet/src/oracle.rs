//! Independent cross-validation paths.
//!
//! Nothing in the computational modules depends on this code at runtime;
//! it exists so the determinant machinery can be checked against classical
//! (commutative) linear algebra. Two bridges are provided: the classical
//! determinant for matrices whose entries commute, and the complex
//! 2n x 2n representation whose classical determinant (the Study
//! determinant) must coincide with the double determinant.

use num_complex::Complex;
use num_traits::{One, Signed, Zero};

use crate::det::ddet;
use crate::error::Result;
use crate::matrix::QMatrix;
use crate::quat::Rational;

/// Exact complex scalar with rational real and imaginary parts.
pub type ComplexRational = Complex<Rational>;

fn czero() -> ComplexRational {
    Complex::new(Rational::zero(), Rational::zero())
}

/// Classical determinant by fraction-free (Bareiss) elimination with row
/// pivoting. Exact; returns zero on rank-deficient input.
pub fn classical_det(m: &[Vec<ComplexRational>]) -> ComplexRational {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n), "square matrix required");
    let mut work: Vec<Vec<ComplexRational>> = m.to_vec();
    let mut negated = false;
    let mut prev = Complex::new(Rational::one(), Rational::zero());
    for k in 0..n.saturating_sub(1) {
        if work[k][k].is_zero() {
            match (k + 1..n).find(|&r| !work[r][k].is_zero()) {
                Some(r) => {
                    work.swap(k, r);
                    negated = !negated;
                }
                None => return czero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &work[i][j] * &work[k][k] - &work[i][k] * &work[k][j];
                work[i][j] = num / prev.clone();
            }
        }
        prev = work[k][k].clone();
    }
    let det = work[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

/// Maps a quaternion matrix to its 2n x 2n complex representation: each
/// entry `w + x*i + y*j + z*k` becomes the block
/// `[[w + x*I, y + z*I], [-y + z*I, w - x*I]]`. The map is a ring
/// homomorphism.
pub fn complex_representation(a: &QMatrix) -> Vec<Vec<ComplexRational>> {
    assert!(a.is_square(), "square matrix required");
    let n = a.rows();
    let mut out = vec![vec![czero(); 2 * n]; 2 * n];
    for i in 1..=n {
        for j in 1..=n {
            let q = a.at(i, j);
            let (r, c) = (2 * (i - 1), 2 * (j - 1));
            out[r][c] = Complex::new(q.w.clone(), q.x.clone());
            out[r][c + 1] = Complex::new(q.y.clone(), q.z.clone());
            out[r + 1][c] = Complex::new(-q.y.clone(), q.z.clone());
            out[r + 1][c + 1] = Complex::new(q.w.clone(), -q.x.clone());
        }
    }
    out
}

/// When every entry of `a` lies in the complex subfield spanned by 1 and i,
/// returns the corresponding n x n complex matrix.
pub fn as_complex_matrix(a: &QMatrix) -> Option<Vec<Vec<ComplexRational>>> {
    let mut out = Vec::with_capacity(a.rows());
    for i in 1..=a.rows() {
        let mut row = Vec::with_capacity(a.cols());
        for j in 1..=a.cols() {
            let q = a.at(i, j);
            if !q.y.is_zero() || !q.z.is_zero() {
                return None;
            }
            row.push(Complex::new(q.w.clone(), q.x.clone()));
        }
        out.push(row);
    }
    Some(out)
}

/// Multiplies two complex matrices; test support for the homomorphism check.
pub fn complex_matmul(
    a: &[Vec<ComplexRational>],
    b: &[Vec<ComplexRational>],
) -> Vec<Vec<ComplexRational>> {
    let n = a.len();
    let p = b[0].len();
    let inner = b.len();
    let mut out = vec![vec![czero(); p]; n];
    for i in 0..n {
        for j in 0..p {
            let mut acc = czero();
            for t in 0..inner {
                acc += &a[i][t] * &b[t][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

/// Checks the Study-determinant bridge: the classical determinant of the
/// complex representation must be real, nonnegative, and equal to the
/// double determinant.
pub fn study_check(a: &QMatrix) -> Result<bool> {
    let sdet = classical_det(&complex_representation(a));
    let dd = ddet(a)?;
    Ok(sdet.im.is_zero() && !sdet.re.is_negative() && sdet.re == dd)
}
