//! Row and column determinants, cofactors, the Hermitian determinant, the
//! double determinant, and rank by principal minors.
//!
//! `rdet_i` sums, over all n! permutations, the monomial obtained by
//! writing the permutation in left-ordered cycle notation anchored at `i`
//! and multiplying matrix entries along each cycle in turn: a cycle
//! `(c0 c1 ... cm)` contributes `a[c0,c1] a[c1,c2] ... a[cm,c0]`, the
//! anchor's cycle first, the remaining cycles in ascending order of their
//! leading (minimum) elements. The sign of a monomial is `(-1)^(n - r)`
//! with `r` the number of cycles, fixed points included.
//!
//! `cdet_j` is the mirror sum over right-ordered cycle notations: the same
//! factor pairs appear transposed and the whole product is reversed, so the
//! anchor cycle's chain ends the monomial with `a[.., j]`. On commuting
//! entries both reduce to the classical determinant; on Hermitian matrices
//! all 2n of them agree and are real.
//!
//! Evaluation cost is factorial. Calls on matrices larger than the
//! process-wide [`size_cap`] (default [`DEFAULT_SIZE_CAP`]) are rejected
//! rather than attempted. With the `parallel` feature the permutation set
//! is partitioned across threads; partial sums combine by quaternion
//! addition, which is commutative and exact, so results are bitwise
//! identical for every worker count.

use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::Zero;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::perm::next_permutation;
#[cfg(feature = "parallel")]
use crate::perm::{factorial, permutation_at};
use crate::quat::{Quaternion, Rational};

/// Default bound on the matrix order accepted by the permutation sums.
/// 9! = 362880 monomials is the largest default workload.
pub const DEFAULT_SIZE_CAP: usize = 9;

/// Factorial indexing of the permutation set runs in u64.
const MAX_SIZE_CAP: usize = 20;

static SIZE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_SIZE_CAP);

/// Current process-wide size cap.
pub fn size_cap() -> usize {
    SIZE_CAP.load(Ordering::Relaxed)
}

/// Overrides the process-wide size cap. Panics outside `1..=20`.
pub fn set_size_cap(cap: usize) {
    assert!(
        (1..=MAX_SIZE_CAP).contains(&cap),
        "size cap must lie in 1..={MAX_SIZE_CAP}"
    );
    SIZE_CAP.store(cap, Ordering::Relaxed);
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Template {
    Row,
    Col,
}

/// Signed monomial of one permutation. `scratch` holds the factor pairs
/// `(t, perm(t))` in canonical left-ordered visit order.
fn monomial(
    a: &QMatrix,
    perm: &[usize],
    anchor: usize,
    template: Template,
    scratch: &mut Vec<(usize, usize)>,
) -> Quaternion {
    let n = perm.len();
    scratch.clear();
    let mut visited = 0u32;
    let mut cycles = 0usize;
    let mut start = anchor;
    loop {
        cycles += 1;
        let mut x = start;
        loop {
            visited |= 1 << x;
            let y = perm[x - 1];
            scratch.push((x, y));
            x = y;
            if x == start {
                break;
            }
        }
        match (1..=n).find(|&v| visited & (1 << v) == 0) {
            Some(v) => start = v,
            None => break,
        }
    }

    let mut product: Option<Quaternion> = None;
    match template {
        Template::Row => {
            for &(p, q) in scratch.iter() {
                let factor = a.at(p, q);
                product = Some(match product {
                    None => factor.clone(),
                    Some(acc) => &acc * factor,
                });
                if product.as_ref().is_some_and(Quaternion::is_zero) {
                    return Quaternion::zero();
                }
            }
        }
        Template::Col => {
            // Right-ordered monomial: the same pairs transposed, multiplied
            // in reverse, so the product ends with a[perm(anchor), anchor].
            for &(p, q) in scratch.iter().rev() {
                let factor = a.at(q, p);
                product = Some(match product {
                    None => factor.clone(),
                    Some(acc) => &acc * factor,
                });
                if product.as_ref().is_some_and(Quaternion::is_zero) {
                    return Quaternion::zero();
                }
            }
        }
    }
    let product = product.expect("permutation has at least one factor");
    if (n - cycles) % 2 == 1 {
        -product
    } else {
        product
    }
}

fn check_anchor(a: &QMatrix, anchor: usize) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "determinants are defined for square matrices, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    if anchor == 0 || anchor > n {
        return Err(Error::IndexOutOfRange { index: anchor, bound: n });
    }
    let cap = size_cap();
    if n > cap {
        return Err(Error::SizeCapExceeded { n, cap });
    }
    Ok(n)
}

fn det_anchor_seq(a: &QMatrix, anchor: usize, template: Template) -> Quaternion {
    let n = a.rows();
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut scratch = Vec::with_capacity(n);
    let mut acc = Quaternion::zero();
    loop {
        acc = &acc + &monomial(a, &perm, anchor, template, &mut scratch);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

#[cfg(feature = "parallel")]
fn det_anchor_par(a: &QMatrix, anchor: usize, template: Template) -> Quaternion {
    // 6! keeps orders up to 6 on the single-chunk fast path while giving
    // larger orders enough chunks to balance any worker count.
    const CHUNK: u64 = 720;
    let n = a.rows();
    let total = factorial(n);
    if total <= CHUNK {
        return det_anchor_seq(a, anchor, template);
    }
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let first = c * CHUNK;
            let count = CHUNK.min(total - first);
            let mut perm = permutation_at(n, first);
            let mut scratch = Vec::with_capacity(n);
            let mut acc = Quaternion::zero();
            for step in 0..count {
                acc = &acc + &monomial(a, &perm, anchor, template, &mut scratch);
                if step + 1 < count {
                    next_permutation(&mut perm);
                }
            }
            acc
        })
        .reduce(Quaternion::zero, |p, q| &p + &q)
}

fn det_anchor(a: &QMatrix, anchor: usize, template: Template) -> Quaternion {
    #[cfg(feature = "parallel")]
    {
        det_anchor_par(a, anchor, template)
    }
    #[cfg(not(feature = "parallel"))]
    {
        det_anchor_seq(a, anchor, template)
    }
}

/// Row determinant anchored at row `i`.
pub fn rdet(a: &QMatrix, i: usize) -> Result<Quaternion> {
    check_anchor(a, i)?;
    Ok(det_anchor(a, i, Template::Row))
}

/// Column determinant anchored at column `j`.
pub fn cdet(a: &QMatrix, j: usize) -> Result<Quaternion> {
    check_anchor(a, j)?;
    Ok(det_anchor(a, j, Template::Col))
}

/// Single-threaded row determinant. Same value as [`rdet`]; exists so the
/// sequential evaluator stays callable for benchmarks when the `parallel`
/// feature is active.
pub fn rdet_seq(a: &QMatrix, i: usize) -> Result<Quaternion> {
    check_anchor(a, i)?;
    Ok(det_anchor_seq(a, i, Template::Row))
}

/// Single-threaded column determinant; see [`rdet_seq`].
pub fn cdet_seq(a: &QMatrix, j: usize) -> Result<Quaternion> {
    check_anchor(a, j)?;
    Ok(det_anchor_seq(a, j, Template::Col))
}

fn check_cofactor_indices(a: &QMatrix, i: usize, j: usize) -> Result<usize> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "cofactors are defined for square matrices, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    for idx in [i, j] {
        if idx == 0 || idx > n {
            return Err(Error::IndexOutOfRange { index: idx, bound: n });
        }
    }
    Ok(n)
}

/// Right `ij`-th cofactor: the coefficient of `a[i,j]` in the expansion
/// `rdet_i A = sum_j a[i,j] * R[i,j]`. For the diagonal case the minor's
/// anchor is the smallest surviving row label, which is its first row.
pub fn right_cofactor(a: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    let n = check_cofactor_indices(a, i, j)?;
    if n == 1 {
        return Ok(Quaternion::one());
    }
    if i == j {
        let minor = a.delete_row_col(i, i)?;
        rdet(&minor, 1)
    } else {
        let replaced = a.replace_column(j, &a.col(i))?;
        let minor = replaced.delete_row_col(i, i)?;
        let local_j = if j > i { j - 1 } else { j };
        Ok(-&rdet(&minor, local_j)?)
    }
}

/// Left `ij`-th cofactor: the coefficient of `a[i,j]` in the expansion
/// `cdet_j A = sum_i L[i,j] * a[i,j]`.
pub fn left_cofactor(a: &QMatrix, i: usize, j: usize) -> Result<Quaternion> {
    let n = check_cofactor_indices(a, i, j)?;
    if n == 1 {
        return Ok(Quaternion::one());
    }
    if i == j {
        let minor = a.delete_row_col(j, j)?;
        cdet(&minor, 1)
    } else {
        let replaced = a.replace_row(i, &a.row(j))?;
        let minor = replaced.delete_row_col(j, j)?;
        let local_i = if i > j { i - 1 } else { i };
        Ok(-&cdet(&minor, local_i)?)
    }
}

/// Determinant of a Hermitian matrix: the common real value of all its row
/// and column determinants.
pub fn det_hermitian(h: &QMatrix) -> Result<Rational> {
    if !h.is_hermitian()? {
        return Err(Error::NotHermitian);
    }
    let value = rdet(h, 1)?;
    assert!(
        value.is_real(),
        "row determinant of a Hermitian matrix must be real"
    );
    Ok(value.w)
}

/// Like [`det_hermitian`], but evaluates all `2n` anchored determinants and
/// asserts they agree and are real before returning the common value.
pub fn det_hermitian_verified(h: &QMatrix) -> Result<Rational> {
    if !h.is_hermitian()? {
        return Err(Error::NotHermitian);
    }
    let n = h.rows();
    let reference = rdet(h, 1)?;
    assert!(reference.is_real(), "Hermitian determinant must be real");
    for anchor in 1..=n {
        let r = rdet(h, anchor)?;
        let c = cdet(h, anchor)?;
        assert!(
            r == reference && c == reference,
            "anchored determinants of a Hermitian matrix must agree"
        );
    }
    Ok(reference.w)
}

/// Double determinant `det(A* A)`.
pub fn ddet(a: &QMatrix) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "double determinant needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let gram = a.adjoint().matmul(a)?;
    det_hermitian(&gram)
}

/// Like [`ddet`], but also evaluates `det(A A*)` and asserts the two Gram
/// determinants agree.
pub fn ddet_verified(a: &QMatrix) -> Result<Rational> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "double determinant needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let left = det_hermitian_verified(&a.adjoint().matmul(a)?)?;
    let right = det_hermitian_verified(&a.matmul(&a.adjoint())?)?;
    assert!(left == right, "det(A*A) and det(AA*) must agree");
    Ok(left)
}

/// Rank of a Hermitian matrix by principal minors: the maximal order of a
/// principal submatrix with nonzero Hermitian determinant (0 for the zero
/// matrix). Applied to a Gram matrix `A* A` this equals the rank of `A`.
pub fn rank_by_principal_minors(h: &QMatrix) -> Result<usize> {
    if !h.is_hermitian()? {
        return Err(Error::NotHermitian);
    }
    let n = h.rows();
    for k in (1..=n).rev() {
        for mask in 1u32..(1u32 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let labels: Vec<usize> = (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect();
            let sub = QMatrix::from_fn(k, k, |r, c| h.at(labels[r - 1], labels[c - 1]).clone());
            if !det_hermitian(&sub)?.is_zero() {
                return Ok(k);
            }
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{m, q, sample_a, sample_b};
    use crate::perm::{canonical_cycles, CycleOrder};
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

    #[test]
    fn one_by_one_determinants() {
        let a = m(&["2-3i+j-k"]);
        assert_eq!(rdet(&a, 1).unwrap(), q("2-3i+j-k"));
        assert_eq!(cdet(&a, 1).unwrap(), q("2-3i+j-k"));
    }

    #[test]
    fn two_by_two_templates() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..20 {
            let (a, b, c, d) = (
                rand_quat(&mut rng),
                rand_quat(&mut rng),
                rand_quat(&mut rng),
                rand_quat(&mut rng),
            );
            let mat = QMatrix::from_rows(vec![
                vec![a.clone(), b.clone()],
                vec![c.clone(), d.clone()],
            ])
            .unwrap();
            assert_eq!(rdet(&mat, 1).unwrap(), &(&a * &d) - &(&b * &c));
            assert_eq!(rdet(&mat, 2).unwrap(), &(&d * &a) - &(&c * &b));
            assert_eq!(cdet(&mat, 1).unwrap(), &(&d * &a) - &(&b * &c));
            assert_eq!(cdet(&mat, 2).unwrap(), &(&a * &d) - &(&c * &b));
        }
    }

    #[test]
    fn row_determinant_depends_on_anchor_off_the_hermitian_class() {
        let a = m(&["i j", "k 1"]);
        assert_eq!(rdet(&a, 1).unwrap(), Quaternion::zero());
        assert_eq!(rdet(&a, 2).unwrap(), q("2i"));
    }

    #[test]
    fn identity_permutation_carries_positive_sign() {
        // Strictly upper-triangular off-diagonal entries cannot close a
        // cycle, so only the identity permutation survives.
        let a = m(&["i 5 7", "0 j 11", "0 0 k"]);
        assert_eq!(rdet(&a, 1).unwrap(), q("i") * q("j") * q("k"));
        assert_eq!(cdet(&a, 1).unwrap(), q("k") * q("j") * q("i"));
    }

    #[test]
    fn column_determinant_of_replaced_gram_matrix() {
        // First column of A*C B* substituted into the first column of A*A.
        let replaced = m(&["2k j+3k -j-k", "-2-4i 3 i", "-4+2i -i 3"]);
        assert_eq!(cdet(&replaced, 1).unwrap(), q("24j+8k"));
    }

    #[test]
    fn monomial_factors_follow_canonical_cycles() {
        // The fused evaluator and the public decomposition must agree on
        // factor order; compare against products assembled from the cycles.
        let mut rng = StdRng::seed_from_u64(17);
        let n = 4;
        let a = rand_matrix(&mut rng, n);
        for anchor in 1..=n {
            let mut expected_r = Quaternion::zero();
            let mut expected_c = Quaternion::zero();
            let mut perm: Vec<usize> = (1..=n).collect();
            loop {
                let left = canonical_cycles(&perm, anchor, CycleOrder::LeftOrdered).unwrap();
                let sign = (n - left.cycle_count()) % 2 == 1;
                let mut prod_r = Quaternion::one();
                for cycle in &left.cycles {
                    for t in 0..cycle.len() {
                        let from = cycle[t];
                        let to = cycle[(t + 1) % cycle.len()];
                        prod_r = &prod_r * a.at(from, to);
                    }
                }
                let right = canonical_cycles(&perm, anchor, CycleOrder::RightOrdered).unwrap();
                let mut prod_c = Quaternion::one();
                for cycle in &right.cycles {
                    let len = cycle.len();
                    for t in 0..len {
                        // Factors trace consecutive written pairs starting
                        // from the wrap-around pair (leader, first element).
                        let from = cycle[(len - 1 + t) % len];
                        let to = cycle[t % len];
                        prod_c = &prod_c * a.at(from, to);
                    }
                }
                if sign {
                    prod_r = -prod_r;
                    prod_c = -prod_c;
                }
                expected_r = &expected_r + &prod_r;
                expected_c = &expected_c + &prod_c;
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            assert_eq!(rdet(&a, anchor).unwrap(), expected_r);
            assert_eq!(cdet(&a, anchor).unwrap(), expected_c);
        }
    }

    #[test]
    fn sequential_and_dispatched_paths_agree() {
        let mut rng = StdRng::seed_from_u64(29);
        let a = rand_matrix(&mut rng, 5);
        assert_eq!(rdet(&a, 2).unwrap(), rdet_seq(&a, 2).unwrap());
        assert_eq!(cdet(&a, 4).unwrap(), cdet_seq(&a, 4).unwrap());
    }

    #[test]
    fn cofactor_templates_for_two_by_two() {
        let mut rng = StdRng::seed_from_u64(5);
        let (a, b, c, d) = (
            rand_quat(&mut rng),
            rand_quat(&mut rng),
            rand_quat(&mut rng),
            rand_quat(&mut rng),
        );
        let mat = QMatrix::from_rows(vec![
            vec![a.clone(), b.clone()],
            vec![c.clone(), d.clone()],
        ])
        .unwrap();
        assert_eq!(right_cofactor(&mat, 1, 1).unwrap(), d);
        assert_eq!(right_cofactor(&mat, 1, 2).unwrap(), -&c);
        assert_eq!(left_cofactor(&mat, 1, 1).unwrap(), d);
        assert_eq!(left_cofactor(&mat, 2, 1).unwrap(), -&b);
    }

    #[test]
    fn identity_cofactors() {
        let id = QMatrix::identity(3);
        for i in 1..=3 {
            for j in 1..=3 {
                let expected = if i == j {
                    Quaternion::one()
                } else {
                    Quaternion::zero()
                };
                assert_eq!(right_cofactor(&id, i, j).unwrap(), expected);
                assert_eq!(left_cofactor(&id, i, j).unwrap(), expected);
            }
        }
    }

    #[test]
    fn cofactor_expansions_recover_determinants() {
        let mut rng = StdRng::seed_from_u64(13);
        for n in 1..=4 {
            let a = rand_matrix(&mut rng, n);
            for anchor in 1..=n {
                let mut row_sum = Quaternion::zero();
                let mut col_sum = Quaternion::zero();
                for t in 1..=n {
                    row_sum = &row_sum + &(a.at(anchor, t) * &right_cofactor(&a, anchor, t).unwrap());
                    col_sum = &col_sum + &(&left_cofactor(&a, t, anchor).unwrap() * a.at(t, anchor));
                }
                assert_eq!(row_sum, rdet(&a, anchor).unwrap());
                assert_eq!(col_sum, cdet(&a, anchor).unwrap());
            }
        }
    }

    #[test]
    fn gram_cofactor_expansions_give_the_double_determinant() {
        let a = sample_a();
        let gram_r = a.matmul(&a.adjoint()).unwrap();
        let mut sum = Quaternion::zero();
        for j in 1..=3 {
            sum = &sum + &(gram_r.at(1, j) * &right_cofactor(&gram_r, 1, j).unwrap());
        }
        assert_eq!(sum, Quaternion::from_ints(8, 0, 0, 0));

        let gram_l = a.adjoint().matmul(&a).unwrap();
        let mut sum = Quaternion::zero();
        for i in 1..=3 {
            sum = &sum + &(&left_cofactor(&gram_l, i, 1).unwrap() * gram_l.at(i, 1));
        }
        assert_eq!(sum, Quaternion::from_ints(8, 0, 0, 0));
    }

    #[test]
    fn hermitian_determinants() {
        let a = sample_a();
        let gram = a.adjoint().matmul(&a).unwrap();
        assert_eq!(det_hermitian(&gram).unwrap(), Rational::from_integer(8.into()));
        assert_eq!(det_hermitian_verified(&gram).unwrap(), Rational::from_integer(8.into()));

        let b = sample_b();
        let gram_r = b.matmul(&b.adjoint()).unwrap();
        assert_eq!(det_hermitian(&gram_r).unwrap(), Rational::from_integer(4.into()));

        let small = m(&["2 i", "-i 3"]);
        assert_eq!(det_hermitian(&small).unwrap(), Rational::from_integer(5.into()));

        assert_eq!(det_hermitian(&m(&["i"])), Err(Error::NotHermitian));
    }

    #[test]
    fn double_determinants() {
        assert_eq!(ddet(&sample_a()).unwrap(), Rational::from_integer(8.into()));
        assert_eq!(ddet(&sample_b()).unwrap(), Rational::from_integer(4.into()));
        assert_eq!(ddet_verified(&sample_a()).unwrap(), Rational::from_integer(8.into()));

        let q1 = m(&["2-3i+j-k"]);
        assert_eq!(ddet(&q1).unwrap(), q("2-3i+j-k").norm_sq());
    }

    #[test]
    fn rank_by_principal_minors_examples() {
        assert_eq!(rank_by_principal_minors(&QMatrix::identity(4)).unwrap(), 4);
        assert_eq!(rank_by_principal_minors(&QMatrix::zeros(3, 3)).unwrap(), 0);

        let gram = sample_a().adjoint().matmul(&sample_a()).unwrap();
        assert_eq!(rank_by_principal_minors(&gram).unwrap(), 3);

        // Columns 1 and 2 of this matrix differ by a right factor of i, so
        // its Gram matrix has rank 2.
        let a = m(&["1 i 0", "0 0 0", "0 0 1"]);
        let gram = a.adjoint().matmul(&a).unwrap();
        assert_eq!(rank_by_principal_minors(&gram).unwrap(), 2);

        assert_eq!(rank_by_principal_minors(&m(&["i"])), Err(Error::NotHermitian));
    }

    #[test]
    fn size_cap_is_enforced() {
        let big = QMatrix::identity(10);
        assert_eq!(
            rdet(&big, 1),
            Err(Error::SizeCapExceeded { n: 10, cap: DEFAULT_SIZE_CAP })
        );
        assert_eq!(
            cdet(&big, 1),
            Err(Error::SizeCapExceeded { n: 10, cap: DEFAULT_SIZE_CAP })
        );
        assert!(ddet(&big).is_err());
    }

    #[test]
    fn anchor_bounds_are_checked() {
        let a = QMatrix::identity(2);
        assert_eq!(rdet(&a, 0), Err(Error::IndexOutOfRange { index: 0, bound: 2 }));
        assert_eq!(cdet(&a, 3), Err(Error::IndexOutOfRange { index: 3, bound: 2 }));
        assert!(rdet(&QMatrix::zeros(2, 3), 1).is_err());
    }
}
