//! Shared helpers for the integration suites: literal constructors, the
//! worked 3x3 fixture, and seeded random generators.
#![allow(dead_code)]

use quatdet::{QMatrix, Quaternion, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn q(s: &str) -> Quaternion {
    s.parse().unwrap()
}

pub fn m(rows: &[&str]) -> QMatrix {
    QMatrix::from_rows(
        rows.iter()
            .map(|r| r.split_whitespace().map(q).collect())
            .collect(),
    )
    .unwrap()
}

pub fn fixture_a() -> QMatrix {
    m(&["i -j k", "k -i 1", "2 k -j"])
}

pub fn fixture_b() -> QMatrix {
    m(&["-k j 2", "i k i", "-j 1 i"])
}

pub fn fixture_c() -> QMatrix {
    m(&["1 i j", "k j -2", "i 1 j"])
}

/// Random rational with numerator in [-3, 3] and denominator in 1..=3.
pub fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    quatdet::rational(rng.random_range(-3..=3), rng.random_range(1..=3))
}

pub fn rand_quat(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::new(
        rand_rational(rng),
        rand_rational(rng),
        rand_rational(rng),
        rand_rational(rng),
    )
}

pub fn rand_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| rand_quat(rng))
}

/// Random Hermitian matrix: real rational diagonal, conjugate-mirrored
/// off-diagonal entries.
pub fn rand_hermitian(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let mut h = QMatrix::zeros(n, n);
    for i in 1..=n {
        h.set(i, i, Quaternion::from_rational(rand_rational(rng)));
        for j in i + 1..=n {
            let e = rand_quat(rng);
            h.set(j, i, e.conj());
            h.set(i, j, e);
        }
    }
    h
}

/// Rejection-samples a matrix with nonzero double determinant.
pub fn rand_nonsingular(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    use num_traits::Zero;
    loop {
        let a = rand_matrix(rng, n, n);
        if !quatdet::ddet(&a).unwrap().is_zero() {
            return a;
        }
    }
}

/// Random matrix whose entries lie in the complex subfield spanned by 1, i.
pub fn rand_complex_subfield(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    QMatrix::from_fn(n, n, |_, _| {
        Quaternion::new(
            rand_rational(rng),
            rand_rational(rng),
            Rational::from_integer(0.into()),
            Rational::from_integer(0.into()),
        )
    })
}
