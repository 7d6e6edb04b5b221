//! Permutation-sum determinant benchmarks: the sequential evaluator
//! against the rayon-partitioned one (when the `parallel` feature is on,
//! which is the default), plus the double determinant and the two-sided
//! solver at working sizes.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quatdet::{rational, QMatrix, Quaternion};

/// Deterministic dense fixture with mildly mixed denominators.
fn fixture(n: usize) -> QMatrix {
    QMatrix::from_fn(n, n, |i, j| {
        let s = (7 * i + 3 * j) % 5;
        Quaternion::new(
            rational(s as i64 - 2, 1 + ((i + j) % 2) as i64),
            rational((i as i64 * j as i64) % 3 - 1, 1),
            rational((i + 2 * j) as i64 % 4 - 2, 1),
            rational((3 * i + j) as i64 % 3 - 1, 2),
        )
    })
}

fn bench_rdet(c: &mut Criterion) {
    let mut group = c.benchmark_group("rdet");
    for n in [4usize, 5, 6, 7] {
        let a = fixture(n);
        if n >= 7 {
            group.sample_size(10);
        }
        group.bench_with_input(BenchmarkId::new("sequential", n), &a, |b, a| {
            b.iter(|| quatdet::rdet_seq(black_box(a), 1).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &a, |b, a| {
            b.iter(|| quatdet::rdet(black_box(a), 1).unwrap())
        });
    }
    group.finish();
}

fn bench_cdet(c: &mut Criterion) {
    let mut group = c.benchmark_group("cdet");
    for n in [5usize, 6] {
        let a = fixture(n);
        group.bench_with_input(BenchmarkId::new("sequential", n), &a, |b, a| {
            b.iter(|| quatdet::cdet_seq(black_box(a), n).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n), &a, |b, a| {
            b.iter(|| quatdet::cdet(black_box(a), n).unwrap())
        });
    }
    group.finish();
}

fn bench_higher_ops(c: &mut Criterion) {
    let mut group = c.benchmark_group("ops");
    for n in [3usize, 4, 5] {
        let a = fixture(n);
        group.bench_with_input(BenchmarkId::new("ddet", n), &a, |b, a| {
            b.iter(|| quatdet::ddet(black_box(a)).unwrap())
        });
    }
    for n in [3usize, 4] {
        let a = fixture(n);
        // Unit triangular, hence invertible.
        let b_mat = QMatrix::from_fn(n, n, |i, j| {
            if i == j {
                Quaternion::one()
            } else if j > i {
                Quaternion::from_ints(0, 1, (i % 2) as i64, -((j % 2) as i64))
            } else {
                Quaternion::zero()
            }
        });
        let c_mat = fixture(n).adjoint();
        group.bench_with_input(BenchmarkId::new("solve_axb_c", n), &n, |b, _| {
            b.iter(|| {
                quatdet::solve_axb_c(
                    black_box(&a),
                    black_box(&b_mat),
                    black_box(&c_mat),
                    quatdet::Formula::Row,
                )
                .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_rdet, bench_cdet, bench_higher_ops);
criterion_main!(benches);
