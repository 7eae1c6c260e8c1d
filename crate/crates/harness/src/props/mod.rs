//! Registered identities, grouped by the objects they are about.

pub mod full;
pub mod matrices;
pub mod negative;
pub mod theorems;
pub mod vectors;

use revpaste::{linalg, reversing_matrix, Axis, QMatrix, QVector, Rational, SubspaceKind};

pub(crate) fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

pub(crate) fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

/// `(-1)^e`.
pub(crate) fn sign(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        q(1)
    } else {
        q(-1)
    }
}

pub(crate) fn exchange(n: usize) -> QMatrix {
    reversing_matrix(n).expect("n >= 1")
}

pub(crate) fn identity(n: usize) -> QMatrix {
    QMatrix::identity(n).expect("n >= 1")
}

pub(crate) fn zeros(n: usize, m: usize) -> QMatrix {
    QMatrix::zeros(n, m).expect("n, m >= 1")
}

/// Columns `from..to` (0-based, exclusive end) of `a`.
pub(crate) fn column_range(a: &QMatrix, from: usize, to: usize) -> QMatrix {
    QMatrix::from_fn(a.rows(), to - from, |i, j| a.at(i, from + j).clone()).expect("nonempty range")
}

/// Rows `from..to` (0-based, exclusive end) of `a`.
pub(crate) fn row_range(a: &QMatrix, from: usize, to: usize) -> QMatrix {
    QMatrix::from_fn(to - from, a.cols(), |i, j| a.at(from + i, j).clone()).expect("nonempty range")
}

/// Rank of a family of vectors, by stacking them as rows.
pub(crate) fn vector_rank(vs: &[QVector]) -> usize {
    if vs.is_empty() {
        0
    } else {
        linalg::rank(&QMatrix::from_row_vectors(vs).expect("equal lengths"))
    }
}

/// Dimension of `{A : ℛ_axis(A) = ±A for every constraint of kind}`, as the
/// nullity of the stacked constraint operators on `K^{nm}`. Does not use the
/// subspace bases.
pub(crate) fn kernel_dim(n: usize, m: usize, kind: SubspaceKind) -> usize {
    let images: Vec<QVector> = (0..n * m)
        .map(|idx| {
            let e = QMatrix::from_fn(n, m, |i, j| q((i * m + j == idx) as i64)).expect("n, m >= 1");
            kind.constraints()
                .iter()
                .map(|&(axis, anti)| {
                    let r = e.reverse(axis);
                    (if anti { &e + &r } else { &e - &r }).vectorize()
                })
                .reduce(|acc, v| acc.paste(&v))
                .expect("every kind has a constraint")
        })
        .collect();
    n * m - vector_rank(&images)
}

/// `½(A ± ℛ_axis(A))`, written out rather than via the library projections.
pub(crate) fn projection(a: &QMatrix, axis: Axis, anti: bool) -> QMatrix {
    let r = a.reverse(axis);
    (if anti { a - &r } else { a + &r }).scale(&half())
}
