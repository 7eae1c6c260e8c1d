//! Library results against independent oracles: cofactor expansion for
//! determinants, index-built permutation matrices for reversals, and a
//! separate elimination for nullspace dimensions.

use num_traits::{One, Zero};
use revpaste::{
    linalg, reversing_jordan, reversing_matrix, subspace_basis, Axis, QMatrix, QPolynomial, QVector,
    Rational, SubspaceKind,
};

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Laplace expansion along the first row.
fn cofactor_det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut acc = Rational::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = a[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = a[0][j].clone() * cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

fn rows_of(a: &QMatrix) -> Vec<Vec<Rational>> {
    (0..a.rows()).map(|i| a.row(i).into_entries()).collect()
}

/// Rank by reduced row echelon form on plain nested vectors.
fn rref_rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut lead = 0;
    for c in 0..cols {
        let Some(p) = (lead..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(lead, p);
        let inv = Rational::one() / m[lead][c].clone();
        for x in m[lead].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for r in 0..rows {
            if r != lead && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot_row = m[lead].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot_row) {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        lead += 1;
    }
    lead
}

/// The permutation of `0..n*m` (row-major flat indices) performed by a
/// reversal, written from the entry maps directly.
fn flat_permutation(n: usize, m: usize, axis: Axis) -> Vec<usize> {
    (0..n * m)
        .map(|k| {
            let (i, j) = (k / m, k % m);
            let (si, sj) = match axis {
                Axis::Rows => (i, m - 1 - j),
                Axis::Cols => (n - 1 - i, j),
                Axis::Full => (n - 1 - i, m - 1 - j),
            };
            si * m + sj
        })
        .collect()
}

/// `dim {x : P_axis x = ±x for every constraint}` as `nm − rank` of the
/// stacked `(P ∓ I)` blocks.
fn nullspace_dim(n: usize, m: usize, kind: SubspaceKind) -> usize {
    let nm = n * m;
    let mut stacked = Vec::new();
    for &(axis, anti) in kind.constraints() {
        let perm = flat_permutation(n, m, axis);
        for (k, &src) in perm.iter().enumerate() {
            let mut row = vec![Rational::zero(); nm];
            row[src] = row[src].clone() + Rational::one();
            row[k] = if anti { row[k].clone() + Rational::one() } else { row[k].clone() - Rational::one() };
            stacked.push(row);
        }
    }
    nm - rref_rank(stacked)
}

fn seeded_matrices(count: usize, max_n: usize) -> Vec<QMatrix> {
    // A small LCG keeps these fixtures independent of the harness generator.
    let mut x: u64 = 0x2545_F491_4F6C_DD1D;
    let mut next = move || {
        x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        x >> 33
    };
    (0..count)
        .map(|_| {
            let n = 1 + (next() as usize) % max_n;
            let data = (0..n * n)
                .map(|_| {
                    let num = (next() % 19) as i64 - 9;
                    let den = 1 + (next() % 3) as i64;
                    Rational::new(num.into(), den.into())
                })
                .collect();
            QMatrix::new(n, n, data).unwrap()
        })
        .collect()
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    for a in seeded_matrices(200, 5) {
        let oracle = cofactor_det(&rows_of(&a));
        assert_eq!(linalg::determinant(&a).unwrap(), oracle, "{a:?}");
        assert_eq!(linalg::exact_determinant(&a).unwrap(), oracle, "{a:?}");
    }
}

#[test]
fn rank_matches_rref() {
    for a in seeded_matrices(100, 5) {
        let low = a.matmul(&a.reverse_rows()).unwrap();
        assert_eq!(linalg::rank(&a), rref_rank(rows_of(&a)));
        assert_eq!(linalg::rank(&low), rref_rank(rows_of(&low)));
    }
}

#[test]
fn subspace_dimensions_match_nullspace_oracle() {
    for n in 1..=6 {
        for m in 1..=6 {
            for kind in SubspaceKind::ALL {
                let basis = subspace_basis::<Rational>(n, m, kind).unwrap();
                let oracle = nullspace_dim(n, m, kind);
                assert_eq!(basis.len(), oracle, "{kind} {n}x{m}");
                assert_eq!(kind.dimension(n, m), oracle, "{kind} {n}x{m}");
                let stacked: Vec<Vec<Rational>> =
                    basis.members().iter().map(|b| b.vectorize().into_entries()).collect();
                assert_eq!(rref_rank(stacked), basis.len(), "{kind} {n}x{m}");
            }
        }
    }
}

#[test]
fn printed_mixed_dimension_formulas_disagree_with_definitions() {
    // As printed: dim Wpa = ⌈n/2⌉⌊m/2⌋, dim Wap = ⌊n/2⌋⌈m/2⌉.
    let printed_pa = |n: usize, m: usize| n.div_ceil(2) * (m / 2);
    let printed_ap = |n: usize, m: usize| (n / 2) * m.div_ceil(2);
    assert_eq!(nullspace_dim(1, 2, SubspaceKind::Wpa), 0);
    assert_eq!(printed_pa(1, 2), 1);
    assert_eq!(nullspace_dim(1, 2, SubspaceKind::Wap), 1);
    assert_eq!(printed_ap(1, 2), 0);
}

#[test]
fn reversals_match_permutation_oracle() {
    for a in seeded_matrices(50, 5) {
        let (n, m) = a.shape();
        for axis in Axis::ALL {
            let perm = flat_permutation(n, m, axis);
            let flat = a.vectorize();
            let expect =
                QVector::new(perm.iter().map(|&s| flat.entries()[s].clone()).collect()).unwrap();
            assert_eq!(a.reverse(axis).vectorize(), expect, "{axis:?}");
        }
    }
}

#[test]
fn exchange_matrix_spectral_closed_forms() {
    for n in 1..=8 {
        let mr = reversing_matrix::<Rational>(n).unwrap();
        let expect = &QPolynomial::linear_factor(q(1)).pow(n.div_ceil(2))
            * &QPolynomial::linear_factor(q(-1)).pow(n / 2);
        assert_eq!(linalg::charpoly(&mr).unwrap(), expect, "n={n}");
        let lambda_sq = QPolynomial::from_ints(&[-1, 0, 1]);
        assert!(linalg::polyeval_matrix(&lambda_sq, &mr).unwrap().is_zero(), "n={n}");
        let pair = reversing_jordan::<Rational>(n).unwrap();
        assert_eq!(pair.p, pair.p.transpose());
        assert_eq!(pair.represented().unwrap(), mr);
    }
}

#[test]
fn charpoly_matches_cofactor_expansion_at_points() {
    // det(xI − A) through the oracle must equal the polynomial at x.
    for a in seeded_matrices(30, 4) {
        let p = linalg::charpoly(&a).unwrap();
        for x in -2..=2 {
            let shifted = &QMatrix::identity(a.rows()).unwrap().scale(&q(x)) - &a;
            assert_eq!(p.eval(&q(x)), cofactor_det(&rows_of(&shifted)));
        }
    }
}

#[test]
fn literal_minor_reversal_counterexample() {
    let m = QMatrix::from_ints(&[[1, 2, 3], [4, 5, 6]]);
    let mr = reversing_matrix::<Rational>(2).unwrap();
    let lhs_literal = revpaste::minor_matrix(&m, 1).unwrap().reverse_rows();
    let rhs = revpaste::minor_matrix(&m, 3).unwrap().matmul(&mr).unwrap();
    assert_eq!(lhs_literal, QMatrix::from_ints(&[[3, 2], [6, 5]]));
    assert_eq!(rhs, QMatrix::from_ints(&[[2, 1], [5, 4]]));
    assert_ne!(lhs_literal, rhs);
    assert_eq!(revpaste::minor_matrix(&m.reverse_rows(), 1).unwrap(), rhs);
}

#[test]
fn jordan_example_similarity() {
    let a = QMatrix::from_ints(&[[1, 2, 1], [0, -1, 0], [-1, 1, 3]]);
    let j = QMatrix::from_ints(&[[-1, 0, 0], [0, 2, 1], [0, 0, 2]]);
    let p = QMatrix::from_ints(&[[7, 1, 0], [-9, 0, 0], [4, 1, 1]]);
    assert_eq!(cofactor_det(&rows_of(&p)), q(9));
    assert_eq!(a.matmul(&p).unwrap(), p.matmul(&j).unwrap());
}
