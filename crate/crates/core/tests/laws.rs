//! Algebraic laws of reversal and pasting as randomized properties.

use proptest::prelude::*;
use revpaste::{linalg, reversing_matrix, Axis, QMatrix, QVector, Rational, SubspaceKind};

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn vector(n: usize) -> impl Strategy<Value = QVector> {
    prop::collection::vec(-9i64..=9, n).prop_map(|v| QVector::from_ints(&v))
}

fn any_vector() -> impl Strategy<Value = QVector> {
    (1usize..=6).prop_flat_map(vector)
}

fn matrix(n: usize, m: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(-9i64..=9, n * m)
        .prop_map(move |v| QMatrix::new(n, m, v.into_iter().map(q).collect()).unwrap())
}

fn any_matrix() -> impl Strategy<Value = QMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| matrix(n, m))
}

fn square() -> impl Strategy<Value = QMatrix> {
    (1usize..=4).prop_flat_map(|n| matrix(n, n))
}

fn square_pair() -> impl Strategy<Value = (QMatrix, QMatrix)> {
    (1usize..=4).prop_flat_map(|n| (matrix(n, n), matrix(n, n)))
}

fn chain() -> impl Strategy<Value = (QMatrix, QMatrix)> {
    (1usize..=4, 1usize..=4, 1usize..=4).prop_flat_map(|(n, k, m)| (matrix(n, k), matrix(k, m)))
}

proptest! {
    #[test]
    fn vector_reversal_is_linear_involution(v in any_vector(), a in -5i64..=5, b in -5i64..=5) {
        prop_assert_eq!(v.reversed().reversed(), v.clone());
        let w = v.map(|x| x.clone() * q(2) - q(1));
        let lhs = (&v.scale(&q(a)) + &w.scale(&q(b))).reversed();
        let rhs = &v.reversed().scale(&q(a)) + &w.reversed().scale(&q(b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dot_and_cross_laws(v in vector(3), w in vector(3)) {
        prop_assert_eq!(v.dot(&w).unwrap(), v.reversed().dot(&w.reversed()).unwrap());
        prop_assert_eq!(
            v.cross3(&w).unwrap().reversed(),
            w.reversed().cross3(&v.reversed()).unwrap()
        );
    }

    #[test]
    fn vector_paste_laws(v in any_vector(), w in any_vector(), z in any_vector()) {
        prop_assert_eq!(v.paste(&w).reversed(), w.reversed().paste(&v.reversed()));
        prop_assert_eq!(v.paste(&w).paste(&z), v.paste(&w.paste(&z)));
        prop_assert_eq!(v.paste(&w), &v.embed_left(w.len()) + &w.embed_right(v.len()));
    }

    #[test]
    fn vector_projections(v in any_vector()) {
        let (p, a) = (v.palindromic_part(), v.antipalindromic_part());
        prop_assert!(p.is_palindromic());
        prop_assert!(a.is_antipalindromic());
        prop_assert_eq!(&p + &a, v.clone());
        prop_assert_eq!(&p - &a, v.reversed());
    }

    #[test]
    fn matrix_reversal_involutions_commute(a in any_matrix()) {
        for axis in Axis::ALL {
            prop_assert_eq!(a.reverse(axis).reverse(axis), a.clone());
        }
        prop_assert_eq!(a.reverse_rows().reverse_cols(), a.reverse_full());
        prop_assert_eq!(a.reverse_cols().reverse_rows(), a.reverse_full());
        let (n, m) = a.shape();
        let sandwich = reversing_matrix(n).unwrap().matmul(&a).unwrap().matmul(&reversing_matrix(m).unwrap()).unwrap();
        prop_assert_eq!(sandwich, a.reverse_full());
        prop_assert_eq!(a.reverse_full().vectorize(), a.vectorize().reversed());
    }

    #[test]
    fn transpose_duality(a in any_matrix()) {
        prop_assert_eq!(a.reverse_rows().transpose(), a.transpose().reverse_cols());
        prop_assert_eq!(a.reverse_cols().transpose(), a.transpose().reverse_rows());
        prop_assert_eq!(a.reverse_full().transpose(), a.transpose().reverse_full());
    }

    #[test]
    fn matrix_paste_laws(a in any_matrix(), b in any_matrix()) {
        if a.rows() == b.rows() {
            let p = a.paste_rows(&b).unwrap();
            prop_assert_eq!(p.reverse_rows(), b.reverse_rows().paste_rows(&a.reverse_rows()).unwrap());
            prop_assert_eq!(a.paste_rows_via_embedding(&b).unwrap(), p.clone());
            prop_assert_eq!(p.transpose(), a.transpose().paste_cols(&b.transpose()).unwrap());
        } else {
            prop_assert!(a.paste_rows(&b).is_err());
        }
        if a.cols() == b.cols() {
            let p = a.paste_cols(&b).unwrap();
            prop_assert_eq!(p.reverse_cols(), b.reverse_cols().paste_cols(&a.reverse_cols()).unwrap());
            prop_assert_eq!(a.paste_cols_via_embedding(&b).unwrap(), p);
        } else {
            prop_assert!(a.paste_cols(&b).is_err());
        }
        prop_assert_eq!(
            a.paste_blocks(&b).reverse_full(),
            b.reverse_full().paste_blocks(&a.reverse_full())
        );
    }

    #[test]
    fn product_transport((a, b) in chain()) {
        let ab = a.matmul(&b).unwrap();
        prop_assert_eq!(ab.reverse_rows(), a.matmul(&b.reverse_rows()).unwrap());
        prop_assert_eq!(ab.reverse_cols(), a.reverse_cols().matmul(&b).unwrap());
        prop_assert_eq!(ab.reverse_full(), a.reverse_full().matmul(&b.reverse_full()).unwrap());
    }

    #[test]
    fn determinant_trace_inverse(a in square()) {
        let n = a.rows();
        let det = linalg::exact_determinant(&a).unwrap();
        let sign = if (n / 2) % 2 == 0 { q(1) } else { q(-1) };
        prop_assert_eq!(linalg::determinant(&a.reverse_cols()).unwrap(), sign.clone() * det.clone());
        prop_assert_eq!(linalg::determinant(&a.reverse_rows()).unwrap(), sign * det.clone());
        prop_assert_eq!(linalg::determinant(&a.reverse_full()).unwrap(), det.clone());
        prop_assert_eq!(linalg::trace(&a.reverse_full()).unwrap(), linalg::trace(&a).unwrap());
        prop_assert_eq!(
            linalg::adjugate(&a.reverse_full()).unwrap(),
            linalg::adjugate(&a).unwrap().reverse_full()
        );
        prop_assert_eq!(
            a.matmul(&linalg::adjugate(&a).unwrap()).unwrap(),
            QMatrix::identity(n).unwrap().scale(&det)
        );
        if let Ok(inv) = linalg::inverse(&a) {
            prop_assert_eq!(linalg::inverse(&a.reverse_cols()).unwrap(), inv.reverse_rows());
            prop_assert_eq!(linalg::inverse(&a.reverse_rows()).unwrap(), inv.reverse_cols());
            prop_assert_eq!(linalg::inverse(&a.reverse_full()).unwrap(), inv.reverse_full());
        } else {
            prop_assert_eq!(det, q(0));
        }
    }

    #[test]
    fn charpoly_invariance(a in square()) {
        let p = linalg::charpoly(&a).unwrap();
        prop_assert_eq!(linalg::charpoly(&a.reverse_full()).unwrap(), p.clone());
        let rc = linalg::charpoly(&a.reverse_cols()).unwrap();
        prop_assert_eq!(linalg::charpoly(&a.reverse_rows()).unwrap(), rc.clone());
        prop_assert!(linalg::polyeval_matrix(&p, &a).unwrap().is_zero());
        prop_assert!(linalg::polyeval_matrix(&rc, &a.reverse_rows()).unwrap().is_zero());
    }

    #[test]
    fn quad_decomposition(a in any_matrix()) {
        let parts = a.quad_decompose();
        prop_assert!(SubspaceKind::Wpp.contains(&parts.pp));
        prop_assert!(SubspaceKind::Wpa.contains(&parts.pa));
        prop_assert!(SubspaceKind::Wap.contains(&parts.ap));
        prop_assert!(SubspaceKind::Waa.contains(&parts.aa));
        prop_assert_eq!(parts.sum(), a.clone());
        for axis in Axis::ALL {
            let (p, n) = (a.project_palindromic(axis), a.project_antipalindromic(axis));
            prop_assert!(p.is_palindromic(axis));
            prop_assert!(n.is_antipalindromic(axis));
            prop_assert_eq!(&p + &n, a.clone());
            prop_assert_eq!(&p - &n, a.reverse(axis));
        }
    }

    #[test]
    fn palindromic_products((a, b) in square_pair()) {
        let (pa, pb) = (a.project_palindromic(Axis::Full), b.project_palindromic(Axis::Full));
        let (na, nb) = (a.project_antipalindromic(Axis::Full), b.project_antipalindromic(Axis::Full));
        prop_assert!(pa.matmul(&pb).unwrap().is_palindromic(Axis::Full));
        prop_assert!(na.matmul(&nb).unwrap().is_palindromic(Axis::Full));
        prop_assert!(pa.matmul(&nb).unwrap().is_antipalindromic(Axis::Full));
        let rb = b.project_palindromic(Axis::Rows);
        prop_assert!(a.matmul(&rb).unwrap().is_palindromic(Axis::Rows));
        let ca = a.project_palindromic(Axis::Cols);
        prop_assert!(ca.matmul(&b).unwrap().is_palindromic(Axis::Cols));
    }
}
