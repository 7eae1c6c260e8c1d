//! Exact determinants, inverses, adjugates, traces, ranks and characteristic
//! polynomials.

use num_integer::Integer as _;
use num_traits::One;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::scalar::{sign, Field, Scalar};
use crate::{Integer, QMatrix, Rational};

/// Fraction-free (Bareiss) elimination on a square row-major buffer.
///
/// Every division is exact in an integral domain, so this is exact over the
/// integers as well as over any field.
fn bareiss<T: Scalar>(mut a: Vec<T>, n: usize) -> T {
    let idx = |i: usize, j: usize| i * n + j;
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n.saturating_sub(1) {
        if a[idx(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[idx(i, k)].is_zero()) else {
                return T::zero();
            };
            for j in 0..n {
                a.swap(idx(k, j), idx(p, j));
            }
            negate = !negate;
        }
        let pivot = a[idx(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[idx(i, j)].clone() * pivot.clone() - a[idx(i, k)].clone() * a[idx(k, j)].clone();
                a[idx(i, j)] = v / prev.clone();
            }
        }
        prev = pivot;
    }
    let det = a[idx(n - 1, n - 1)].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by Bareiss elimination directly on the entries.
pub fn determinant<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    a.require_square()?;
    Ok(bareiss(a.data().to_vec(), a.rows()))
}

/// Determinant of a rational matrix: each row is scaled by the lcm of its
/// denominators, the integer determinant is computed fraction-free, and the
/// result is divided by the product of the scale factors.
pub fn exact_determinant(a: &QMatrix) -> Result<Rational> {
    a.require_square()?;
    let n = a.rows();
    let mut ints = Vec::with_capacity(n * n);
    let mut scale = Integer::one();
    for i in 0..n {
        let row = a.row(i);
        let lcm = row.iter().fold(Integer::one(), |l, x| l.lcm(x.denom()));
        ints.extend(row.iter().map(|x| x.numer() * (&lcm / x.denom())));
        scale *= lcm;
    }
    Ok(Rational::new(bareiss(ints, n), scale))
}

pub fn trace<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    Ok(a.diagonal()?.into_iter().fold(T::zero(), |acc, x| acc + x))
}

/// Transpose of the cofactor matrix; defined for singular matrices too.
pub fn adjugate<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    a.require_square()?;
    let n = a.rows();
    if n == 1 {
        return Matrix::identity(1);
    }
    let mut cof = vec![T::zero(); n * n];
    for i in 0..n {
        for j in 0..n {
            // adj[j][i] = (−1)^{i+j} det(minor(i, j))
            cof[j * n + i] = sign::<T>(i + j) * determinant(&a.minor(i, j)?)?;
        }
    }
    Matrix::new(n, n, cof)
}

/// Gauss–Jordan inverse.
pub fn inverse<T: Field>(a: &Matrix<T>) -> Result<Matrix<T>> {
    a.require_square()?;
    let n = a.rows();
    let mut left: Vec<Vec<T>> = (0..n).map(|i| a.row(i).into_entries()).collect();
    let mut right: Vec<Vec<T>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !left[i][k].is_zero()).ok_or(Error::Singular)?;
        left.swap(k, p);
        right.swap(k, p);
        let inv = T::one() / left[k][k].clone();
        for j in 0..n {
            left[k][j] = left[k][j].clone() * inv.clone();
            right[k][j] = right[k][j].clone() * inv.clone();
        }
        for i in (0..n).filter(|&i| i != k) {
            let f = left[i][k].clone();
            if f.is_zero() {
                continue;
            }
            for j in 0..n {
                left[i][j] = left[i][j].clone() - f.clone() * left[k][j].clone();
                right[i][j] = right[i][j].clone() - f.clone() * right[k][j].clone();
            }
        }
    }
    Matrix::from_rows(right)
}

pub fn is_invertible<T: Field>(a: &Matrix<T>) -> bool {
    a.is_square() && rank(a) == a.rows()
}

/// Row rank by Gaussian elimination.
pub fn rank<T: Field>(a: &Matrix<T>) -> usize {
    let (n, m) = a.shape();
    let mut rows: Vec<Vec<T>> = (0..n).map(|i| a.row(i).into_entries()).collect();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..n {
            let f = rows[i][c].clone() / rows[r][c].clone();
            if f.is_zero() {
                continue;
            }
            let (top, bottom) = rows.split_at_mut(i);
            for (x, y) in bottom[0][c..m].iter_mut().zip(&top[r][c..m]) {
                *x = x.clone() - f.clone() * y.clone();
            }
        }
        r += 1;
        if r == n {
            break;
        }
    }
    r
}

/// `cols − rank`: the dimension of the null space of `x ↦ A·x`.
pub fn nullity<T: Field>(a: &Matrix<T>) -> usize {
    a.cols() - rank(a)
}

pub fn pow<T: Scalar>(a: &Matrix<T>, k: usize) -> Result<Matrix<T>> {
    a.require_square()?;
    let mut acc = Matrix::identity(a.rows())?;
    for _ in 0..k {
        acc = acc.matmul(a)?;
    }
    Ok(acc)
}

/// Monic `det(λI − A)` by the Faddeev–LeVerrier recurrence:
/// `M₁ = I`, `c_{n−k} = −tr(A·M_k)/k`, `M_{k+1} = A·M_k + c_{n−k}·I`.
pub fn charpoly<T: Field>(a: &Matrix<T>) -> Result<Polynomial<T>> {
    a.require_square()?;
    let n = a.rows();
    let id = Matrix::identity(n)?;
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    let mut m = id.clone();
    for k in 1..=n {
        let am = a.matmul(&m)?;
        let c = -trace(&am)? / T::from_int(k as i64);
        coeffs[n - k] = c.clone();
        m = &am + &id.scale(&c);
    }
    Ok(Polynomial::new(coeffs))
}

/// `Σ p_k A^k` with `A⁰ = I`, by Horner's scheme.
pub fn polyeval_matrix<T: Scalar>(p: &Polynomial<T>, a: &Matrix<T>) -> Result<Matrix<T>> {
    a.require_square()?;
    let id = Matrix::identity(a.rows())?;
    let mut acc = Matrix::zeros(a.rows(), a.rows())?;
    for c in p.coeffs().iter().rev() {
        acc = &acc.matmul(a)? + &id.scale(c);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::reversing_matrix;
    use crate::QPolynomial;

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn a22() -> QMatrix {
        QMatrix::from_ints(&[[1, 2], [3, 4]])
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant(&QMatrix::identity(4).unwrap()).unwrap(), r(1));
        assert_eq!(determinant(&a22()).unwrap(), r(-2));
        assert_eq!(determinant(&a22().reverse_cols()).unwrap(), r(2));
        assert_eq!(exact_determinant(&a22()).unwrap(), r(-2));
        assert_eq!(
            determinant(&QMatrix::from_ints(&[[1, 2, 3]])),
            Err(Error::NotSquare { rows: 1, cols: 3 })
        );
    }

    #[test]
    fn determinant_needs_pivoting() {
        let a = QMatrix::from_ints(&[[0, 1, 2], [1, 0, 3], [4, -3, 8]]);
        assert_eq!(determinant(&a).unwrap(), r(-2));
        assert_eq!(exact_determinant(&a).unwrap(), r(-2));
        let singular = QMatrix::from_ints(&[[0, 1], [0, 2]]);
        assert_eq!(determinant(&singular).unwrap(), r(0));
    }

    #[test]
    fn exact_determinant_clears_denominators() {
        let half = Rational::new(1.into(), 2.into());
        let third = Rational::new(1.into(), 3.into());
        let a = QMatrix::new(2, 2, vec![half.clone(), third.clone(), r(1), half]).unwrap();
        // 1/4 − 1/3
        assert_eq!(exact_determinant(&a).unwrap(), Rational::new((-1).into(), 12.into()));
        assert_eq!(determinant(&a).unwrap(), exact_determinant(&a).unwrap());
    }

    #[test]
    fn integer_bareiss() {
        let a = Matrix::<Integer>::from_ints(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]]);
        assert_eq!(determinant(&a).unwrap(), Integer::from(4));
    }

    #[test]
    fn inverse_examples() {
        let two = QMatrix::from_ints(&[[2, 0], [0, 2]]);
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(
            inverse(&two).unwrap(),
            QMatrix::new(2, 2, vec![half.clone(), r(0), r(0), half]).unwrap()
        );
        assert_eq!(inverse(&QMatrix::from_ints(&[[1, 1], [1, 1]])), Err(Error::Singular));
        let a = a22();
        assert_eq!(&a * &inverse(&a).unwrap(), QMatrix::identity(2).unwrap());
        assert_eq!(inverse(&a.reverse_full()).unwrap(), inverse(&a).unwrap().reverse_full());
    }

    #[test]
    fn adjugate_examples() {
        let a = a22();
        assert_eq!(adjugate(&a).unwrap(), QMatrix::from_ints(&[[4, -2], [-3, 1]]));
        assert_eq!(adjugate(&QMatrix::identity(3).unwrap()).unwrap(), QMatrix::identity(3).unwrap());
        assert_eq!(adjugate(&a).unwrap().reverse_full(), adjugate(&a.reverse_full()).unwrap());
        let s = QMatrix::from_ints(&[[1, 2, 3], [2, 4, 6], [0, 1, 5]]);
        assert_eq!(&s * &adjugate(&s).unwrap(), QMatrix::zeros(3, 3).unwrap());
    }

    #[test]
    fn trace_and_rank() {
        assert_eq!(trace(&a22()).unwrap(), r(5));
        let blocks = QMatrix::from_ints(&[[1]]).paste_blocks(&QMatrix::from_ints(&[[2]]));
        assert_eq!(trace(&blocks).unwrap(), r(3));
        assert_eq!(rank(&QMatrix::from_ints(&[[1, 1], [1, 1]])), 1);
        assert_eq!(rank(&QMatrix::from_ints(&[[0, 0, 1], [0, 0, 2]])), 1);
        assert_eq!(nullity(&QMatrix::from_ints(&[[1, 1], [1, 1]])), 1);
        assert!(trace(&QMatrix::from_ints(&[[1, 2]])).is_err());
    }

    #[test]
    fn charpoly_examples() {
        assert_eq!(charpoly(&reversing_matrix::<Rational>(2).unwrap()).unwrap(), QPolynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(
            charpoly(&reversing_matrix::<Rational>(3).unwrap()).unwrap(),
            QPolynomial::from_ints(&[1, -1, -1, 1])
        );
        assert_eq!(charpoly(&a22()).unwrap(), QPolynomial::from_ints(&[-2, -5, 1]));
    }

    #[test]
    fn polyeval_examples() {
        let m4 = reversing_matrix::<Rational>(4).unwrap();
        let q = QPolynomial::from_ints(&[-1, 0, 1]);
        assert!(polyeval_matrix(&q, &m4).unwrap().is_zero());
        let a = a22();
        assert!(polyeval_matrix(&charpoly(&a).unwrap(), &a).unwrap().is_zero());
        assert_eq!(
            polyeval_matrix(&QPolynomial::from_ints(&[1]), &a).unwrap(),
            QMatrix::identity(2).unwrap()
        );
        assert!(polyeval_matrix(&q, &QMatrix::from_ints(&[[1, 2]])).is_err());
    }

    #[test]
    fn float_determinant() {
        let a = Matrix::<f64>::from_ints(&[[4, 3], [6, 3]]);
        assert_eq!(determinant(&a).unwrap(), -6.0);
    }
}
