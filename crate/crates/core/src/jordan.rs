//! Jordan structure of the reversing matrix and transport of a Jordan
//! decomposition under full reversal.

use crate::error::{Error, Result};
use crate::linalg::inverse;
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::vector::{antipalindromic_basis, palindromic_basis};

/// A Jordan matrix `j` together with a similarity matrix `p`; the pair
/// represents `p·j·p⁻¹`.
#[derive(Clone, Debug, PartialEq)]
pub struct JordanPair<T> {
    pub j: Matrix<T>,
    pub p: Matrix<T>,
}

impl<T: Field> JordanPair<T> {
    /// `p·j·p⁻¹`.
    pub fn represented(&self) -> Result<Matrix<T>> {
        self.p.matmul(&self.j)?.matmul(&inverse(&self.p)?)
    }
}

/// Jordan form and similarity matrix of the `n×n` reversing matrix.
///
/// `j` is `I_⌈n/2⌉ ⊕ −I_⌊n/2⌋`. The columns of `p` are the palindromic basis
/// vectors (eigenvalue 1) in their canonical order, followed by the
/// antipalindromic basis vectors (eigenvalue −1) innermost pair first. With
/// that ordering the column `e_i − e_{n+1−i}` sits at index `n+1−i`, which
/// makes `p` symmetric.
pub fn reversing_jordan<T: Scalar>(n: usize) -> Result<JordanPair<T>> {
    if n == 0 {
        return Err(Error::InvalidDimension("reversing matrix of size 0".into()));
    }
    let pal = palindromic_basis::<T>(n)?.into_members();
    let mut anti = antipalindromic_basis::<T>(n)?.into_members();
    anti.reverse();
    let cols: Vec<_> = pal.into_iter().chain(anti).collect();
    let p = Matrix::from_row_vectors(&cols)?.transpose();
    let plus = Matrix::identity(n.div_ceil(2))?;
    let j = if n == 1 { plus } else { plus.paste_blocks(&-&Matrix::identity(n / 2)?) };
    Ok(JordanPair { j, p })
}

/// Both sides of the transport identity for `A = P·J·P⁻¹`:
/// `lhs = ℛ(P·J·P⁻¹)` and `rhs = ℛ_c(P)·J·ℛ_c(P)⁻¹`.
pub fn jordan_transport<T: Field>(p: &Matrix<T>, j: &Matrix<T>) -> Result<(Matrix<T>, Matrix<T>)> {
    p.require_square()?;
    j.require_square()?;
    if p.rows() != j.rows() {
        return Err(Error::Shape(format!(
            "similarity matrix is {0}x{0} but Jordan matrix is {1}x{1}",
            p.rows(),
            j.rows()
        )));
    }
    let lhs = JordanPair { j: j.clone(), p: p.clone() }.represented()?.reverse_full();
    let q = p.reverse_cols();
    let rhs = JordanPair { j: j.clone(), p: q }.represented()?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::reversing_matrix;
    use crate::{QMatrix, Rational};

    #[test]
    fn small_cases() {
        let two = reversing_jordan::<Rational>(2).unwrap();
        assert_eq!(two.j, QMatrix::from_ints(&[[1, 0], [0, -1]]));
        assert_eq!(two.p, QMatrix::from_ints(&[[1, 1], [1, -1]]));
        let three = reversing_jordan::<Rational>(3).unwrap();
        assert_eq!(three.j, QMatrix::from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, -1]]));
        assert_eq!(three.p, QMatrix::from_ints(&[[1, 0, 1], [0, 1, 0], [1, 0, -1]]));
        let one = reversing_jordan::<Rational>(1).unwrap();
        assert_eq!(one.j, QMatrix::from_ints(&[[1]]));
        assert_eq!(one.p, QMatrix::from_ints(&[[1]]));
        assert!(reversing_jordan::<Rational>(0).is_err());
    }

    #[test]
    fn symmetric_similarity_up_to_eight() {
        for n in 1..=8 {
            let pair = reversing_jordan::<Rational>(n).unwrap();
            assert_eq!(pair.p, pair.p.transpose(), "n={n}");
            assert_eq!(pair.represented().unwrap(), reversing_matrix(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn worked_transport() {
        let a = QMatrix::from_ints(&[[1, 2, 1], [0, -1, 0], [-1, 1, 3]]);
        let j = QMatrix::from_ints(&[[-1, 0, 0], [0, 2, 1], [0, 0, 2]]);
        let p = QMatrix::from_ints(&[[7, 1, 0], [-9, 0, 0], [4, 1, 1]]);
        let pair = JordanPair { j: j.clone(), p: p.clone() };
        assert_eq!(pair.represented().unwrap(), a);
        let (lhs, rhs) = jordan_transport(&p, &j).unwrap();
        assert_eq!(lhs, a.reverse_full());
        assert_eq!(lhs, rhs);
        assert_eq!(j.reverse_full(), QMatrix::from_ints(&[[2, 0, 0], [1, 2, 0], [0, 0, -1]]));
    }

    #[test]
    fn transport_errors() {
        let j = QMatrix::from_ints(&[[1, 0], [0, 2]]);
        let id = QMatrix::identity(2).unwrap();
        let (lhs, rhs) = jordan_transport(&id, &j).unwrap();
        assert_eq!(lhs, j.reverse_full());
        assert_eq!(rhs, j.reverse_full());
        let singular = QMatrix::from_ints(&[[1, 1], [1, 1]]);
        assert_eq!(jordan_transport(&singular, &j), Err(Error::Singular));
        assert!(jordan_transport(&QMatrix::identity(3).unwrap(), &j).is_err());
    }
}
