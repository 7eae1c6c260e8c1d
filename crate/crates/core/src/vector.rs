//! Vectors, their Reversing and Pasting, the palindromic/antipalindromic
//! splitting and the generalized (n-1)-ary vector product.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::scalar::{sign, Field, Scalar};

/// A non-empty, fixed-length sequence of scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<T> {
    entries: Vec<T>,
}

/// Which reversal symmetries a vector or matrix has. Only the zero vector is
/// both palindromic and antipalindromic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Parity {
    pub palindromic: bool,
    pub antipalindromic: bool,
}

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidDimension("vectors have length at least 1".into()));
        }
        Ok(Vector { entries })
    }

    /// # Panics
    /// If `values` is empty.
    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| T::from_int(v)).collect()).expect("non-empty vector")
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![T::zero(); n])
    }

    /// The `i`-th canonical basis vector of length `n` (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i + 1, len: n });
        }
        let mut v = Self::zeros(n)?;
        v.entries[i] = T::one();
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; kept for API symmetry with `len`.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<T> {
        self.entries
    }

    pub fn get(&self, i: usize) -> Option<&T> {
        self.entries.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, T> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// Reversing: entry `i` becomes entry `n + 1 - i`.
    pub fn reversed(&self) -> Self {
        Vector {
            entries: self.entries.iter().rev().cloned().collect(),
        }
    }

    /// Pasting: `(v_1, …, v_n, w_1, …, w_m)`.
    pub fn paste(&self, other: &Self) -> Self {
        let mut entries = Vec::with_capacity(self.len() + other.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        Vector { entries }
    }

    /// Splits into the first `n` entries and the rest. Both halves must be
    /// non-empty.
    pub fn split_at(&self, n: usize) -> Result<(Self, Self)> {
        if n == 0 || n >= self.len() {
            return Err(Error::IndexOutOfRange { index: n, len: self.len() - 1 });
        }
        let (a, b) = self.entries.split_at(n);
        Ok((Vector { entries: a.to_vec() }, Vector { entries: b.to_vec() }))
    }

    /// Embeds into the first coordinates of a space `trailing` dimensions
    /// larger: `v` followed by `trailing` zeros.
    pub fn embed_left(&self, trailing: usize) -> Self {
        let mut entries = self.entries.clone();
        entries.resize(self.len() + trailing, T::zero());
        Vector { entries }
    }

    /// Embeds into the last coordinates: `leading` zeros followed by `w`.
    pub fn embed_right(&self, leading: usize) -> Self {
        let mut entries = vec![T::zero(); leading];
        entries.extend_from_slice(&self.entries);
        Vector { entries }
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch { left: self.len(), right: other.len() });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b.clone()))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    pub fn dot(&self, other: &Self) -> Result<T> {
        self.check_len(other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
    }

    /// The cross product on length-3 vectors.
    pub fn cross3(&self, other: &Self) -> Result<Self> {
        if self.len() != 3 {
            return Err(Error::LengthMismatch { left: self.len(), right: 3 });
        }
        if other.len() != 3 {
            return Err(Error::LengthMismatch { left: other.len(), right: 3 });
        }
        let (a, b) = (&self.entries, &other.entries);
        let c = |i: usize, j: usize| a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone();
        Ok(Vector {
            entries: vec![c(1, 2), c(2, 0), c(0, 1)],
        })
    }

    pub fn classify(&self) -> Parity {
        let n = self.len();
        let e = &self.entries;
        Parity {
            palindromic: (0..n).all(|i| e[i] == e[n - 1 - i]),
            antipalindromic: (0..n).all(|i| e[i] == -e[n - 1 - i].clone()),
        }
    }

    pub fn is_palindromic(&self) -> bool {
        self.classify().palindromic
    }

    pub fn is_antipalindromic(&self) -> bool {
        self.classify().antipalindromic
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Vector {
            entries: self.entries.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        Vector {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect(),
        }
    }
}

impl<T: Field> Vector<T> {
    /// Palindromicing: `½(v + ℛ(v))`.
    pub fn palindromic_part(&self) -> Self {
        let r = self.reversed();
        self.zip_with(&r, |a, b| (a.clone() + b.clone()) * T::half())
    }

    /// Antipalindromicing: `½(v − ℛ(v))`.
    pub fn antipalindromic_part(&self) -> Self {
        let r = self.reversed();
        self.zip_with(&r, |a, b| (a.clone() - b.clone()) * T::half())
    }
}

impl<T: Scalar> IntoIterator for Vector<T> {
    type Item = T;
    type IntoIter = std::vec::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

impl<'a, T: Scalar> IntoIterator for &'a Vector<T> {
    type Item = &'a T;
    type IntoIter = std::slice::Iter<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

// Operator forms panic on length mismatch; use `try_add`/`try_sub` to get an error.

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;

    fn add(self, rhs: Self) -> Vector<T> {
        self.try_add(rhs).expect("vector addition requires equal lengths")
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;

    fn sub(self, rhs: Self) -> Vector<T> {
        self.try_sub(rhs).expect("vector subtraction requires equal lengths")
    }
}

impl<T: Scalar> Neg for &Vector<T> {
    type Output = Vector<T>;

    fn neg(self) -> Vector<T> {
        self.map(|x| -x.clone())
    }
}

impl<T: Scalar> Mul<&Vector<T>> for &Matrix<T> {
    type Output = Vector<T>;

    fn mul(self, rhs: &Vector<T>) -> Vector<T> {
        self.mul_vector(rhs).expect("matrix-vector product requires matching sizes")
    }
}

/// A linearly independent family of vectors of a common length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorBasis<T> {
    dim_ambient: usize,
    members: Vec<Vector<T>>,
}

impl<T: Scalar> VectorBasis<T> {
    pub fn dim_ambient(&self) -> usize {
        self.dim_ambient
    }

    pub fn members(&self) -> &[Vector<T>] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Vector<T>> {
        self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Joins two bases of the same ambient space (members of `self` first).
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.dim_ambient != other.dim_ambient {
            return Err(Error::LengthMismatch { left: self.dim_ambient, right: other.dim_ambient });
        }
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        Ok(VectorBasis { dim_ambient: self.dim_ambient, members })
    }

    /// The members stacked as rows; `None` for the empty basis.
    pub fn as_rows(&self) -> Option<Matrix<T>> {
        Matrix::from_row_vectors(&self.members).ok()
    }

    /// The members placed side by side as columns; `None` for the empty basis.
    pub fn as_columns(&self) -> Option<Matrix<T>> {
        self.as_rows().map(|m| m.transpose())
    }

    /// `Σ cᵢ·bᵢ`, with `coeffs` matched to the members in order.
    pub fn combination(&self, coeffs: &[T]) -> Result<Vector<T>> {
        if coeffs.len() != self.members.len() {
            return Err(Error::LengthMismatch { left: coeffs.len(), right: self.members.len() });
        }
        let mut acc = Vector::zeros(self.dim_ambient)?;
        for (c, b) in coeffs.iter().zip(&self.members) {
            acc = &acc + &b.scale(c);
        }
        Ok(acc)
    }
}

fn parity_basis<T: Scalar>(n: usize, antipalindromic: bool) -> Result<VectorBasis<T>> {
    if n < 1 {
        return Err(Error::InvalidDimension("basis dimension must be at least 1".into()));
    }
    let mut members = Vec::with_capacity(n.div_ceil(2));
    for i in 0..n / 2 {
        let mut e = vec![T::zero(); n];
        e[i] = T::one();
        e[n - 1 - i] = if antipalindromic { -T::one() } else { T::one() };
        members.push(Vector { entries: e });
    }
    if !antipalindromic && n % 2 == 1 {
        members.push(Vector::unit(n, n / 2)?);
    }
    Ok(VectorBasis { dim_ambient: n, members })
}

/// Basis of the palindromic vectors of length `n`: `e_i + e_{n+1-i}` for
/// `i < n+1-i` in ascending order, then the middle unit vector when `n` is
/// odd. It has `⌈n/2⌉` members.
pub fn palindromic_basis<T: Scalar>(n: usize) -> Result<VectorBasis<T>> {
    parity_basis(n, false)
}

/// Basis of the antipalindromic vectors of length `n`: `e_i − e_{n+1-i}` for
/// `i < n+1-i`. It has `⌊n/2⌋` members.
pub fn antipalindromic_basis<T: Scalar>(n: usize) -> Result<VectorBasis<T>> {
    parity_basis(n, true)
}

/// `M^(k)`: `m` with its `k`-th column (1-based) deleted. The generalized
/// product applies it to `(n-1)×n` matrices, but any matrix with at least two
/// columns is accepted.
pub fn minor_matrix<T: Scalar>(m: &Matrix<T>, k: usize) -> Result<Matrix<T>> {
    let n = m.cols();
    if n < 2 {
        return Err(Error::shape(format!("minor matrix needs at least 2 columns, got {n}")));
    }
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { index: k, len: n });
    }
    m.delete_col(k - 1)
}

/// The generalized vector product of `n-1` vectors of length `n`:
/// `Σ_k (−1)^{1+k} det(M^(k)) e_k` where `M` stacks the vectors as rows.
/// For `n = 3` this is the cross product.
pub fn generalized_product<T: Scalar>(vs: &[Vector<T>]) -> Result<Vector<T>> {
    let n = vs.len() + 1;
    if n < 2 {
        return Err(Error::shape("generalized product needs at least one vector"));
    }
    if let Some(bad) = vs.iter().find(|v| v.len() != n) {
        return Err(Error::shape(format!(
            "generalized product of {} vectors needs length {}, got {}",
            vs.len(),
            n,
            bad.len()
        )));
    }
    let m = Matrix::from_row_vectors(vs)?;
    let entries = (1..=n)
        .map(|k| {
            let minor = minor_matrix(&m, k)?;
            Ok(sign::<T>(1 + k) * linalg::determinant(&minor)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Vector::new(entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QMatrix, QVector, Rational};

    fn q(v: &[i64]) -> QVector {
        QVector::from_ints(v)
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(q(&[1, 3, 4, 5]).reversed(), q(&[5, 4, 3, 1]));
        assert_eq!(q(&[2, 2]).reversed(), q(&[2, 2]));
        assert_eq!(q(&[7, -1, 0]).reversed().reversed(), q(&[7, -1, 0]));
    }

    #[test]
    fn paste_examples() {
        assert_eq!(q(&[1, 3, 4, 5]).paste(&q(&[2, 4, 3])), q(&[1, 3, 4, 5, 2, 4, 3]));
        assert_eq!(q(&[0]).paste(&q(&[0])), q(&[0, 0]));
        let lhs = q(&[1, 2]).paste(&q(&[3])).reversed();
        assert_eq!(lhs, q(&[3, 2, 1]));
        assert_eq!(lhs, q(&[3]).reversed().paste(&q(&[1, 2]).reversed()));
    }

    #[test]
    fn embeddings() {
        assert_eq!(q(&[1, 3, 4, 5]).embed_left(3), q(&[1, 3, 4, 5, 0, 0, 0]));
        assert_eq!(q(&[2, 4, 3]).embed_right(4), q(&[0, 0, 0, 0, 2, 4, 3]));
        assert_eq!(q(&[5]).embed_left(0), q(&[5]));
        let (v, w) = (q(&[1, 3, 4, 5]), q(&[2, 4, 3]));
        assert_eq!(&v.embed_left(w.len()) + &w.embed_right(v.len()), v.paste(&w));
    }

    #[test]
    fn empty_vector_rejected() {
        assert!(matches!(QVector::new(vec![]), Err(Error::InvalidDimension(_))));
    }

    #[test]
    fn dot_and_mismatch() {
        assert_eq!(q(&[1, 2, 3]).dot(&q(&[4, 5, 6])).unwrap(), Rational::from_integer(32.into()));
        assert!(q(&[1, 2, 1]).dot(&q(&[1, 0, -1])).unwrap() == Rational::from_integer(0.into()));
        assert_eq!(q(&[1, 2]).dot(&q(&[3, 4])).unwrap(), q(&[2, 1]).dot(&q(&[4, 3])).unwrap());
        assert_eq!(
            q(&[1, 2]).dot(&q(&[1, 2, 3])),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn cross_examples() {
        assert_eq!(q(&[1, 0, 0]).cross3(&q(&[0, 1, 0])).unwrap(), q(&[0, 0, 1]));
        let (v, w) = (q(&[1, 2, 3]), q(&[4, 5, 6]));
        assert_eq!(v.cross3(&w).unwrap(), q(&[-3, 6, -3]));
        assert_eq!(v.cross3(&w).unwrap().reversed(), w.reversed().cross3(&v.reversed()).unwrap());
        assert!(q(&[1, 2]).cross3(&q(&[1, 2])).is_err());
    }

    #[test]
    fn projections() {
        assert_eq!(q(&[1, 2, 3]).palindromic_part(), q(&[2, 2, 2]));
        assert_eq!(q(&[1, 2, 3]).antipalindromic_part(), q(&[-1, 0, 1]));
        assert_eq!(q(&[4, 4]).palindromic_part(), q(&[4, 4]));
        let v = q(&[3, -1, 7, 2]);
        assert_eq!(&v.palindromic_part() + &v.antipalindromic_part(), v);
        assert_eq!(&v.palindromic_part() - &v.antipalindromic_part(), v.reversed());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(q(&[1, 0, 1]).classify(), Parity { palindromic: true, antipalindromic: false });
        assert_eq!(q(&[1, 0, -1]).classify(), Parity { palindromic: false, antipalindromic: true });
        assert_eq!(q(&[0, 0]).classify(), Parity { palindromic: true, antipalindromic: true });
    }

    #[test]
    fn bases() {
        let p = palindromic_basis::<Rational>(3).unwrap();
        assert_eq!(p.members(), &[q(&[1, 0, 1]), q(&[0, 1, 0])]);
        let a = antipalindromic_basis::<Rational>(2).unwrap();
        assert_eq!(a.members(), &[q(&[1, -1])]);
        assert_eq!(palindromic_basis::<Rational>(1).unwrap().members(), &[q(&[1])]);
        assert!(antipalindromic_basis::<Rational>(1).unwrap().is_empty());
        assert!(matches!(palindromic_basis::<Rational>(0), Err(Error::InvalidDimension(_))));
    }

    #[test]
    fn minors() {
        let m = QMatrix::from_ints(&[[1, 2, 3]]);
        assert_eq!(minor_matrix(&m, 2).unwrap(), QMatrix::from_ints(&[[1, 3]]));
        let e = QMatrix::from_ints(&[[1, 0, 0], [0, 1, 0]]);
        assert_eq!(minor_matrix(&e, 3).unwrap(), QMatrix::identity(2).unwrap());
        assert!(matches!(minor_matrix(&e, 4), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(minor_matrix(&QMatrix::from_ints(&[[1], [2]]), 1), Err(Error::Shape(_))));
    }

    #[test]
    fn generalized_product_examples() {
        assert_eq!(generalized_product(&[q(&[1, 0, 0]), q(&[0, 1, 0])]).unwrap(), q(&[0, 0, 1]));
        assert_eq!(generalized_product(&[q(&[2, 5])]).unwrap(), q(&[5, -2]));
        let e = |i| QVector::unit(4, i).unwrap();
        assert_eq!(generalized_product(&[e(0), e(1), e(2)]).unwrap(), q(&[0, 0, 0, -1]));
        assert!(generalized_product(&[q(&[1, 2, 3])]).is_err());
        assert!(generalized_product::<Rational>(&[]).is_err());
    }

    #[test]
    fn works_over_floats() {
        let v = Vector::<f64>::from_ints(&[1, 2, 4]);
        assert_eq!(v.palindromic_part().entries(), &[2.5, 2.0, 2.5]);
    }
}
