//! Dense row-major matrices with the three Reversings, the Pastings by rows,
//! columns and blocks, and the palindromic projections.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};
use crate::vector::Vector;

/// An `rows × cols` matrix, `rows, cols ≥ 1`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Which Reversing to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// Reverse the entries of every row: `a_{i(m+1-j)}`.
    Rows,
    /// Reverse the entries of every column: `a_{(n+1-i)j}`.
    Cols,
    /// Both at once: `a_{(n+1-i)(m+1-j)}`.
    Full,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::Rows, Axis::Cols, Axis::Full];
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MatrixParity {
    pub row_palindromic: bool,
    pub row_antipalindromic: bool,
    pub col_palindromic: bool,
    pub col_antipalindromic: bool,
    pub full_palindromic: bool,
    pub full_antipalindromic: bool,
}

/// The four components of a matrix with respect to the row and column
/// parities. The first letter of each name is the row parity (fixed or
/// negated by `reverse_rows`), the second the column parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadParts<T> {
    pub pp: Matrix<T>,
    pub pa: Matrix<T>,
    pub ap: Matrix<T>,
    pub aa: Matrix<T>,
}

impl<T: Scalar> QuadParts<T> {
    pub fn sum(&self) -> Matrix<T> {
        &(&(&self.pp + &self.pa) + &self.ap) + &self.aa
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidDimension(format!(
                "matrices need at least one row and column, got {rows}×{cols}"
            )));
        }
        if data.len() != rows * cols {
            return Err(Error::shape(format!(
                "{rows}×{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::shape(format!("ragged rows: {} vs {}", m, bad.len())));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    /// # Panics
    /// If there are no rows or `C == 0`.
    pub fn from_ints<const C: usize>(rows: &[[i64; C]]) -> Self {
        let data = rows.iter().flatten().map(|&v| T::from_int(v)).collect();
        Self::new(rows.len(), C, data).expect("non-empty integer matrix")
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Result<Self> {
        let data = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j));
        Self::new(rows, cols, data.collect())
    }

    pub fn from_row_vectors(vs: &[Vector<T>]) -> Result<Self> {
        Self::from_rows(vs.iter().map(|v| v.entries().to_vec()).collect())
    }

    /// `v` as an `n×1` column.
    pub fn column(v: &Vector<T>) -> Self {
        Matrix { rows: v.len(), cols: 1, data: v.entries().to_vec() }
    }

    /// `v` as a `1×n` row.
    pub fn row_matrix(v: &Vector<T>) -> Self {
        Matrix { rows: 1, cols: v.len(), data: v.entries().to_vec() }
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Square matrix with `d` on the diagonal.
    pub fn diagonal_matrix(d: &Vector<T>) -> Self {
        let n = d.len();
        Self::from_fn(n, n, |i, j| if i == j { d.entries()[i].clone() } else { T::zero() })
            .expect("non-empty diagonal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    /// Entry at 0-based `(i, j)`.
    ///
    /// # Panics
    /// If the index is out of bounds.
    pub fn at(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&T> {
        (i < self.rows && j < self.cols).then(|| &self.data[i * self.cols + j])
    }

    pub fn row(&self, i: usize) -> Vector<T> {
        Vector::new(self.data[i * self.cols..(i + 1) * self.cols].to_vec()).expect("cols ≥ 1")
    }

    pub fn col(&self, j: usize) -> Vector<T> {
        Vector::new((0..self.rows).map(|i| self.at(i, j).clone()).collect()).expect("rows ≥ 1")
    }

    pub fn row_vectors(&self) -> Vec<Vector<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map(&self, f: impl Fn(&T) -> T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn remap(&self, f: impl Fn(usize, usize) -> (usize, usize)) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            let (si, sj) = f(i, j);
            self.at(si, sj).clone()
        })
        .expect("same shape")
    }

    /// `ℛ_r`: reverses every row.
    pub fn reverse_rows(&self) -> Self {
        let m = self.cols;
        self.remap(|i, j| (i, m - 1 - j))
    }

    /// `ℛ_c`: reverses every column.
    pub fn reverse_cols(&self) -> Self {
        let n = self.rows;
        self.remap(|i, j| (n - 1 - i, j))
    }

    /// `ℛ`: reverses the matrix read as a single row-major vector.
    pub fn reverse_full(&self) -> Self {
        let mut data = self.data.clone();
        data.reverse();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn reverse(&self, axis: Axis) -> Self {
        match axis {
            Axis::Rows => self.reverse_rows(),
            Axis::Cols => self.reverse_cols(),
            Axis::Full => self.reverse_full(),
        }
    }

    /// `𝒫_r(A, B)`: `B` placed to the right of `A`; row counts must agree.
    pub fn paste_rows(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::shape(format!(
                "pasting by rows needs equal row counts, got {} and {}",
                self.rows, other.rows
            )));
        }
        let (m, p) = (self.cols, other.cols);
        Self::from_fn(self.rows, m + p, |i, j| {
            if j < m { self.at(i, j) } else { other.at(i, j - m) }.clone()
        })
    }

    /// `𝒫_c(A, C)`: `C` placed below `A`; column counts must agree.
    pub fn paste_cols(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::shape(format!(
                "pasting by columns needs equal column counts, got {} and {}",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Self::new(self.rows + other.rows, self.cols, data)
    }

    /// `𝒫_b(A, B)`: the block-diagonal matrix `[[A, 0], [0, B]]`.
    pub fn paste_blocks(&self, other: &Self) -> Self {
        let (n, m) = self.shape();
        Self::from_fn(n + other.rows, m + other.cols, |i, j| match (i < n, j < m) {
            (true, true) => self.at(i, j).clone(),
            (false, false) => other.at(i - n, j - m).clone(),
            _ => T::zero(),
        })
        .expect("non-empty blocks")
    }

    /// Pasting by rows written as `A·E₁ + B·E₂`, where `E₁ = [I_m | 0]` and
    /// `E₂ = [0 | I_p]` embed the column spaces of `A` and `B`.
    pub fn paste_rows_via_embedding(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::shape(format!(
                "pasting by rows needs equal row counts, got {} and {}",
                self.rows, other.rows
            )));
        }
        let (m, p) = (self.cols, other.cols);
        let e1 = Self::from_fn(m, m + p, |i, j| delta(i, j))?;
        let e2 = Self::from_fn(p, m + p, |i, j| delta(i + m, j))?;
        self.matmul(&e1)?.try_add(&other.matmul(&e2)?)
    }

    /// Pasting by columns written as `F₁·A + F₂·C`, with `F₁ = [I_n ; 0]` and
    /// `F₂ = [0 ; I_q]`.
    pub fn paste_cols_via_embedding(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::shape(format!(
                "pasting by columns needs equal column counts, got {} and {}",
                self.cols, other.cols
            )));
        }
        let (n, q) = (self.rows, other.rows);
        let f1 = Self::from_fn(n + q, n, |i, j| delta(i, j))?;
        let f2 = Self::from_fn(n + q, q, |i, j| delta(i, j + n))?;
        f1.matmul(self)?.try_add(&f2.matmul(other)?)
    }

    /// Row-major flattening.
    pub fn vectorize(&self) -> Vector<T> {
        Vector::new(self.data.clone()).expect("non-empty matrix")
    }

    /// Inverse of [`Matrix::vectorize`].
    pub fn devectorize(v: &Vector<T>, rows: usize, cols: usize) -> Result<Self> {
        if v.len() != rows * cols {
            return Err(Error::shape(format!(
                "cannot reshape a length-{} vector to {rows}×{cols}",
                v.len()
            )));
        }
        Self::new(rows, cols, v.entries().to_vec())
    }

    /// `[A | b]`.
    pub fn augmented(&self, b: &Vector<T>) -> Result<Self> {
        if b.len() != self.rows {
            return Err(Error::shape(format!(
                "augmenting a {}-row matrix needs a length-{} vector, got {}",
                self.rows,
                self.rows,
                b.len()
            )));
        }
        self.paste_rows(&Self::column(b))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone()).expect("non-empty")
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::shape(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, k| acc + self.at(i, k).clone() * other.at(k, j).clone())
        })
    }

    pub fn mul_vector(&self, v: &Vector<T>) -> Result<Vector<T>> {
        Ok(self.matmul(&Self::column(v))?.vectorize())
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::shape(format!(
                "shapes differ: {}×{} vs {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() + b.clone());
        Ok(Matrix { rows: self.rows, cols: self.cols, data: data.collect() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone());
        Ok(Matrix { rows: self.rows, cols: self.cols, data: data.collect() })
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| c.clone() * x.clone())
    }

    /// `(a₁₁, …, a_nn)` of a square matrix.
    pub fn diagonal(&self) -> Result<Vector<T>> {
        self.require_square()?;
        Vector::new((0..self.rows).map(|i| self.at(i, i).clone()).collect())
    }

    pub(crate) fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    /// Deletes the 0-based column `k`. The result must keep at least one column.
    pub fn delete_col(&self, k: usize) -> Result<Self> {
        if k >= self.cols {
            return Err(Error::IndexOutOfRange { index: k + 1, len: self.cols });
        }
        Self::from_fn(self.rows, self.cols - 1, |i, j| {
            self.at(i, if j < k { j } else { j + 1 }).clone()
        })
    }

    /// Deletes the 0-based row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> Result<Self> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange { index: i + 1, len: self.rows });
        }
        if j >= self.cols {
            return Err(Error::IndexOutOfRange { index: j + 1, len: self.cols });
        }
        Self::from_fn(self.rows - 1, self.cols - 1, |r, c| {
            self.at(if r < i { r } else { r + 1 }, if c < j { c } else { c + 1 }).clone()
        })
    }

    pub fn classify(&self) -> MatrixParity {
        let neg = self.map(|x| -x.clone());
        let (r, c, f) = (self.reverse_rows(), self.reverse_cols(), self.reverse_full());
        MatrixParity {
            row_palindromic: r == *self,
            row_antipalindromic: r == neg,
            col_palindromic: c == *self,
            col_antipalindromic: c == neg,
            full_palindromic: f == *self,
            full_antipalindromic: f == neg,
        }
    }

    /// Whether the reversal along `axis` fixes the matrix.
    pub fn is_palindromic(&self, axis: Axis) -> bool {
        self.reverse(axis) == *self
    }

    /// Whether the reversal along `axis` negates the matrix.
    pub fn is_antipalindromic(&self, axis: Axis) -> bool {
        let r = self.reverse(axis);
        r.data.iter().zip(&self.data).all(|(a, b)| *a == -b.clone())
    }
}

impl<T: Field> Matrix<T> {
    /// `½(A + ℛ_axis(A))`.
    pub fn project_palindromic(&self, axis: Axis) -> Self {
        (self + &self.reverse(axis)).scale(&T::half())
    }

    /// `½(A − ℛ_axis(A))`.
    pub fn project_antipalindromic(&self, axis: Axis) -> Self {
        (self - &self.reverse(axis)).scale(&T::half())
    }

    /// Splits `A` into its four row/column parity components, e.g.
    /// `A_pp = ¼(A + ℛ_r A + ℛ_c A + ℛA)`; the components sum to `A`.
    pub fn quad_decompose(&self) -> QuadParts<T> {
        let quarter = T::half() * T::half();
        let (r, c, f) = (self.reverse_rows(), self.reverse_cols(), self.reverse_full());
        let combo = |sr: bool, sc: bool, sf: bool| {
            let pick = |m: &Self, plus: bool| if plus { m.clone() } else { -m };
            (&(&(self + &pick(&r, sr)) + &pick(&c, sc)) + &pick(&f, sf)).scale(&quarter)
        };
        QuadParts {
            pp: combo(true, true, true),
            pa: combo(true, false, false),
            ap: combo(false, true, false),
            aa: combo(false, false, true),
        }
    }
}

fn delta<T: Scalar>(i: usize, j: usize) -> T {
    if i == j {
        T::one()
    } else {
        T::zero()
    }
}

/// The `n×n` exchange matrix `(δ_{i,n-j+1})`. Multiplying on the left
/// reverses columns, on the right reverses rows, and
/// `ℛ(A) = M(n)·A·M(m)` for an `n×m` matrix `A`.
pub fn reversing_matrix<T: Scalar>(n: usize) -> Result<Matrix<T>> {
    if n < 1 {
        return Err(Error::InvalidDimension("reversing matrix needs n ≥ 1".into()));
    }
    Matrix::from_fn(n, n, |i, j| delta(i + j, n - 1))
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols).collect();
        f.debug_struct("Matrix")
            .field("shape", &(self.rows, self.cols))
            .field("rows", &rows)
            .finish()
    }
}

// Operator forms panic on shape mismatch; the `try_*` methods return errors.

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: Self) -> Matrix<T> {
        self.try_add(rhs).expect("matrix addition requires equal shapes")
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: Self) -> Matrix<T> {
        self.try_sub(rhs).expect("matrix subtraction requires equal shapes")
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: Self) -> Matrix<T> {
        self.matmul(rhs).expect("matrix product requires compatible shapes")
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QMatrix, QVector, Rational};

    fn example_a() -> QMatrix {
        QMatrix::from_ints(&[[4, 6, 8, 8], [1, 3, 5, 4], [3, 2, 7, 7]])
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn worked_reversals() {
        let a = example_a();
        assert_eq!(a.reverse_rows(), QMatrix::from_ints(&[[8, 8, 6, 4], [4, 5, 3, 1], [7, 7, 2, 3]]));
        assert_eq!(a.reverse_cols(), QMatrix::from_ints(&[[3, 2, 7, 7], [1, 3, 5, 4], [4, 6, 8, 8]]));
        assert_eq!(a.reverse_full(), QMatrix::from_ints(&[[7, 7, 2, 3], [4, 5, 3, 1], [8, 8, 6, 4]]));
        assert_eq!(a.reverse_full(), a.reverse_rows().reverse_cols());
        assert_eq!(a.reverse_full(), a.reverse_cols().reverse_rows());
    }

    #[test]
    fn exchange_matrix() {
        assert_eq!(reversing_matrix::<Rational>(2).unwrap(), QMatrix::from_ints(&[[0, 1], [1, 0]]));
        assert_eq!(
            reversing_matrix::<Rational>(3).unwrap(),
            QMatrix::from_ints(&[[0, 0, 1], [0, 1, 0], [1, 0, 0]])
        );
        let m4 = reversing_matrix::<Rational>(4).unwrap();
        assert_eq!(&m4 * &m4, QMatrix::identity(4).unwrap());
        assert!(reversing_matrix::<Rational>(0).is_err());
        let a = example_a();
        let sandwich = &(&reversing_matrix(3).unwrap() * &a) * &reversing_matrix(4).unwrap();
        assert_eq!(sandwich, a.reverse_full());
    }

    #[test]
    fn pastings() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        let b = QMatrix::from_ints(&[[5], [6]]);
        let pasted = a.paste_rows(&b).unwrap();
        assert_eq!(pasted, QMatrix::from_ints(&[[1, 2, 5], [3, 4, 6]]));
        assert_eq!(
            pasted.reverse_rows(),
            b.reverse_rows().paste_rows(&a.reverse_rows()).unwrap()
        );
        assert_eq!(
            QMatrix::from_ints(&[[1, 2]]).paste_cols(&QMatrix::from_ints(&[[3, 4]])).unwrap(),
            a
        );
        assert!(matches!(a.paste_rows(&QMatrix::from_ints(&[[1]])), Err(Error::Shape(_))));
        assert!(matches!(a.paste_cols(&QMatrix::from_ints(&[[1]])), Err(Error::Shape(_))));
    }

    #[test]
    fn blocks() {
        let one = QMatrix::from_ints(&[[1]]);
        assert_eq!(one.paste_blocks(&QMatrix::from_ints(&[[-1]])), QMatrix::from_ints(&[[1, 0], [0, -1]]));
        assert_eq!(
            QMatrix::identity(2).unwrap().paste_blocks(&QMatrix::identity(1).unwrap()),
            QMatrix::identity(3).unwrap()
        );
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        let b = QMatrix::from_ints(&[[5]]);
        assert_eq!(
            a.paste_blocks(&b).reverse_full(),
            b.reverse_full().paste_blocks(&a.reverse_full())
        );
    }

    #[test]
    fn embedding_paste() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        let b = QMatrix::from_ints(&[[5], [6]]);
        assert_eq!(a.paste_rows_via_embedding(&b).unwrap(), QMatrix::from_ints(&[[1, 2, 5], [3, 4, 6]]));
        let i1 = QMatrix::identity(1).unwrap();
        assert_eq!(
            i1.paste_rows_via_embedding(&QMatrix::zeros(1, 1).unwrap()).unwrap(),
            QMatrix::from_ints(&[[1, 0]])
        );
        let c = QMatrix::from_ints(&[[7, 8]]);
        assert_eq!(a.paste_cols_via_embedding(&c).unwrap(), a.paste_cols(&c).unwrap());
        assert!(a.paste_rows_via_embedding(&c).is_err());
    }

    #[test]
    fn vectorization() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(a.vectorize(), QVector::from_ints(&[1, 2, 3, 4]));
        assert_eq!(QMatrix::devectorize(&QVector::from_ints(&[1, 2, 3, 4]), 2, 2).unwrap(), a);
        assert_eq!(a.reverse_full().vectorize(), a.vectorize().reversed());
        assert!(QMatrix::devectorize(&QVector::from_ints(&[1, 2, 3]), 2, 2).is_err());
    }

    #[test]
    fn projections() {
        let a = QMatrix::from_ints(&[[1, 3]]);
        assert_eq!(a.project_palindromic(Axis::Rows), QMatrix::from_ints(&[[2, 2]]));
        assert_eq!(a.project_antipalindromic(Axis::Rows), QMatrix::from_ints(&[[-1, 1]]));
        let i2 = QMatrix::identity(2).unwrap();
        assert_eq!(i2.project_palindromic(Axis::Full), i2);
    }

    #[test]
    fn quad_examples() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        let parts = a.quad_decompose();
        let h = q(5, 2);
        assert_eq!(parts.pp, QMatrix::new(2, 2, vec![h.clone(), h.clone(), h.clone(), h]).unwrap());
        assert_eq!(parts.sum(), a);
        let ones = QMatrix::from_ints(&[[1, 1], [1, 1]]);
        let z = QMatrix::zeros(2, 2).unwrap();
        assert_eq!(ones.quad_decompose(), QuadParts { pp: ones.clone(), pa: z.clone(), ap: z.clone(), aa: z });
    }

    #[test]
    fn classify_examples() {
        let p = QMatrix::from_ints(&[[1, 2, 1]]).classify();
        assert!(p.row_palindromic && !p.row_antipalindromic && !p.col_antipalindromic);
        let c = QMatrix::from_ints(&[[1], [0], [-1]]).classify();
        assert!(c.col_antipalindromic && !c.col_palindromic && !c.row_antipalindromic);
        let z = QMatrix::zeros(2, 2).unwrap().classify();
        assert_eq!(
            z,
            MatrixParity {
                row_palindromic: true,
                row_antipalindromic: true,
                col_palindromic: true,
                col_antipalindromic: true,
                full_palindromic: true,
                full_antipalindromic: true,
            }
        );
    }

    #[test]
    fn augmented_matrix() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        let b = QVector::from_ints(&[5, 6]);
        let aug = a.augmented(&b).unwrap();
        assert_eq!(aug, QMatrix::from_ints(&[[1, 2, 5], [3, 4, 6]]));
        assert_eq!(aug.transpose(), a.transpose().paste_cols(&QMatrix::row_matrix(&b)).unwrap());
        assert_eq!(
            QMatrix::identity(1).unwrap().augmented(&QVector::from_ints(&[0])).unwrap(),
            QMatrix::from_ints(&[[1, 0]])
        );
        assert!(a.augmented(&QVector::from_ints(&[1])).is_err());
    }

    #[test]
    fn plumbing() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(&QMatrix::identity(2).unwrap() * &a, a);
        assert_eq!(a.diagonal().unwrap(), QVector::from_ints(&[1, 4]));
        assert_eq!(a.diagonal().unwrap().reversed(), a.reverse_full().diagonal().unwrap());
        assert_eq!(
            QMatrix::from_ints(&[[1, 2, 3]]).diagonal(),
            Err(Error::NotSquare { rows: 1, cols: 3 })
        );
        assert!(QMatrix::new(0, 2, vec![]).is_err());
        assert!(QMatrix::new(2, 2, vec![q(1, 1)]).is_err());
        assert!(QMatrix::from_rows(vec![vec![q(1, 1)], vec![]]).is_err());
        assert!(a.matmul(&QMatrix::from_ints(&[[1, 2, 3]])).is_err());
    }

    #[test]
    fn generic_over_integers() {
        let a = Matrix::<i64>::from_ints(&[[1, 2], [3, 4]]);
        assert_eq!(a.reverse_full().data(), &[4, 3, 2, 1]);
    }
}
