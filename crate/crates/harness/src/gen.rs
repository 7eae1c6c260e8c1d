//! Per-property input generator over one RNG substream.

use std::collections::BTreeSet;

use num_traits::Zero;
use revpaste::{
    antipalindromic_basis, linalg, palindromic_basis, subspace_basis, NamedSeries, QMatrix,
    QPolynomial, QSeries, QVector, Rational, SubspaceKind, VectorBasis,
};

use crate::rng::{random_matrix, reduce, RngState};

/// Draw attempts before falling back to a constructed invertible matrix.
const INVERTIBLE_ATTEMPTS: usize = 64;

/// Inputs for one property: dimensions in `1..=max_dim`, integer entries in
/// `[-bound, bound]`. Also collects free-form notes that end up in the report.
#[derive(Clone, Debug)]
pub struct Gen {
    rng: RngState,
    max_dim: usize,
    bound: u64,
    notes: BTreeSet<String>,
}

impl Gen {
    pub fn new(rng: RngState, max_dim: usize, bound: u64) -> Self {
        Gen { rng, max_dim: max_dim.max(1), bound: bound.max(1), notes: BTreeSet::new() }
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.insert(text.into());
    }

    pub fn take_notes(&mut self) -> BTreeSet<String> {
        std::mem::take(&mut self.notes)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform-ish index in `0..n` by modular reduction.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// `1 + out mod max_dim`.
    pub fn dim(&mut self) -> usize {
        1 + self.below(self.max_dim)
    }

    /// Dimension in `lo..=max(lo, max_dim)`.
    pub fn dim_at_least(&mut self, lo: usize) -> usize {
        let hi = self.max_dim.max(lo);
        lo + self.below(hi - lo + 1)
    }

    pub fn pick<T: Copy>(&mut self, options: &[T]) -> T {
        options[self.below(options.len())]
    }

    pub fn coin(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }

    /// Integer in `[-bound, bound]`.
    pub fn int(&mut self) -> i64 {
        reduce(self.next_u64(), self.bound)
    }

    /// Integer in `[-b, b]`.
    pub fn small_int(&mut self, b: u64) -> i64 {
        reduce(self.next_u64(), b)
    }

    pub fn integer(&mut self) -> Rational {
        Rational::from_integer(self.int().into())
    }

    /// `p/q` with `|p| ≤ bound` and `q ∈ 1..=3`.
    pub fn rational(&mut self) -> Rational {
        let p = self.int();
        let q = 1 + self.below(3) as i64;
        Rational::new(p.into(), q.into())
    }

    pub fn vector(&mut self, n: usize) -> QVector {
        QVector::new((0..n).map(|_| self.integer()).collect()).expect("n >= 1")
    }

    pub fn matrix(&mut self, n: usize, m: usize) -> QMatrix {
        let (rng, a) = random_matrix(self.rng, n, m, self.bound).expect("dimensions and bound are positive");
        self.rng = rng;
        a
    }

    /// Vector of length `dim()`.
    pub fn any_vector(&mut self) -> QVector {
        let n = self.dim();
        self.vector(n)
    }

    /// Matrix of shape `dim() × dim()`.
    pub fn any_matrix(&mut self) -> QMatrix {
        let (n, m) = (self.dim(), self.dim());
        self.matrix(n, m)
    }

    /// Matrix with `n` rows and `dim()` columns.
    pub fn with_rows(&mut self, n: usize) -> QMatrix {
        let m = self.dim();
        self.matrix(n, m)
    }

    /// Matrix with `dim()` rows and `m` columns.
    pub fn with_cols(&mut self, m: usize) -> QMatrix {
        let n = self.dim();
        self.matrix(n, m)
    }

    pub fn square(&mut self, n: usize) -> QMatrix {
        self.matrix(n, n)
    }

    /// Random draws until one is invertible; a unit upper-triangular matrix
    /// if none is.
    pub fn invertible(&mut self, n: usize) -> QMatrix {
        for _ in 0..INVERTIBLE_ATTEMPTS {
            let a = self.square(n);
            if !linalg::exact_determinant(&a).expect("square").is_zero() {
                return a;
            }
        }
        self.unit_upper(n)
    }

    pub fn any_invertible(&mut self) -> QMatrix {
        let n = self.dim();
        self.invertible(n)
    }

    /// Ones on the diagonal, random entries above, zeros below.
    pub fn unit_upper(&mut self, n: usize) -> QMatrix {
        let a = self.square(n);
        QMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => a.at(i, j).clone(),
            std::cmp::Ordering::Equal => Rational::from_integer(1.into()),
            std::cmp::Ordering::Greater => Rational::from_integer(0.into()),
        })
        .expect("n >= 1")
    }

    /// Upper-triangular with integer diagonal; its eigenvalues are the
    /// diagonal entries.
    pub fn upper_triangular(&mut self, n: usize) -> QMatrix {
        let a = self.square(n);
        QMatrix::from_fn(n, n, |i, j| if i <= j { a.at(i, j).clone() } else { Rational::from_integer(0.into()) })
            .expect("n >= 1")
    }

    /// A square matrix whose last row is a combination of the others (the
    /// zero matrix when `n = 1`).
    pub fn singular(&mut self, n: usize) -> QMatrix {
        let a = self.square(n);
        let coeffs: Vec<Rational> = (0..n.saturating_sub(1)).map(|_| self.integer()).collect();
        QMatrix::from_fn(n, n, |i, j| {
            if i + 1 < n {
                a.at(i, j).clone()
            } else {
                coeffs.iter().enumerate().fold(Rational::from_integer(0.into()), |acc, (k, c)| {
                    acc + c.clone() * a.at(k, j).clone()
                })
            }
        })
        .expect("n >= 1")
    }

    /// Random Jordan matrix: blocks of size 1 to 3 with eigenvalues in
    /// `[-3, 3]`.
    pub fn jordan(&mut self, n: usize) -> QMatrix {
        let mut diag = Vec::with_capacity(n);
        let mut sup = Vec::with_capacity(n);
        while diag.len() < n {
            let size = 1 + self.below((n - diag.len()).min(3));
            let lambda = self.small_int(3);
            for k in 0..size {
                diag.push(lambda);
                sup.push(k + 1 < size);
            }
        }
        QMatrix::from_fn(n, n, |i, j| {
            let v = if i == j {
                diag[i]
            } else if j == i + 1 && sup[i] {
                1
            } else {
                0
            };
            Rational::from_integer(v.into())
        })
        .expect("n >= 1")
    }

    fn combination(&mut self, basis: &VectorBasis<Rational>, n: usize) -> QVector {
        if basis.is_empty() {
            return QVector::zeros(n).expect("n >= 1");
        }
        let coeffs: Vec<Rational> = (0..basis.len()).map(|_| self.integer()).collect();
        basis.combination(&coeffs).expect("one coefficient per member")
    }

    pub fn palindromic_vector(&mut self, n: usize) -> QVector {
        let b = palindromic_basis(n).expect("n >= 1");
        self.combination(&b, n)
    }

    pub fn antipalindromic_vector(&mut self, n: usize) -> QVector {
        let b = antipalindromic_basis(n).expect("n >= 1");
        self.combination(&b, n)
    }

    /// Random element of the subspace `kind` of `n×m` matrices.
    pub fn member(&mut self, n: usize, m: usize, kind: SubspaceKind) -> QMatrix {
        let basis = subspace_basis::<Rational>(n, m, kind).expect("n, m >= 1");
        let coeffs: Vec<Rational> = (0..basis.len()).map(|_| self.integer()).collect();
        basis.combination(&coeffs).expect("one coefficient per member")
    }

    /// An invertible element of `kind`, if one turns up within the attempt
    /// budget.
    pub fn invertible_member(&mut self, n: usize, kind: SubspaceKind) -> Option<QMatrix> {
        (0..INVERTIBLE_ATTEMPTS)
            .map(|_| self.member(n, n, kind))
            .find(|a| !linalg::exact_determinant(a).expect("square").is_zero())
    }

    /// Polynomial of degree at most `max_degree` with coefficients in `[-3, 3]`.
    pub fn polynomial(&mut self, max_degree: usize) -> QPolynomial {
        let degree = self.below(max_degree + 1);
        QPolynomial::new((0..=degree).map(|_| Rational::from_integer(self.small_int(3).into())).collect())
    }

    /// A polynomial of degree ≤ 4 or a named series truncated at order ≤ 6.
    pub fn series(&mut self) -> QSeries {
        if self.coin() {
            QSeries::Polynomial(self.polynomial(4))
        } else {
            let kind = self.pick(&NamedSeries::ALL);
            QSeries::truncated(kind, self.below(7))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use revpaste::Axis;

    fn gen() -> Gen {
        Gen::new(RngState::new(3).unwrap(), 4, 9)
    }

    #[test]
    fn dims_and_ranges() {
        let mut g = gen();
        for _ in 0..200 {
            let n = g.dim();
            assert!((1..=4).contains(&n));
            assert!((3..=4).contains(&g.dim_at_least(3)));
            assert!((-9..=9).contains(&g.int()));
        }
        let mut small = Gen::new(RngState::new(3).unwrap(), 2, 9);
        assert_eq!(small.dim_at_least(3), 3);
    }

    #[test]
    fn structured_draws() {
        let mut g = gen();
        for n in 1..=4 {
            assert!(!linalg::exact_determinant(&g.invertible(n)).unwrap().is_zero());
            assert!(linalg::exact_determinant(&g.singular(n)).unwrap().is_zero());
            assert!(g.palindromic_vector(n).is_palindromic());
            assert!(g.antipalindromic_vector(n).is_antipalindromic());
            for kind in SubspaceKind::ALL {
                assert!(kind.contains(&g.member(n, 3, kind)));
            }
            let j = g.jordan(n);
            assert!((0..n).all(|i| (0..n).all(|k| k == i || k == i + 1 || j.at(i, k) == &Rational::from_integer(0.into()))));
            if let Some(p) = g.invertible_member(n, SubspaceKind::PA) {
                assert!(p.is_palindromic(Axis::Full));
            }
        }
    }

    #[test]
    fn reproducible() {
        let (mut a, mut b) = (gen(), gen());
        assert_eq!(a.matrix(3, 2), b.matrix(3, 2));
        assert_eq!(a.series(), b.series());
    }
}
