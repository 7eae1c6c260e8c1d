//! Palindromic and antipalindromic matrix subspaces and their canonical bases.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::{Axis, Matrix};
use crate::scalar::{Field, Scalar};
use crate::vector::{antipalindromic_basis, palindromic_basis, Vector, VectorBasis};

/// The ten subspaces of `n×m` matrices cut out by reversal parities.
///
/// The two-letter kinds are intersections: the first letter is the parity
/// under row-wise reversal, the second under column-wise reversal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubspaceKind {
    /// Every row palindromic.
    WpR,
    /// Every row antipalindromic.
    WaR,
    /// Every column palindromic.
    WpC,
    /// Every column antipalindromic.
    WaC,
    Wpp,
    /// Rows palindromic, columns antipalindromic.
    Wpa,
    /// Rows antipalindromic, columns palindromic.
    Wap,
    Waa,
    /// Fixed by full reversal.
    PA,
    /// Negated by full reversal.
    APA,
}

fn ceil_half(n: usize) -> usize {
    n.div_ceil(2)
}

fn floor_half(n: usize) -> usize {
    n / 2
}

impl SubspaceKind {
    pub const ALL: [SubspaceKind; 10] = [
        SubspaceKind::WpR,
        SubspaceKind::WaR,
        SubspaceKind::WpC,
        SubspaceKind::WaC,
        SubspaceKind::Wpp,
        SubspaceKind::Wpa,
        SubspaceKind::Wap,
        SubspaceKind::Waa,
        SubspaceKind::PA,
        SubspaceKind::APA,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubspaceKind::WpR => "Wp_r",
            SubspaceKind::WaR => "Wa_r",
            SubspaceKind::WpC => "Wp_c",
            SubspaceKind::WaC => "Wa_c",
            SubspaceKind::Wpp => "Wpp",
            SubspaceKind::Wpa => "Wpa",
            SubspaceKind::Wap => "Wap",
            SubspaceKind::Waa => "Waa",
            SubspaceKind::PA => "PA",
            SubspaceKind::APA => "aPA",
        }
    }

    /// Dimension of the subspace inside `n×m` matrices.
    pub fn dimension(self, n: usize, m: usize) -> usize {
        let (cn, fnn, cm, fm) = (ceil_half(n), floor_half(n), ceil_half(m), floor_half(m));
        match self {
            SubspaceKind::WpR => n * cm,
            SubspaceKind::WaR => n * fm,
            SubspaceKind::WpC => m * cn,
            SubspaceKind::WaC => m * fnn,
            SubspaceKind::Wpp => cn * cm,
            SubspaceKind::Wpa => fnn * cm,
            SubspaceKind::Wap => cn * fm,
            SubspaceKind::Waa => fnn * fm,
            SubspaceKind::PA => ceil_half(n * m),
            SubspaceKind::APA => floor_half(n * m),
        }
    }

    /// The reversal parity constraints defining the subspace, as
    /// `(axis, antipalindromic?)` pairs.
    pub fn constraints(self) -> &'static [(Axis, bool)] {
        match self {
            SubspaceKind::WpR => &[(Axis::Rows, false)],
            SubspaceKind::WaR => &[(Axis::Rows, true)],
            SubspaceKind::WpC => &[(Axis::Cols, false)],
            SubspaceKind::WaC => &[(Axis::Cols, true)],
            SubspaceKind::Wpp => &[(Axis::Rows, false), (Axis::Cols, false)],
            SubspaceKind::Wpa => &[(Axis::Rows, false), (Axis::Cols, true)],
            SubspaceKind::Wap => &[(Axis::Rows, true), (Axis::Cols, false)],
            SubspaceKind::Waa => &[(Axis::Rows, true), (Axis::Cols, true)],
            SubspaceKind::PA => &[(Axis::Full, false)],
            SubspaceKind::APA => &[(Axis::Full, true)],
        }
    }

    pub fn contains<T: Scalar>(self, a: &Matrix<T>) -> bool {
        self.constraints().iter().all(|&(axis, anti)| {
            if anti {
                a.is_antipalindromic(axis)
            } else {
                a.is_palindromic(axis)
            }
        })
    }
}

impl fmt::Display for SubspaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubspaceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubspaceKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidDimension(format!("unknown subspace kind {s:?}")))
    }
}

/// A list of same-shape matrices spanning a subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixBasis<T> {
    rows: usize,
    cols: usize,
    members: Vec<Matrix<T>>,
}

impl<T: Scalar> MatrixBasis<T> {
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn members(&self) -> &[Matrix<T>] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members of both bases, which must share a shape.
    pub fn union(&self, other: &Self) -> Result<Self> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "bases of {}x{} and {}x{} matrices",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut members = self.members.clone();
        members.extend(other.members.iter().cloned());
        Ok(MatrixBasis { rows: self.rows, cols: self.cols, members })
    }

    /// Members vectorized as the rows of one matrix; `None` when empty.
    pub fn stacked(&self) -> Option<Matrix<T>> {
        let rows: Vec<Vector<T>> = self.members.iter().map(Matrix::vectorize).collect();
        Matrix::from_row_vectors(&rows).ok()
    }

    pub fn combination(&self, coeffs: &[T]) -> Result<Matrix<T>> {
        if coeffs.len() != self.members.len() {
            return Err(Error::LengthMismatch { left: coeffs.len(), right: self.members.len() });
        }
        let mut acc = Matrix::zeros(self.rows, self.cols)?;
        for (c, b) in coeffs.iter().zip(&self.members) {
            acc = &acc + &b.scale(c);
        }
        Ok(acc)
    }
}

impl<T: Field> MatrixBasis<T> {
    /// Rank of the vectorized members; equal to `len` for a genuine basis.
    pub fn rank(&self) -> usize {
        self.stacked().map_or(0, |s| crate::linalg::rank(&s))
    }
}

/// `c·rᵀ` for column profile `c` and row profile `r`.
fn outer<T: Scalar>(c: &Vector<T>, r: &Vector<T>) -> Matrix<T> {
    Matrix::column(c).matmul(&Matrix::row_matrix(r)).expect("1-column times 1-row")
}

fn standard_basis<T: Scalar>(n: usize) -> Vec<Vector<T>> {
    (0..n).map(|i| Vector::unit(n, i).expect("index below n")).collect()
}

fn products<T: Scalar>(cs: &[Vector<T>], rs: &[Vector<T>]) -> Vec<Matrix<T>> {
    cs.iter().flat_map(|c| rs.iter().map(move |r| outer(c, r))).collect()
}

/// Canonical basis of the subspace `kind` of `n×m` matrices.
///
/// Row and column kinds are spanned by outer products of a column profile
/// with a row profile; `PA`/`aPA` are the palindromic/antipalindromic vector
/// bases of length `nm`, devectorized row-major.
pub fn subspace_basis<T: Scalar>(n: usize, m: usize, kind: SubspaceKind) -> Result<MatrixBasis<T>> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidDimension(format!("{n}x{m} matrices")));
    }
    let pal = |k: usize| palindromic_basis::<T>(k).map(VectorBasis::into_members);
    let anti = |k: usize| antipalindromic_basis::<T>(k).map(VectorBasis::into_members);
    let members = match kind {
        SubspaceKind::WpR => products(&standard_basis(n), &pal(m)?),
        SubspaceKind::WaR => products(&standard_basis(n), &anti(m)?),
        SubspaceKind::WpC => products(&pal(n)?, &standard_basis(m)),
        SubspaceKind::WaC => products(&anti(n)?, &standard_basis(m)),
        SubspaceKind::Wpp => products(&pal(n)?, &pal(m)?),
        SubspaceKind::Wpa => products(&anti(n)?, &pal(m)?),
        SubspaceKind::Wap => products(&pal(n)?, &anti(m)?),
        SubspaceKind::Waa => products(&anti(n)?, &anti(m)?),
        SubspaceKind::PA | SubspaceKind::APA => {
            let vs = if kind == SubspaceKind::PA { pal(n * m)? } else { anti(n * m)? };
            vs.iter().map(|v| Matrix::devectorize(v, n, m)).collect::<Result<_>>()?
        }
    };
    Ok(MatrixBasis { rows: n, cols: m, members })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{QMatrix, Rational};

    #[test]
    fn examples() {
        assert_eq!(subspace_basis::<Rational>(3, 3, SubspaceKind::Wpp).unwrap().len(), 4);
        assert_eq!(subspace_basis::<Rational>(2, 2, SubspaceKind::PA).unwrap().len(), 2);
        assert!(subspace_basis::<Rational>(1, 1, SubspaceKind::WaR).unwrap().is_empty());
        assert!(subspace_basis::<Rational>(0, 1, SubspaceKind::PA).is_err());
    }

    #[test]
    fn counts_membership_and_independence() {
        for n in 1..=5 {
            for m in 1..=5 {
                for kind in SubspaceKind::ALL {
                    let b = subspace_basis::<Rational>(n, m, kind).unwrap();
                    assert_eq!(b.len(), kind.dimension(n, m), "{kind} {n}x{m}");
                    assert_eq!(b.rank(), b.len(), "{kind} {n}x{m}");
                    assert!(b.members().iter().all(|a| kind.contains(a)), "{kind} {n}x{m}");
                }
            }
        }
    }

    #[test]
    fn mixed_kind_orientation() {
        // One row, two columns: the row [1, 1] is palindromic and the single
        // column is trivially palindromic, so nothing is column-antipalindromic.
        assert_eq!(SubspaceKind::Wpa.dimension(1, 2), 0);
        assert_eq!(SubspaceKind::Wap.dimension(1, 2), 1);
        let b = subspace_basis::<Rational>(1, 2, SubspaceKind::Wap).unwrap();
        assert_eq!(b.members()[0], QMatrix::from_ints(&[[1, -1]]));
    }

    #[test]
    fn quad_components_lie_in_their_kinds() {
        let a = QMatrix::from_ints(&[[1, 2, 3], [4, 5, 6]]);
        let q = a.quad_decompose();
        assert!(SubspaceKind::Wpp.contains(&q.pp));
        assert!(SubspaceKind::Wpa.contains(&q.pa));
        assert!(SubspaceKind::Wap.contains(&q.ap));
        assert!(SubspaceKind::Waa.contains(&q.aa));
    }

    #[test]
    fn parse_names() {
        for kind in SubspaceKind::ALL {
            assert_eq!(kind.name().parse::<SubspaceKind>().unwrap(), kind);
        }
        assert!("Wzz".parse::<SubspaceKind>().is_err());
    }
}
