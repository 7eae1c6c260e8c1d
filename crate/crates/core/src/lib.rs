//! Exact Pasting and Reversing calculus on vectors and matrices.
//!
//! Every container is generic over a [`Scalar`] (any `num-traits` number with
//! negation), and the projections, inverses and characteristic polynomials
//! additionally require a [`Field`] of characteristic zero. The crate root
//! exports concrete aliases over arbitrary-precision rationals, which is what
//! the identity checks run on: equality there is exact, never approximate.
//!
//! The vocabulary:
//!
//! * *Reversing* reverses the coordinates of a vector, or the entries of every
//!   row ([`Matrix::reverse_rows`]), of every column ([`Matrix::reverse_cols`])
//!   or both ([`Matrix::reverse_full`]).
//! * *Pasting* concatenates vectors, or matrices side by side
//!   ([`Matrix::paste_rows`]), on top of each other ([`Matrix::paste_cols`]) or
//!   block-diagonally ([`Matrix::paste_blocks`]).
//! * A vector or matrix is *palindromic* when a reversal fixes it and
//!   *antipalindromic* when a reversal negates it.

pub mod error;
pub mod functions;
pub mod jordan;
pub mod linalg;
pub mod matrix;
pub mod polynomial;
pub mod scalar;
pub mod subspace;
pub mod vector;

pub use error::{Error, Result};
pub use functions::{
    apply_series, check_reversing_conjugation, spectral_mapping_check, ConjugationReport,
    NamedSeries, Series,
};
pub use jordan::{jordan_transport, reversing_jordan, JordanPair};
pub use matrix::{reversing_matrix, Axis, Matrix, MatrixParity, QuadParts};
pub use polynomial::Polynomial;
pub use scalar::{Field, Scalar};
pub use subspace::{subspace_basis, MatrixBasis, SubspaceKind};
pub use vector::{
    antipalindromic_basis, generalized_product, minor_matrix, palindromic_basis, Parity, Vector,
    VectorBasis,
};

/// Exact rational scalar: big-integer numerator over a positive big-integer
/// denominator, always kept in lowest terms.
pub type Rational = num_rational::BigRational;
/// Big integer, used for cleared-denominator determinants.
pub type Integer = num_bigint::BigInt;
/// Vector over [`Rational`].
pub type QVector = Vector<Rational>;
/// Matrix over [`Rational`].
pub type QMatrix = Matrix<Rational>;
/// Polynomial over [`Rational`].
pub type QPolynomial = Polynomial<Rational>;
/// Series over [`Rational`].
pub type QSeries = Series<Rational>;
