//! Polynomial and truncated power-series functions of square matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{charpoly, polyeval_matrix};
use crate::matrix::Matrix;
use crate::polynomial::Polynomial;
use crate::scalar::Field;

/// Power series with rational coefficients, truncated before evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedSeries {
    /// `Σ x^k / k!`
    Exp,
    /// `Σ (−1)^k x^{2k+1} / (2k+1)!`
    Sin,
    /// `Σ (−1)^k x^{2k} / (2k)!`
    Cos,
    /// `Σ x^{2k+1} / (2k+1)!`
    Sinh,
    /// `Σ x^{2k} / (2k)!`
    Cosh,
    /// `Σ x^k`
    Geometric,
}

impl NamedSeries {
    pub const ALL: [NamedSeries; 6] = [
        NamedSeries::Exp,
        NamedSeries::Sin,
        NamedSeries::Cos,
        NamedSeries::Sinh,
        NamedSeries::Cosh,
        NamedSeries::Geometric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedSeries::Exp => "exp",
            NamedSeries::Sin => "sin",
            NamedSeries::Cos => "cos",
            NamedSeries::Sinh => "sinh",
            NamedSeries::Cosh => "cosh",
            NamedSeries::Geometric => "geometric",
        }
    }

    /// Coefficients `a_0..=a_order`.
    pub fn coefficients<T: Field>(self, order: usize) -> Vec<T> {
        let mut out = Vec::with_capacity(order + 1);
        // 1/k!, built incrementally
        let mut inv_fact = T::one();
        for k in 0..=order {
            if k > 0 {
                inv_fact = inv_fact / T::from_int(k as i64);
            }
            let odd = k % 2 == 1;
            let alternating = if (k / 2) % 2 == 0 { inv_fact.clone() } else { -inv_fact.clone() };
            out.push(match self {
                NamedSeries::Exp => inv_fact.clone(),
                NamedSeries::Geometric => T::one(),
                NamedSeries::Sin if odd => alternating,
                NamedSeries::Cos if !odd => alternating,
                NamedSeries::Sinh if odd => inv_fact.clone(),
                NamedSeries::Cosh if !odd => inv_fact.clone(),
                _ => T::zero(),
            });
        }
        out
    }
}

impl fmt::Display for NamedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedSeries::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidDimension(format!("unknown series {s:?}")))
    }
}

/// A function applied to matrices: either an exact polynomial or a named
/// series truncated after the `λ^order` term.
#[derive(Clone, Debug, PartialEq)]
pub enum Series<T> {
    Polynomial(Polynomial<T>),
    Truncated { kind: NamedSeries, order: usize },
}

impl<T: Field> Series<T> {
    pub fn truncated(kind: NamedSeries, order: usize) -> Self {
        Series::Truncated { kind, order }
    }

    /// The partial sum as a polynomial.
    pub fn to_polynomial(&self) -> Polynomial<T> {
        match self {
            Series::Polynomial(p) => p.clone(),
            Series::Truncated { kind, order } => Polynomial::new(kind.coefficients(*order)),
        }
    }

    /// The partial sum at a scalar.
    pub fn eval(&self, x: &T) -> T {
        self.to_polynomial().eval(x)
    }
}

impl<T> From<Polynomial<T>> for Series<T> {
    fn from(p: Polynomial<T>) -> Self {
        Series::Polynomial(p)
    }
}

/// `Σ a_k A^k` over the (truncated) coefficients of `f`.
pub fn apply_series<T: Field>(f: &Series<T>, a: &Matrix<T>) -> Result<Matrix<T>> {
    polyeval_matrix(&f.to_polynomial(), a)
}

/// Outcome of the three reversal conjugation identities for one `(f, A)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugationReport {
    /// `f(ℛA) = ℛ(f(A))`
    pub id_full: bool,
    /// `f(ℛ_r A) = ℛ(f(ℛ_c A))`
    pub id_rc: bool,
    /// `f(ℛ_c A) = ℛ(f(ℛ_r A))`
    pub id_cr: bool,
}

impl ConjugationReport {
    pub fn all(&self) -> bool {
        self.id_full && self.id_rc && self.id_cr
    }
}

pub fn check_reversing_conjugation<T: Field>(f: &Series<T>, a: &Matrix<T>) -> Result<ConjugationReport> {
    let p = f.to_polynomial();
    let eval = |m: &Matrix<T>| polyeval_matrix(&p, m);
    let (rr, rc) = (a.reverse_rows(), a.reverse_cols());
    let (f_rr, f_rc) = (eval(&rr)?, eval(&rc)?);
    Ok(ConjugationReport {
        id_full: eval(&a.reverse_full())? == eval(a)?.reverse_full(),
        id_rc: f_rr == f_rc.reverse_full(),
        id_cr: f_rc == f_rr.reverse_full(),
    })
}

/// Checks that `f(λ)` is an eigenvalue of `f(ℛA)` for a rational eigenvalue
/// `λ` of `A`, using the same truncation for the scalar and the matrix.
pub fn spectral_mapping_check<T: Field>(a: &Matrix<T>, lambda: &T, f: &Series<T>) -> Result<bool> {
    if !charpoly(a)?.eval(lambda).is_zero() {
        return Err(Error::NotEigenvalue);
    }
    let image = apply_series(f, &a.reverse_full())?;
    Ok(charpoly(&image)?.eval(&f.eval(lambda)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::reversing_matrix;
    use crate::{QMatrix, QPolynomial, QSeries, Rational};

    fn r(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn square() -> QSeries {
        QPolynomial::from_ints(&[0, 0, 1]).into()
    }

    #[test]
    fn coefficient_rules() {
        let frac = |p: i64, q: i64| Rational::new(p.into(), q.into());
        assert_eq!(
            NamedSeries::Exp.coefficients::<Rational>(4),
            vec![r(1), r(1), frac(1, 2), frac(1, 6), frac(1, 24)]
        );
        assert_eq!(
            NamedSeries::Sin.coefficients::<Rational>(5),
            vec![r(0), r(1), r(0), frac(-1, 6), r(0), frac(1, 120)]
        );
        assert_eq!(
            NamedSeries::Cos.coefficients::<Rational>(4),
            vec![r(1), r(0), frac(-1, 2), r(0), frac(1, 24)]
        );
        assert_eq!(NamedSeries::Cosh.coefficients::<Rational>(2), vec![r(1), r(0), frac(1, 2)]);
        assert_eq!(NamedSeries::Sinh.coefficients::<Rational>(3), vec![r(0), r(1), r(0), frac(1, 6)]);
        assert_eq!(NamedSeries::Geometric.coefficients::<Rational>(2), vec![r(1); 3]);
        assert_eq!("EXP".parse::<NamedSeries>().unwrap(), NamedSeries::Exp);
    }

    #[test]
    fn apply_examples() {
        let exp4 = QSeries::truncated(NamedSeries::Exp, 4);
        assert_eq!(apply_series(&exp4, &QMatrix::zeros(2, 2).unwrap()).unwrap(), QMatrix::identity(2).unwrap());
        assert_eq!(
            apply_series(&exp4, &QMatrix::from_ints(&[[1]])).unwrap(),
            QMatrix::new(1, 1, vec![Rational::new(65.into(), 24.into())]).unwrap()
        );
        assert_eq!(
            apply_series(&square(), &reversing_matrix(3).unwrap()).unwrap(),
            QMatrix::identity(3).unwrap()
        );
        assert!(apply_series(&exp4, &QMatrix::from_ints(&[[1, 2]])).is_err());
    }

    #[test]
    fn conjugation_examples() {
        let a = QMatrix::from_ints(&[[1, 2], [3, 4]]);
        assert!(check_reversing_conjugation(&square(), &a).unwrap().all());
        let exp6 = QSeries::truncated(NamedSeries::Exp, 6);
        assert!(check_reversing_conjugation(&exp6, &QMatrix::identity(3).unwrap()).unwrap().all());
        assert!(check_reversing_conjugation(&exp6, &reversing_matrix(2).unwrap()).unwrap().all());
    }

    #[test]
    fn spectral_examples() {
        let d = QMatrix::from_ints(&[[2, 0], [0, 3]]);
        assert!(spectral_mapping_check(&d, &r(2), &square()).unwrap());
        let any: QSeries = QPolynomial::from_ints(&[3, -1, 2]).into();
        assert!(spectral_mapping_check(&QMatrix::identity(2).unwrap(), &r(1), &any).unwrap());
        let shift: QSeries = QPolynomial::from_ints(&[1, 1]).into();
        assert!(spectral_mapping_check(&reversing_matrix(2).unwrap(), &r(-1), &shift).unwrap());
        assert_eq!(spectral_mapping_check(&d, &r(5), &square()), Err(Error::NotEigenvalue));
    }
}
