//! JSON forms of rationals, vectors, matrices and polynomials.
//!
//! Rationals are strings (`"-3"`, `"1/2"`); bare JSON integers are also
//! accepted on input. Every parsed rational is in lowest terms.

use std::fmt;

use revpaste::{Axis, QMatrix, QPolynomial, QSeries, QVector, Rational, Series, SubspaceKind};
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at line {line}, column {column}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub reason: String,
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        let reason = e.to_string();
        // serde_json appends " at line L column C"; keep only the reason.
        let reason = match reason.rfind(" at line ") {
            Some(i) => reason[..i].to_string(),
            None => reason,
        };
        ParseError { line: e.line(), column: e.column(), reason }
    }
}

pub fn rational_to_string(x: &Rational) -> String {
    x.to_string()
}

/// `"p"` or `"p/q"` with optional sign and surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: revpaste::Integer = num.parse().map_err(|_| format!("invalid rational {s:?}"))?;
    let den: revpaste::Integer = den.parse().map_err(|_| format!("invalid rational {s:?}"))?;
    if den == 0.into() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Serde adapter for one rational entry.
#[derive(Clone, Debug, PartialEq)]
struct Entry(Rational);

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rational_to_string(&self.0))
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct EntryVisitor;

        impl Visitor<'_> for EntryVisitor {
            type Value = Entry;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational string such as \"-3\" or \"1/2\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Entry, E> {
                parse_rational(v).map(Entry).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Entry, E> {
                Ok(Entry(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Entry, E> {
                Ok(Entry(Rational::from_integer(v.into())))
            }
        }

        d.deserialize_any(EntryVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
struct MatrixJson {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Entry>>,
}

impl TryFrom<RawMatrix> for MatrixJson {
    type Error = String;

    fn try_from(raw: RawMatrix) -> Result<Self, String> {
        if raw.rows == 0 || raw.cols == 0 {
            return Err(format!("matrix must be at least 1x1, got {}x{}", raw.rows, raw.cols));
        }
        if raw.data.len() != raw.rows {
            return Err(format!("declared {} rows but data has {}", raw.rows, raw.data.len()));
        }
        if let Some((i, r)) = raw.data.iter().enumerate().find(|(_, r)| r.len() != raw.cols) {
            return Err(format!("declared {} columns but row {} has {}", raw.cols, i + 1, r.len()));
        }
        Ok(MatrixJson { rows: raw.rows, cols: raw.cols, data: raw.data })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorJson {
    data: Vec<Entry>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolynomialJson {
    coeffs: Vec<Entry>,
}

pub fn matrix_to_value(a: &QMatrix) -> Value {
    let data: Vec<Vec<String>> = (0..a.rows())
        .map(|i| a.row(i).iter().map(rational_to_string).collect())
        .collect();
    json!({ "rows": a.rows(), "cols": a.cols(), "data": data })
}

pub fn vector_to_value(v: &QVector) -> Value {
    json!({ "data": v.iter().map(rational_to_string).collect::<Vec<_>>() })
}

pub fn polynomial_to_value(p: &QPolynomial) -> Value {
    json!({ "coeffs": p.coeffs().iter().map(rational_to_string).collect::<Vec<_>>() })
}

pub fn parse_matrix(text: &str) -> Result<QMatrix, ParseError> {
    let m: MatrixJson = serde_json::from_str(text)?;
    let data = m.data.into_iter().flatten().map(|e| e.0).collect();
    Ok(QMatrix::new(m.rows, m.cols, data).expect("shape validated during parsing"))
}

pub fn parse_vector(text: &str) -> Result<QVector, ParseError> {
    let v: VectorJson = serde_json::from_str(text)?;
    QVector::new(v.data.into_iter().map(|e| e.0).collect())
        .map_err(|e| ParseError { line: 1, column: 1, reason: e.to_string() })
}

pub fn parse_polynomial(text: &str) -> Result<QPolynomial, ParseError> {
    let p: PolynomialJson = serde_json::from_str(text)?;
    Ok(QPolynomial::new(p.coeffs.into_iter().map(|e| e.0).collect()))
}

/// A parsed vector or matrix, told apart by the presence of `"rows"`.
#[derive(Clone, Debug, PartialEq)]
pub enum Operand {
    Vector(QVector),
    Matrix(QMatrix),
}

pub fn parse_operand(text: &str) -> Result<Operand, ParseError> {
    let probe: Value = serde_json::from_str(text)?;
    if probe.get("rows").is_some() {
        parse_matrix(text).map(Operand::Matrix)
    } else {
        parse_vector(text).map(Operand::Vector)
    }
}

/// Serialization of property inputs and intermediate values in reports.
pub trait Witness {
    fn witness(&self) -> Value;
}

impl Witness for QMatrix {
    fn witness(&self) -> Value {
        matrix_to_value(self)
    }
}

impl Witness for QVector {
    fn witness(&self) -> Value {
        vector_to_value(self)
    }
}

impl Witness for QPolynomial {
    fn witness(&self) -> Value {
        polynomial_to_value(self)
    }
}

impl Witness for Rational {
    fn witness(&self) -> Value {
        Value::String(rational_to_string(self))
    }
}

impl Witness for QSeries {
    fn witness(&self) -> Value {
        match self {
            Series::Polynomial(p) => json!({ "polynomial": polynomial_to_value(p) }),
            Series::Truncated { kind, order } => json!({ "series": kind.name(), "order": order }),
        }
    }
}

impl Witness for SubspaceKind {
    fn witness(&self) -> Value {
        Value::String(self.name().into())
    }
}

impl Witness for Axis {
    fn witness(&self) -> Value {
        Value::String(format!("{self:?}").to_lowercase())
    }
}

macro_rules! plain_witness {
    ($($t:ty),*) => {
        $(impl Witness for $t {
            fn witness(&self) -> Value {
                json!(self)
            }
        })*
    };
}

plain_witness!(usize, u64, i64, bool, String, str);

impl<T: Witness> Witness for Vec<T> {
    fn witness(&self) -> Value {
        Value::Array(self.iter().map(Witness::witness).collect())
    }
}

impl<T: Witness> Witness for [T] {
    fn witness(&self) -> Value {
        Value::Array(self.iter().map(Witness::witness).collect())
    }
}

impl<T: Witness> Witness for Option<T> {
    fn witness(&self) -> Value {
        self.as_ref().map_or(Value::Null, Witness::witness)
    }
}

impl<A: Witness, B: Witness> Witness for (A, B) {
    fn witness(&self) -> Value {
        Value::Array(vec![self.0.witness(), self.1.witness()])
    }
}

impl<T: Witness + ?Sized> Witness for &T {
    fn witness(&self) -> Value {
        (**self).witness()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn matrix_round_trip() {
        let a = QMatrix::new(2, 2, vec![q(1, 1), q(1, 2), q(-3, 1), q(4, 1)]).unwrap();
        let text = matrix_to_value(&a).to_string();
        assert_eq!(text, r#"{"rows":2,"cols":2,"data":[["1","1/2"],["-3","4"]]}"#);
        assert_eq!(parse_matrix(&text).unwrap(), a);
        let spaced = r#"{"rows":2,"cols":2,"data":[["1","1/2"],["-3","4"]]}"#;
        assert_eq!(parse_matrix(spaced).unwrap(), a);
    }

    #[test]
    fn canonical_form_and_errors() {
        assert_eq!(parse_rational("2/4").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-6/-4").unwrap(), q(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        let err = parse_matrix("{\"rows\":1,\"cols\":1,\n\"data\":[[\"1/0\"]]}").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.reason.contains("zero denominator"), "{err}");
    }

    #[test]
    fn shape_errors_are_parse_errors() {
        let err = parse_matrix(r#"{"rows":2,"cols":2,"data":[["1","2"]]}"#).unwrap_err();
        assert!(err.reason.contains("declared 2 rows"), "{err}");
        let err = parse_matrix(r#"{"rows":1,"cols":2,"data":[["1"]]}"#).unwrap_err();
        assert!(err.reason.contains("row 1 has 1"), "{err}");
        assert!(parse_matrix("{").is_err());
        assert!(parse_vector(r#"{"data":[]}"#).is_err());
    }

    #[test]
    fn vector_and_polynomial_round_trip() {
        let v = QVector::new(vec![q(1, 3), q(0, 1), q(-2, 1)]).unwrap();
        assert_eq!(parse_vector(&vector_to_value(&v).to_string()).unwrap(), v);
        let p = QPolynomial::new(vec![q(-2, 1), q(-5, 1), q(1, 1)]);
        assert_eq!(polynomial_to_value(&p), json!({"coeffs": ["-2", "-5", "1"]}));
        assert_eq!(parse_polynomial(&polynomial_to_value(&p).to_string()).unwrap(), p);
        assert_eq!(parse_vector(r#"{"data":[1,"2",-3]}"#).unwrap(), QVector::from_ints(&[1, 2, -3]));
    }

    #[test]
    fn operand_detection() {
        assert!(matches!(parse_operand(r#"{"data":["1"]}"#), Ok(Operand::Vector(_))));
        assert!(matches!(
            parse_operand(r#"{"rows":1,"cols":1,"data":[["1"]]}"#),
            Ok(Operand::Matrix(_))
        ));
    }
}
