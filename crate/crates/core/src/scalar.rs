//! Scalar traits the containers are generic over.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// An entry type for vectors and matrices.
///
/// Reversing, Pasting, products and fraction-free determinants only need a
/// commutative ring with exact equality; `BigInt`, `i64`, `f64` and the
/// rationals all qualify.
pub trait Scalar: Num + Neg<Output = Self> + FromPrimitive + Clone + PartialEq + Debug {
    /// Embeds an integer.
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integers embed in every scalar type")
    }
}

impl<T> Scalar for T where T: Num + Neg<Output = T> + FromPrimitive + Clone + PartialEq + Debug {}

/// A field of characteristic zero: division is exact (or, for floats, as
/// exact as the format allows) and `2` is invertible.
pub trait Field: Scalar {
    fn half() -> Self {
        Self::one() / (Self::one() + Self::one())
    }
}

impl Field for f32 {}
impl Field for f64 {}
impl<I> Field for Ratio<I>
where
    I: Integer + Clone + Debug,
    Ratio<I>: Scalar,
{
}

/// `(-1)^k`.
pub(crate) fn sign<T: Scalar>(k: usize) -> T {
    if k.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}
