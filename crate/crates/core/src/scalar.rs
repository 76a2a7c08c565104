//! Scalar and coefficient-ring abstractions.
//!
//! The exact layers run over [`Rat`](crate::Rat); the same polynomial and
//! series code also accepts `f64`/`f32`, which is handy for quick numeric
//! evaluation of generating functions.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

/// A field of scalars: rationals or floating point.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + PartialOrd + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_bigint(n: &BigInt) -> Self;
}

impl Scalar for BigRational {
    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_bigint(n: &BigInt) -> Self {
                num_traits::ToPrimitive::to_f64(n).map(|v| v as $t).unwrap_or(<$t>::NAN)
            }
        }
    )*};
}
float_scalar!(f32, f64);

/// Commutative ring usable as a power-series coefficient.
///
/// Every coefficient ring is an algebra over its [`Scalar`] field, so series
/// code can divide by integers (`1/m`, `1/(n+1)!`) without knowing what the
/// coefficients are.
pub trait CoeffRing:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    type Scalar: Scalar;

    fn from_scalar(s: Self::Scalar) -> Self;
    fn scale(&self, s: &Self::Scalar) -> Self;
    /// Multiplicative inverse when `self` is a nonzero scalar constant.
    fn constant_inverse(&self) -> Option<Self>;
    /// The value of `self` if it is a scalar constant.
    fn as_constant(&self) -> Option<Self::Scalar>;
    /// Whether `self` is homogeneous of weight `w` in the ring's grading.
    /// Ungraded rings accept every weight.
    fn is_homogeneous(&self, _w: i64) -> bool {
        true
    }
}

macro_rules! scalar_coeff {
    ($($t:ty),*) => {$(
        impl CoeffRing for $t {
            type Scalar = $t;
            fn from_scalar(s: $t) -> Self { s }
            fn scale(&self, s: &$t) -> Self { self.clone() * s.clone() }
            fn constant_inverse(&self) -> Option<Self> {
                if self.is_zero() { None } else { Some(<$t>::one() / self.clone()) }
            }
            fn as_constant(&self) -> Option<$t> { Some(self.clone()) }
        }
    )*};
}
scalar_coeff!(BigRational, f32, f64);

/// `k` as a scalar.
pub fn scalar_from_i64<K: Scalar>(k: i64) -> K {
    K::from_i64(k).expect("small integers embed in every scalar field")
}
