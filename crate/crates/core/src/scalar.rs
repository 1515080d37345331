//! Coefficient field abstraction shared by the series and Padé code.
//!
//! Construction is meant to run over [`crate::Rational`]; the float impls
//! exist so the same algorithms can be exercised in f64/f32 and compared.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive
{
    /// Nearest integer, halves rounded away from zero.
    fn round_nearest(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every scalar type represents small integers")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn to_float<F: num_traits::Float>(&self) -> F {
        F::from(self.to_f64().unwrap_or(f64::NAN)).unwrap_or_else(F::nan)
    }
}

impl Scalar for f64 {
    fn round_nearest(&self) -> Self {
        self.round()
    }
}

impl Scalar for f32 {
    fn round_nearest(&self) -> Self {
        self.round()
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Debug + Display + FromPrimitive + ToPrimitive + num_bigint::ToBigInt,
    Ratio<T>: FromPrimitive + ToPrimitive,
{
    fn round_nearest(&self) -> Self {
        self.round()
    }
}

/// Lowest common multiple of the denominators, or 1 for an empty slice.
pub(crate) fn lcm_of_denominators(values: &[Ratio<BigInt>]) -> BigInt {
    values
        .iter()
        .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()))
}
