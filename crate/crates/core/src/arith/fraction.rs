use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// A slope in ℚ ∪ {1/0} in lowest terms.
///
/// The denominator is never negative; the sign rides on the numerator, and
/// `1/0` is the single representative of infinity. Two fractions are equal
/// exactly when their fields are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedFraction<T> {
    num: T,
    den: T,
}

impl<T: Scalar> ReducedFraction<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::ZeroOverZero);
            }
            return Ok(Self::infinity());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = scalar::neg(&num)?;
            den = scalar::neg(&den)?;
        }
        Ok(Self { num, den })
    }

    pub fn infinity() -> Self {
        Self {
            num: T::one(),
            den: T::zero(),
        }
    }

    pub fn integer(value: T) -> Self {
        Self {
            num: value,
            den: T::one(),
        }
    }

    pub fn num(&self) -> &T {
        &self.num
    }

    pub fn den(&self) -> &T {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `(num, den)` as an owned column vector.
    pub fn to_vector(&self) -> (T, T) {
        (self.num.clone(), self.den.clone())
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl<T: Scalar> fmt::Display for ReducedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
