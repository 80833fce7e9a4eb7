//! The integer scalar every routine in this crate is generic over.
//!
//! Any signed integer type with checked arithmetic qualifies: `i64` and
//! `i128` for speed, [`num_bigint::BigInt`] when nothing may overflow.
//! Every arithmetic step goes through the checked helpers below, so a
//! fixed-width scalar reports [`Error::Overflow`] instead of wrapping.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed, ToPrimitive};

use crate::error::{Error, Result};

pub trait Scalar:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

#[inline]
pub(crate) fn add<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_add(b).ok_or(Error::Overflow("addition"))
}

#[inline]
pub(crate) fn sub<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_sub(b).ok_or(Error::Overflow("subtraction"))
}

#[inline]
pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> Result<T> {
    a.checked_mul(b).ok_or(Error::Overflow("multiplication"))
}

#[inline]
pub(crate) fn neg<T: Scalar>(a: &T) -> Result<T> {
    T::zero().checked_sub(a).ok_or(Error::Overflow("negation"))
}

#[inline]
pub(crate) fn abs<T: Scalar>(a: &T) -> Result<T> {
    if a.is_negative() {
        neg(a)
    } else {
        Ok(a.clone())
    }
}

pub(crate) fn from_u64<T: Scalar>(v: u64) -> Result<T> {
    T::from_u64(v).ok_or(Error::Overflow("conversion from u64"))
}

pub(crate) fn two<T: Scalar>() -> T {
    T::one() + T::one()
}

/// `2 * a`, checked.
#[inline]
pub(crate) fn double<T: Scalar>(a: &T) -> Result<T> {
    add(a, a)
}
