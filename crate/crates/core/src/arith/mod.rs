//! Exact integer and rational primitives.

mod cf;
mod fraction;

pub use cf::{cf_evaluate, cf_even_expand, EvenCF};
pub use fraction::ReducedFraction;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(|a|, |b|) > 0` and
/// `a*x + b*y = g`.
pub fn ext_gcd<T: Scalar>(a: &T, b: &T) -> Result<(T, T, T)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::UndefinedGcd);
    }
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_x, mut x) = (T::one(), T::zero());
    let (mut old_y, mut y) = (T::zero(), T::one());

    while !r.is_zero() {
        // truncated division keeps every remainder and cofactor bounded by
        // the inputs, so none of these can overflow when a and b fit
        let quo = old_r.clone() / r.clone();
        let next_r = scalar::sub(&old_r, &scalar::mul(&quo, &r)?)?;
        let next_x = scalar::sub(&old_x, &scalar::mul(&quo, &x)?)?;
        let next_y = scalar::sub(&old_y, &scalar::mul(&quo, &y)?)?;
        old_r = std::mem::replace(&mut r, next_r);
        old_x = std::mem::replace(&mut x, next_x);
        old_y = std::mem::replace(&mut y, next_y);
    }

    if old_r.is_negative() {
        Ok((
            scalar::neg(&old_r)?,
            scalar::neg(&old_x)?,
            scalar::neg(&old_y)?,
        ))
    } else {
        Ok((old_r, old_x, old_y))
    }
}

/// The unique `u` with `0 <= u < m` and `a*u ≡ 1 (mod m)`. For `m = 1`
/// every residue is zero, so the answer is `0`.
pub fn mod_inverse_smallest<T: Scalar>(a: &T, m: &T) -> Result<T> {
    if *m < T::one() {
        return Err(Error::InvalidModulus(m.to_string()));
    }
    if m.is_one() {
        return Ok(T::zero());
    }
    let reduced = a.mod_floor(m);
    let (g, x, _) = ext_gcd(&reduced, m)?;
    if !g.is_one() {
        return Err(Error::NotInvertible {
            value: a.to_string(),
            modulus: m.to_string(),
        });
    }
    Ok(x.mod_floor(m))
}
