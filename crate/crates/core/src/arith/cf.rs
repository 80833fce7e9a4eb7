//! All-even continued fractions in the reciprocal-first convention
//!
//! `[a1, a2, ..., ak]` denotes `1/(a1 + 1/(a2 + ... + 1/ak))`, so the
//! expansion describes a fraction strictly between -1 and 1. With this
//! convention `2n/(-4n(n+1)-1)` reads `[-(2n+2), -2n]`.

use std::fmt;

use super::ReducedFraction;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EvenCF<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> EvenCF<T> {
    /// Fails on an empty list or on any entry that is zero or odd.
    pub fn new(coeffs: Vec<T>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyCf);
        }
        if let Some(bad) = coeffs.iter().find(|a| a.is_zero() || a.is_odd()) {
            return Err(Error::InvalidCfEntry(bad.to_string()));
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { coeffs }
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }
}

impl<T: Scalar> fmt::Display for EvenCF<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// Expands `f` (with `0 < |f| < 1`) into its all-even continued fraction.
///
/// Each entry is the even integer nearest the running reciprocal. When the
/// reciprocal is an odd integer both even neighbours sit at distance one and
/// the expansion does not exist; that case is an error, not a guess.
pub fn cf_even_expand<T: Scalar>(f: &ReducedFraction<T>) -> Result<EvenCF<T>> {
    let (num, den) = f.to_vector();
    if f.is_infinite() || num.is_zero() || scalar::abs(&num)? >= den {
        return Err(Error::CfDomain(f.to_string()));
    }

    // running reciprocal r = top/bottom with bottom > 0
    let (mut top, mut bottom) = if num.is_negative() {
        (scalar::neg(&den)?, scalar::neg(&num)?)
    } else {
        (den, num)
    };
    let two = scalar::two::<T>();
    let mut coeffs = Vec::new();

    loop {
        // nearest even integer: 2 * floor((top + bottom) / (2 * bottom))
        let half_up = scalar::add(&top, &bottom)?.div_floor(&scalar::double(&bottom)?);
        let a = scalar::mul(&two, &half_up)?;
        let residual = scalar::sub(&top, &scalar::mul(&a, &bottom)?)?;
        if scalar::abs(&residual)? >= bottom {
            return Err(Error::NoEvenExpansion(f.to_string()));
        }
        coeffs.push(a);
        if residual.is_zero() {
            break;
        }
        // next reciprocal is bottom / residual
        if residual.is_negative() {
            top = scalar::neg(&bottom)?;
            bottom = scalar::neg(&residual)?;
        } else {
            top = bottom;
            bottom = residual;
        }
    }

    Ok(EvenCF { coeffs })
}

/// Exact value of `cf` in the reciprocal-first convention.
pub fn cf_evaluate<T: Scalar>(cf: &EvenCF<T>) -> Result<ReducedFraction<T>> {
    let degenerate = || Error::DegenerateCf(cf.to_string());
    let mut rev = cf.coeffs.iter().rev();
    let last = rev.next().ok_or(Error::EmptyCf)?;

    // tail value as num/den
    let (mut num, mut den) = (last.clone(), T::one());
    for a in rev {
        if num.is_zero() {
            return Err(degenerate());
        }
        // a + den/num = (a*num + den)/num
        let next = scalar::add(&scalar::mul(a, &num)?, &den)?;
        den = std::mem::replace(&mut num, next);
    }
    if num.is_zero() {
        return Err(degenerate());
    }
    ReducedFraction::new(den, num)
}
