//! The counterexample families `K_n = T(4n, (2n+1)²)` and
//! `J_n = T(4n, (2n-1)²)`, their closed-form pinch sequences, and
//! enumeration checks for the relations between them.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::pinch::{pinch_iterate, pinch_sequence, TorusKnotParams};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `T(4n, (2n+1)²)`, nontrivial for `n >= 1`.
    K,
    /// `T(4n, (2n-1)²)`, nontrivial for `n >= 2`.
    J,
}

impl Family {
    /// `+1` for K, `-1` for J.
    pub fn eps(self) -> i64 {
        match self {
            Family::K => 1,
            Family::J => -1,
        }
    }

    pub fn min_nontrivial_n(self) -> u64 {
        match self {
            Family::K => 1,
            Family::J => 2,
        }
    }

    pub fn letter(self) -> &'static str {
        match self {
            Family::K => "K",
            Family::J => "J",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.letter())
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "K" | "k" => Ok(Family::K),
            "J" | "j" => Ok(Family::J),
            other => Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyId {
    pub family: Family,
    pub n: u64,
}

impl FamilyId {
    /// Any `n >= 1`. `J_1 = T(4,1)` is accepted but unknotted; see
    /// [`FamilyId::is_trivial`].
    pub fn new(family: Family, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFamily(format!(
                "{family}_0: n must be positive"
            )));
        }
        Ok(Self { family, n })
    }

    /// Like [`FamilyId::new`] but also rejects the unknotted `J_1`.
    pub fn nontrivial(family: Family, n: u64) -> Result<Self> {
        let id = Self::new(family, n)?;
        if id.is_trivial() {
            return Err(Error::InvalidFamily(format!("{id} = T(4,1) is unknotted")));
        }
        Ok(id)
    }

    pub fn is_trivial(&self) -> bool {
        self.n < self.family.min_nontrivial_n()
    }

    /// `m = n ± 1`, the number of full twists in the braid.
    pub fn twists(&self) -> u64 {
        match self.family {
            Family::K => self.n + 1,
            Family::J => self.n - 1,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.n)
    }
}

/// `(4n, (2n±1)²)` in (even, odd) order.
pub fn family_knot<T: Scalar>(id: FamilyId) -> Result<TorusKnotParams<T>> {
    let n: T = scalar::from_u64(id.n)?;
    let four_n = scalar::mul(&scalar::from_u64(4)?, &n)?;
    let root = odd_root(id.family, &n)?;
    TorusKnotParams::new(four_n, scalar::mul(&root, &root)?)
}

/// `K_0 := T(0,1)` so the J-to-K relation is uniform down to `n = 2`.
pub fn k_member<T: Scalar>(n: u64) -> Result<TorusKnotParams<T>> {
    if n == 0 {
        Ok(TorusKnotParams::unknot())
    } else {
        family_knot(FamilyId::new(Family::K, n)?)
    }
}

fn odd_root<T: Scalar>(family: Family, n: &T) -> Result<T> {
    let two_n = scalar::double(n)?;
    match family {
        Family::K => scalar::add(&two_n, &T::one()),
        Family::J => scalar::sub(&two_n, &T::one()),
    }
}

/// The knot after `k` pinch moves on the family member, in (odd, even)
/// order: `((2n±1)² - 2k(n±1), 4n - 2k)`. At `k = 2n` this is `(1, 0)`.
pub fn closed_form_step<T: Scalar>(family: Family, n: u64, k: u64) -> Result<TorusKnotParams<T>> {
    let id = FamilyId::new(family, n)?;
    let max = n.checked_mul(2).ok_or(Error::Overflow("multiplication"))?;
    if k > max {
        return Err(Error::StepOutOfRange { k, max });
    }
    let n_t: T = scalar::from_u64(n)?;
    let k_t: T = scalar::from_u64(k)?;
    let twists: T = scalar::from_u64(id.twists())?;
    let root = odd_root(family, &n_t)?;

    let odd = scalar::sub(
        &scalar::mul(&root, &root)?,
        &scalar::mul(&scalar::double(&k_t)?, &twists)?,
    )?;
    let even = scalar::sub(
        &scalar::mul(&scalar::from_u64(4)?, &n_t)?,
        &scalar::double(&k_t)?,
    )?;
    TorusKnotParams::new(odd, even)
}

/// Whether four pinch moves take `J_n` to `K_{n-2}`.
pub fn verify_corollary_j_to_k<T: Scalar>(n: u64) -> Result<bool> {
    let j = family_knot::<T>(FamilyId::nontrivial(Family::J, n)?)?;
    let steps = pinch_iterate(&j, 4)?;
    if steps.len() != 4 {
        return Ok(false);
    }
    let landed = &steps[3].to;
    Ok(landed.same_knot(&k_member(n - 2)?))
}

/// Every `(m, n)` with `n != m` such that `K_n` shows up in the pinch
/// sequence of `K_m`, over `1 <= m, n <= max_n`. Empty means no member of
/// the family is reachable from another.
pub fn verify_k_independence<T: Scalar>(max_n: u64) -> Result<Vec<(u64, u64)>> {
    let mut members = HashMap::new();
    for n in 1..=max_n {
        members.insert(k_member::<T>(n)?.canonical(), n);
    }
    let mut violations = Vec::new();
    for m in 1..=max_n {
        let seq = pinch_sequence(&k_member::<T>(m)?)?;
        for knot in seq.knots() {
            if let Some(&n) = members.get(&knot.canonical()) {
                if n != m {
                    violations.push((m, n));
                }
            }
        }
    }
    Ok(violations)
}
