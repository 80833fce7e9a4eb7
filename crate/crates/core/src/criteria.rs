//! Sign sequences of pinch moves, the sign-count lower-bound criterion for
//! `T(p,q)` with `p` even and `q` odd, and the assembled certificate that a
//! family member is a counterexample.
//!
//! For `p` even and `q` odd, `ν - σ/2` equals the pinch number minus one
//! exactly when one move in the pinch sequence has negative sign. Only that
//! verdict is computed here; `ν` and `σ` themselves never are.

use crate::arith::{cf_even_expand, EvenCF, ReducedFraction};
use crate::error::{Error, Result};
use crate::families::{family_knot, Family, FamilyId};
use crate::pinch::{pinch_sequence, Sign, TorusKnotParams};
use crate::scalar::{self, Scalar};
use crate::tangles::{is_slice_family, surgery_result_knot, two_bridge_determinant};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignSequence<T> {
    pub knot: TorusKnotParams<T>,
    pub signs: Vec<Sign>,
    pub negative_count: usize,
}

impl<T> SignSequence<T> {
    pub fn all(&self, sign: Sign) -> bool {
        self.signs.iter().all(|&s| s == sign)
    }
}

/// Signs of the pinch sequence of `k`, taken in the given orientation.
pub fn sign_sequence<T: Scalar>(k: &TorusKnotParams<T>) -> Result<SignSequence<T>> {
    let seq = pinch_sequence(k)?;
    let signs: Vec<Sign> = seq.steps.iter().map(|s| s.sign).collect();
    let negative_count = signs.iter().filter(|&&s| s == Sign::Negative).count();
    Ok(SignSequence {
        knot: k.clone(),
        signs,
        negative_count,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JvcVerdict {
    pub negative_count: usize,
    /// Whether `ν - σ/2` equals the pinch number minus one.
    pub equals_pinch_minus_one: bool,
}

/// Requires `p, q > 1` with `p` even and `q` odd. The coordinates are never
/// swapped to meet this, since swapping flips every sign.
pub fn jvc_criterion<T: Scalar>(k: &TorusKnotParams<T>) -> Result<JvcVerdict> {
    let not_applicable = |reason| Error::CriterionNotApplicable {
        p: k.p().to_string(),
        q: k.q().to_string(),
        reason,
    };
    if *k.p() <= T::one() || *k.q() <= T::one() {
        return Err(not_applicable("both parameters must exceed 1"));
    }
    if !k.p().is_even() || !k.q().is_odd() {
        return Err(not_applicable("p must be even and q odd"));
    }
    let signs = sign_sequence(k)?;
    Ok(JvcVerdict {
        negative_count: signs.negative_count,
        equals_pinch_minus_one: signs.negative_count == 1,
    })
}

/// Everything certifying that a family member is a counterexample: pinch
/// number `2n`, a set of `2n-1` bands ending on a slice 2-bridge knot, and
/// the sign-count verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport<T> {
    pub id: FamilyId,
    pub knot: TorusKnotParams<T>,
    pub pinch_number: usize,
    /// Upper bound on the nonorientable 4-ball genus.
    pub band_count: usize,
    pub slice_fraction: ReducedFraction<T>,
    pub slice_cf: EvenCF<T>,
    pub slice_recognized: bool,
    pub determinant: T,
    pub jvc_negative_count: usize,
    pub jvc_equals_pinch_minus_one: bool,
}

/// Assembles the report and checks each component against the closed forms:
/// pinch number `2n`, fraction `2n/(-4n(n±1)-1)`, expansion
/// `[-(2n±2), -2n]`, determinant `(2n±1)²`. Any mismatch is a
/// [`Error::TheoremViolation`].
pub fn counterexample_report<T: Scalar>(id: FamilyId) -> Result<CounterexampleReport<T>> {
    let id = FamilyId::nontrivial(id.family, id.n)?;
    let violation = |detail: String| Error::TheoremViolation {
        id: id.to_string(),
        detail,
    };
    let n: T = scalar::from_u64(id.n)?;
    let two_n = scalar::double(&n)?;

    let knot = family_knot::<T>(id)?;
    let pinch_number = pinch_sequence(&knot)?.pinch_number();
    let expected_pinch = usize::try_from(id.n)
        .ok()
        .and_then(|n| n.checked_mul(2))
        .ok_or(Error::Overflow("pinch number"))?;
    if pinch_number != expected_pinch {
        return Err(violation(format!(
            "pinch number {pinch_number}, expected {expected_pinch}"
        )));
    }
    let band_count = expected_pinch - 1;

    let surgery = surgery_result_knot::<T>(id)?;
    let slice_fraction = surgery.normalized.clone();

    // 2n / (-4n(n±1) - 1)
    let twists: T = scalar::from_u64(id.twists())?;
    let four_n_m = scalar::mul(&scalar::double(&two_n)?, &twists)?;
    let expected_den = scalar::sub(&scalar::neg(&four_n_m)?, &T::one())?;
    let expected_fraction = ReducedFraction::new(two_n.clone(), expected_den)?;
    if slice_fraction != expected_fraction {
        return Err(violation(format!(
            "slice fraction {slice_fraction}, expected {expected_fraction}"
        )));
    }

    let slice_cf = cf_even_expand(&slice_fraction)
        .map_err(|e| violation(format!("no even expansion of {slice_fraction}: {e}")))?;
    let lead = match id.family {
        Family::K => scalar::add(&two_n, &scalar::two())?,
        Family::J => scalar::sub(&two_n, &scalar::two())?,
    };
    let expected_cf = EvenCF::new(vec![scalar::neg(&lead)?, scalar::neg(&two_n)?])?;
    if slice_cf != expected_cf {
        return Err(violation(format!(
            "expansion {slice_cf}, expected {expected_cf}"
        )));
    }

    let slice_recognized = is_slice_family(&slice_cf);
    if !slice_recognized {
        return Err(violation(format!(
            "{slice_cf} is not in the [k+2,k] slice family"
        )));
    }

    let determinant = two_bridge_determinant(&surgery)?;
    let root = match id.family {
        Family::K => scalar::add(&two_n, &T::one())?,
        Family::J => scalar::sub(&two_n, &T::one())?,
    };
    if determinant != scalar::mul(&root, &root)? {
        return Err(violation(format!(
            "determinant {determinant}, expected {root}^2"
        )));
    }

    let jvc = jvc_criterion(&knot)?;

    Ok(CounterexampleReport {
        id,
        knot,
        pinch_number,
        band_count,
        slice_fraction,
        slice_cf,
        slice_recognized,
        determinant,
        jvc_negative_count: jvc.negative_count,
        jvc_equals_pinch_minus_one: jvc.equals_pinch_minus_one,
    })
}
