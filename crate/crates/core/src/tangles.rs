//! Rational tangles, the SL(2,Z) action on their slopes, and 2-bridge knots
//! written as a union of two rational tangles.
//!
//! A 2-bridge knot `τ(p1/q1) ∪ τ(p2/q2)` is normalized by a matrix sending
//! the first slope to `1/0`; the image of the second slope then names the
//! knot as a denominator closure. Matrices that fix `1/0` are the upper
//! unitriangular ones, which shift the numerator by multiples of the
//! denominator, so the stored fraction is reduced to the least absolute
//! residue with ties going negative.

use std::fmt;

use crate::arith::{ext_gcd, mod_inverse_smallest, EvenCF, ReducedFraction};
use crate::error::{Error, Result};
use crate::families::FamilyId;
use crate::scalar::{self, Scalar};

/// `[[a, b], [c, d]]` with `ad - bc = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatSL2<T> {
    a: T,
    b: T,
    c: T,
    d: T,
}

impl<T: Scalar> MatSL2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Result<Self> {
        let det = scalar::sub(&scalar::mul(&a, &d)?, &scalar::mul(&b, &c)?)?;
        if !det.is_one() {
            return Err(Error::NotSl2 {
                a: a.to_string(),
                b: b.to_string(),
                c: c.to_string(),
                d: d.to_string(),
            });
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self::upper(T::zero())
    }

    /// `[[1, k], [0, 1]]`
    pub fn upper(k: T) -> Self {
        Self {
            a: T::one(),
            b: k,
            c: T::zero(),
            d: T::one(),
        }
    }

    /// `[[1, 0], [k, 1]]`
    pub fn lower(k: T) -> Self {
        Self {
            a: T::one(),
            b: T::zero(),
            c: k,
            d: T::one(),
        }
    }

    pub fn entries(&self) -> [&T; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    /// Matrix product `self * rhs`; acting by it means acting by `rhs` first.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        let dot =
            |x: &T, y: &T, z: &T, w: &T| scalar::add(&scalar::mul(x, y)?, &scalar::mul(z, w)?);
        Ok(Self {
            a: dot(&self.a, &rhs.a, &self.b, &rhs.c)?,
            b: dot(&self.a, &rhs.b, &self.b, &rhs.d)?,
            c: dot(&self.c, &rhs.a, &self.d, &rhs.c)?,
            d: dot(&self.c, &rhs.b, &self.d, &rhs.d)?,
        })
    }

    /// `M · (num, den)ᵀ` before any sign normalization.
    pub fn apply_vector(&self, num: &T, den: &T) -> Result<(T, T)> {
        Ok((
            scalar::add(&scalar::mul(&self.a, num)?, &scalar::mul(&self.b, den)?)?,
            scalar::add(&scalar::mul(&self.c, num)?, &scalar::mul(&self.d, den)?)?,
        ))
    }

    pub fn apply(&self, f: &ReducedFraction<T>) -> Result<ReducedFraction<T>> {
        mat_apply(self, f)
    }
}

impl<T: Scalar> fmt::Display for MatSL2<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// The slope of the image tangle. Unimodularity keeps the pair coprime, so
/// only the sign needs normalizing.
pub fn mat_apply<T: Scalar>(m: &MatSL2<T>, f: &ReducedFraction<T>) -> Result<ReducedFraction<T>> {
    let (r, s) = m.apply_vector(f.num(), f.den())?;
    ReducedFraction::new(r, s)
}

/// `τ(t1) ∪ τ(t2)` together with its normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoBridgeKnot<T> {
    pub t1: ReducedFraction<T>,
    pub t2: ReducedFraction<T>,
    /// Sends `t1` to `1/0` and `t2` to `normalized`.
    pub matrix: MatSL2<T>,
    pub normalized: ReducedFraction<T>,
}

impl<T: Scalar> TwoBridgeKnot<T> {
    pub fn determinant(&self) -> Result<T> {
        two_bridge_determinant(self)
    }

    /// Schubert's criterion: same determinant `a` and numerators `b`, `b'`
    /// with `b' ≡ b^{±1} (mod a)`.
    pub fn is_equivalent(&self, other: &Self) -> Result<bool> {
        let a = self.determinant()?;
        if a != other.determinant()? {
            return Ok(false);
        }
        if a <= T::one() {
            return Ok(true);
        }
        let b = self.normalized.num().mod_floor(&a);
        let b2 = other.normalized.num().mod_floor(&a);
        if b == b2 {
            return Ok(true);
        }
        Ok(mod_inverse_smallest(&b, &a)? == b2)
    }
}

pub fn two_bridge_normalize<T: Scalar>(
    t1: &ReducedFraction<T>,
    t2: &ReducedFraction<T>,
) -> Result<TwoBridgeKnot<T>> {
    if t1 == t2 {
        return Err(Error::DegenerateTangle(t1.to_string()));
    }
    let (p1, q1) = t1.to_vector();
    let (_, x, y) = ext_gcd(&p1, &q1)?;
    // [[x, y], [-q1, p1]] · (p1, q1) = (1, 0) with determinant x*p1 + y*q1 = 1
    let to_infinity = MatSL2::new(x, y, scalar::neg(&q1)?, p1)?;

    let image = mat_apply(&to_infinity, t2)?;
    let den = image.den().clone();
    debug_assert!(!den.is_zero());

    // least absolute residue in [-den/2, den/2)
    let mut residue = image.num().mod_floor(&den);
    if scalar::double(&residue)? >= den {
        residue = scalar::sub(&residue, &den)?;
    }
    let shift = (scalar::sub(&residue, image.num())?) / den.clone();
    let matrix = MatSL2::upper(shift).compose(&to_infinity)?;
    let normalized = ReducedFraction::new(residue, den)?;
    debug_assert_eq!(mat_apply(&matrix, t2)?, normalized);

    Ok(TwoBridgeKnot {
        t1: t1.clone(),
        t2: t2.clone(),
        matrix,
        normalized,
    })
}

/// The 2-bridge knot left after band surgery on a family member: the union
/// of the twist tangle `1/(2m+1)` and the tangle `2n/(2n-1)`, with
/// `m = n+1` for K and `m = n-1` for J.
pub fn surgery_result_knot<T: Scalar>(id: FamilyId) -> Result<TwoBridgeKnot<T>> {
    let id = FamilyId::nontrivial(id.family, id.n)?;
    let m: T = scalar::from_u64(id.twists())?;
    let n: T = scalar::from_u64(id.n)?;
    let twist = scalar::add(&scalar::double(&m)?, &T::one())?;
    let two_n = scalar::double(&n)?;
    let t1 = ReducedFraction::new(T::one(), twist)?;
    let t2 = ReducedFraction::new(two_n.clone(), scalar::sub(&two_n, &T::one())?)?;
    two_bridge_normalize(&t1, &t2)
}

/// Recognizes the slice family `[k+2, k]`: exactly two entries of one sign
/// whose absolute values are `k` and `k+2` with `k >= 2`, in either order
/// and up to mirroring.
pub fn is_slice_family<T: Scalar>(cf: &EvenCF<T>) -> bool {
    let [x, y] = cf.coeffs() else {
        return false;
    };
    if x.is_negative() != y.is_negative() {
        return false;
    }
    let (Ok(ax), Ok(ay)) = (scalar::abs(x), scalar::abs(y)) else {
        return false;
    };
    let (small, large) = if ax <= ay { (ax, ay) } else { (ay, ax) };
    let two = scalar::two::<T>();
    small >= two && small.is_even() && large.checked_sub(&small) == Some(two)
}

/// `|den|` of the normal form, the order of the first homology of the
/// double branched cover.
pub fn two_bridge_determinant<T: Scalar>(k: &TwoBridgeKnot<T>) -> Result<T> {
    if k.normalized.is_infinite() {
        return Err(Error::DegenerateTangle(k.t1.to_string()));
    }
    scalar::abs(k.normalized.den())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::cf_even_expand;
    use crate::families::Family;

    fn frac(n: i64, d: i64) -> ReducedFraction<i64> {
        ReducedFraction::new(n, d).unwrap()
    }

    fn surgery(family: Family, n: u64) -> TwoBridgeKnot<i64> {
        surgery_result_knot(FamilyId::new(family, n).unwrap()).unwrap()
    }

    #[test]
    fn matrix_action_examples() {
        let m = MatSL2::lower(-7i64);
        assert_eq!(
            mat_apply(&m, &frac(1, 7)).unwrap(),
            ReducedFraction::infinity()
        );
        assert_eq!(mat_apply(&m, &frac(4, 3)).unwrap(), frac(4, -25));
        assert_eq!(m.apply_vector(&4, &3).unwrap(), (4, -25));
        let f = frac(-13, 8);
        assert_eq!(mat_apply(&MatSL2::identity(), &f).unwrap(), f);
    }

    #[test]
    fn determinant_enforced() {
        assert!(MatSL2::new(2i64, 1, 1, 1).is_ok());
        assert!(matches!(
            MatSL2::new(2i64, 0, 0, 1),
            Err(Error::NotSl2 { .. })
        ));
        assert!(matches!(
            MatSL2::new(0i64, 1, 1, 0),
            Err(Error::NotSl2 { .. })
        ));
    }

    #[test]
    fn normalize_examples() {
        let k = two_bridge_normalize(&frac(1, 5), &frac(2, 1)).unwrap();
        assert_eq!(k.normalized, frac(2, -9));
        assert_eq!(k.matrix, MatSL2::lower(-5));

        let k = two_bridge_normalize(&frac(1, 7), &frac(4, 3)).unwrap();
        assert_eq!(k.normalized, frac(4, -25));

        let k = two_bridge_normalize(&ReducedFraction::infinity(), &frac(3, 7)).unwrap();
        assert_eq!(k.normalized, frac(3, 7));
        let k = two_bridge_normalize(&ReducedFraction::infinity(), &frac(5, 7)).unwrap();
        assert_eq!(k.normalized, frac(-2, 7));
    }

    #[test]
    fn normalize_ties_go_negative() {
        let k = two_bridge_normalize(&ReducedFraction::infinity(), &frac(1, 2)).unwrap();
        assert_eq!(k.normalized, frac(-1, 2));
    }

    #[test]
    fn normalizing_matrix_fixes_both_slopes() {
        for (a, b, c, d) in [(3, 7, 5, 11), (-2, 9, 4, 1), (1, 0, 6, 13), (8, 3, -5, 2)] {
            let (t1, t2) = (frac(a, b), frac(c, d));
            let k = two_bridge_normalize(&t1, &t2).unwrap();
            assert_eq!(
                mat_apply(&k.matrix, &t1).unwrap(),
                ReducedFraction::infinity()
            );
            assert_eq!(mat_apply(&k.matrix, &t2).unwrap(), k.normalized);
        }
    }

    #[test]
    fn equal_tangles_are_degenerate() {
        assert!(matches!(
            two_bridge_normalize(&frac(2, 3), &frac(-2, -3)),
            Err(Error::DegenerateTangle(_))
        ));
    }

    #[test]
    fn surgery_knots() {
        let k1 = surgery(Family::K, 1);
        assert_eq!(k1.normalized, frac(2, -9));
        assert_eq!(cf_even_expand(&k1.normalized).unwrap().coeffs(), &[-4, -2]);
        assert_eq!(two_bridge_determinant(&k1), Ok(9));

        let k2 = surgery(Family::K, 2);
        assert_eq!(k2.normalized, frac(4, -25));
        assert_eq!(cf_even_expand(&k2.normalized).unwrap().coeffs(), &[-6, -4]);
        assert_eq!(two_bridge_determinant(&k2), Ok(25));

        let j2 = surgery(Family::J, 2);
        assert_eq!(j2.normalized, frac(4, -9));
        assert_eq!(cf_even_expand(&j2.normalized).unwrap().coeffs(), &[-2, -4]);
        assert_eq!(two_bridge_determinant(&j2), Ok(9));

        assert!(surgery_result_knot::<i64>(FamilyId::new(Family::J, 1).unwrap()).is_err());
    }

    #[test]
    fn slice_family_recognition() {
        let cf = |v: &[i64]| EvenCF::new(v.to_vec()).unwrap();
        assert!(is_slice_family(&cf(&[-4, -2])));
        assert!(is_slice_family(&cf(&[-6, -4])));
        assert!(is_slice_family(&cf(&[4, 6])));
        assert!(is_slice_family(&cf(&[-2, -4])));
        assert!(!is_slice_family(&cf(&[-4, -4])));
        assert!(!is_slice_family(&cf(&[4, -6])));
        assert!(!is_slice_family(&cf(&[2, 6])));
        assert!(!is_slice_family(&cf(&[-4])));
        assert!(!is_slice_family(&cf(&[2, 4, 6])));
    }

    #[test]
    fn schubert_equivalence() {
        let knot = |n, d| two_bridge_normalize(&ReducedFraction::infinity(), &frac(n, d)).unwrap();
        // 3*5 = 15 ≡ 1 mod 7
        assert!(knot(3, 7).is_equivalent(&knot(5, 7)).unwrap());
        assert!(knot(2, 9).is_equivalent(&knot(-7, 9)).unwrap());
        assert!(!knot(2, 9).is_equivalent(&knot(4, 9)).unwrap());
        assert!(!knot(2, 9).is_equivalent(&knot(2, 11)).unwrap());
        // surgery result for K_1 is 2/9 up to sign, Stevedore's knot
        let k1 = surgery(Family::K, 1);
        assert!(k1.is_equivalent(&knot(-2, 9)).unwrap());
    }
}
