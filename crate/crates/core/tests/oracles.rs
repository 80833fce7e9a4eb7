//! Independent checks of the pinch engine: a linear-scan witness search and
//! exhaustive sweeps over small parameters.

use num_bigint::BigInt;
use num_integer::Integer;
use torus_pinch::{
    counterexample_report, family_knot, pinch_move, pinch_number, Error, Family, FamilyId, Sign,
    TorusKnotParams,
};

/// Smallest `t >= 0` with `t*q + 1 ≡ 0 (mod p)` and `h >= 0` with
/// `h*p - 1 ≡ 0 (mod q)`, by scanning.
fn scan_witnesses(p: i64, q: i64) -> (i64, i64) {
    let t = (0..p).find(|t| (t * q + 1) % p == 0).unwrap();
    let h = (0..q).find(|h| (h * p - 1).mod_floor(&q) == 0).unwrap();
    (t, h)
}

#[test]
fn witnesses_match_linear_scan_exhaustively_below_300() {
    for p in 2..300i64 {
        for q in 2..300i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let step = pinch_move(&TorusKnotParams::new(p, q).unwrap()).unwrap();
            assert_eq!((step.t, step.h), scan_witnesses(p, q), "T({p},{q})");
        }
    }
}

#[test]
fn pinch_values_never_disagree_in_sign() {
    for p in 2..400i64 {
        for q in 2..400i64 {
            if p.gcd(&q) != 1 {
                continue;
            }
            let s = pinch_move(&TorusKnotParams::new(p, q).unwrap()).unwrap();
            let (a, b) = (s.p_minus_2t, s.q_minus_2h);
            assert!(a != 0 || b != 0, "T({p},{q})");
            assert!(a * b >= 0, "T({p},{q}): {a} vs {b}");
            let expected = if a < 0 || (a == 0 && b < 0) {
                Sign::Negative
            } else {
                Sign::Positive
            };
            assert_eq!(s.sign, expected);
        }
    }
}

#[test]
fn large_family_members_stay_exact_in_i128() {
    let n = 1_000_000u64;
    for family in [Family::K, Family::J] {
        let id = FamilyId::new(family, n).unwrap();
        let knot = family_knot::<i128>(id).unwrap();
        assert_eq!(pinch_number(&knot), Ok(2_000_000));
        let big = family_knot::<BigInt>(id).unwrap();
        assert_eq!(BigInt::from(*knot.q()), big.q().clone());
        let report = counterexample_report::<i128>(id).unwrap();
        assert_eq!(report.pinch_number, 2_000_000);
        assert!(report.slice_recognized);
    }
}

#[test]
fn overflow_is_reported_not_wrapped() {
    // (2n+1)² overflows i64 once n passes about 1.5e9
    let id = FamilyId::new(Family::K, 3_000_000_000).unwrap();
    assert_eq!(
        family_knot::<i64>(id),
        Err(Error::Overflow("multiplication"))
    );
    assert!(family_knot::<i128>(id).is_ok());
}
