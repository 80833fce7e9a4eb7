//! Pinch moves on torus knots.
//!
//! A pinch move on `T(p,q)` yields `T(|p-2t|, |q-2h|)` where `t` and `h` are
//! the smallest nonnegative solutions of `t ≡ -q⁻¹ (mod p)` and
//! `h ≡ p⁻¹ (mod q)`. The witnesses depend on which coordinate comes first,
//! so moves are applied to `(p, q)` exactly as given; only the resulting
//! knot is orientation independent.

use std::fmt;

use crate::arith::mod_inverse_smallest;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// The torus knot `T(p,q)` with `p, q >= 0` and `gcd(p,q) = 1`.
///
/// The pair keeps its given order. Use [`TorusKnotParams::canonical`] or
/// [`TorusKnotParams::same_knot`] to compare knots, since `T(p,q) = T(q,p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusKnotParams<T> {
    p: T,
    q: T,
}

impl<T: Scalar> TorusKnotParams<T> {
    pub fn new(p: T, q: T) -> Result<Self> {
        if p.is_negative() || q.is_negative() || !p.gcd(&q).is_one() {
            return Err(Error::InvalidKnot {
                p: p.to_string(),
                q: q.to_string(),
            });
        }
        Ok(Self { p, q })
    }

    /// `T(0,1)`, the terminal unknot of every pinch sequence.
    pub fn unknot() -> Self {
        Self {
            p: T::zero(),
            q: T::one(),
        }
    }

    pub fn p(&self) -> &T {
        &self.p
    }

    pub fn q(&self) -> &T {
        &self.q
    }

    pub fn is_unknot(&self) -> bool {
        self.p <= T::one() || self.q <= T::one()
    }

    pub fn swapped(&self) -> Self {
        Self {
            p: self.q.clone(),
            q: self.p.clone(),
        }
    }

    /// The ordering with the smaller parameter first.
    pub fn canonical(&self) -> Self {
        if self.p <= self.q {
            self.clone()
        } else {
            self.swapped()
        }
    }

    pub fn same_knot(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<T: Scalar> fmt::Display for TorusKnotParams<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// One pinch move together with its witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PinchStep<T> {
    pub from: TorusKnotParams<T>,
    pub to: TorusKnotParams<T>,
    pub t: T,
    pub h: T,
    /// `p - 2t` before taking absolute values.
    pub p_minus_2t: T,
    /// `q - 2h` before taking absolute values.
    pub q_minus_2h: T,
    pub sign: Sign,
}

/// The unique chain of pinch moves from `start` down to an unknot.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PinchSequence<T> {
    pub start: TorusKnotParams<T>,
    pub steps: Vec<PinchStep<T>>,
}

impl<T: Scalar> PinchSequence<T> {
    pub fn pinch_number(&self) -> usize {
        self.steps.len()
    }

    /// `start` followed by the target of every step.
    pub fn knots(&self) -> impl Iterator<Item = &TorusKnotParams<T>> + '_ {
        std::iter::once(&self.start).chain(self.steps.iter().map(|s| &s.to))
    }

    pub fn end(&self) -> &TorusKnotParams<T> {
        self.steps.last().map_or(&self.start, |s| &s.to)
    }
}

pub fn pinch_move<T: Scalar>(k: &TorusKnotParams<T>) -> Result<PinchStep<T>> {
    let TorusKnotParams { p, q } = k;
    if p.is_negative() || q.is_negative() || !p.gcd(q).is_one() {
        return Err(Error::InvalidKnot {
            p: p.to_string(),
            q: q.to_string(),
        });
    }
    if k.is_unknot() {
        return Err(Error::CannotPinchUnknot {
            p: p.to_string(),
            q: q.to_string(),
        });
    }

    let q_inv = mod_inverse_smallest(q, p)?;
    let t = if q_inv.is_zero() {
        q_inv
    } else {
        scalar::sub(p, &q_inv)?
    };
    let h = mod_inverse_smallest(p, q)?;

    let p_minus_2t = scalar::sub(p, &scalar::double(&t)?)?;
    let q_minus_2h = scalar::sub(q, &scalar::double(&h)?)?;

    // p*h - q*t = 1 forces p-2t and q-2h to share a sign, and rules out
    // both vanishing, for every nontrivial coprime pair
    debug_assert!(
        !(p_minus_2t.is_zero() && q_minus_2h.is_zero()),
        "both pinch values vanish at T({p},{q})"
    );
    debug_assert!(
        !(p_minus_2t.is_positive() && q_minus_2h.is_negative())
            && !(p_minus_2t.is_negative() && q_minus_2h.is_positive()),
        "pinch values disagree in sign at T({p},{q})"
    );

    let governing = if p_minus_2t.is_zero() {
        &q_minus_2h
    } else {
        &p_minus_2t
    };
    let sign = if governing.is_negative() {
        Sign::Negative
    } else {
        Sign::Positive
    };

    let to = TorusKnotParams {
        p: scalar::abs(&p_minus_2t)?,
        q: scalar::abs(&q_minus_2h)?,
    };
    debug_assert!(to.p.gcd(&to.q).is_one());

    Ok(PinchStep {
        from: k.clone(),
        to,
        t,
        h,
        p_minus_2t,
        q_minus_2h,
        sign,
    })
}

/// Upper bound on the length of any pinch sequence from `k`.
///
/// For a nontrivial knot, `1 <= t <= p-1` and `1 <= h <= q-1`, so each move
/// lowers both parameters by at least two. At most `min(p,q)/2` moves can
/// happen before one parameter drops to 1 or 0.
pub fn iteration_cap<T: Scalar>(k: &TorusKnotParams<T>) -> usize {
    let smaller = if k.p <= k.q { &k.p } else { &k.q };
    (smaller.clone() / scalar::two::<T>())
        .to_usize()
        .unwrap_or(usize::MAX)
}

pub fn pinch_sequence<T: Scalar>(k: &TorusKnotParams<T>) -> Result<PinchSequence<T>> {
    let start = k.clone();
    let cap = iteration_cap(&start);
    let mut steps: Vec<PinchStep<T>> = Vec::new();
    let mut current = start.clone();
    while !current.is_unknot() {
        if steps.len() >= cap {
            return Err(Error::IterationCapExceeded {
                p: start.p.to_string(),
                q: start.q.to_string(),
                cap,
            });
        }
        let step = pinch_move(&current)?;
        current = step.to.clone();
        steps.push(step);
    }
    Ok(PinchSequence { start, steps })
}

pub fn pinch_number<T: Scalar>(k: &TorusKnotParams<T>) -> Result<usize> {
    pinch_sequence(k).map(|s| s.pinch_number())
}

/// Applies up to `count` pinch moves, stopping early at an unknot.
pub fn pinch_iterate<T: Scalar>(k: &TorusKnotParams<T>, count: usize) -> Result<Vec<PinchStep<T>>> {
    let mut steps = Vec::with_capacity(count);
    let mut current = k.clone();
    for _ in 0..count {
        if current.is_unknot() {
            break;
        }
        let step = pinch_move(&current)?;
        current = step.to.clone();
        steps.push(step);
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn knot(p: i64, q: i64) -> TorusKnotParams<i64> {
        TorusKnotParams::new(p, q).unwrap()
    }

    #[test]
    fn lobb_example() {
        let step = pinch_move(&knot(4, 9)).unwrap();
        assert_eq!(step.to, knot(2, 5));
        assert_eq!((step.t, step.h), (3, 7));
        assert_eq!(step.sign, Sign::Negative);
    }

    #[test]
    fn k2_first_move() {
        let step = pinch_move(&knot(8, 25)).unwrap();
        assert_eq!(step.to, knot(6, 19));
        assert_eq!((step.t, step.h), (7, 22));
        assert_eq!(step.sign, Sign::Negative);
    }

    #[test]
    fn sign_falls_back_to_second_value() {
        let step = pinch_move(&knot(2, 3)).unwrap();
        assert_eq!(step.to, knot(0, 1));
        assert_eq!((step.t, step.h), (1, 2));
        assert_eq!((step.p_minus_2t, step.q_minus_2h), (0, -1));
        assert_eq!(step.sign, Sign::Negative);
    }

    #[test]
    fn odd_first_orientation_is_positive() {
        let step = pinch_move(&knot(9, 4)).unwrap();
        assert_eq!(step.to, knot(5, 2));
        assert_eq!((step.t, step.h), (2, 1));
        assert_eq!(step.sign, Sign::Positive);
    }

    #[test]
    fn rejects_unknots_and_non_coprime_pairs() {
        for (p, q) in [(0, 1), (1, 0), (1, 7), (5, 1)] {
            assert!(matches!(
                pinch_move(&knot(p, q)),
                Err(Error::CannotPinchUnknot { .. })
            ));
        }
        assert!(matches!(
            TorusKnotParams::new(4i64, 6),
            Err(Error::InvalidKnot { .. })
        ));
        assert!(matches!(
            TorusKnotParams::new(-3i64, 2),
            Err(Error::InvalidKnot { .. })
        ));
        assert!(TorusKnotParams::new(0i64, 0).is_err());
    }

    #[test]
    fn sequences_from_the_tables() {
        let seq = pinch_sequence(&knot(8, 25)).unwrap();
        let visited: Vec<_> = seq.steps.iter().map(|s| s.to.clone()).collect();
        assert_eq!(
            visited,
            vec![knot(6, 19), knot(4, 13), knot(2, 7), knot(0, 1)]
        );

        let seq = pinch_sequence(&knot(12, 25)).unwrap();
        let visited: Vec<_> = seq.steps.iter().map(|s| s.to.clone()).collect();
        assert_eq!(
            visited,
            vec![
                knot(10, 21),
                knot(8, 17),
                knot(6, 13),
                knot(4, 9),
                knot(2, 5),
                knot(0, 1)
            ]
        );
    }

    #[test]
    fn pinch_numbers() {
        assert_eq!(pinch_number(&knot(4, 9)), Ok(2));
        assert_eq!(pinch_number(&knot(20, 81)), Ok(10));
        assert_eq!(pinch_number(&knot(0, 1)), Ok(0));
        assert!(pinch_sequence(&knot(1, 0)).unwrap().steps.is_empty());
    }

    #[test]
    fn staircase_knots_are_linear_and_within_cap() {
        // T(2k, 2k-1) -> T(2k-2, 2k-3): pinch number k-1
        for k in 2..200i64 {
            let start = knot(2 * k, 2 * k - 1);
            let n = pinch_number(&start).unwrap();
            assert_eq!(n, (k - 1) as usize);
            assert!(n <= iteration_cap(&start));
        }
    }

    #[test]
    fn chain_and_end() {
        let seq = pinch_sequence(&knot(16, 49)).unwrap();
        for pair in seq.steps.windows(2) {
            assert_eq!(pair[0].to, pair[1].from);
        }
        assert!(seq.end().is_unknot());
        assert_eq!(seq.knots().count(), seq.pinch_number() + 1);
    }

    #[test]
    fn iterate_stops_at_unknot() {
        assert_eq!(pinch_iterate(&knot(4, 9), 10).unwrap().len(), 2);
        assert_eq!(pinch_iterate(&knot(20, 81), 4).unwrap().len(), 4);
    }

    #[test]
    fn canonical_and_equality() {
        assert_eq!(knot(25, 8).canonical(), knot(8, 25));
        assert!(knot(25, 8).same_knot(&knot(8, 25)));
        assert_ne!(knot(25, 8), knot(8, 25));
    }
}
