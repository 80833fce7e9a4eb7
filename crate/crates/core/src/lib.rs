//! Exact calculus of pinch moves on torus knots.
//!
//! The crate computes pinch moves and pinch sequences, the families
//! `K_n = T(4n, (2n+1)²)` and `J_n = T(4n, (2n-1)²)` whose nonorientable
//! 4-ball genus falls below their pinch number, and the rational-tangle
//! computation identifying the slice 2-bridge knot reached by band surgery.
//!
//! Everything is generic over a signed integer [`Scalar`]. The aliases at the
//! crate root fix it to `i128`, which holds `K_n` well past `n = 10⁶`; use the
//! `Big*` aliases for unbounded parameters. Fixed-width arithmetic is checked
//! throughout and reports [`Error::Overflow`] rather than wrapping.
//!
//! ```
//! use torus_pinch::{pinch_sequence, TorusKnot};
//!
//! let seq = pinch_sequence(&TorusKnot::new(8, 25).unwrap()).unwrap();
//! assert_eq!(seq.pinch_number(), 4);
//! ```

pub mod arith;
pub mod criteria;
pub mod error;
pub mod families;
pub mod pinch;
pub mod scalar;
pub mod tangles;

use num_bigint::BigInt;

pub use arith::{
    cf_evaluate, cf_even_expand, ext_gcd, mod_inverse_smallest, EvenCF, ReducedFraction,
};
pub use criteria::{
    counterexample_report, jvc_criterion, sign_sequence, CounterexampleReport, JvcVerdict,
    SignSequence,
};
pub use error::{Error, Result};
pub use families::{
    closed_form_step, family_knot, k_member, verify_corollary_j_to_k, verify_k_independence,
    Family, FamilyId,
};
pub use pinch::{
    iteration_cap, pinch_iterate, pinch_move, pinch_number, pinch_sequence, PinchSequence,
    PinchStep, Sign, TorusKnotParams,
};
pub use scalar::Scalar;
pub use tangles::{
    is_slice_family, mat_apply, surgery_result_knot, two_bridge_determinant, two_bridge_normalize,
    MatSL2, TwoBridgeKnot,
};

pub type TorusKnot = TorusKnotParams<i128>;
pub type Step = PinchStep<i128>;
pub type Sequence = PinchSequence<i128>;
pub type Fraction = ReducedFraction<i128>;
pub type ContinuedFraction = EvenCF<i128>;
pub type Matrix = MatSL2<i128>;
pub type TwoBridge = TwoBridgeKnot<i128>;
pub type Report = CounterexampleReport<i128>;

pub type BigTorusKnot = TorusKnotParams<BigInt>;
pub type BigFraction = ReducedFraction<BigInt>;
pub type BigTwoBridge = TwoBridgeKnot<BigInt>;
