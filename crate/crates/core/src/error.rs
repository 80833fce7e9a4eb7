use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. Offending values are carried as
/// rendered strings so the enum stays independent of the scalar type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    UndefinedGcd,

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: String, modulus: String },

    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(String),

    #[error("0/0 is not a fraction")]
    ZeroOverZero,

    #[error("{0} has no all-even continued fraction expansion")]
    NoEvenExpansion(String),

    #[error("even expansion needs 0 < |f| < 1, got {0}")]
    CfDomain(String),

    #[error("continued fraction entry {0} is not a nonzero even integer")]
    InvalidCfEntry(String),

    #[error("continued fraction has no entries")]
    EmptyCf,

    #[error("continued fraction {0} hits a zero denominator")]
    DegenerateCf(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("T({p},{q}) is not a torus knot: parameters must be nonnegative and coprime")]
    InvalidKnot { p: String, q: String },

    #[error("T({p},{q}) is already unknotted; no pinch band exists")]
    CannotPinchUnknot { p: String, q: String },

    #[error("pinch sequence from T({p},{q}) exceeded {cap} steps")]
    IterationCapExceeded { p: String, q: String, cap: usize },

    #[error("invalid family member: {0}")]
    InvalidFamily(String),

    #[error("step index {k} out of range 0..={max}")]
    StepOutOfRange { k: u64, max: u64 },

    #[error("matrix [[{a},{b}],[{c},{d}]] does not have determinant 1")]
    NotSl2 {
        a: String,
        b: String,
        c: String,
        d: String,
    },

    #[error("tangles {0} and {0} coincide; their union is a two-component link")]
    DegenerateTangle(String),

    #[error("criterion not applicable to T({p},{q}): {reason}")]
    CriterionNotApplicable {
        p: String,
        q: String,
        reason: &'static str,
    },

    #[error("theorem violated for {id}: {detail}")]
    TheoremViolation { id: String, detail: String },
}
