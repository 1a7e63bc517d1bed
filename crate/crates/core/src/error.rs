use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),

    #[error("cyclic factor {p}^{e} needs a positive exponent")]
    ZeroExponent { p: u64, e: u32 },

    #[error("group order {0} is too small (need at least 3)")]
    OrderTooSmall(u64),

    #[error("dimension mismatch: expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("coordinate {index} = {value} is outside [0, {modulus})")]
    CoordinateOutOfRange {
        index: usize,
        value: u64,
        modulus: u64,
    },

    #[error("s[{index}] = {s} does not square to 1 modulo {modulus}")]
    NotInvolution { index: usize, s: u64, modulus: u64 },

    #[error("the automorphism fixes every element; the resulting group is abelian")]
    IdentityAutomorphism,

    #[error("the image of generator {index} is not a power of that generator")]
    NonDiagonalAutomorphism { index: usize },

    #[error("y is not fixed by the involution")]
    YNotFixed,

    #[error("invalid cyclic-by-two parameters: {0}")]
    BadG2Params(String),

    #[error("dicyclic y must have order exactly 2")]
    BadDicyclicY,

    #[error("group order {order} exceeds the guard {guard}")]
    GuardExceeded { order: usize, guard: usize },

    #[error("root sums with different orders ({left} vs {right})")]
    MixedRootOrders { left: u64, right: u64 },

    #[error("orthogonality fails for {relation} pair ({first}, {second}): {value:.3e} off")]
    OrthogonalityFailure {
        relation: &'static str,
        first: usize,
        second: usize,
        value: f64,
    },

    #[error("association scheme axiom ({clause}) fails: {detail}")]
    AxiomFailure {
        clause: &'static str,
        detail: String,
    },

    #[error("multiplicity for {label} is not a non-negative integer: {value}")]
    NonIntegralMultiplicity { label: String, value: String },

    #[error("multiplicity mismatch for {label}: closed form {closed}, character sum {char_sum}, inner product {inner}")]
    MultiplicityMismatch {
        label: String,
        closed: u64,
        char_sum: u64,
        inner: u64,
    },

    #[error("central idempotent check failed: {0}")]
    IdempotencyFailure(String),

    #[error("identity {identity} fails: expected {expected}, got {got}")]
    IdentityFailure {
        identity: String,
        expected: u64,
        got: u64,
    },

    #[error("integer overflow during exact elimination")]
    Overflow,
}
