use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("p = 2 is not supported; the constructions require an odd prime")]
    EvenPrimeUnsupported,
    #[error("field order {order} exceeds the size guard {guard}")]
    SizeGuardExceeded { order: u128, guard: u64 },
    #[error("operands belong to different field towers")]
    TowerMismatch,
    #[error("element is not in the subfield GF(p^m)")]
    NotInSubfield,
    #[error("subfield basis does not span; tower tables are corrupt")]
    SingularBasis,
    #[error("zero has no discrete logarithm")]
    ZeroHasNoLog,
    #[error("zero lies in no cyclotomic class")]
    ZeroHasNoClass,
    #[error("{e} does not divide the multiplicative group order {order}")]
    OrderDoesNotDivide { e: u64, order: u64 },
    #[error("index {index} out of range (must be < {bound})")]
    IndexOutOfRange { index: u64, bound: u64 },
    #[error("parameters (v={v}, k={k}, lambda={lambda}, mu={mu}) are inconsistent: {reason}")]
    ParamInconsistency {
        v: u64,
        k: u64,
        lambda: i64,
        mu: i64,
        reason: String,
    },
    #[error("{0}")]
    RangeError(String),
    #[error("set has {found} elements but the parameters require k = {expected}")]
    SizeMismatch { found: usize, expected: u64 },
    #[error("set contains the identity element")]
    ContainsIdentity,
    #[error("set is not closed under negation")]
    NotSymmetricSet,
    #[error("set failed verification: {0}")]
    NotVerified(String),
    #[error("a character sum did not reduce to a rational integer")]
    NonIntegralCharacterSum,
    #[error("document parse error: {0}")]
    ParseError(String),
    #[error("document modulus {found:?} does not match the deterministic modulus {expected:?}")]
    ModulusMismatch { found: Vec<u8>, expected: Vec<u8> },
}
