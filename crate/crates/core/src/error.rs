use thiserror::Error;

/// Errors produced by field construction, the codecs and the channel models.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus is not irreducible of degree {degree} over GF({q})")]
    ReducibleModulus { q: u64, degree: usize },
    #[error("malformed modulus: {0}")]
    BadModulus(String),
    #[error("field size {q}^{m} exceeds the supported cap of 2^32 elements")]
    SizeCap { q: u64, m: usize },
    #[error("base field GF({p}^{e}) exceeds the table cap of 2^16 elements")]
    BaseFieldCap { p: u64, e: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("value {value} is not an element of a field with {size} elements")]
    NotAnElement { value: u64, size: u64 },
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("requested dimension {requested} exceeds the available {available}")]
    DimTooLarge { requested: usize, available: usize },
    #[error("requested rank {requested} exceeds min(rows, cols) = {available}")]
    RankTooLarge { requested: usize, available: usize },
    #[error("rejection sampling gave up after {0} attempts")]
    RetryLimit(usize),
    #[error("invalid code parameters: {0}")]
    BadParams(String),
    #[error("message has length {got}, expected {expected}")]
    WrongMessageLength { expected: usize, got: usize },
    #[error("received space of dimension {r} gives decoder parameter d = {d} < k = {k}")]
    DegenerateReceivedSpace { r: usize, d: usize, k: usize },
    #[error("folded code parameters give decoder parameter d = {d} < k = {k}")]
    DegenerateParams { d: usize, k: usize },
    #[error("interpolation polynomial set is identically zero")]
    ZeroInterpolation,
    #[error("solution space of dimension {dim} has more than {cap} elements")]
    ListCapExceeded { dim: usize, cap: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("exhaustive search over {0} codewords is too large")]
    TooLarge(u64),
    #[error("recovered message failed the substitution check")]
    RecoveryCheckFailed,
    #[error("serialization: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
