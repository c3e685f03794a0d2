use thiserror::Error;

/// Errors raised by field, code and analysis constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("no irreducible polynomial of degree {k} over GF({p}) was found")]
    NoIrreducibleFound { p: u32, k: u32 },
    #[error("parameters ({0}, {1}) exceed the supported integer range")]
    Overflow(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("GF({small}) is not a subfield of GF({big})")]
    NotASubfield { small: u64, big: u64 },
    #[error("operation requires odd characteristic")]
    EvenCharacteristic,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("polynomials are defined over different fields")]
    FieldMismatch,
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: u64, limit: u64 },
    #[error("designed distance {delta} outside [2, {n}]")]
    DeltaOutOfRange { delta: u64, n: u64 },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("s = {s} is outside the guaranteed range 1..={bound}")]
    SOutOfGuaranteedRange { s: u64, bound: u64 },
    #[error("closed form only available for q = 3 (got q = {0})")]
    UnsupportedQ(u64),
    #[error("index i = {i} outside 1..={max} for m = {m}")]
    IOutOfRange { i: u32, m: u32, max: u32 },
    #[error("value {value} outside [0, {limit})")]
    OutOfRange { value: u64, limit: u64 },
    #[error("words have different radix or length")]
    LengthMismatch,
    #[error("truncation length {k} outside 1..={len}")]
    KOutOfRange { k: usize, len: usize },
    #[error("word has no successor of the same length")]
    NoSuccessor,
    #[error("delta = {delta} outside the dimension-formula range 2..={bound}")]
    DeltaOutsideFormulaRange { delta: u64, bound: u64 },
    #[error("{what} too large for exhaustive enumeration (q^k = {q}^{k}, cap {cap} symbols)")]
    TooLarge { what: &'static str, q: u64, k: u32, cap: u64 },
    #[error("weight budget {0} not supported (1..=6)")]
    BudgetTooSmall(u32),
    #[error("expected {expected} coefficients, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("m must be odd (got {0})")]
    EvenM(u32),
    #[error("m must be even (got {0})")]
    OddM(u32),
    #[error("quadratic form is identically zero")]
    ZeroForm,
    #[error("m = {0} outside the exhaustive envelope")]
    EnvelopeExceeded(u32),
    #[error("m = {m} not supported for this family (minimum {min})")]
    MOutOfRange { m: u32, min: u32 },
    #[error("distribution has no nonzero weight")]
    DegenerateDistribution,
}

pub type Result<T> = std::result::Result<T, Error>;
