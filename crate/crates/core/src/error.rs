use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// Only rational constants times products of `z_i - z_j` can be inverted.
    #[error("divisor is not a unit of the localized ring: {0}")]
    NonUnitDivisor(String),

    #[error("coincident coordinates: z{0} = z{1}")]
    CoincidentCoordinates(u8, u8),

    #[error("rational coefficient has a denominator divisible by the prime")]
    BadReduction,

    #[error("vertex label {0} is outside 1..=5")]
    InvalidVertex(u8),

    #[error("repeated vertex label {0}")]
    RepeatedVertex(u8),

    #[error("exponential requires an even element")]
    NotEven,

    #[error("exponential requires a zero scalar part")]
    NonzeroScalarPart,

    #[error("minor needs as many rows as columns (got {rows} rows, {cols} columns)")]
    DimensionMismatch { rows: usize, cols: usize },

    #[error("unknown or duplicated label {0}")]
    BadLabel(String),

    #[error("monomial {monomial} is not supported on the {side} side: {reason}")]
    WrongSupport {
        monomial: String,
        side: &'static str,
        reason: String,
    },

    #[error("invalid prime {0}: must be an odd prime below 2^63")]
    InvalidPrime(u64),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
