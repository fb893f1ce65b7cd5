use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor interval contains zero")]
    Enclosure,
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("result outside representable range")]
    Range,
    #[error("precision must be at least 53 bits, got {0}")]
    Precision(u32),
    #[error("invalid parameter: {0}")]
    Parameter(&'static str),
    #[error("unknown bound id `{0}`")]
    UnknownBound(String),
    #[error("bound `{id}` is defined for n >= {min}, got n = {n}")]
    BelowDomain { id: &'static str, n: u64, min: u64 },
    #[error("precision cap of {0} bits reached without a decision")]
    PrecisionCap(u32),
}
