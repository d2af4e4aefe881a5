use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a polygon needs at least 3 vertices, got n={0}")]
    TooFewVertices(usize),

    #[error("expected {expected} sides, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("side e_{index}={value} is outside [1, {max}]")]
    SideOutOfRange { index: usize, value: u32, max: u32 },

    #[error("walk closes prematurely: s_{0} is divisible by n")]
    PrematureClosure(usize),

    #[error("walk does not close: s_n is not divisible by n")]
    NotClosed,

    #[error("m must be greater than 2, got m={0}")]
    MTooSmall(u32),

    #[error("{0} is not a prime greater than 3")]
    NotPrime(u32),

    #[error("census capped at n=12, got n={0}")]
    NTooLarge(usize),

    #[error("euler_phi is undefined at 0")]
    ZeroArgument,

    #[error("empty range {from}..{to}")]
    EmptyRange { from: u32, to: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
