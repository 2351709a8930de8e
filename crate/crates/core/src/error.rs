use std::fmt;

use num_bigint::BigInt;

use crate::exact::Rational;

/// Which hypothesis of a chain specification failed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainViolation {
    /// `b` is empty.
    NoBlocks,
    /// `lambda` must have exactly one more entry than `b`.
    LambdaLength { blocks: usize, breakpoints: usize },
    /// `lambda[k - 1] >= lambda[k]`.
    NotIncreasing { k: usize },
    /// `lambda[w] != lambda[0] + 1`.
    NotUnitPeriod,
    /// `b[k - 1] == b[k]`.
    RepeatedShift { k: usize },
    /// `1 + b[w - 1] == b[0]`.
    WrapCollision,
}

impl fmt::Display for ChainViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChainViolation::NoBlocks => write!(f, "no blocks"),
            ChainViolation::LambdaLength { blocks, breakpoints } => write!(
                f,
                "{breakpoints} breakpoints given for {blocks} blocks (expected {})",
                blocks + 1
            ),
            ChainViolation::NotIncreasing { k } => {
                write!(f, "breakpoints not strictly increasing at index {k}")
            }
            ChainViolation::NotUnitPeriod => write!(f, "last breakpoint is not first + 1"),
            ChainViolation::RepeatedShift { k } => write!(f, "b[{}] == b[{k}]", k - 1),
            ChainViolation::WrapCollision => write!(f, "1 + b[w-1] == b[0]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("no intervals given")]
    EmptyInput,
    #[error("reversed endpoints: {lo} > {hi}")]
    ReversedEndpoints { lo: Box<Rational>, hi: Box<Rational> },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("negative shift {0}; use its absolute value")]
    NegativeShift(BigInt),
    #[error("invalid chain specification: {0}")]
    InvalidChainSpec(ChainViolation),
    #[error("set is not relatively prime")]
    NotRelativelyPrime,
    #[error("set is empty")]
    EmptySet,
    #[error("element {0} is not a positive integer")]
    NonPositiveElement(BigInt),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("box set is not an N-set")]
    NotAnNSet,
    #[error("invalid explorer target: {0}")]
    InvalidTarget(String),
    #[error("no representation of 1 with weight <= {0}")]
    WeightCapExceeded(u64),
}

impl Error {
    /// Stable machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::ReversedEndpoints { .. } => "ReversedEndpoints",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::NegativeShift(_) => "NegativeShift",
            Error::InvalidChainSpec(_) => "InvalidChainSpec",
            Error::NotRelativelyPrime => "NotRelativelyPrime",
            Error::EmptySet => "EmptySet",
            Error::NonPositiveElement(_) => "NonPositiveElement",
            Error::InvalidParams(_) => "InvalidParams",
            Error::NotAnNSet => "NotAnNSet",
            Error::InvalidTarget(_) => "InvalidTarget",
            Error::WeightCapExceeded(_) => "WeightCapExceeded",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
