use num_bigint::BigInt;
use thiserror::Error;

use crate::partition::Partition;

/// Errors raised by the character and decomposition routines.
///
/// `Integrality` never fires on correct input: every quotient the crate
/// takes is an integer by theory, so a remainder means a bug upstream.
#[derive(Debug, Error)]
pub enum Error {
    #[error("weight mismatch: shape {shape} has weight {}, class {class} has weight {}", shape.weight(), class.weight())]
    WeightMismatch { shape: Partition, class: Partition },

    #[error("class functions live on different groups: S_{left} vs S_{right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("integrality violation in {context}: {numerator} / {denominator} is not an exact nonnegative integer")]
    Integrality {
        context: &'static str,
        numerator: BigInt,
        denominator: BigInt,
    },

    #[error("{op}: {detail}")]
    Domain { op: &'static str, detail: String },

    #[error(transparent)]
    Parse(#[from] ParsePartitionError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Reasons a textual or JSON partition is rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePartitionError {
    #[error("empty part at position {0}")]
    EmptyPart(usize),
    #[error("part {0:?} is not a nonnegative integer")]
    NotANumber(String),
    #[error("part at position {0} is zero; parts must be positive")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing, found {prev} followed by {next}")]
    NotDescending { prev: usize, next: usize },
    #[error("sum of parts overflows")]
    WeightOverflow,
}
