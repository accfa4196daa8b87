use thiserror::Error;

/// Errors produced by the poset toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation contains a directed cycle through element {0}")]
    CycleDetected(usize),

    #[error("element index {index} out of range for a poset of {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("enumeration cap of {0} exceeded; instance is beyond brute-force scale")]
    CapExceeded(u64),

    #[error("not a linear extension: {0}")]
    NotALinearExtension(String),

    #[error("forced relations are inconsistent with the order")]
    InconsistentConstraints,

    #[error("width {width} exceeds the supported maximum of {max}")]
    WidthExceeded { width: usize, max: usize },

    #[error("size {size} exceeds the supported maximum of {max}")]
    SizeExceeded { size: usize, max: usize },

    #[error("class violation: {0}")]
    ClassViolation(String),

    #[error("not an interval order: no consecutive ordering of maximal antichains exists")]
    NotIntervalOrder,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
