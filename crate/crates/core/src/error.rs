use thiserror::Error;

/// Errors raised by the periodic-permutation and germ machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("period must be positive")]
    ZeroPeriod,
    #[error("window images are not a bijection modulo {0}")]
    NotBijective(usize),
    #[error("operation requires an even period, got {0}")]
    OddPeriod(usize),
    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("not a member of the germ: {0}")]
    NotMember(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("element is not sigma-stable")]
    NotSigmaStable,
    #[error("reflection does not divide the element")]
    NotDivisible,
    #[error("not a reflection of the affine C group: {0}")]
    NotReflection(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("tuple target is not the Coxeter element")]
    TargetNotCoxeter,
    #[error("element is not fixed by the requested power of c")]
    NotFixed,
}

pub type Result<T> = std::result::Result<T, Error>;
