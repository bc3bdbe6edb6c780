use thiserror::Error;

use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Gram matrix is empty")]
    EmptyGram,
    #[error("Gram matrix is not square: row {row} has {len} entries, expected {rank}")]
    NotSquare { row: usize, len: usize, rank: usize },
    #[error("Gram matrix is not symmetric at ({i}, {j})")]
    NotSymmetric { i: usize, j: usize },
    #[error("diagonal entry {index} is odd; the lattice is not even")]
    NotEven { index: usize },
    #[error("leading principal minor of size {minor} is not positive")]
    NotPositiveDefinite { minor: usize },
    #[error("unknown lattice name {0:?}")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("empty input")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ellipsoid bound must be nonnegative")]
    NegativeBound,
    #[error("exponent {requested} is at or beyond the series order {order}")]
    BeyondOrder { requested: Rational, order: Rational },
    #[error("operation requires a real shift")]
    ComplexShiftUnsupported,
    #[error("vector is not in the dual lattice")]
    NotInDualLattice,
    #[error("shift is not a real element of the dual lattice; the grading is not integral")]
    NotVoaCase,
    #[error("central charge {0} is not divisible by 8")]
    NotMultipleOf8(i64),
    #[error("24r + c must be positive (c = {c}, r = {r})")]
    CentralChargeTooNegative { c: i64, r: i64 },
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("non-integral z-exponent {0}")]
    NonIntegralExponent(Rational),
    #[error("unsupported state: {0}")]
    UnsupportedState(String),
    #[error("inconsistent classification: {0}")]
    InconsistentClassification(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
