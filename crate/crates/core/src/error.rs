use crate::circuit::{Semiring, Violation};

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row {row} is all-zero")]
    ZeroRow { row: usize },
    #[error("semiring mismatch: expected {expected}, found {found}")]
    SemiringMismatch { expected: Semiring, found: Semiring },
    #[error("vector entry {index} = {value} is outside the {semiring} domain")]
    VectorDomain {
        semiring: Semiring,
        index: usize,
        value: u64,
    },
    #[error("invalid circuit: {0}")]
    InvalidCircuit(Violation),
    #[error("not a boolean-matrix SUM circuit: path count exceeds 1 at ({row}, {col})")]
    NotBooleanSum { row: usize, col: usize },
    #[error("unknown node {0}")]
    UnknownNode(usize),
    #[error("input {0} feeds no gate")]
    UnusedInput(usize),
    #[error("gate at node {0} reaches no output")]
    DeadGate(usize),
    #[error("integer overflow while evaluating a SUM circuit")]
    Overflow,
    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("matrix is all-zero")]
    ZeroMatrix,
    #[error("freeness certificate for ({s}, {t}) is not free")]
    NotFree { s: usize, t: usize },
    #[error("invalid rectangle cover: {0}")]
    InvalidCover(&'static str),
    #[error("variable {var} out of range for {n_vars} variables")]
    LiteralOutOfRange { var: usize, n_vars: usize },
    #[error("{samples} samples is below the required {required}")]
    TooFewSamples { samples: usize, required: usize },
}
