use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: {rows} rows but row {row} has {cols} entries")]
    NonSquare {
        rows: usize,
        row: usize,
        cols: usize,
    },
    #[error("entry {value} at row {row}, column {col} is outside 0..{order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("not a Latin square: repeated entry in {axis} {index}")]
    NotLatin { axis: Axis, index: usize },
    #[error("cannot parse line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("multiplication group exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("dual of {0} is not defined")]
    DualUndefined(String),
    #[error("inconsistent registry: {0}")]
    InternalInconsistency(String),
    #[error("{value} is not a unit modulo {modulus}")]
    NotUnit { value: i64, modulus: u64 },
    #[error("boundary composite is nonzero at row {row}, column {col} (value {value})")]
    NotAComplex {
        row: usize,
        col: usize,
        value: String,
    },
    #[error("symbolic chain for {identity} differs from the transcription: {detail}")]
    TranscriptionMismatch { identity: String, detail: String },
    #[error("column {col} of the boundary is not in the kernel")]
    NotInKernel { col: usize },
    #[error("nerve complex needs {needed} chains, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("{what} does not satisfy {identity}")]
    IdentityNotSatisfied { identity: String, what: String },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

/// Row or column, for Latin-square diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Column,
}

impl std::fmt::Display for Axis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Axis::Row => f.write_str("row"),
            Axis::Column => f.write_str("column"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
