use thiserror::Error;

/// Errors raised anywhere in the crate.
///
/// Variants split into two families: malformed or out-of-domain input, and
/// failed mathematical verification. The CLI maps the first family to exit
/// code 1 and the second to exit code 2.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partial order: relations contain a cycle")]
    Cycle,
    #[error("irreflexivity violated at element {0}")]
    Reflexive(usize),
    #[error("element {element} out of range for poset of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("oracle limit exceeded: poset has {size} elements, limit is {limit}")]
    OracleLimit { size: usize, limit: usize },
    #[error("canonical form limit exceeded: poset has {size} elements, limit is {limit}")]
    CanonicalLimit { size: usize, limit: usize },
    #[error("poset has width {0}, a two-chain decomposition does not exist")]
    WidthTooLarge(usize),
    #[error("decomposition inconsistent with poset: {0}")]
    BadDecomposition(String),
    #[error("index ({row}, {col}) out of range for a {rows}x{cols} grid")]
    CellOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("incomparable representation: radicands {0} and {1}")]
    RadicandMismatch(u64, u64),
    #[error("radicand {0} is not a square-free integer greater than 1")]
    BadRadicand(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("multiplier count {got} does not match constraint count {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("geometry reconstruction failed: {0}")]
    Geometry(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

impl Error {
    /// True for errors that indicate falsified mathematics (or a bug) rather
    /// than bad input.
    pub fn is_verification_failure(&self) -> bool {
        matches!(
            self,
            Error::Geometry(_) | Error::Verification(_) | Error::BadDecomposition(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
