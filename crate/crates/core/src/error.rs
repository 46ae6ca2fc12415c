use thiserror::Error;

/// Errors produced by the factorization, search and ingestion routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A symbol has no rank under the supplied ordering.
    #[error("symbol {symbol} at offset {position} is not ranked by the alphabet ordering")]
    UnrankedSymbol { symbol: String, position: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The least rotation of a repetition starts at more than one position.
    #[error("word is not primitive, its least rotation is not unique")]
    NotPrimitive,

    /// A precedence graph contains a cycle.
    #[error("precedence constraints are inconsistent (cycle through {0})")]
    Inconsistent(String),

    #[error("factorial blow-up: {distinct} distinct letters exceeds the limit of {limit}")]
    FactorialBlowUp { distinct: usize, limit: usize },

    /// A law check was called with inputs outside its domain.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A law check found a counterexample; this indicates a library defect.
    #[error("property violated: {0}")]
    PropertyViolation(String),

    #[error("empty input")]
    EmptyInput,

    #[error("rejected symbol {symbol} in record {record} at position {position}")]
    RejectedSymbol {
        symbol: String,
        record: usize,
        position: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Printable form of a byte symbol.
pub(crate) fn show_byte(b: u8) -> String {
    if b.is_ascii_graphic() {
        format!("'{}'", b as char)
    } else {
        format!("0x{b:02x}")
    }
}
