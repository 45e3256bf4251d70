//! One-sided topological Markov shifts: validated 0-1 matrices, admissible
//! words, eventually periodic points, clopen sets and locally constant
//! functions.

mod clopen;
mod lcfunction;
mod matrix;
mod point;
mod word;

pub use clopen::{check_partition, complement_cover, ClopenSet, PartitionDefect};
pub use lcfunction::LcFunction;
pub use matrix::{MarkovShift, Shift};
pub use point::{sweep_points, EpPoint};
pub use word::{Symbol, Word};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("matrix is not square (row {row} has {len} entries, expected {expected})")]
    NonSquare { row: usize, len: usize, expected: usize },
    #[error("matrix must be at least 2x2, got {0}x{0}")]
    AlphabetTooSmall(usize),
    #[error("entry ({row},{col}) = {value} is not 0 or 1")]
    NonBinaryEntry { row: usize, col: usize, value: i64 },
    #[error("symbol {0} has a zero row or zero column")]
    ZeroRowOrColumn(usize),
    #[error("word {0} is not admissible")]
    WordNotAdmissible(Word),
    #[error("symbol {symbol} is outside 1..={n}")]
    SymbolOutOfRange { symbol: usize, n: usize },
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("objects live over different shifts")]
    ShiftMismatch,
    #[error("table is not total on B_{depth}: missing word {missing}")]
    IncompleteTable { depth: usize, missing: Word },
    #[error("word {word} has length {len}, expected {depth}")]
    WrongDepth { word: Word, len: usize, depth: usize },
}

impl ShiftError {
    /// Machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Self::NonSquare { .. } => "NonSquare",
            Self::AlphabetTooSmall(_) => "AlphabetTooSmall",
            Self::NonBinaryEntry { .. } => "NonBinaryEntry",
            Self::ZeroRowOrColumn(_) => "ZeroRowOrColumn",
            Self::WordNotAdmissible(_) => "WordNotAdmissible",
            Self::SymbolOutOfRange { .. } => "SymbolOutOfRange",
            Self::Parse { .. } => "ParseError",
            Self::ShiftMismatch => "ShiftMismatch",
            Self::IncompleteTable { .. } => "IncompleteTable",
            Self::WrongDepth { .. } => "WrongDepth",
        }
    }
}
