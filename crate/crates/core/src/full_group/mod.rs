//! The topological full group `[σ_A]_c`, realized by prefix-exchange tables.

mod generators;
mod table;

pub use generators::{
    cylinder_swap, example_involution, local_shift_piece, local_shift_piece_cocycles, orbit_mover,
    orbit_within, permutation_element,
};
pub use table::{CocyclePair, PrefixExchangeTable};

use thiserror::Error;

use crate::shift::{PartitionDefect, ShiftError, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table has no entries")]
    EmptyTable,
    #[error("table entries must be nonempty words")]
    EmptyWordEntry,
    #[error(transparent)]
    Shift(#[from] ShiftError),
    #[error("suffixes allowed after {mu:?} are not all allowed after {nu:?}")]
    SuffixMapNotIntoShift { mu: Word, nu: Word },
    #[error("domain cylinders do not partition X_A: {0}")]
    DomainNotPartition(PartitionDefect),
    #[error("range cylinders do not partition X_A: {0}")]
    RangeNotPartition(PartitionDefect),
    #[error("tables live over different shifts")]
    ShiftMismatch,
    #[error("condition (I) fails for {}", if *.transpose { "the transposed matrix" } else { "the matrix" })]
    ConditionIFailure { transpose: bool },
    #[error("inadmissible: {0}")]
    Inadmissible(String),
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
}

impl TableError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::EmptyTable => "EmptyTable",
            Self::EmptyWordEntry => "EmptyWordEntry",
            Self::Shift(e) => e.code(),
            Self::SuffixMapNotIntoShift { .. } => "SuffixMapNotIntoShift",
            Self::DomainNotPartition(_) => "DomainNotPartition",
            Self::RangeNotPartition(_) => "RangeNotPartition",
            Self::ShiftMismatch => "ShiftMismatch",
            Self::ConditionIFailure { .. } => "ConditionIFailure",
            Self::Inadmissible(_) => "Inadmissible",
            Self::NotAPermutation(_) => "NotAPermutation",
        }
    }
}
