//! Exact arithmetic in the Cuntz-Krieger algebra `O_A`: finite sums of
//! `S_α S_β*` with coefficients in a cyclotomic field.

mod element;
mod normalizer;
mod phase;
mod scalar;

pub use element::{CkContext, CkElement, Ctx};
pub use normalizer::{normalizer_decompose, unitary_from_table};
pub use phase::{cocycle_automorphism, phi_a, solve_coboundary, PhaseFunction};
pub use scalar::{Field, Scalar};

use thiserror::Error;

use crate::full_group::TableError;
use crate::shift::ShiftError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("element is not a normalizer of D_A")]
    NotANormalizer,
    #[error("a basis point is sent to a superposition: {0}")]
    NonScalarObstruction(String),
    #[error("element is not in D_A")]
    NotDiagonal,
    #[error("value {0} is not unimodular")]
    NotUnimodular(String),
    #[error("value {0} is not a root of unity of the phase order")]
    ValueOutsidePhaseGroup(String),
    #[error("elements belong to different algebras")]
    ShiftMismatch,
    #[error(transparent)]
    Shift(#[from] ShiftError),
    #[error(transparent)]
    Table(#[from] TableError),
}

impl AlgebraError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::NotANormalizer => "NotANormalizer",
            Self::NonScalarObstruction(_) => "NonScalarObstruction",
            Self::NotDiagonal => "NotDiagonal",
            Self::NotUnimodular(_) => "NotUnimodular",
            Self::ValueOutsidePhaseGroup(_) => "ValueOutsidePhaseGroup",
            Self::ShiftMismatch => "ShiftMismatch",
            Self::Shift(e) => e.code(),
            Self::Table(e) => e.code(),
        }
    }
}
