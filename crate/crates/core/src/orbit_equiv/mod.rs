//! Homeomorphisms between shift spaces, orbit cocycles and the transfer of
//! full-group elements and diagonal functions along them.

mod conjugate;
mod tailmap;
mod verify;

pub use conjugate::{conjugate_table, transport_diagonal};
pub use tailmap::{Clause, TailMap};
pub use verify::{
    is_uniform_orbit_equivalence, verify_orbit_cocycles, verify_round_trip, Counterexample, OrbitCocycleData,
    VerificationReport,
};

use thiserror::Error;

use crate::ck::AlgebraError;
use crate::full_group::TableError;
use crate::shift::{EpPoint, LcFunction, MarkovShift, ShiftError, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OeError {
    #[error("substitution output on {0} does not settle into a period")]
    PatternStraddlesUnstably(EpPoint),
    #[error("no table found up to depth {depth}")]
    DepthExhausted { depth: usize },
    #[error("validation failed: {0}")]
    ValidationMismatch(String),
    #[error("no exchange entry matches {0}")]
    NotCovered(EpPoint),
    #[error("{input} is sent to {output}, which is not in the target shift")]
    OutputNotAdmissible { input: EpPoint, output: EpPoint },
    #[error("patterns must be nonempty")]
    EmptyPattern,
    #[error("maps or functions over different shifts")]
    ShiftMismatch,
    #[error(transparent)]
    Shift(#[from] ShiftError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl OeError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::PatternStraddlesUnstably(_) => "PatternStraddlesUnstably",
            Self::DepthExhausted { .. } => "DepthExhausted",
            Self::ValidationMismatch(_) => "ValidationMismatch",
            Self::NotCovered(_) => "NotCovered",
            Self::OutputNotAdmissible { .. } => "OutputNotAdmissible",
            Self::EmptyPattern => "EmptyPattern",
            Self::ShiftMismatch => "ShiftMismatch",
            Self::Shift(e) => e.code(),
            Self::Table(e) => e.code(),
            Self::Algebra(e) => e.code(),
        }
    }
}

/// `h: X_F → X_{A_[2]}` collapsing every `21` to `2`, with its orbit
/// cocycles.
pub fn golden_mean_example() -> (TailMap, OrbitCocycleData) {
    let f = MarkovShift::golden_mean();
    let a2 = MarkovShift::full(2);
    let w = |s: &str| Word::parse(s).expect("literal word");
    let h = TailMap::new(
        f.clone(),
        a2.clone(),
        vec![Clause::Sub { pattern: w("21"), replacement: w("2") }],
        vec![Clause::Sub { pattern: w("2"), replacement: w("21") }],
    )
    .expect("nonempty patterns");
    let by_first = |shift: &crate::shift::Shift, on1: u32, on2: u32| {
        LcFunction::from_fn(shift.clone(), 1, |u| if *u == Word::single(1) { on1 } else { on2 })
    };
    let data = OrbitCocycleData {
        k1: by_first(&f, 0, 1),
        l1: by_first(&f, 1, 1),
        k2: by_first(&a2, 0, 0),
        l2: by_first(&a2, 1, 2),
    };
    (h, data)
}
