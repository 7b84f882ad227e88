//! Linear algebra over `Z[A^{±1}]` and `Q(A)` for relation modules:
//! span membership with certificates, submodule comparison, and the
//! bounded model of the ideal generated by `z - A^6 u(z)`.

mod checks;
mod compare;
mod ideal;
mod linalg;

pub use checks::gluing_checks;
pub use compare::{
    conjecture_evidence, submodule_compare, Comparison, ConjectureReport, LevelComparison, Ring, RowReport, Verdict,
};
pub use ideal::{
    counterexample, ideal_check, ideal_generators, Counterexample, IdealCheck, IdealGenerator, IdealGenerators,
    TWO_STRAND_REDUCTION,
};
pub use linalg::{span_membership, z_span_decision, Certificate, RelationMatrix, Span, SparseVec, ZDecision, ZVerdict};

use thiserror::Error;

use crate::surface::SurfaceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelmodError {
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("kmax must be even and at least 2, got {0}")]
    Kmax(usize),
    #[error("conjecture evidence is computed for k = 2, 4 or 6, got {0}")]
    Strands(usize),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}
