//! The Temperley–Lieb category: crossingless matchings `TL(m, n)` and
//! their `Z[A^{±1}]`-linear combinations.

mod diagram;
mod element;
mod normal_form;

pub use diagram::{enumerate_basis, Diagram, Point, ThroughFactorization};
pub use element::TlElement;
pub use normal_form::jones_word;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TlError {
    #[error("boundary sizes {m} + {n} must be even")]
    OddBoundary { m: usize, n: usize },
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("pairing is not planar: {0}")]
    Crossing(String),
    #[error("generator e{i} does not exist in TL_{k}")]
    GeneratorIndex { k: usize, i: usize },
    #[error("shape mismatch: TL({},{}) against TL({},{})", left.0, left.1, right.0, right.1)]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },
}
