//! Kauffman bracket skein computations for handle slides: Temperley–Lieb
//! algebra over `Z[A^{±1}]`, slide relations, gluing into punctured discs,
//! and exact membership decisions over `Z[A^{±1}]` and `Q(A)`.

pub mod cli;
pub mod coeff;
pub mod expr;
pub mod relmod;
pub mod sliding;
pub mod surface;
pub mod tl;
