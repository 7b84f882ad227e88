//! Planar scenarios: a punctured disc holding a Temperley–Lieb box and a
//! fixed system of arcs outside it, and the gluing map from box elements
//! to combinations of multicurves.

pub mod geom;
mod glue;
mod multicurve;
mod scenario;
mod shipped;

pub use glue::{classify, closed_curves, cut_word, embed_box_diagram, encloses, glue, rho_star, Glued};
pub use multicurve::{canonical_cyclic, cyclic_reduce, Curve, Letter, Multicurve, SkeinVector};
pub use scenario::{marked_point, Puncture, Scenario, Strand};
pub use shipped::{h1h1_scenarios, shipped, shipped_names, shipped_source};

use std::path::Path;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("scenario schema: {0}")]
    Schema(String),
    #[error("scenario geometry: {0}")]
    Geometry(String),
    #[error("cannot read scenario: {0}")]
    Io(String),
    #[error("unknown scenario `{0}` (see --list-scenarios)")]
    UnknownScenario(String),
    #[error("scenario box has k = {k} but the input lives in TL({m},{n})")]
    Shape { k: usize, m: usize, n: usize },
}

/// Resolves a shipped name first, then a file path; `dir` is searched for
/// `<name>.json` when given.
pub fn resolve(name_or_path: &str, dir: Option<&Path>) -> Result<Scenario, SurfaceError> {
    if let Some(dir) = dir {
        let p = dir.join(format!("{name_or_path}.json"));
        if p.is_file() {
            return Scenario::load(&p);
        }
    }
    if shipped_source(name_or_path).is_some() {
        return shipped(name_or_path);
    }
    let p = Path::new(name_or_path);
    if p.is_file() {
        return Scenario::load(p);
    }
    Err(SurfaceError::UnknownScenario(name_or_path.to_string()))
}
