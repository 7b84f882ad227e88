//! Scenarios compiled into the binary, addressable by short name.

use super::scenario::Scenario;
use super::SurfaceError;

const SHIPPED: [(&str, &str); 8] = [
    ("h2h1", include_str!("../../scenarios/h2h1.json")),
    ("fig5a", include_str!("../../scenarios/fig5a.json")),
    ("fig5b", include_str!("../../scenarios/fig5b.json")),
    ("fig9", include_str!("../../scenarios/fig9.json")),
    ("h2h2", include_str!("../../scenarios/h2h2.json")),
    ("h1h1-k2", include_str!("../../scenarios/h1h1-k2.json")),
    ("h1h1-k4", include_str!("../../scenarios/h1h1-k4.json")),
    ("h1h1-k6", include_str!("../../scenarios/h1h1-k6.json")),
];

pub fn shipped_names() -> Vec<&'static str> {
    SHIPPED.iter().map(|(n, _)| *n).collect()
}

/// The JSON source of a shipped scenario.
pub fn shipped_source(name: &str) -> Option<&'static str> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn shipped(name: &str) -> Result<Scenario, SurfaceError> {
    let text = shipped_source(name).ok_or_else(|| SurfaceError::UnknownScenario(name.to_string()))?;
    let mut s = Scenario::from_json_str(text)?;
    if s.name.is_empty() {
        s.name = name.to_string();
    }
    Ok(s)
}

/// The three-holed sphere scenarios, one per even `k` from 2 to 6.
pub fn h1h1_scenarios() -> Vec<Scenario> {
    ["h1h1-k2", "h1h1-k4", "h1h1-k6"].iter().map(|n| shipped(n).expect("shipped scenarios are valid")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_shipped_scenarios_load() {
        for n in shipped_names() {
            let s = shipped(n).unwrap_or_else(|e| panic!("{n}: {e}"));
            assert_eq!(s.name, n);
            assert_eq!(s.arcs.len(), s.k);
        }
        assert!(matches!(shipped("nope"), Err(SurfaceError::UnknownScenario(_))));
    }
}
