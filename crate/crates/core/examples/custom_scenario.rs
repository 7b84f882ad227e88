//! Builds a scenario from inline JSON: a three-holed sphere with one cap
//! around each puncture, then glues `Id2` and `e1`.

use skein::expr::parse_element;
use skein::surface::{rho_star, Scenario};

const SCENARIO: &str = r#"{
  "name": "pair-of-pants",
  "description": "One cap around each of two punctures",
  "punctures": [{"label": "a1", "x": -6, "y": 0}, {"label": "a2", "x": 6, "y": 0}],
  "outer": {"x0": -12, "y0": -8, "x1": 12, "y1": 8, "label": "a3"},
  "box": {"x0": -2, "y0": -3, "x1": 2, "y1": 3, "k": 2},
  "arcs": [
    {"from": "L1", "to": "L2", "points": [[-2, 1], [-9, 1], [-9, -1], [-2, -1]]},
    {"from": "R1", "to": "R2", "points": [[2, 1], [9, 1], [9, -1], [2, -1]]}
  ]
}"#;

fn main() {
    let s = Scenario::from_json_str(SCENARIO).unwrap_or_else(|e| panic!("{e}"));
    for text in ["Id2", "e1", "Id2 - A^6*w(Id2)"] {
        let x = parse_element(text, Some(2)).unwrap();
        println!("{text:<18} -> {}", rho_star(&s, &x).unwrap());
    }
}
