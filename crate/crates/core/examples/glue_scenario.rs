//! Glues every basis diagram of `TL_k` into a scenario and prints the
//! resulting multicurves. Takes a shipped name or a scenario file path.

use skein::surface::{glue, resolve};
use skein::tl::enumerate_basis;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "h2h1".into());
    let s = resolve(&name, None).unwrap_or_else(|e| panic!("{e}"));
    println!("{}: {}", s.name, s.description);
    for d in enumerate_basis(s.k, s.k).unwrap() {
        let g = glue(&s, &d).unwrap();
        let loops = if g.delta_power == 0 { String::new() } else { format!("delta^{} * ", g.delta_power) };
        println!("  {:<12} -> {loops}{}", d.to_string(), g.multicurve);
    }
}
