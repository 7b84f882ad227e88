//! Glues the two-strand reduction into the four-holed sphere and decides
//! it against the slide-ideal generators over both coefficient rings.

use skein::relmod::counterexample;
use skein::surface::shipped;

fn main() {
    let s = shipped("h2h1").unwrap();
    let c = counterexample(&s, 4).unwrap();
    let check = &c.check;
    println!("target: {}", check.target);
    for (i, g) in check.generators.generators.iter().enumerate() {
        println!("g{}: from {} with top {} ({})", i + 1, g.source, g.top, g.top_coefficient);
    }
    for (i, x) in check.qa.support() {
        println!("Q(A) coefficient of g{}: {x}", i + 1);
    }
    println!("Z[A^±1]: {} ({})", check.za.decision, check.za.reason);
    println!("A^4 - 1 in (A^8 - 1): {}", c.principal_member);
}
