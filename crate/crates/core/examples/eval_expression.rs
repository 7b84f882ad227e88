//! Parses and reduces Temperley-Lieb expressions, printing normal forms
//! next to the raw boundary pairings.

use skein::expr::parse_element;

fn main() {
    let exprs =
        [(4, "e1*e2*e1"), (4, "e1*e1"), (4, "e1*e2*e3*e1"), (2, "bar(w(Id2))"), (3, "(A^2 - A^-2)*(e1 + e2) * e1")];
    for (k, text) in exprs {
        let x = parse_element(text, Some(k)).unwrap();
        println!("TL{k}: {text}\n    = {x}\n    raw {}", x.raw_string());
    }
    if let Err(e) = parse_element("e1 * (e2", Some(3)) {
        println!("malformed input is reported: {e}");
    }
}
