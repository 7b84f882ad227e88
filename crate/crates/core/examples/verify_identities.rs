//! Runs the four-strand identity checks and the glued checks, printing one
//! line per check.

use skein::relmod::gluing_checks;
use skein::sliding::{verify, PrintedForms};
use skein::surface::shipped;

fn main() {
    let forms = PrintedForms::standard();
    let mut checks = verify(&forms).checks;
    checks.extend(gluing_checks(&forms, &shipped).unwrap());
    for c in &checks {
        println!("{c}");
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    println!("{passed}/{} passed", checks.len());
}
