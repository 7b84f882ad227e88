//! Compares the full slide-relation module with the one generated by the
//! `Id_k` upper slide plus smaller bundles, for `k` given on the command
//! line (default 4), in the box and glued into the three-holed sphere.

use std::time::Instant;

use skein::relmod::conjecture_evidence;
use skein::surface::h1h1_scenarios;

fn main() {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let start = Instant::now();
    let report = conjecture_evidence(k, &h1h1_scenarios()).expect("k is 2, 4 or 6");
    for l in &report.levels {
        let c = &l.comparison;
        println!("{:<16} {} {:<20} ({} vs {} rows)", l.level, c.ring, c.verdict.to_string(), c.left_rows, c.right_rows);
        for (side, r) in c.exceptions().take(3) {
            println!("    {side} row {}: {}", r.row, r.decision);
        }
    }
    println!("k = {k} in {:.1?}", start.elapsed());
}
