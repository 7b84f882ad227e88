//! Lists slide relations of `TL_k` grouped by through-degree.

use std::collections::BTreeMap;

use skein::sliding::{relation_set, SlideVariant};

fn main() {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let rels = relation_set(k, &SlideVariant::ALL, 2);
    let mut by_t: BTreeMap<usize, usize> = BTreeMap::new();
    for r in &rels {
        *by_t.entry(r.through).or_default() += 1;
    }
    println!("TL{k}: {} nonzero relations", rels.len());
    for (t, n) in by_t {
        println!("  through-degree {t}: {n}");
    }
    for r in rels.iter().filter(|r| r.through == 2).take(4) {
        println!("{} {}: {} = 0", r.source, r.variant, r.vector);
    }
}
