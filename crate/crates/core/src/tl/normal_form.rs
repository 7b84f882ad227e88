//! Shortest, lexicographically least generator words for the diagrams of
//! `TL(k, k)`, computed once per `k` by breadth-first search.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::Diagram;

pub(crate) struct NormalForms {
    words: HashMap<Diagram, Vec<u8>>,
}

impl NormalForms {
    fn build(k: usize) -> Self {
        let mut words: HashMap<Diagram, Vec<u8>> = HashMap::new();
        let id = Diagram::identity(k);
        words.insert(id.clone(), Vec::new());
        let gens: Vec<Diagram> = (1..k).map(|i| Diagram::generator(k, i).unwrap()).collect();
        let mut frontier = vec![(Vec::<u8>::new(), id)];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for (w, d) in &frontier {
                for (gi, g) in gens.iter().enumerate() {
                    let (nd, _) = d.compose(g).unwrap();
                    if words.contains_key(&nd) {
                        continue;
                    }
                    let mut nw = w.clone();
                    nw.push(gi as u8 + 1);
                    words.insert(nd.clone(), nw.clone());
                    next.push((nw, nd));
                }
            }
            next.sort_by(|a, b| a.0.cmp(&b.0));
            frontier = next;
        }
        Self { words }
    }

    /// Generator indices (1-based) of the normal word; empty for `Id_k`.
    pub(crate) fn word(&self, d: &Diagram) -> &[u8] {
        &self.words[d]
    }
}

/// Cached normal forms for `TL(k, k)`.
pub(crate) fn for_strands(k: usize) -> Arc<NormalForms> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<NormalForms>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(nf) = cache.lock().unwrap().get(&k) {
        return nf.clone();
    }
    let nf = Arc::new(NormalForms::build(k));
    cache.lock().unwrap().entry(k).or_insert(nf).clone()
}

/// `Id4` for the empty word, `e1*e2*e1` otherwise.
pub(crate) fn word_string(k: usize, w: &[u8]) -> String {
    if w.is_empty() {
        return format!("Id{k}");
    }
    w.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join("*")
}

/// The normal word of a square diagram.
pub fn jones_word(d: &Diagram) -> Option<Vec<usize>> {
    if !d.is_square() {
        return None;
    }
    Some(for_strands(d.m()).word(d).iter().map(|&i| i as usize).collect())
}

/// Normal word for square diagrams, raw pairs otherwise.
impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_square() {
            return f.write_str(&self.raw_string());
        }
        f.write_str(&word_string(self.m(), for_strands(self.m()).word(self)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::enumerate_basis;

    #[test]
    fn every_diagram_has_a_loop_free_word() {
        for k in 1..=6 {
            let nf = for_strands(k);
            for d in enumerate_basis(k, k).unwrap() {
                let w = nf.word(&d);
                let mut acc = Diagram::identity(k);
                for &i in w {
                    let (next, loops) = acc.compose(&Diagram::generator(k, i as usize).unwrap()).unwrap();
                    assert_eq!(loops, 0);
                    acc = next;
                }
                assert_eq!(acc, d);
            }
        }
    }

    #[test]
    fn words_are_lex_least() {
        let k = 4;
        let e = |i| Diagram::generator(k, i).unwrap();
        // e1 e3 and e3 e1 are the same diagram; the smaller word wins
        let (d, _) = e(3).compose(&e(1)).unwrap();
        assert_eq!(jones_word(&d), Some(vec![1, 3]));
        assert_eq!(word_string(4, &[]), "Id4");
        assert_eq!(word_string(4, &[2, 1]), "e2*e1");
    }
}
