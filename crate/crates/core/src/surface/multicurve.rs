use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::coeff::{format_combination, LaurentPoly};

/// A letter `a_i^{±1}` of the free group of the punctured disc, with `i`
/// the puncture index.
pub type Letter = (usize, i32);

/// Free and cyclic reduction; the result has only exponents `±1`.
pub fn cyclic_reduce(word: &[Letter]) -> Vec<Letter> {
    let mut stack: Vec<Letter> = Vec::with_capacity(word.len());
    let singles = word.iter().flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize));
    for (g, e) in singles {
        if stack.last() == Some(&(g, -e)) {
            stack.pop();
        } else {
            stack.push((g, e));
        }
    }
    let (mut lo, mut hi) = (0, stack.len());
    while hi - lo >= 2 && stack[lo].0 == stack[hi - 1].0 && stack[lo].1 == -stack[hi - 1].1 {
        lo += 1;
        hi -= 1;
    }
    stack[lo..hi].to_vec()
}

/// Lexicographically least rotation of the word or its inverse; equal
/// outputs exactly for conjugate words up to inversion.
pub fn canonical_cyclic(word: &[Letter]) -> Vec<Letter> {
    let w = cyclic_reduce(word);
    if w.is_empty() {
        return w;
    }
    let inv: Vec<Letter> = w.iter().rev().map(|&(g, e)| (g, -e)).collect();
    let mut best: Option<Vec<Letter>> = None;
    for cand in [&w, &inv] {
        for r in 0..cand.len() {
            let rot: Vec<Letter> = cand[r..].iter().chain(&cand[..r]).copied().collect();
            if best.as_ref().is_none_or(|b| &rot < b) {
                best = Some(rot);
            }
        }
    }
    best.unwrap()
}

/// The isotopy class of one essential simple closed curve.
///
/// Ordering puts curves around a single boundary component first, then
/// round curves around a set of punctures, then everything else.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Curve {
    rank: u8,
    key: Vec<Letter>,
    text: String,
    enclosed: Vec<String>,
}

impl Curve {
    pub(crate) fn peripheral(index: usize, label: &str, enclosed: Vec<String>) -> Self {
        Self { rank: 0, key: vec![(index, 1)], text: label.to_string(), enclosed }
    }

    pub(crate) fn round(indices: Vec<usize>, labels: Vec<String>) -> Self {
        let text = format!("[{}]", labels.concat());
        Self { rank: 1, key: indices.into_iter().map(|i| (i, 1)).collect(), text, enclosed: labels }
    }

    pub(crate) fn winding(word: Vec<Letter>, text: String, enclosed: Vec<String>) -> Self {
        Self { rank: 2, key: word, text, enclosed }
    }

    /// Labels of the punctures inside the curve.
    pub fn enclosed(&self) -> &[String] {
        &self.enclosed
    }

    pub fn is_round(&self) -> bool {
        self.rank < 2
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}

/// A multiset of essential curves; trivial components are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multicurve {
    comps: BTreeMap<Curve, usize>,
}

impl Multicurve {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, c: Curve) {
        *self.comps.entry(c).or_default() += 1;
    }

    pub fn components(&self) -> impl Iterator<Item = (&Curve, usize)> + '_ {
        self.comps.iter().map(|(c, n)| (c, *n))
    }

    /// Number of components counted with multiplicity.
    pub fn len(&self) -> usize {
        self.comps.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    /// Enclosed puncture sets, one per component.
    pub fn enclosed_sets(&self) -> Vec<Vec<String>> {
        self.comps.iter().flat_map(|(c, n)| std::iter::repeat_n(c.enclosed.clone(), *n)).collect()
    }

    /// Any two enclosed sets are nested or disjoint.
    pub fn is_laminar(&self) -> bool {
        let sets = self.enclosed_sets();
        sets.iter().enumerate().all(|(i, a)| {
            sets[i + 1..].iter().all(|b| {
                let inter = a.iter().filter(|x| b.contains(x)).count();
                inter == 0 || inter == a.len() || inter == b.len()
            })
        })
    }
}

/// `a1 a3 [a2a3]`, multiplicities as `^n`, the empty multicurve as `1`.
impl fmt::Display for Multicurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.comps.iter().map(|(c, n)| if *n == 1 { c.text.clone() } else { format!("{}^{n}", c.text) }).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A `Z[A^{±1}]`-combination of multicurves.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SkeinVector {
    combo: BTreeMap<Multicurve, LaurentPoly>,
}

impl SkeinVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(c: LaurentPoly, mc: Multicurve) -> Self {
        let mut v = Self::zero();
        v.add_term(c, mc);
        v
    }

    pub fn add_term(&mut self, c: LaurentPoly, mc: Multicurve) {
        if c.is_zero() {
            return;
        }
        let e = self.combo.entry(mc.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.combo.remove(&mc);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multicurve, &LaurentPoly)> + '_ {
        self.combo.iter()
    }

    pub fn coeff(&self, mc: &Multicurve) -> LaurentPoly {
        self.combo.get(mc).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.combo {
            out.add_term(x * c, m.clone());
        }
        out
    }

    pub fn into_map(self) -> BTreeMap<Multicurve, LaurentPoly> {
        self.combo
    }

    pub fn as_map(&self) -> &BTreeMap<Multicurve, LaurentPoly> {
        &self.combo
    }
}

impl fmt::Display for SkeinVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<(String, &LaurentPoly)> = self.combo.iter().map(|(m, c)| (m.to_string(), c)).collect();
        f.write_str(&format_combination(&parts))
    }
}

impl Add<&SkeinVector> for &SkeinVector {
    type Output = SkeinVector;
    fn add(self, rhs: &SkeinVector) -> SkeinVector {
        let mut out = self.clone();
        for (m, c) in &rhs.combo {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Neg for &SkeinVector {
    type Output = SkeinVector;
    fn neg(self) -> SkeinVector {
        self.scale(&LaurentPoly::constant(-1))
    }
}

impl Sub<&SkeinVector> for &SkeinVector {
    type Output = SkeinVector;
    fn sub(self, rhs: &SkeinVector) -> SkeinVector {
        self + &(-rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction() {
        assert_eq!(cyclic_reduce(&[(1, 1), (1, -1)]), vec![]);
        assert_eq!(cyclic_reduce(&[(2, 1), (1, 1), (2, -1)]), vec![(1, 1)]);
        assert_eq!(cyclic_reduce(&[(3, 2)]), vec![(3, 1), (3, 1)]);
        assert_eq!(cyclic_reduce(&[(1, -1), (2, 1), (3, 1), (1, 1)]), vec![(2, 1), (3, 1)]);
    }

    #[test]
    fn canonical_form_ignores_rotation_and_inversion() {
        let w = [(0, 1), (1, 1), (2, -1)];
        let rot = [(2, -1), (0, 1), (1, 1)];
        let inv = [(2, 1), (1, -1), (0, -1)];
        assert_eq!(canonical_cyclic(&w), canonical_cyclic(&rot));
        assert_eq!(canonical_cyclic(&w), canonical_cyclic(&inv));
        assert_ne!(canonical_cyclic(&[(0, 1), (1, 1), (2, 1)]), canonical_cyclic(&[(0, 1), (2, 1), (1, 1)]));
    }

    #[test]
    fn printing() {
        let l = |s: &str| s.to_string();
        let mut m = Multicurve::empty();
        assert_eq!(m.to_string(), "1");
        m.insert(Curve::round(vec![1, 2], vec![l("a2"), l("a3")]));
        m.insert(Curve::peripheral(2, "a3", vec![l("a3")]));
        m.insert(Curve::peripheral(0, "a1", vec![l("a1")]));
        assert_eq!(m.to_string(), "a1 a3 [a2a3]");
        assert!(m.is_laminar());
        let mut d = Multicurve::empty();
        d.insert(Curve::round(vec![0, 1], vec![l("a1"), l("a2")]));
        d.insert(Curve::round(vec![0, 1], vec![l("a1"), l("a2")]));
        assert_eq!(d.to_string(), "[a1a2]^2");
        assert_eq!(d.len(), 2);
    }
}
