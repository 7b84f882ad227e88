use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::coeff::{format_combination, LaurentPoly};

use super::normal_form;
use super::{Diagram, TlError};

/// A formal `Z[A^{±1}]`-combination of diagrams in `TL(m, n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TlElement {
    m: usize,
    n: usize,
    combo: BTreeMap<Diagram, LaurentPoly>,
}

impl TlElement {
    pub fn zero(m: usize, n: usize) -> Self {
        Self { m, n, combo: BTreeMap::new() }
    }

    pub fn from_diagram(d: Diagram) -> Self {
        Self::term(LaurentPoly::one(), d)
    }

    /// `c·d`.
    pub fn term(c: LaurentPoly, d: Diagram) -> Self {
        let mut x = Self::zero(d.m(), d.n());
        x.add_term(c, d);
        x
    }

    pub fn identity(k: usize) -> Self {
        Self::from_diagram(Diagram::identity(k))
    }

    pub fn generator(k: usize, i: usize) -> Result<Self, TlError> {
        Ok(Self::from_diagram(Diagram::generator(k, i)?))
    }

    /// Builds an element from `(coefficient, diagram)` pairs; all diagrams
    /// must lie in `TL(m, n)`.
    pub fn from_terms(
        m: usize,
        n: usize,
        terms: impl IntoIterator<Item = (LaurentPoly, Diagram)>,
    ) -> Result<Self, TlError> {
        let mut x = Self::zero(m, n);
        for (c, d) in terms {
            if (d.m(), d.n()) != (m, n) {
                return Err(TlError::ShapeMismatch { left: (m, n), right: (d.m(), d.n()) });
            }
            x.add_term(c, d);
        }
        Ok(x)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.combo.is_empty()
    }

    pub fn len(&self) -> usize {
        self.combo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.combo.is_empty()
    }

    /// Terms in basis order.
    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &LaurentPoly)> + '_ {
        self.combo.iter()
    }

    pub fn coeff(&self, d: &Diagram) -> LaurentPoly {
        self.combo.get(d).cloned().unwrap_or_default()
    }

    pub(crate) fn add_term(&mut self, c: LaurentPoly, d: Diagram) {
        debug_assert_eq!((d.m(), d.n()), (self.m, self.n));
        if c.is_zero() {
            return;
        }
        match self.combo.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        if c.is_zero() {
            return Self::zero(self.m, self.n);
        }
        Self { m: self.m, n: self.n, combo: self.combo.iter().map(|(d, x)| (d.clone(), x * c)).collect() }
    }

    fn check_same_shape(&self, other: &Self) -> Result<(), TlError> {
        if (self.m, self.n) != (other.m, other.n) {
            return Err(TlError::ShapeMismatch { left: (self.m, self.n), right: (other.m, other.n) });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, TlError> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (d, c) in &other.combo {
            out.add_term(c.clone(), d.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, TlError> {
        self.checked_add(&-other)
    }

    /// `self ∘ other`: glue the right boundary of `self` to the left
    /// boundary of `other`, one factor `δ` per closed loop.
    pub fn compose(&self, other: &Self) -> Result<Self, TlError> {
        if self.n != other.m {
            return Err(TlError::ShapeMismatch { left: (self.m, self.n), right: (other.m, other.n) });
        }
        let mut out = Self::zero(self.m, other.n);
        let mut delta_pows: Vec<LaurentPoly> = vec![LaurentPoly::one()];
        for (d1, c1) in &self.combo {
            for (d2, c2) in &other.combo {
                let (d, loops) = d1.compose(d2)?;
                while delta_pows.len() <= loops {
                    let next = delta_pows.last().unwrap() * &LaurentPoly::delta();
                    delta_pows.push(next);
                }
                let c = &(c1 * c2) * &delta_pows[loops];
                out.add_term(c, d);
            }
        }
        Ok(out)
    }

    /// `self` stacked above `other`.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.m + other.m, self.n + other.n);
        for (d1, c1) in &self.combo {
            for (d2, c2) in &other.combo {
                out.add_term(c1 * c2, d1.tensor(d2));
            }
        }
        out
    }

    /// Mirror image: left–right reflection with `A ↦ A^-1` on coefficients.
    pub fn bar(&self) -> Self {
        Self { m: self.n, n: self.m, combo: self.combo.iter().map(|(d, c)| (d.transpose(), c.conjugate())).collect() }
    }

    /// Top–bottom reflection; coefficients unchanged.
    pub fn sigma(&self) -> Self {
        Self { m: self.m, n: self.n, combo: self.combo.iter().map(|(d, c)| (d.flip(), c.clone())).collect() }
    }

    /// Applies `f` to every coefficient, dropping terms that become zero.
    pub fn map_coeffs(&self, mut f: impl FnMut(&LaurentPoly) -> LaurentPoly) -> Self {
        let mut out = Self::zero(self.m, self.n);
        for (d, c) in &self.combo {
            out.add_term(f(c), d.clone());
        }
        out
    }

    /// Printing with raw pairings instead of generator words.
    pub fn raw_string(&self) -> String {
        let parts: Vec<(String, &LaurentPoly)> = self.combo.iter().map(|(d, c)| (d.raw_string(), c)).collect();
        format_combination(&parts)
    }
}

impl fmt::Debug for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TlElement({}x{}: {})", self.m, self.n, self)
    }
}

/// Jones normal form for square elements, raw pairings otherwise. Terms
/// are ordered by word length, then lexicographically.
impl fmt::Display for TlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m != self.n {
            return f.write_str(&self.raw_string());
        }
        let nf = normal_form::for_strands(self.m);
        let mut parts: Vec<(&[u8], String, &LaurentPoly)> = self
            .combo
            .iter()
            .map(|(d, c)| {
                let w = nf.word(d);
                (w, normal_form::word_string(self.m, w), c)
            })
            .collect();
        parts.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(b.0)));
        let parts: Vec<(String, &LaurentPoly)> = parts.into_iter().map(|(_, s, c)| (s, c)).collect();
        f.write_str(&format_combination(&parts))
    }
}

impl Neg for &TlElement {
    type Output = TlElement;
    fn neg(self) -> TlElement {
        TlElement { m: self.m, n: self.n, combo: self.combo.iter().map(|(d, c)| (d.clone(), -c)).collect() }
    }
}

impl Neg for TlElement {
    type Output = TlElement;
    fn neg(self) -> TlElement {
        -&self
    }
}

/// Panics on shape mismatch; use [`TlElement::checked_add`] otherwise.
impl Add<&TlElement> for &TlElement {
    type Output = TlElement;
    fn add(self, rhs: &TlElement) -> TlElement {
        self.checked_add(rhs).expect("adding elements of different shapes")
    }
}

/// Panics on shape mismatch; use [`TlElement::checked_sub`] otherwise.
impl Sub<&TlElement> for &TlElement {
    type Output = TlElement;
    fn sub(self, rhs: &TlElement) -> TlElement {
        self.checked_sub(rhs).expect("subtracting elements of different shapes")
    }
}

impl Add for TlElement {
    type Output = TlElement;
    fn add(self, rhs: TlElement) -> TlElement {
        &self + &rhs
    }
}

impl Sub for TlElement {
    type Output = TlElement;
    fn sub(self, rhs: TlElement) -> TlElement {
        &self - &rhs
    }
}
