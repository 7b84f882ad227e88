//! Handle-slide elements and the relations they generate.
//!
//! `u(Id_k)` is taken to be `σ(w(Id_k))` for every `k`; only the `k = 4`
//! consequence is pinned by an independent check.

mod identities;

pub use identities::{verify, Check, CheckOutcome, PrintedForms, VerifyReport};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;
use thiserror::Error;

use crate::coeff::LaurentPoly;
use crate::tl::{enumerate_basis, Diagram, TlElement};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlideError {
    #[error("sliding elements need at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("unknown slide variant `{0}` (expected lower+, upper+, lower- or upper-)")]
    UnknownVariant(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SlideArc {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SlideSign {
    Positive,
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlideVariant {
    pub arc: SlideArc,
    pub sign: SlideSign,
}

impl SlideVariant {
    pub const LOWER_POS: Self = Self { arc: SlideArc::Lower, sign: SlideSign::Positive };
    pub const UPPER_POS: Self = Self { arc: SlideArc::Upper, sign: SlideSign::Positive };
    pub const LOWER_NEG: Self = Self { arc: SlideArc::Lower, sign: SlideSign::Negative };
    pub const UPPER_NEG: Self = Self { arc: SlideArc::Upper, sign: SlideSign::Negative };

    pub const ALL: [Self; 4] = [Self::LOWER_POS, Self::UPPER_POS, Self::LOWER_NEG, Self::UPPER_NEG];

    /// Parses a comma-separated list such as `lower+,upper-`; `all` selects
    /// every variant.
    pub fn parse_list(s: &str) -> Result<Vec<Self>, SlideError> {
        if s.trim() == "all" {
            return Ok(Self::ALL.to_vec());
        }
        let mut out: Vec<Self> = Vec::new();
        for part in s.split(',') {
            let v: Self = part.trim().parse()?;
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out.sort();
        Ok(out)
    }
}

impl fmt::Display for SlideVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arc = match self.arc {
            SlideArc::Lower => "lower",
            SlideArc::Upper => "upper",
        };
        let sign = match self.sign {
            SlideSign::Positive => '+',
            SlideSign::Negative => '-',
        };
        write!(f, "{arc}{sign}")
    }
}

impl FromStr for SlideVariant {
    type Err = SlideError;
    fn from_str(s: &str) -> Result<Self, SlideError> {
        Self::ALL.into_iter().find(|v| v.to_string() == s).ok_or_else(|| SlideError::UnknownVariant(s.to_string()))
    }
}

impl Serialize for SlideVariant {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_strands(k: usize) -> Result<(), SlideError> {
    if k < 2 {
        Err(SlideError::TooFewStrands(k))
    } else {
        Ok(())
    }
}

/// `w(Id_k)`, the lower-arc slide of the `k`-strand bundle (before the
/// `A^6` framing factor), computed by the tensor recursion from
/// `w(Id_2) = A^2 Id_2 + (1 - A^-4) e_1`.
pub fn w_id(k: usize) -> Result<TlElement, SlideError> {
    check_strands(k)?;
    static CACHE: OnceLock<Mutex<HashMap<usize, TlElement>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(x) = cache.lock().unwrap().get(&k) {
        return Ok(x.clone());
    }
    let x = if k == 2 {
        TlElement::identity(2).scale(&LaurentPoly::a_pow(2))
            + TlElement::generator(2, 1).unwrap().scale(&LaurentPoly::from_terms([(0, 1), (-4, -1)]))
    } else {
        let prev = w_id(k - 1)?;
        let id1 = TlElement::identity(1);
        let e = TlElement::generator(k, k - 1).unwrap();
        let lifted = prev.tensor(&id1);
        let lifted_bar = prev.bar().tensor(&id1);
        lifted.scale(&LaurentPoly::a_pow(2)) + lifted.compose(&e).unwrap()
            - e.compose(&lifted_bar).unwrap().scale(&LaurentPoly::a_pow(-4))
    };
    cache.lock().unwrap().insert(k, x.clone());
    Ok(x)
}

/// The definition of `u` that every report states alongside its results.
pub const ASSUMPTION: &str = "u(Id_k) = sigma(w(Id_k)) for every k";

/// `u(Id_k) = σ(w(Id_k))`, the upper-arc slide.
pub fn u_id(k: usize) -> Result<TlElement, SlideError> {
    Ok(w_id(k)?.sigma())
}

/// The slide image `φ_v(Id_k)` including its framing factor `A^{±6}`.
pub fn phi(v: SlideVariant, k: usize) -> Result<TlElement, SlideError> {
    let w = w_id(k)?;
    Ok(match (v.arc, v.sign) {
        (SlideArc::Lower, SlideSign::Positive) => w.scale(&LaurentPoly::a_pow(6)),
        (SlideArc::Upper, SlideSign::Positive) => w.sigma().scale(&LaurentPoly::a_pow(6)),
        (SlideArc::Lower, SlideSign::Negative) => w.bar().scale(&LaurentPoly::a_pow(-6)),
        (SlideArc::Upper, SlideSign::Negative) => w.bar().sigma().scale(&LaurentPoly::a_pow(-6)),
    })
}

/// `source - slide(source)`, read as `≡ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlidingRelation {
    pub source: Diagram,
    pub variant: SlideVariant,
    pub through: usize,
    pub vector: TlElement,
}

/// The relation obtained by sliding the through bundle of `d`: the bundle
/// is replaced by `φ_v(Id_t)` between the canonical front and back
/// factors. Diagrams with fewer than two through strands give zero.
pub fn slide_relation(d: &Diagram, v: SlideVariant) -> SlidingRelation {
    let f = d.through_structure();
    let source = TlElement::from_diagram(d.clone());
    let vector = if f.through < 2 {
        TlElement::zero(d.m(), d.n())
    } else {
        let core = phi(v, f.through).expect("through degree is at least 2");
        let front = TlElement::from_diagram(f.front);
        let back = TlElement::from_diagram(f.back);
        let slid = front.compose(&core).unwrap().compose(&back).unwrap();
        &source - &slid
    };
    SlidingRelation { source: d.clone(), variant: v, through: f.through, vector }
}

/// Relations for every basis diagram of `TL(k, k)` with through-degree at
/// least `max(min_through, 2)`, in basis order, variants in the order
/// given. Zero vectors are omitted.
pub fn relation_set(k: usize, variants: &[SlideVariant], min_through: usize) -> Vec<SlidingRelation> {
    let floor = min_through.max(2);
    let mut out = Vec::new();
    for d in enumerate_basis(k, k).expect("square shapes are even") {
        if d.through_degree() < floor {
            continue;
        }
        for &v in variants {
            let r = slide_relation(&d, v);
            if !r.vector.is_zero() {
                out.push(r);
            }
        }
    }
    out
}
