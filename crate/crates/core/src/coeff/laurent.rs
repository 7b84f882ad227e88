use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly;
use super::CoeffError;

/// An element of `Z[A, A^-1]`.
///
/// Terms are kept sorted by ascending exponent and never carry a zero
/// coefficient, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, BigInt)>,
}

/// Outcome of testing `x ∈ (g)` in `Z[A^{±1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member(LaurentPoly),
    NonMember,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    /// `A^e`.
    pub fn a_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c·A^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// The loop value `δ = -A^2 - A^-2`.
    pub fn delta() -> Self {
        Self::from_terms([(2, -1), (-2, -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_default() += c.into();
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<i64, BigInt>) -> Self {
        Self { terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// True for `±A^n`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].1.abs().is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.binary_search_by_key(&e, |(x, _)| *x).map(|i| self.terms[i].1.clone()).unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Coefficient of the highest power of `A`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    /// Multiplies by `A^e`.
    pub fn shift(&self, e: i64) -> Self {
        Self { terms: self.terms.iter().map(|(x, c)| (x + e, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// The bar involution `A ↦ A^-1`.
    pub fn conjugate(&self) -> Self {
        Self { terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a unit `±A^n`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = &self.terms[0];
        Some(Self::monomial(c.clone(), -e))
    }

    /// gcd of the integer coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Exact division of every coefficient by `c`; `None` if some
    /// coefficient is not divisible.
    pub fn div_exact_int(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, x) in &self.terms {
            let (q, r) = x.div_rem(c);
            if !r.is_zero() {
                return None;
            }
            terms.push((*e, q));
        }
        Some(Self { terms })
    }

    pub fn eval(&self, a: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                num_traits::pow(a.clone(), *e as usize)
            } else {
                num_traits::pow(a.recip(), (-*e) as usize)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Splits off the unit: `self = A^shift · p(A)` with `p` an ordinary
    /// polynomial whose constant term is nonzero. Dense coefficients of
    /// `p` are returned lowest degree first.
    pub(crate) fn to_dense(&self) -> (i64, Vec<BigInt>) {
        let Some(lo) = self.min_exp() else {
            return (0, Vec::new());
        };
        let hi = self.max_exp().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            dense[(e - lo) as usize] = c.clone();
        }
        (lo, dense)
    }

    pub(crate) fn from_dense(shift: i64, dense: &[BigInt]) -> Self {
        Self {
            terms: dense
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (shift + i as i64, c.clone()))
                .collect(),
        }
    }

    /// Decides whether `self` lies in the principal ideal `(g)` and
    /// returns the quotient when it does.
    pub fn principal_membership(&self, g: &LaurentPoly) -> Result<Membership, CoeffError> {
        if g.is_zero() {
            return Err(CoeffError::ZeroGenerator);
        }
        if self.is_zero() {
            return Ok(Membership::Member(Self::zero()));
        }
        let (xs, x) = self.to_dense();
        let (gs, gd) = g.to_dense();
        Ok(match poly::div_exact(&x, &gd) {
            Some(q) => Membership::Member(Self::from_dense(xs - gs, &q)),
            None => Membership::NonMember,
        })
    }

    /// Exact quotient `self / g`, if it exists in the ring.
    pub fn div_exact(&self, g: &LaurentPoly) -> Option<Self> {
        match self.principal_membership(g) {
            Ok(Membership::Member(q)) => Some(q),
            _ => None,
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        if rhs.terms.len() == 1 {
            let (e, c) = &rhs.terms[0];
            return Self { terms: self.terms.iter().map(|(x, y)| (x + e, y * c)).collect() };
        }
        if self.terms.len() == 1 {
            return rhs.mul_impl(self);
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let span = (hi - lo + 1) as usize;
        if span <= 4 * self.terms.len() * rhs.terms.len() + 64 {
            let mut dense = vec![BigInt::zero(); span];
            for (e1, c1) in &self.terms {
                for (e2, c2) in &rhs.terms {
                    dense[(e1 + e2 - lo) as usize] += c1 * c2;
                }
            }
            Self::from_dense(lo, &dense)
        } else {
            let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
            for (e1, c1) in &self.terms {
                for (e2, c2) in &rhs.terms {
                    *acc.entry(e1 + e2).or_default() += c1 * c2;
                }
            }
            Self::from_map(acc)
        }
    }

    fn add_impl(&self, rhs: &Self, negate_rhs: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < rhs.terms.len() {
            let take_left = j >= rhs.terms.len() || (i < self.terms.len() && self.terms[i].0 < rhs.terms[j].0);
            let take_right = i >= self.terms.len() || (j < rhs.terms.len() && rhs.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &rhs.terms[j];
                out.push((*e, if negate_rhs { -c } else { c.clone() }));
                j += 1;
            } else {
                let e = self.terms[i].0;
                let c =
                    if negate_rhs { &self.terms[i].1 - &rhs.terms[j].1 } else { &self.terms[i].1 + &rhs.terms[j].1 };
                if !c.is_zero() {
                    out.push((e, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, c: &BigInt, e: i64) -> fmt::Result {
    let a = c.abs();
    match e {
        0 => write!(f, "{a}"),
        _ => {
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            if e == 1 {
                write!(f, "A")
            } else {
                write!(f, "A^{e}")
            }
        }
    }
}

/// Terms are printed by decreasing exponent, except that a polynomial
/// with a negative leading coefficient starts from its highest positive
/// term (`1 - A^4` rather than `-A^4 + 1`).
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut order: Vec<usize> = (0..self.terms.len()).rev().collect();
        if self.terms.last().unwrap().1.is_negative() {
            if let Some(pos) = order.iter().position(|&i| self.terms[i].1.is_positive()) {
                let first = order.remove(pos);
                order.insert(0, first);
            }
        }
        for (n, &i) in order.iter().enumerate() {
            let (e, c) = &self.terms[i];
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write_monomial(f, c, *e)?;
        }
        Ok(())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_impl(rhs, true);
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}
