use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{poly, CoeffError, LaurentPoly};

/// An element of `Q(A)` in canonical form.
///
/// The denominator is an ordinary polynomial with nonzero constant term
/// and positive leading coefficient; every power of `A` lives in the
/// numerator. Numerator and denominator are coprime over `Q[A]` and their
/// integer coefficients have no common factor, so equal fractions compare
/// equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self { num: p, den: LaurentPoly::one() }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Z[A^{±1}]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self, CoeffError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        if rhs.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn conjugate(&self) -> Self {
        Self::canonical(self.num.conjugate(), self.den.conjugate())
    }

    pub fn eval(&self, a: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(a);
        (!d.is_zero()).then(|| self.num.eval(a) / d)
    }

    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_unit() {
            let inv = den.unit_inverse().unwrap();
            return Self { num: &num * &inv, den: LaurentPoly::one() };
        }
        let (ns, n) = num.to_dense();
        let (ds, d) = den.to_dense();
        let shift = ns - ds;
        let g = poly::gcd(&n, &d);
        let (mut n, mut d) = if g.len() > 1 {
            (
                poly::div_exact(&n, &g).expect("gcd divides numerator"),
                poly::div_exact(&d, &g).expect("gcd divides denominator"),
            )
        } else {
            (n, d)
        };
        let c = poly::content(&n).gcd(&poly::content(&d));
        let c = if d.last().unwrap().is_negative() { -c } else { c };
        if !c.is_one() {
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x = &*x / &c;
            }
        }
        Self { num: LaurentPoly::from_dense(shift, &n), den: LaurentPoly::from_dense(0, &d) }
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RationalFn {
    fn from(c: i64) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

/// `num` alone for Laurent values, otherwise `(num)/(den)`.
impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return write!(f, "{}", self.num);
        }
        let paren = |p: &LaurentPoly| !(p.is_monomial() && !p.coeff(p.min_exp().unwrap()).is_negative());
        if paren(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if paren(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_laurent(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return RationalFn::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFn::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFn::from_laurent(&self.num * &rhs.num);
        }
        RationalFn::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RationalFn::checked_div`] otherwise.
impl Div<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("division by zero in Q(A)")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -self.num, den: self.den }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: RationalFn) -> RationalFn { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, rhs: &RationalFn) -> RationalFn { (&self).$m(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul, Div div);

impl Zero for RationalFn {
    fn zero() -> Self {
        RationalFn::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFn {
    fn one() -> Self {
        RationalFn::one()
    }
}
