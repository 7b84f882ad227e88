//! Coefficient rings: Laurent polynomials `Z[A^{±1}]` and the fraction
//! field `Q(A)`.

mod laurent;
pub(crate) mod poly;
mod rational;

pub use laurent::{LaurentPoly, Membership};
pub use rational::RationalFn;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("principal ideal generator must be nonzero")]
    ZeroGenerator,
}

/// `δ = -A^2 - A^-2`, the value of a trivial closed component.
pub fn delta() -> LaurentPoly {
    LaurentPoly::delta()
}

/// Joins `(label, coefficient)` terms as `A^-2*Id2 + (1 - A^4)*e1`; the
/// label `1` prints the coefficient alone and an empty sum prints `0`.
pub(crate) fn format_combination(parts: &[(String, &LaurentPoly)]) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (label, c)) in parts.iter().enumerate() {
        let negative = c.is_monomial() && c.leading_coeff().is_some_and(|x| x.sign() == num_bigint::Sign::Minus);
        let c = if negative { -*c } else { (*c).clone() };
        out.push_str(match (i, negative) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        if label == "1" {
            if c.is_monomial() || i == 0 && !negative {
                out.push_str(&c.to_string());
            } else {
                out.push_str(&format!("({c})"));
            }
        } else if c.is_one() {
            out.push_str(label);
        } else if c.is_monomial() {
            out.push_str(&format!("{c}*{label}"));
        } else {
            out.push_str(&format!("({c})*{label}"));
        }
    }
    out
}
