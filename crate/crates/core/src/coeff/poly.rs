//! Dense integer polynomials, lowest degree first. Only the pieces needed
//! for exact division and gcd over `Q[A]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn degree(p: &[BigInt]) -> usize {
    p.len() - 1
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign = if p.last().unwrap().is_negative() { -c } else { c };
    p.iter().map(|x| x / &sign).collect()
}

/// Exact quotient `a / b` in `Z[x]`, or `None` when `b` does not divide `a`.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let db = degree(b);
    let lead = b.last().unwrap();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for i in (0..quot.len()).rev() {
        let top = &rem[i + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &q * bj;
        }
        quot[i] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(da-db+1)·a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = degree(b);
    let lead = b.last().unwrap().clone();
    while rem.len() > db && !rem.is_empty() {
        let dr = degree(&rem);
        let top = rem[dr].clone();
        for c in rem.iter_mut() {
            *c *= &lead;
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &top * bj;
        }
        trim(&mut rem);
    }
    rem
}

/// gcd over `Q[x]`, returned as a primitive integer polynomial with
/// positive leading coefficient (primitive PRS).
pub(crate) fn gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = primitive(a);
    let mut b = primitive(b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            return vec![BigInt::from(1)];
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // x^8 - 1 and x^4 - 1 share x^4 - 1
        let a = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let b = p(&[-1, 0, 0, 0, 1]);
        assert_eq!(gcd(&a, &b), b);
        // (x^2+1) and (x+1) are coprime
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn gcd_ignores_integer_content() {
        let a = p(&[2, 2]); // 2(x+1)
        let b = p(&[-3, 0, 3]); // 3(x^2-1)
        assert_eq!(gcd(&a, &b), p(&[1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]);
        let b = p(&[-1, 0, 0, 0, 1]);
        assert_eq!(div_exact(&a, &b), Some(p(&[1, 0, 0, 0, 1])));
        assert_eq!(div_exact(&b, &a), None);
        assert_eq!(div_exact(&p(&[1, 2]), &p(&[0, 2])), None);
    }
}
