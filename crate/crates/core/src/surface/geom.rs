//! Exact rational plane geometry: orientation, segment intersection and
//! clipping. No floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pt {
    pub x: Q,
    pub y: Q,
}

impl Pt {
    pub fn new(x: Q, y: Q) -> Self {
        Self { x, y }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Self { x: q(x), y: q(y) }
    }

    pub fn sub(&self, o: &Pt) -> (Q, Q) {
        (&self.x - &o.x, &self.y - &o.y)
    }
}

fn fmt_q(v: &Q) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

impl fmt::Display for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", fmt_q(&self.x), fmt_q(&self.y))
    }
}

pub fn cross(a: &(Q, Q), b: &(Q, Q)) -> Q {
    &a.0 * &b.1 - &a.1 * &b.0
}

pub fn dot(a: &(Q, Q), b: &(Q, Q)) -> Q {
    &a.0 * &b.0 + &a.1 * &b.1
}

/// Sign of the turn `a → b → c`.
pub fn orient(a: &Pt, b: &Pt, c: &Pt) -> Ordering {
    cross(&b.sub(a), &c.sub(a)).cmp(&Q::zero())
}

fn between(a: &Q, b: &Q, v: &Q) -> bool {
    (a <= v && v <= b) || (b <= v && v <= a)
}

/// `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Pt, a: &Pt, b: &Pt) -> bool {
    orient(a, b, p) == Ordering::Equal && between(&a.x, &b.x, &p.x) && between(&a.y, &b.y, &p.y)
}

/// Some point shared by the closed segments `ab` and `cd`, if any.
pub fn segment_intersection(a: &Pt, b: &Pt, c: &Pt, d: &Pt) -> Option<Pt> {
    let (o1, o2) = (orient(a, b, c), orient(a, b, d));
    let (o3, o4) = (orient(c, d, a), orient(c, d, b));
    if o1 != o2
        && o3 != o4
        && o1 != Ordering::Equal
        && o2 != Ordering::Equal
        && o3 != Ordering::Equal
        && o4 != Ordering::Equal
    {
        let r = b.sub(a);
        let s = d.sub(c);
        let t = cross(&c.sub(a), &s) / cross(&r, &s);
        return Some(Pt::new(&a.x + &t * &r.0, &a.y + &t * &r.1));
    }
    for (p, u, v) in [(c, a, b), (d, a, b), (a, c, d), (b, c, d)] {
        if on_segment(p, u, v) {
            return Some(p.clone());
        }
    }
    None
}

/// Axis-aligned rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rect {
    pub x0: Q,
    pub y0: Q,
    pub x1: Q,
    pub y1: Q,
}

impl Rect {
    pub fn contains_strictly(&self, p: &Pt) -> bool {
        self.x0 < p.x && p.x < self.x1 && self.y0 < p.y && p.y < self.y1
    }

    pub fn contains_closed(&self, p: &Pt) -> bool {
        self.x0 <= p.x && p.x <= self.x1 && self.y0 <= p.y && p.y <= self.y1
    }

    /// Parameter range `[t0, t1] ⊆ [0, 1]` of the segment `a + t(b - a)`
    /// inside the closed rectangle.
    pub fn clip(&self, a: &Pt, b: &Pt) -> Option<(Q, Q)> {
        let (dx, dy) = b.sub(a);
        let mut lo = q(0);
        let mut hi = q(1);
        let constraints = [
            (-dx.clone(), &a.x - &self.x0),
            (dx, &self.x1 - &a.x),
            (-dy.clone(), &a.y - &self.y0),
            (dy, &self.y1 - &a.y),
        ];
        // each constraint reads p·t <= r
        for (p, r) in constraints {
            if p.is_zero() {
                if r.is_negative() {
                    return None;
                }
                continue;
            }
            let t = &r / &p;
            if p.is_negative() {
                if t > lo {
                    lo = t;
                }
            } else if t < hi {
                hi = t;
            }
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// The point where the ray from an interior point `p` along `dir`
    /// leaves the rectangle.
    pub fn ray_exit(&self, p: &Pt, dir: &(Q, Q)) -> Pt {
        let mut best: Option<Q> = None;
        let mut consider = |t: Q| {
            if t.is_positive() && best.as_ref().is_none_or(|b| &t < b) {
                best = Some(t);
            }
        };
        if !dir.0.is_zero() {
            consider((&self.x0 - &p.x) / &dir.0);
            consider((&self.x1 - &p.x) / &dir.0);
        }
        if !dir.1.is_zero() {
            consider((&self.y0 - &p.y) / &dir.1);
            consider((&self.y1 - &p.y) / &dir.1);
        }
        let t = best.expect("direction is nonzero and p is interior");
        Pt::new(&p.x + &t * &dir.0, &p.y + &t * &dir.1)
    }

    /// Position along the boundary, counterclockwise from the bottom-left
    /// corner, for a point on the boundary.
    pub fn boundary_param(&self, p: &Pt) -> Q {
        let w = &self.x1 - &self.x0;
        let h = &self.y1 - &self.y0;
        if p.y == self.y0 {
            &p.x - &self.x0
        } else if p.x == self.x1 {
            &w + (&p.y - &self.y0)
        } else if p.y == self.y1 {
            &w + &h + (&self.x1 - &p.x)
        } else {
            &w + &w + &h + (&self.y1 - &p.y)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn proper_and_touching_intersections() {
        let p = segment_intersection(&Pt::int(0, 0), &Pt::int(2, 2), &Pt::int(0, 2), &Pt::int(2, 0));
        assert_eq!(p, Some(Pt::int(1, 1)));
        let t = segment_intersection(&Pt::int(0, 0), &Pt::int(2, 0), &Pt::int(2, 0), &Pt::int(3, 5));
        assert_eq!(t, Some(Pt::int(2, 0)));
        assert_eq!(segment_intersection(&Pt::int(0, 0), &Pt::int(1, 0), &Pt::int(2, 0), &Pt::int(3, 0)), None);
        assert!(segment_intersection(&Pt::int(0, 0), &Pt::int(2, 0), &Pt::int(1, 0), &Pt::int(3, 0)).is_some());
        let half = Pt::new(Q::new(1.into(), 2.into()), q(0));
        assert!(on_segment(&half, &Pt::int(0, 0), &Pt::int(1, 0)));
    }

    #[test]
    fn clipping() {
        let r = Rect { x0: q(0), y0: q(0), x1: q(2), y1: q(2) };
        assert_eq!(
            r.clip(&Pt::int(-1, 1), &Pt::int(3, 1)),
            Some((Q::new(1.into(), 4.into()), Q::new(3.into(), 4.into())))
        );
        assert_eq!(r.clip(&Pt::int(0, 1), &Pt::int(-3, 1)), Some((q(0), q(0))));
        assert_eq!(r.clip(&Pt::int(-1, 3), &Pt::int(3, 3)), None);
    }

    #[test]
    fn ray_exit_and_boundary_order() {
        let r = Rect { x0: q(-4), y0: q(-4), x1: q(4), y1: q(4) };
        let e = r.ray_exit(&Pt::int(1, 1), &(q(-1), q(0)));
        assert_eq!(e, Pt::int(-4, 1));
        assert!(r.boundary_param(&Pt::int(4, 0)) < r.boundary_param(&Pt::int(0, 4)));
        assert!(r.boundary_param(&Pt::int(0, 4)) < r.boundary_param(&Pt::int(-4, 0)));
    }
}
