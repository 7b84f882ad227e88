use std::collections::BTreeSet;

use num_traits::Signed;

use super::geom::{cross, dot, q, Pt, Rect, Q};
use super::multicurve::{canonical_cyclic, cyclic_reduce, Curve, Letter, Multicurve, SkeinVector};
use super::scenario::{marked_point, Scenario, Strand};
use super::SurfaceError;
use crate::coeff::LaurentPoly;
use crate::tl::{Diagram, Point, TlElement};

/// The result of closing up one diagram: `δ^delta_power · multicurve`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub delta_power: u32,
    pub multicurve: Multicurve,
}

impl Glued {
    pub fn coefficient(&self) -> LaurentPoly {
        LaurentPoly::delta().pow(self.delta_power)
    }

    /// Closed components, trivial ones included.
    pub fn components(&self) -> usize {
        self.delta_power as usize + self.multicurve.len()
    }
}

fn check_shape(s: &Scenario, m: usize, n: usize) -> Result<(), SurfaceError> {
    if m != s.k || n != s.k {
        return Err(SurfaceError::Shape { k: s.k, m, n });
    }
    Ok(())
}

/// Draws a square diagram inside `tl_box` as crossingless polylines.
///
/// Caps hug their own edge at an offset proportional to nesting depth and
/// stay in the outer quarters of the box; through strands run level from
/// the edges to the quarter lines and cross the middle half diagonally.
pub fn embed_box_diagram(d: &Diagram, tl_box: &Rect) -> Vec<Strand> {
    let k = d.m();
    let w = &tl_box.x1 - &tl_box.x0;
    let quarter = &w / q(4);
    let xl = &tl_box.x0 + &quarter;
    let xr = &tl_box.x1 - &quarter;
    let step = &quarter / q(k as i64 / 2 + 1);
    let at = |p: Point| marked_point(tl_box, k, p);
    let pairs = d.pairs();
    // depth of a cap = 1 + depth of the deepest cap nested inside it
    let span = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut caps: Vec<(bool, usize, usize)> = pairs
        .iter()
        .filter_map(|&(x, y)| match (x, y) {
            (Point::L(a), Point::L(b)) => Some((true, span(a, b).0, span(a, b).1)),
            (Point::R(a), Point::R(b)) => Some((false, span(a, b).0, span(a, b).1)),
            _ => None,
        })
        .collect();
    caps.sort_by_key(|c| c.2 - c.1);
    let mut depth: Vec<usize> = Vec::with_capacity(caps.len());
    for (i, c) in caps.iter().enumerate() {
        let inner = caps[..i]
            .iter()
            .zip(&depth)
            .filter(|(o, _)| o.0 == c.0 && c.1 < o.1 && o.2 < c.2)
            .map(|(_, dd)| *dd)
            .max()
            .unwrap_or(0);
        depth.push(inner + 1);
    }
    let cap_depth = |left: bool, a: usize, b: usize| {
        let (a, b) = span(a, b);
        caps.iter().position(|c| *c == (left, a, b)).map(|i| depth[i]).unwrap()
    };

    pairs
        .into_iter()
        .map(|(from, to)| {
            let (p, r) = (at(from), at(to));
            let points = match (from, to) {
                (Point::L(a), Point::L(b)) => {
                    let x = &tl_box.x0 + &step * q(cap_depth(true, a, b) as i64);
                    vec![p.clone(), Pt::new(x.clone(), p.y), Pt::new(x, r.y.clone()), r]
                }
                (Point::R(a), Point::R(b)) => {
                    let x = &tl_box.x1 - &step * q(cap_depth(false, a, b) as i64);
                    vec![p.clone(), Pt::new(x.clone(), p.y), Pt::new(x, r.y.clone()), r]
                }
                (Point::L(_), Point::R(_)) => {
                    vec![p.clone(), Pt::new(xl.clone(), p.y), Pt::new(xr.clone(), r.y.clone()), r]
                }
                (Point::R(_), Point::L(_)) => {
                    vec![p.clone(), Pt::new(xr.clone(), p.y), Pt::new(xl.clone(), r.y.clone()), r]
                }
            };
            Strand { from, to, points }
        })
        .collect()
}

/// The polyline of the strand through `p`, oriented away from `p`, and
/// the marked point at its other end.
fn leave(strands: &[Strand], p: Point) -> (Vec<Pt>, Point) {
    for s in strands {
        if s.from == p {
            return (s.points.clone(), s.to);
        }
        if s.to == p {
            return (s.points.iter().rev().cloned().collect(), s.from);
        }
    }
    unreachable!("every marked point lies on a strand")
}

/// The closed polygons formed by the scenario's outside arcs and the box
/// drawing of `d`, as cyclic vertex lists.
pub fn closed_curves(s: &Scenario, d: &Diagram) -> Result<Vec<Vec<Pt>>, SurfaceError> {
    check_shape(s, d.m(), d.n())?;
    let inside = embed_box_diagram(d, &s.tl_box);
    let mut seen: BTreeSet<Point> = BTreeSet::new();
    let mut curves = Vec::new();
    for start in (1..=s.k).map(Point::L).chain((1..=s.k).map(Point::R)) {
        if seen.contains(&start) {
            continue;
        }
        let mut poly: Vec<Pt> = Vec::new();
        let mut cur = start;
        loop {
            let (pts, mid) = leave(&inside, cur);
            poly.extend_from_slice(&pts[..pts.len() - 1]);
            let (pts, next) = leave(&s.arcs, mid);
            poly.extend_from_slice(&pts[..pts.len() - 1]);
            seen.extend([cur, mid]);
            cur = next;
            if cur == start {
                break;
            }
        }
        curves.push(poly);
    }
    Ok(curves)
}

/// Whether the closed polygon separates `at` from infinity, by the parity
/// of its crossings with the ray from `at` along `dir`.
pub fn encloses(poly: &[Pt], at: &Pt, dir: &(Q, Q)) -> bool {
    let mut odd = false;
    for i in 0..poly.len() {
        if ray_crossing(&poly[i], &poly[(i + 1) % poly.len()], at, dir).is_some() {
            odd = !odd;
        }
    }
    odd
}

/// Crossing of the segment `ab` with the ray from `at` along `dir`: edge
/// parameter and direction, `+1` when passing counterclockwise around
/// `at`. Points on the ray's line count as lying on its positive side.
fn ray_crossing(a: &Pt, b: &Pt, at: &Pt, dir: &(Q, Q)) -> Option<(Q, i32)> {
    let ca = cross(dir, &a.sub(at));
    let cb = cross(dir, &b.sub(at));
    let (pa, pb) = (!ca.is_negative(), !cb.is_negative());
    if pa == pb {
        return None;
    }
    let e = b.sub(a);
    let t = -&ca / cross(dir, &e);
    let x = Pt::new(&a.x + &t * &e.0, &a.y + &t * &e.1);
    dot(dir, &x.sub(at)).is_positive().then_some((t, if pb { 1 } else { -1 }))
}

/// The word read off the puncture cuts while traversing the polygon.
pub fn cut_word(s: &Scenario, poly: &[Pt]) -> Vec<Letter> {
    let mut word = Vec::new();
    for i in 0..poly.len() {
        let (a, b) = (&poly[i], &poly[(i + 1) % poly.len()]);
        let mut hits: Vec<(Q, Letter)> = s
            .punctures
            .iter()
            .enumerate()
            .filter_map(|(j, p)| ray_crossing(a, b, &p.at, &p.ray).map(|(t, e)| (t, (j, e))))
            .collect();
        hits.sort();
        word.extend(hits.into_iter().map(|(_, l)| l));
    }
    word
}

/// Isotopy class of a simple closed polygon; `None` when it bounds a disc.
pub fn classify(s: &Scenario, poly: &[Pt]) -> Option<Curve> {
    let word = cyclic_reduce(&cut_word(s, poly));
    let mut sums = vec![0i32; s.punctures.len()];
    for &(g, e) in &word {
        sums[g] += e;
    }
    let inside: Vec<usize> = (0..sums.len()).filter(|&j| sums[j] != 0).collect();
    for (j, p) in s.punctures.iter().enumerate() {
        let back = (-p.ray.0.clone(), -p.ray.1.clone());
        let by_parity = encloses(poly, &p.at, &p.ray);
        assert!(
            by_parity == inside.contains(&j) && by_parity == encloses(poly, &p.at, &back),
            "glued curve is not simple around puncture {}",
            p.label
        );
    }
    let labels: Vec<String> = inside.iter().map(|&j| s.punctures[j].label.clone()).collect();
    match word.len() {
        0 => return None,
        1 => return Some(Curve::peripheral(word[0].0, &s.punctures[word[0].0].label, labels)),
        _ => {}
    }
    let round: Vec<Letter> = s.ray_order.iter().filter(|j| inside.contains(j)).map(|&j| (j, 1)).collect();
    let canon = canonical_cyclic(&word);
    if canon == canonical_cyclic(&round) {
        if inside.len() == s.punctures.len() {
            return Some(Curve::peripheral(s.punctures.len(), &s.outer_label, labels));
        }
        return Some(Curve::round(round.iter().map(|l| l.0).collect(), labels));
    }
    let text: Vec<String> = canon
        .iter()
        .map(|&(g, e)| {
            let l = &s.punctures[g].label;
            if e == 1 {
                l.clone()
            } else {
                format!("{l}^-1")
            }
        })
        .collect();
    Some(Curve::winding(canon, format!("<{}>", text.join(" ")), labels))
}

/// Closes `d` up with the scenario's arcs. Results are cached per scenario.
pub fn glue(s: &Scenario, d: &Diagram) -> Result<Glued, SurfaceError> {
    check_shape(s, d.m(), d.n())?;
    if let Some(g) = s.cache.lock().unwrap().get(d) {
        return Ok(g.clone());
    }
    let mut g = Glued { delta_power: 0, multicurve: Multicurve::empty() };
    for poly in closed_curves(s, d)? {
        match classify(s, &poly) {
            Some(c) => g.multicurve.insert(c),
            None => g.delta_power += 1,
        }
    }
    s.cache.lock().unwrap().insert(d.clone(), g.clone());
    Ok(g)
}

/// The linear extension of [`glue`].
pub fn rho_star(s: &Scenario, x: &TlElement) -> Result<SkeinVector, SurfaceError> {
    check_shape(s, x.m(), x.n())?;
    let mut out = SkeinVector::zero();
    for (d, c) in x.terms() {
        let g = glue(s, d)?;
        out.add_term(c * &g.coefficient(), g.multicurve);
    }
    Ok(out)
}
