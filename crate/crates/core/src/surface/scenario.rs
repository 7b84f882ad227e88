use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use super::geom::{dot, on_segment, orient, q, segment_intersection, Pt, Rect, Q};
use super::glue::Glued;
use super::SurfaceError;
use crate::tl::{Diagram, Point};

/// A rational coordinate written as an integer or a `"p/q"` string.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    fn value(&self, what: &str) -> Result<Q, SurfaceError> {
        let bad = || SurfaceError::Schema(format!("{what}: `{self:?}` is not a rational number"));
        match self {
            Coord::Int(n) => Ok(q(*n)),
            Coord::Text(s) => {
                let s = s.trim();
                let (n, d) = match s.split_once('/') {
                    Some((n, d)) => (n.trim(), d.trim()),
                    None => (s, "1"),
                };
                let n: BigInt = n.parse().map_err(|_| bad())?;
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(SurfaceError::Schema(format!("{what}: zero denominator in `{s}`")));
                }
                Ok(Q::new(n, d))
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    description: Option<String>,
    punctures: Vec<RawPuncture>,
    outer: RawOuter,
    #[serde(rename = "box")]
    tl_box: RawBox,
    arcs: Vec<RawArc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPuncture {
    label: String,
    x: Coord,
    y: Coord,
    #[serde(default)]
    ray: Option<[Coord; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOuter {
    x0: Coord,
    y0: Coord,
    x1: Coord,
    y1: Coord,
    #[serde(default)]
    label: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBox {
    x0: Coord,
    y0: Coord,
    x1: Coord,
    y1: Coord,
    k: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawArc {
    from: String,
    to: String,
    points: Vec<[Coord; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Puncture {
    pub label: String,
    pub at: Pt,
    /// Direction of the cut from the puncture to the outer boundary.
    pub ray: (Q, Q),
}

/// A polyline joining two marked points, listed from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strand {
    pub from: Point,
    pub to: Point,
    pub points: Vec<Pt>,
}

/// A validated planar scenario: punctured disc, Temperley–Lieb box and
/// the outside curve system.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub description: String,
    pub punctures: Vec<Puncture>,
    pub outer: Rect,
    pub outer_label: String,
    pub tl_box: Rect,
    pub k: usize,
    pub arcs: Vec<Strand>,
    /// Puncture indices in the counterclockwise order in which their rays
    /// reach the outer boundary.
    pub(crate) ray_order: Vec<usize>,
    pub(crate) cache: Arc<Mutex<HashMap<Diagram, Glued>>>,
}

fn parse_point_name(s: &str, k: usize) -> Result<Point, SurfaceError> {
    let bad = || SurfaceError::Schema(format!("marked point `{s}` is not L1..L{k} or R1..R{k}"));
    let (side, num) = s.split_at(1.min(s.len()));
    let i: usize = num.parse().map_err(|_| bad())?;
    if !(1..=k).contains(&i) {
        return Err(bad());
    }
    match side {
        "L" => Ok(Point::L(i)),
        "R" => Ok(Point::R(i)),
        _ => Err(bad()),
    }
}

impl Scenario {
    pub fn from_json_str(text: &str) -> Result<Self, SurfaceError> {
        let raw: RawScenario = serde_json::from_str(text).map_err(|e| SurfaceError::Schema(e.to_string()))?;
        Self::from_raw(raw)
    }

    pub fn load(path: &Path) -> Result<Self, SurfaceError> {
        let text = std::fs::read_to_string(path).map_err(|e| SurfaceError::Io(format!("{}: {e}", path.display())))?;
        let mut s = Self::from_json_str(&text)?;
        if s.name.is_empty() {
            s.name = path.file_stem().map(|x| x.to_string_lossy().into_owned()).unwrap_or_default();
        }
        Ok(s)
    }

    fn from_raw(raw: RawScenario) -> Result<Self, SurfaceError> {
        let rect = |x0: &Coord, y0: &Coord, x1: &Coord, y1: &Coord, what: &str| -> Result<Rect, SurfaceError> {
            let r = Rect {
                x0: x0.value(&format!("{what}.x0"))?,
                y0: y0.value(&format!("{what}.y0"))?,
                x1: x1.value(&format!("{what}.x1"))?,
                y1: y1.value(&format!("{what}.y1"))?,
            };
            if r.x0 >= r.x1 || r.y0 >= r.y1 {
                return Err(SurfaceError::Geometry(format!("{what} must satisfy x0 < x1 and y0 < y1")));
            }
            Ok(r)
        };
        let outer = rect(&raw.outer.x0, &raw.outer.y0, &raw.outer.x1, &raw.outer.y1, "outer")?;
        let b = &raw.tl_box;
        let tl_box = rect(&b.x0, &b.y0, &b.x1, &b.y1, "box")?;
        let k = b.k;
        if k == 0 {
            return Err(SurfaceError::Schema("box.k must be at least 1".into()));
        }
        if !(outer.contains_strictly(&Pt::new(tl_box.x0.clone(), tl_box.y0.clone()))
            && outer.contains_strictly(&Pt::new(tl_box.x1.clone(), tl_box.y1.clone())))
        {
            return Err(SurfaceError::Geometry("box must lie strictly inside outer".into()));
        }

        let center = Pt::new((&tl_box.x0 + &tl_box.x1) / q(2), (&tl_box.y0 + &tl_box.y1) / q(2));
        let mut punctures = Vec::new();
        for (i, p) in raw.punctures.iter().enumerate() {
            let at = Pt::new(p.x.value(&format!("punctures[{i}].x"))?, p.y.value(&format!("punctures[{i}].y"))?);
            if p.label.is_empty() || punctures.iter().any(|o: &Puncture| o.label == p.label) {
                return Err(SurfaceError::Schema(format!("puncture label `{}` is empty or repeated", p.label)));
            }
            if !outer.contains_strictly(&at) {
                return Err(SurfaceError::Geometry(format!("puncture {} at {at} is not inside outer", p.label)));
            }
            if tl_box.contains_closed(&at) {
                return Err(SurfaceError::Geometry(format!("puncture {} at {at} is inside the box", p.label)));
            }
            let ray = match &p.ray {
                Some([dx, dy]) => {
                    let d = (dx.value("ray.x")?, dy.value("ray.y")?);
                    if d.0.is_zero() && d.1.is_zero() {
                        return Err(SurfaceError::Schema(format!("puncture {} has a zero ray", p.label)));
                    }
                    d
                }
                None => default_ray(&at, &center),
            };
            punctures.push(Puncture { label: p.label.clone(), at, ray });
        }
        if punctures.is_empty() {
            return Err(SurfaceError::Schema("at least one puncture is required".into()));
        }
        let outer_label = raw.outer.label.clone().unwrap_or_else(|| format!("a{}", punctures.len() + 1));
        if punctures.iter().any(|p| p.label == outer_label) {
            return Err(SurfaceError::Schema(format!("outer label `{outer_label}` repeats a puncture label")));
        }

        let mut s = Self {
            name: raw.name.clone().unwrap_or_default(),
            description: raw.description.clone().unwrap_or_default(),
            punctures,
            outer,
            outer_label,
            tl_box,
            k,
            arcs: Vec::new(),
            ray_order: Vec::new(),
            cache: Arc::default(),
        };

        let mut used: BTreeMap<Point, usize> = BTreeMap::new();
        for (ai, a) in raw.arcs.iter().enumerate() {
            let from = parse_point_name(&a.from, k)?;
            let to = parse_point_name(&a.to, k)?;
            if from == to {
                return Err(SurfaceError::Geometry(format!("arc {ai} joins {from} to itself")));
            }
            for p in [from, to] {
                if let Some(prev) = used.insert(p, ai) {
                    return Err(SurfaceError::Geometry(format!("marked point {p} is used by arcs {prev} and {ai}")));
                }
            }
            let mut points = Vec::new();
            for (j, xy) in a.points.iter().enumerate() {
                points.push(Pt::new(
                    xy[0].value(&format!("arcs[{ai}].points[{j}].x"))?,
                    xy[1].value(&format!("arcs[{ai}].points[{j}].y"))?,
                ));
            }
            s.arcs.push(Strand { from, to, points });
        }
        let all: Vec<Point> = (1..=k).map(Point::L).chain((1..=k).map(Point::R)).collect();
        if let Some(p) = all.iter().find(|p| !used.contains_key(p)) {
            return Err(SurfaceError::Geometry(format!("marked point {p} is not joined by any arc")));
        }
        s.validate_arcs()?;
        s.validate_rays()?;
        Ok(s)
    }

    pub fn marked_point(&self, p: Point) -> Pt {
        marked_point(&self.tl_box, self.k, p)
    }

    fn validate_arcs(&self) -> Result<(), SurfaceError> {
        let mut segs: Vec<(usize, usize, Pt, Pt)> = Vec::new();
        for (ai, a) in self.arcs.iter().enumerate() {
            let pts = &a.points;
            if pts.len() < 2 {
                return Err(SurfaceError::Geometry(format!("arc {} has fewer than two points", a.from)));
            }
            let (start, end) = (self.marked_point(a.from), self.marked_point(a.to));
            if pts[0] != start || pts[pts.len() - 1] != end {
                return Err(SurfaceError::Geometry(format!(
                    "arc {}-{} must start at {start} and end at {end}",
                    a.from, a.to
                )));
            }
            for p in &pts[1..pts.len() - 1] {
                if !self.outer.contains_strictly(p) {
                    return Err(SurfaceError::Geometry(format!("arc {}-{} leaves outer at {p}", a.from, a.to)));
                }
            }
            let last = pts.len() - 2;
            for (si, w) in pts.windows(2).enumerate() {
                if w[0] == w[1] {
                    return Err(SurfaceError::Geometry(format!("arc {}-{} repeats the point {}", a.from, a.to, w[0])));
                }
                // the segment may touch the box only at the arc's own endpoints
                if let Some((t0, t1)) = self.tl_box.clip(&w[0], &w[1]) {
                    let ok_start = si == 0 && t0 == q(0) && t1 == q(0);
                    let ok_end = si == last && t0 == q(1) && t1 == q(1);
                    if !(ok_start || ok_end) {
                        return Err(SurfaceError::Geometry(format!(
                            "arc {}-{} enters the box along {} -> {}",
                            a.from, a.to, w[0], w[1]
                        )));
                    }
                }
                for p in &self.punctures {
                    if on_segment(&p.at, &w[0], &w[1]) {
                        return Err(SurfaceError::Geometry(format!(
                            "arc {}-{} passes through puncture {} at {}",
                            a.from, a.to, p.label, p.at
                        )));
                    }
                }
                segs.push((ai, si, w[0].clone(), w[1].clone()));
            }
        }
        for (i, (a1, s1, p1, q1)) in segs.iter().enumerate() {
            for (a2, s2, p2, q2) in &segs[i + 1..] {
                let Some(x) = segment_intersection(p1, q1, p2, q2) else { continue };
                if a1 == a2 && s1 + 1 == *s2 {
                    // consecutive segments share their joint; they overlap
                    // only when the second one turns straight back
                    let back = orient(p1, q1, q2) == Ordering::Equal && dot(&q1.sub(p1), &q2.sub(q1)).is_negative();
                    if back {
                        let arc = &self.arcs[*a1];
                        return Err(SurfaceError::Geometry(format!("arc {}-{} doubles back at {x}", arc.from, arc.to)));
                    }
                    continue;
                }
                let (x1, x2) = (&self.arcs[*a1], &self.arcs[*a2]);
                return Err(SurfaceError::Geometry(format!(
                    "arcs {}-{} and {}-{} cross at {x}",
                    x1.from, x1.to, x2.from, x2.to
                )));
            }
        }
        Ok(())
    }

    fn validate_rays(&mut self) -> Result<(), SurfaceError> {
        let segs: Vec<(Pt, Pt)> =
            self.punctures.iter().map(|p| (p.at.clone(), self.outer.ray_exit(&p.at, &p.ray))).collect();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                if let Some(x) = segment_intersection(&segs[i].0, &segs[i].1, &segs[j].0, &segs[j].1) {
                    return Err(SurfaceError::Geometry(format!(
                        "cuts from punctures {} and {} meet at {x}; give one of them a different `ray`",
                        self.punctures[i].label, self.punctures[j].label
                    )));
                }
            }
        }
        let mut order: Vec<usize> = (0..segs.len()).collect();
        order.sort_by_key(|&i| self.outer.boundary_param(&segs[i].1));
        self.ray_order = order;
        Ok(())
    }

    pub fn labels(&self) -> Vec<&str> {
        self.punctures.iter().map(|p| p.label.as_str()).collect()
    }
}

/// Marked point coordinates: `k` points on each vertical edge of the box,
/// equally spaced, numbered top to bottom.
pub fn marked_point(tl_box: &Rect, k: usize, p: Point) -> Pt {
    let (x, j) = match p {
        Point::L(j) => (&tl_box.x0, j),
        Point::R(j) => (&tl_box.x1, j),
    };
    let step = (&tl_box.y1 - &tl_box.y0) / q(k as i64 + 1);
    Pt::new(x.clone(), &tl_box.y1 - step * q(j as i64))
}

/// Horizontal, pointing away from the box; vertical for punctures straight
/// above or below the box center.
fn default_ray(at: &Pt, center: &Pt) -> (Q, Q) {
    let dx = &at.x - &center.x;
    if !dx.is_zero() {
        return (q(if dx.is_positive() { 1 } else { -1 }), q(0));
    }
    let dy = &at.y - &center.y;
    (q(0), q(if dy.is_positive() { 1 } else { -1 }))
}
