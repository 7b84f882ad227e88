use std::fmt;

use super::TlError;

/// A boundary point of a Temperley–Lieb box, numbered from 1 top-to-bottom
/// on each side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    L(usize),
    R(usize),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::L(i) => write!(f, "L{i}"),
            Point::R(i) => write!(f, "R{i}"),
        }
    }
}

/// A crossingless matching between `m` left and `n` right boundary points.
///
/// Points are indexed `0..m` for `L1..Lm` and `m..m+n` for `R1..Rn`;
/// `pairing[i]` is the index matched with `i`. The derived ordering (by
/// `m`, `n`, then pairing sequence) is the basis order used everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagram {
    m: usize,
    n: usize,
    pairing: Vec<u16>,
}

/// Result of [`Diagram::through_structure`]: `front ∘ back` recovers the
/// diagram with no closed loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThroughFactorization {
    pub through: usize,
    pub front: Diagram,
    pub back: Diagram,
}

impl Diagram {
    /// Builds a diagram from a partner table, checking that it is a
    /// perfect, crossingless matching.
    pub fn new(m: usize, n: usize, pairing: Vec<usize>) -> Result<Self, TlError> {
        if !(m + n).is_multiple_of(2) {
            return Err(TlError::OddBoundary { m, n });
        }
        if pairing.len() != m + n || m + n > u16::MAX as usize {
            return Err(TlError::InvalidPairing(format!("expected {} entries, got {}", m + n, pairing.len())));
        }
        for (i, &j) in pairing.iter().enumerate() {
            if j >= m + n || j == i || pairing[j] != i {
                return Err(TlError::InvalidPairing(format!("point {i} is not matched consistently")));
            }
        }
        let d = Self::from_raw(m, n, pairing);
        if let Some((a, b)) = d.find_crossing() {
            return Err(TlError::Crossing(format!(
                "{}-{} crosses {}-{}",
                d.point(a.0),
                d.point(a.1),
                d.point(b.0),
                d.point(b.1)
            )));
        }
        Ok(d)
    }

    /// Builds a diagram from explicit point pairs.
    pub fn from_pairs(m: usize, n: usize, pairs: &[(Point, Point)]) -> Result<Self, TlError> {
        let mut pairing = vec![usize::MAX; m + n];
        let idx = |p: Point| -> Result<usize, TlError> {
            match p {
                Point::L(i) if (1..=m).contains(&i) => Ok(i - 1),
                Point::R(j) if (1..=n).contains(&j) => Ok(m + j - 1),
                _ => Err(TlError::InvalidPairing(format!("{p} is out of range"))),
            }
        };
        for &(a, b) in pairs {
            let (a, b) = (idx(a)?, idx(b)?);
            if pairing[a] != usize::MAX || pairing[b] != usize::MAX {
                return Err(TlError::InvalidPairing("point used twice".into()));
            }
            pairing[a] = b;
            pairing[b] = a;
        }
        if pairing.contains(&usize::MAX) {
            return Err(TlError::InvalidPairing("some points are unmatched".into()));
        }
        Self::new(m, n, pairing)
    }

    pub(crate) fn from_raw(m: usize, n: usize, pairing: Vec<usize>) -> Self {
        Self { m, n, pairing: pairing.into_iter().map(|x| x as u16).collect() }
    }

    /// `Id_k`: every `L_j` joined to `R_j`.
    pub fn identity(k: usize) -> Self {
        let pairing = (0..2 * k).map(|i| if i < k { i + k } else { i - k }).collect();
        Self::from_raw(k, k, pairing)
    }

    /// `e_i` in `TL_k`: caps `L_i L_{i+1}` and `R_i R_{i+1}`, all other
    /// strands straight through.
    pub fn generator(k: usize, i: usize) -> Result<Self, TlError> {
        if i == 0 || i >= k {
            return Err(TlError::GeneratorIndex { k, i });
        }
        let mut pairing: Vec<usize> = (0..2 * k).map(|x| if x < k { x + k } else { x - k }).collect();
        let (a, b) = (i - 1, i);
        pairing[a] = b;
        pairing[b] = a;
        pairing[k + a] = k + b;
        pairing[k + b] = k + a;
        Ok(Self::from_raw(k, k, pairing))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_square(&self) -> bool {
        self.m == self.n
    }

    pub(crate) fn partner(&self, i: usize) -> usize {
        self.pairing[i] as usize
    }

    pub fn point(&self, i: usize) -> Point {
        if i < self.m {
            Point::L(i + 1)
        } else {
            Point::R(i - self.m + 1)
        }
    }

    pub(crate) fn index(&self, p: Point) -> usize {
        match p {
            Point::L(i) => i - 1,
            Point::R(j) => self.m + j - 1,
        }
    }

    /// The partner of a boundary point.
    pub fn matched(&self, p: Point) -> Point {
        self.point(self.partner(self.index(p)))
    }

    /// Each pair once, ordered by its first point (`L` before `R`).
    pub fn pairs(&self) -> Vec<(Point, Point)> {
        (0..self.m + self.n)
            .filter(|&i| i < self.partner(i))
            .map(|i| (self.point(i), self.point(self.partner(i))))
            .collect()
    }

    /// Position of a point in the boundary cyclic order `L1..Lm, Rn..R1`.
    fn cyclic_pos(&self, i: usize) -> usize {
        if i < self.m {
            i
        } else {
            self.m + self.n - 1 - (i - self.m)
        }
    }

    fn find_crossing(&self) -> Option<((usize, usize), (usize, usize))> {
        let chords: Vec<(usize, usize, usize, usize)> = (0..self.m + self.n)
            .filter(|&i| i < self.partner(i))
            .map(|i| {
                let (a, b) = (self.cyclic_pos(i), self.cyclic_pos(self.partner(i)));
                let (a, b) = if a < b { (a, b) } else { (b, a) };
                (a, b, i, self.partner(i))
            })
            .collect();
        for (x, c1) in chords.iter().enumerate() {
            for c2 in &chords[x + 1..] {
                let cross = (c1.0 < c2.0 && c2.0 < c1.1 && c1.1 < c2.1) || (c2.0 < c1.0 && c1.0 < c2.1 && c2.1 < c1.1);
                if cross {
                    return Some(((c1.2, c1.3), (c2.2, c2.3)));
                }
            }
        }
        None
    }

    pub fn is_crossingless(&self) -> bool {
        self.find_crossing().is_none()
    }

    /// Number of strands joining the left side to the right side.
    pub fn through_degree(&self) -> usize {
        (0..self.m).filter(|&i| self.partner(i) >= self.m).count()
    }

    /// Glues the right boundary of `self` to the left boundary of `other`.
    /// Returns the resulting diagram and the number of closed loops
    /// created.
    pub fn compose(&self, other: &Diagram) -> Result<(Diagram, usize), TlError> {
        if self.n != other.m {
            return Err(TlError::ShapeMismatch { left: (self.m, self.n), right: (other.m, other.n) });
        }
        let (m, mid, p) = (self.m, self.n, other.n);
        let mut result = vec![usize::MAX; m + p];
        let mut seen = vec![false; mid];

        // Follow a path entering the middle at `j` from the given side
        // until it exits on an outer boundary.
        let walk = |mut j: usize, mut from_left: bool, seen: &mut Vec<bool>| -> usize {
            loop {
                seen[j] = true;
                if from_left {
                    // currently at middle point j, continue inside `other`
                    let t = other.partner(j);
                    if t >= mid {
                        return m + (t - mid);
                    }
                    j = t;
                    seen[j] = true;
                    from_left = false;
                } else {
                    let t = self.partner(m + j);
                    if t < m {
                        return t;
                    }
                    j = t - m;
                    seen[j] = true;
                    from_left = true;
                }
            }
        };

        for a in 0..m {
            if result[a] != usize::MAX {
                continue;
            }
            let t = self.partner(a);
            let end = if t < m { t } else { walk(t - m, true, &mut seen) };
            result[a] = end;
            result[end] = a;
        }
        for b in 0..p {
            if result[m + b] != usize::MAX {
                continue;
            }
            let t = other.partner(mid + b);
            let end = if t >= mid { m + (t - mid) } else { walk(t, false, &mut seen) };
            result[m + b] = end;
            result[end] = m + b;
        }

        let mut loops = 0;
        for start in 0..mid {
            if seen[start] {
                continue;
            }
            loops += 1;
            let mut j = start;
            loop {
                seen[j] = true;
                let t = self.partner(m + j) - m;
                seen[t] = true;
                j = other.partner(t);
                if j == start {
                    break;
                }
            }
        }
        Ok((Self::from_raw(m, p, result), loops))
    }

    /// Vertical stacking with `self` above `other`.
    pub fn tensor(&self, other: &Diagram) -> Diagram {
        let (m1, n1, m2, n2) = (self.m, self.n, other.m, other.n);
        let (m, n) = (m1 + m2, n1 + n2);
        let map1 = |i: usize| if i < m1 { i } else { m + (i - m1) };
        let map2 = |i: usize| if i < m2 { m1 + i } else { m + n1 + (i - m2) };
        let mut pairing = vec![0; m + n];
        for i in 0..m1 + n1 {
            pairing[map1(i)] = map1(self.partner(i));
        }
        for i in 0..m2 + n2 {
            pairing[map2(i)] = map2(other.partner(i));
        }
        Self::from_raw(m, n, pairing)
    }

    /// Left–right reflection, `TL(m,n) → TL(n,m)`.
    pub fn transpose(&self) -> Diagram {
        let (m, n) = (self.m, self.n);
        let f = |i: usize| if i < m { n + i } else { i - m };
        let mut pairing = vec![0; m + n];
        for i in 0..m + n {
            pairing[f(i)] = f(self.partner(i));
        }
        Self::from_raw(n, m, pairing)
    }

    /// Top–bottom reflection: `L_j ↦ L_{m+1-j}`, `R_j ↦ R_{n+1-j}`.
    pub fn flip(&self) -> Diagram {
        let (m, n) = (self.m, self.n);
        let f = |i: usize| if i < m { m - 1 - i } else { m + (n - 1 - (i - m)) };
        let mut pairing = vec![0; m + n];
        for i in 0..m + n {
            pairing[f(i)] = f(self.partner(i));
        }
        Self::from_raw(m, n, pairing)
    }

    /// Factors the diagram through its bundle of through strands.
    pub fn through_structure(&self) -> ThroughFactorization {
        let (m, n) = (self.m, self.n);
        let through: Vec<(usize, usize)> =
            (0..m).filter(|&i| self.partner(i) >= m).map(|i| (i, self.partner(i) - m)).collect();
        let t = through.len();

        let mut front = vec![0; m + t];
        for (i, slot) in front.iter_mut().enumerate().take(m) {
            let p = self.partner(i);
            if p < m {
                *slot = p;
            }
        }
        for (slot, &(l, _)) in through.iter().enumerate() {
            front[l] = m + slot;
            front[m + slot] = l;
        }

        let mut back = vec![0; t + n];
        for j in 0..n {
            let p = self.partner(m + j);
            if p >= m {
                back[t + j] = t + (p - m);
            }
        }
        for (slot, &(_, r)) in through.iter().enumerate() {
            back[slot] = t + r;
            back[t + r] = slot;
        }

        ThroughFactorization { through: t, front: Self::from_raw(m, t, front), back: Self::from_raw(t, n, back) }
    }

    /// `[(L1,R1),(L2,L3),...]`.
    pub fn raw_string(&self) -> String {
        let body: Vec<String> = self.pairs().iter().map(|(a, b)| format!("({a},{b})")).collect();
        format!("[{}]", body.join(","))
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({}x{} {})", self.m, self.n, self.raw_string())
    }
}

/// All crossingless matchings of `TL(m, n)` in basis order.
pub fn enumerate_basis(m: usize, n: usize) -> Result<Vec<Diagram>, TlError> {
    if !(m + n).is_multiple_of(2) {
        return Err(TlError::OddBoundary { m, n });
    }
    let total = m + n;
    // cyclic position -> point index
    let to_index = |pos: usize| if pos < m { pos } else { m + (total - 1 - pos) };
    let mut out = Vec::new();
    let mut chords = vec![usize::MAX; total];
    // non-crossing perfect matchings of points on a line
    fn matchings(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let mut res = Vec::new();
        let first = points[0];
        for j in (1..points.len()).step_by(2) {
            let inside = &points[1..j];
            let outside = &points[j + 1..];
            for a in matchings(inside) {
                for b in matchings(outside) {
                    let mut v = Vec::with_capacity(points.len() / 2);
                    v.push((first, points[j]));
                    v.extend_from_slice(&a);
                    v.extend_from_slice(&b);
                    res.push(v);
                }
            }
        }
        res
    }
    let positions: Vec<usize> = (0..total).collect();
    for matching in matchings(&positions) {
        for &(a, b) in &matching {
            let (i, j) = (to_index(a), to_index(b));
            chords[i] = j;
            chords[j] = i;
        }
        out.push(Diagram::from_raw(m, n, chords.clone()));
    }
    out.sort();
    Ok(out)
}
