use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::coeff::{LaurentPoly, RationalFn};

use super::RelmodError;

/// A sparse vector over `Z[A^{±1}]` indexed by basis labels.
pub type SparseVec<L> = BTreeMap<L, LaurentPoly>;

/// Relations as rows over an explicit, ordered ambient basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationMatrix<L: Ord + Clone> {
    basis: Vec<L>,
    index: BTreeMap<L, usize>,
    rows: Vec<BTreeMap<usize, LaurentPoly>>,
}

impl<L: Ord + Clone + fmt::Display> RelationMatrix<L> {
    /// Rows over a given basis; every row label must occur in `basis`.
    pub fn new(basis: Vec<L>, rows: &[SparseVec<L>]) -> Result<Self, RelmodError> {
        let index: BTreeMap<L, usize> = basis.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        if index.len() != basis.len() {
            return Err(RelmodError::BasisMismatch("basis labels repeat".into()));
        }
        let mut m = Self { basis, index, rows: Vec::with_capacity(rows.len()) };
        for r in rows {
            let row = m.encode(r)?;
            m.rows.push(row);
        }
        Ok(m)
    }

    /// Rows over the sorted union of their supports and `extra`.
    pub fn spanning(rows: &[SparseVec<L>], extra: impl IntoIterator<Item = L>) -> Self {
        let mut labels: Vec<L> = rows.iter().flat_map(|r| r.keys().cloned()).chain(extra).collect();
        labels.sort();
        labels.dedup();
        Self::new(labels, rows).expect("basis covers every row")
    }

    fn encode(&self, v: &SparseVec<L>) -> Result<BTreeMap<usize, LaurentPoly>, RelmodError> {
        let mut out = BTreeMap::new();
        for (l, c) in v {
            if c.is_zero() {
                continue;
            }
            let i = self
                .index
                .get(l)
                .ok_or_else(|| RelmodError::BasisMismatch(format!("label {l} is not in the basis")))?;
            out.insert(*i, c.clone());
        }
        Ok(out)
    }

    pub fn basis(&self) -> &[L] {
        &self.basis
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> SparseVec<L> {
        self.rows[i].iter().map(|(j, c)| (self.basis[*j].clone(), c.clone())).collect()
    }

    pub fn rows(&self) -> Vec<SparseVec<L>> {
        (0..self.rows.len()).map(|i| self.row(i)).collect()
    }
}

/// A witness for `target = Σ coefficients[i]·row[i] + residual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate<L: Ord> {
    pub coefficients: Vec<RationalFn>,
    pub residual: BTreeMap<L, RationalFn>,
    /// Every coefficient lies in `Z[A^{±1}]`.
    pub all_laurent: bool,
    /// The rows are independent over `Q(A)` once exact duplicates and unit
    /// multiples are set aside, so any other solution differs only by
    /// moving weight between such duplicates.
    pub unique: bool,
}

impl<L: Ord + Clone + fmt::Display> Certificate<L> {
    pub fn is_member(&self) -> bool {
        self.residual.is_empty()
    }

    /// Re-multiplies the certificate and compares with `target` exactly.
    pub fn verify(&self, target: &SparseVec<L>, rels: &RelationMatrix<L>) -> bool {
        if self.coefficients.len() != rels.num_rows() {
            return false;
        }
        let mut acc: BTreeMap<L, RationalFn> = self.residual.clone();
        for (c, row) in self.coefficients.iter().zip(&rels.rows) {
            if c.is_zero() {
                continue;
            }
            for (j, x) in row {
                let e = acc.entry(rels.basis[*j].clone()).or_insert_with(RationalFn::zero);
                *e = &*e + &(c * &RationalFn::from_laurent(x.clone()));
            }
        }
        acc.retain(|_, v| !v.is_zero());
        let want: BTreeMap<L, RationalFn> = target
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (l.clone(), RationalFn::from_laurent(c.clone())))
            .collect();
        acc == want
    }

    /// Nonzero coefficients with their row indices.
    pub fn support(&self) -> Vec<(usize, &RationalFn)> {
        self.coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
    }
}

type QRow = BTreeMap<usize, RationalFn>;

struct Pivot {
    row: QRow,
    cert: QRow,
}

/// Row echelon form over `Q(A)` with each pivot row expressed in the
/// original rows. A pivot row has no entries left of its pivot column and
/// a pivot entry of 1.
pub(crate) struct Echelon {
    pivots: Vec<Pivot>,
    pivot_at: BTreeMap<usize, usize>,
    num_rows: usize,
    kept: usize,
}

fn sub_scaled(v: &mut QRow, f: &RationalFn, w: &QRow) {
    for (c, x) in w {
        let d = f * x;
        match v.get_mut(c) {
            Some(y) => {
                *y = &*y - &d;
                if y.is_zero() {
                    v.remove(c);
                }
            }
            None => {
                v.insert(*c, -d);
            }
        }
    }
}

/// Scales a row so that its first entry is a unit-normalized polynomial;
/// rows equal after this are unit multiples of each other.
fn unit_normal(row: &BTreeMap<usize, LaurentPoly>) -> Vec<(usize, LaurentPoly)> {
    let Some((_, first)) = row.iter().next() else { return Vec::new() };
    let e = first.min_exp().unwrap();
    let sign = first.leading_coeff().unwrap().sign() == num_bigint::Sign::Minus;
    let u = LaurentPoly::monomial(if sign { -1 } else { 1 }, -e);
    row.iter().map(|(j, c)| (*j, c * &u)).collect()
}

impl Echelon {
    /// Eliminates the rows in order, skipping rows that repeat an earlier
    /// row up to a unit.
    pub(crate) fn build(rows: &[BTreeMap<usize, LaurentPoly>], order: &[usize]) -> Self {
        let mut seen: HashMap<Vec<(usize, LaurentPoly)>, usize> = HashMap::new();
        let mut e = Self { pivots: Vec::new(), pivot_at: BTreeMap::new(), num_rows: rows.len(), kept: 0 };
        for &i in order {
            let row = &rows[i];
            if row.is_empty() {
                continue;
            }
            if seen.insert(unit_normal(row), i).is_some() {
                continue;
            }
            e.kept += 1;
            let q: QRow = row.iter().map(|(j, c)| (*j, RationalFn::from_laurent(c.clone()))).collect();
            let (r, comb) = e.reduce(q);
            let Some((&c0, lead)) = r.iter().next() else { continue };
            let inv = lead.inverse().expect("pivot entries are nonzero");
            let row: QRow = r.iter().map(|(j, x)| (*j, x * &inv)).collect();
            let mut cert: QRow = comb.into_iter().map(|(j, x)| (j, -(x * &inv))).collect();
            cert.insert(i, inv);
            e.pivot_at.insert(c0, e.pivots.len());
            e.pivots.push(Pivot { row, cert });
        }
        e
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True when the kept rows are independent.
    pub(crate) fn independent(&self) -> bool {
        self.rank() == self.kept
    }

    /// Returns `(residual, combination)` with `v = residual + Σ comb[i]·row[i]`.
    fn reduce(&self, mut v: QRow) -> (QRow, QRow) {
        let mut comb: QRow = BTreeMap::new();
        let mut cursor = 0;
        loop {
            let next = v.range(cursor..).find(|(c, _)| self.pivot_at.contains_key(c)).map(|(c, x)| (*c, x.clone()));
            let Some((c, f)) = next else { break };
            let p = &self.pivots[self.pivot_at[&c]];
            sub_scaled(&mut v, &f, &p.row);
            for (i, x) in &p.cert {
                let d = &f * x;
                let e = comb.entry(*i).or_insert_with(RationalFn::zero);
                *e = &*e + &d;
                if e.is_zero() {
                    comb.remove(i);
                }
            }
            cursor = c + 1;
        }
        (v, comb)
    }

    pub(crate) fn certify<L: Ord + Clone + fmt::Display>(
        &self,
        target: &SparseVec<L>,
        rels: &RelationMatrix<L>,
    ) -> Result<Certificate<L>, RelmodError> {
        let t = rels.encode(target)?;
        let q: QRow = t.into_iter().map(|(j, c)| (j, RationalFn::from_laurent(c))).collect();
        let (r, comb) = self.reduce(q);
        let mut coefficients = vec![RationalFn::zero(); self.num_rows];
        for (i, c) in comb {
            coefficients[i] = c;
        }
        let all_laurent = coefficients.iter().all(RationalFn::is_laurent);
        Ok(Certificate {
            coefficients,
            residual: r.into_iter().map(|(j, x)| (rels.basis[j].clone(), x)).collect(),
            all_laurent,
            unique: self.independent(),
        })
    }
}

/// Decides `target ∈ span_{Q(A)}(rows)` by exact elimination.
pub fn span_membership<L: Ord + Clone + fmt::Display>(
    target: &SparseVec<L>,
    rels: &RelationMatrix<L>,
) -> Result<Certificate<L>, RelmodError> {
    Span::new(rels).qa(target)
}

/// A relation matrix with its elimination done once, for answering many
/// membership questions against the same rows.
pub struct Span<'a, L: Ord + Clone> {
    rels: &'a RelationMatrix<L>,
    forward: Echelon,
    reverse: OnceLock<Echelon>,
}

impl<'a, L: Ord + Clone + fmt::Display> Span<'a, L> {
    pub fn new(rels: &'a RelationMatrix<L>) -> Self {
        let order: Vec<usize> = (0..rels.num_rows()).collect();
        Self { rels, forward: Echelon::build(&rels.rows, &order), reverse: OnceLock::new() }
    }

    pub fn rank(&self) -> usize {
        self.forward.rank()
    }

    /// A target equal to a row gets that row's unit certificate; anything
    /// else goes through elimination.
    pub fn qa(&self, target: &SparseVec<L>) -> Result<Certificate<L>, RelmodError> {
        let encoded = self.rels.encode(target)?;
        if let Some(j) = self.rels.rows.iter().position(|r| !r.is_empty() && *r == encoded) {
            let mut coefficients = vec![RationalFn::zero(); self.rels.num_rows()];
            coefficients[j] = RationalFn::one();
            let unique = self.forward.independent();
            return Ok(Certificate { coefficients, residual: BTreeMap::new(), all_laurent: true, unique });
        }
        self.forward.certify(target, self.rels)
    }

    pub fn za(&self, target: &SparseVec<L>) -> Result<ZVerdict<L>, RelmodError> {
        let cert = self.qa(target)?;
        decide(cert, || {
            let rev = self.reverse.get_or_init(|| {
                let order: Vec<usize> = (0..self.rels.num_rows()).rev().collect();
                Echelon::build(&self.rels.rows, &order)
            });
            rev.certify(target, self.rels)
        })
    }
}

/// Outcome of a `Z[A^{±1}]`-membership question.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZDecision {
    Member,
    NonMember,
    Undecided,
}

impl fmt::Display for ZDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZDecision::Member => "member",
            ZDecision::NonMember => "non_member",
            ZDecision::Undecided => "undecided",
        })
    }
}

/// A `Z[A^{±1}]` verdict together with the `Q(A)` certificate behind it.
#[derive(Clone, Debug)]
pub struct ZVerdict<L: Ord> {
    pub decision: ZDecision,
    pub certificate: Certificate<L>,
    pub reason: &'static str,
}

/// Decides `target ∈ span_{Z[A^{±1}]}(rows)`.
///
/// Member when a Laurent certificate turns up; non-member when the target
/// is outside the `Q(A)`-span or the rows are independent and the unique
/// certificate is not Laurent. Dependent rows with only non-Laurent
/// certificates found (forward and reverse elimination order) are left
/// undecided.
pub fn z_span_decision<L: Ord + Clone + fmt::Display>(
    target: &SparseVec<L>,
    rels: &RelationMatrix<L>,
) -> Result<ZVerdict<L>, RelmodError> {
    Span::new(rels).za(target)
}

fn decide<L: Ord + Clone + fmt::Display>(
    cert: Certificate<L>,
    retry: impl FnOnce() -> Result<Certificate<L>, RelmodError>,
) -> Result<ZVerdict<L>, RelmodError> {
    if !cert.is_member() {
        return Ok(ZVerdict { decision: ZDecision::NonMember, certificate: cert, reason: "outside the Q(A)-span" });
    }
    if cert.all_laurent {
        return Ok(ZVerdict { decision: ZDecision::Member, certificate: cert, reason: "Laurent certificate" });
    }
    if cert.unique {
        return Ok(ZVerdict {
            decision: ZDecision::NonMember,
            certificate: cert,
            reason: "unique certificate is not Laurent",
        });
    }
    let other = retry()?;
    if other.all_laurent {
        return Ok(ZVerdict { decision: ZDecision::Member, certificate: other, reason: "Laurent certificate" });
    }
    Ok(ZVerdict {
        decision: ZDecision::Undecided,
        certificate: cert,
        reason: "dependent rows and no Laurent certificate found",
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn v(entries: &[(&'static str, LaurentPoly)]) -> SparseVec<&'static str> {
        entries.iter().cloned().collect()
    }

    #[test]
    fn zero_target_is_member() {
        let rels = RelationMatrix::spanning(&[v(&[("c1", lp(&[(0, 1)]))])], []);
        let cert = span_membership(&SparseVec::new(), &rels).unwrap();
        assert!(cert.is_member() && cert.all_laurent);
        assert!(cert.coefficients.iter().all(RationalFn::is_zero));
    }

    #[test]
    fn shared_lower_term_gives_non_laurent_certificate() {
        let a8 = lp(&[(8, 1), (0, -1)]);
        let ell = lp(&[(2, 1), (6, -1)]);
        let g1 = v(&[("c1", a8.clone()), ("l", ell.clone())]);
        let g2 = v(&[("c2", a8.clone()), ("l", ell.clone())]);
        let rels = RelationMatrix::spanning(&[g1.clone(), g2], []);
        let a4 = lp(&[(4, 1), (0, -1)]);
        let target = v(&[("c1", a4.clone()), ("c2", -&a4)]);
        let cert = span_membership(&target, &rels).unwrap();
        assert!(cert.is_member());
        assert!(!cert.all_laurent);
        assert!(cert.unique);
        let inv = RationalFn::new(LaurentPoly::one(), lp(&[(4, 1), (0, 1)])).unwrap();
        assert_eq!(cert.coefficients, vec![inv.clone(), -inv]);
        assert!(cert.verify(&target, &rels));
        let z = z_span_decision(&target, &rels).unwrap();
        assert_eq!(z.decision, ZDecision::NonMember);

        let single = RelationMatrix::spanning(std::slice::from_ref(&g1), []);
        assert_eq!(z_span_decision(&g1, &single).unwrap().decision, ZDecision::Member);
        let scaled: SparseVec<_> = g1.iter().map(|(l, c)| (*l, c * &lp(&[(4, 1), (0, 1)]))).collect();
        let z = z_span_decision(&scaled, &single).unwrap();
        assert_eq!(z.decision, ZDecision::Member);
        assert_eq!(z.certificate.coefficients[0], RationalFn::from_laurent(lp(&[(4, 1), (0, 1)])));
    }

    #[test]
    fn outside_span_reports_residual() {
        let rels = RelationMatrix::new(vec!["x", "y"], &[v(&[("x", lp(&[(0, 1)]))])]).unwrap();
        let target = v(&[("x", lp(&[(0, 2)])), ("y", lp(&[(1, 1)]))]);
        let cert = span_membership(&target, &rels).unwrap();
        assert!(!cert.is_member());
        assert_eq!(cert.residual.len(), 1);
        assert!(cert.verify(&target, &rels));
        assert!(span_membership(&v(&[("z", lp(&[(0, 1)]))]), &rels).is_err());
    }

    #[test]
    fn duplicate_rows_do_not_break_uniqueness() {
        let r = v(&[("x", lp(&[(0, 1), (4, 1)]))]);
        let r2: SparseVec<_> = r.iter().map(|(l, c)| (*l, c * &lp(&[(3, -1)]))).collect();
        let rels = RelationMatrix::spanning(&[r.clone(), r2, r.clone()], []);
        let cert = span_membership(&r, &rels).unwrap();
        assert!(cert.unique);
        assert!(cert.verify(&r, &rels));
    }

    #[test]
    fn dependent_rows_can_be_undecided() {
        // x is outside the Z-span of {2x, 2x + y, y}, but the rows are
        // dependent so the unique-certificate criterion does not apply
        let rels = RelationMatrix::spanning(
            &[v(&[("x", lp(&[(0, 2)]))]), v(&[("x", lp(&[(0, 2)])), ("y", lp(&[(0, 1)]))]), v(&[("y", lp(&[(0, 1)]))])],
            [],
        );
        let target = v(&[("x", lp(&[(0, 1)]))]);
        let z = z_span_decision(&target, &rels).unwrap();
        assert_eq!(z.decision, ZDecision::Undecided);
        assert!(z.certificate.verify(&target, &rels));
    }
}
