use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use super::linalg::{Certificate, RelationMatrix, Span, SparseVec, ZDecision};
use super::RelmodError;
use crate::coeff::RationalFn;
use crate::sliding::{relation_set, slide_relation, SlideVariant, SlidingRelation, ASSUMPTION};
use crate::surface::{rho_star, Scenario};
use crate::tl::{Diagram, TlElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ring {
    /// Coefficients in `Q(A)`.
    Qa,
    /// Coefficients in `Z[A^{±1}]`.
    Za,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ring::Qa => "qa",
            Ring::Za => "za",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Equal,
    LeftInRightOnly,
    RightInLeftOnly,
    Incomparable,
    /// Some row was undecided; the per-row results say which.
    Partial,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Equal => "equal",
            Verdict::LeftInRightOnly => "left_in_right_only",
            Verdict::RightInLeftOnly => "right_in_left_only",
            Verdict::Incomparable => "incomparable",
            Verdict::Partial => "partial",
        })
    }
}

/// Membership of one row of one side in the span of the other side.
#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub row: usize,
    pub decision: String,
    /// Index of an identical row on the other side, when one exists.
    pub verbatim: Option<usize>,
    /// Nonzero certificate coefficients as `(row, coefficient)`.
    pub coefficients: Vec<(usize, String)>,
    pub residual: Vec<(String, String)>,
    /// The certificate re-multiplies to the row exactly.
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Comparison {
    pub ring: Ring,
    pub verdict: Verdict,
    pub left_rows: usize,
    pub right_rows: usize,
    pub left_in_right: Vec<RowReport>,
    pub right_in_left: Vec<RowReport>,
}

impl Comparison {
    pub fn all_verified(&self) -> bool {
        self.left_in_right.iter().chain(&self.right_in_left).all(|r| r.verified)
    }

    /// Rows not contained in the other side, or undecided.
    pub fn exceptions(&self) -> impl Iterator<Item = (&'static str, &RowReport)> + '_ {
        let l = self.left_in_right.iter().map(|r| ("left", r));
        let r = self.right_in_left.iter().map(|r| ("right", r));
        l.chain(r).filter(|(_, r)| r.decision != "member")
    }
}

fn report<L: Ord + Clone + fmt::Display>(
    row: usize,
    decision: ZDecision,
    verbatim: Option<usize>,
    cert: &Certificate<L>,
    verified: bool,
) -> RowReport {
    RowReport {
        row,
        decision: decision.to_string(),
        verbatim,
        coefficients: cert.support().into_iter().map(|(i, c)| (i, c.to_string())).collect(),
        residual: cert.residual.iter().map(|(l, c)| (l.to_string(), c.to_string())).collect(),
        verified,
    }
}

/// Decides every row of `rows` against the span of `other`.
fn side<L: Ord + Clone + Hash + fmt::Display>(
    rows: &[SparseVec<L>],
    other: &[SparseVec<L>],
    basis: &[L],
    ring: Ring,
) -> Result<(Vec<RowReport>, Option<bool>), RelmodError> {
    let rels = RelationMatrix::new(basis.to_vec(), other)?;
    let mut lookup: HashMap<&SparseVec<L>, usize> = HashMap::new();
    for (j, r) in other.iter().enumerate().rev() {
        lookup.insert(r, j);
    }
    let mut span: Option<Span<'_, L>> = None;
    let mut out = Vec::with_capacity(rows.len());
    let (mut all_in, mut unknown) = (true, false);
    for (i, r) in rows.iter().enumerate() {
        if let Some(&j) = lookup.get(r) {
            let mut coefficients = vec![RationalFn::zero(); other.len()];
            coefficients[j] = RationalFn::one();
            let cert = Certificate { coefficients, residual: Default::default(), all_laurent: true, unique: false };
            let ok = cert.verify(r, &rels);
            out.push(report(i, ZDecision::Member, Some(j), &cert, ok));
            continue;
        }
        let span = span.get_or_insert_with(|| Span::new(&rels));
        let (decision, cert) = match ring {
            Ring::Qa => {
                let c = span.qa(r)?;
                (if c.is_member() { ZDecision::Member } else { ZDecision::NonMember }, c)
            }
            Ring::Za => {
                let v = span.za(r)?;
                (v.decision, v.certificate)
            }
        };
        match decision {
            ZDecision::Member => {}
            ZDecision::NonMember => all_in = false,
            ZDecision::Undecided => unknown = true,
        }
        let ok = cert.verify(r, &rels);
        out.push(report(i, decision, None, &cert, ok));
    }
    let contained = if !all_in {
        Some(false)
    } else if unknown {
        None
    } else {
        Some(true)
    };
    Ok((out, contained))
}

/// Mutual containment of the spans of two row lists over `ring`, with a
/// certificate for every row. Rows repeated verbatim on the other side get
/// the identity certificate without elimination.
pub fn submodule_compare<L: Ord + Clone + Hash + fmt::Display>(
    rels1: &[SparseVec<L>],
    rels2: &[SparseVec<L>],
    ring: Ring,
) -> Result<Comparison, RelmodError> {
    let mut basis: Vec<L> = rels1.iter().chain(rels2).flat_map(|r| r.keys().cloned()).collect();
    basis.sort();
    basis.dedup();
    let (left_in_right, l) = side(rels1, rels2, &basis, ring)?;
    let (right_in_left, r) = side(rels2, rels1, &basis, ring)?;
    let verdict = match (l, r) {
        (Some(true), Some(true)) => Verdict::Equal,
        (Some(true), Some(false)) => Verdict::LeftInRightOnly,
        (Some(false), Some(true)) => Verdict::RightInLeftOnly,
        (Some(false), Some(false)) => Verdict::Incomparable,
        _ => Verdict::Partial,
    };
    Ok(Comparison { ring, verdict, left_rows: rels1.len(), right_rows: rels2.len(), left_in_right, right_in_left })
}

/// One ring/level comparison of the conjecture report.
#[derive(Clone, Debug, Serialize)]
pub struct LevelComparison {
    /// `tl` or `glued:<scenario>`.
    pub level: String,
    pub comparison: Comparison,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub k: usize,
    pub assumption: &'static str,
    /// All slide relations of `TL_k`.
    pub left: &'static str,
    /// The upper positive slide of `Id_k` and every relation with fewer
    /// than `k` through strands.
    pub right: &'static str,
    /// `source variant` for each row of each side.
    pub left_sources: Vec<String>,
    pub right_sources: Vec<String>,
    pub skipped_scenarios: Vec<String>,
    pub levels: Vec<LevelComparison>,
}

/// Compares all slide relations in `TL_k` with those generated by the
/// `Id_k` upper slide together with the relations of smaller bundles, in
/// the box and after gluing into each scenario whose box has `k` strands.
pub fn conjecture_evidence(k: usize, scenarios: &[Scenario]) -> Result<ConjectureReport, RelmodError> {
    if !matches!(k, 2 | 4 | 6) {
        return Err(RelmodError::Strands(k));
    }
    let label = |r: &SlidingRelation| format!("{} {}", r.source, r.variant);
    let full = relation_set(k, &SlideVariant::ALL, 2);
    let top = slide_relation(&Diagram::identity(k), SlideVariant::UPPER_POS);
    let mut smaller = vec![top];
    smaller.extend(full.iter().filter(|r| r.through < k).cloned());
    let all: Vec<TlElement> = full.iter().map(|r| r.vector.clone()).collect();
    let small: Vec<TlElement> = smaller.iter().map(|r| r.vector.clone()).collect();
    let tl_rows = |xs: &[TlElement]| -> Vec<SparseVec<Diagram>> {
        xs.iter().map(|x| x.terms().map(|(d, c)| (d.clone(), c.clone())).collect()).collect()
    };
    let (l, r) = (tl_rows(&all), tl_rows(&small));
    let mut levels = Vec::new();
    for ring in [Ring::Qa, Ring::Za] {
        levels.push(LevelComparison { level: "tl".into(), comparison: submodule_compare(&l, &r, ring)? });
    }
    let mut skipped = Vec::new();
    for s in scenarios {
        if s.k != k {
            skipped.push(s.name.clone());
            continue;
        }
        let glue_rows = |xs: &[TlElement]| -> Result<Vec<_>, RelmodError> {
            xs.iter().map(|x| Ok(rho_star(s, x)?.into_map())).collect()
        };
        let (gl, gr) = (glue_rows(&all)?, glue_rows(&small)?);
        for ring in [Ring::Qa, Ring::Za] {
            levels.push(LevelComparison {
                level: format!("glued:{}", s.name),
                comparison: submodule_compare(&gl, &gr, ring)?,
            });
        }
    }
    Ok(ConjectureReport {
        k,
        assumption: ASSUMPTION,
        left: "all four slide relations of every diagram with at least 2 through strands",
        right: "upper+ slide of Id_k, plus all relations of diagrams with fewer than k through strands",
        left_sources: full.iter().map(label).collect(),
        right_sources: smaller.iter().map(label).collect(),
        skipped_scenarios: skipped,
        levels,
    })
}
