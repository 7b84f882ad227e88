use std::collections::BTreeSet;

use super::linalg::{Certificate, RelationMatrix, Span, SparseVec, ZVerdict};
use super::RelmodError;
use crate::coeff::{LaurentPoly, Membership};
use crate::expr::parse_element;
use crate::sliding::{slide_relation, SlideVariant};
use crate::surface::{glue, rho_star, Multicurve, Scenario, SkeinVector};
use crate::tl::{enumerate_basis, Diagram, TlElement};

/// One generator `ρ(d - φ_t-slide of d)` with top term `ρ(d)`.
#[derive(Clone, Debug)]
pub struct IdealGenerator {
    pub source: Diagram,
    pub through: usize,
    pub top: Multicurve,
    pub top_coefficient: LaurentPoly,
    pub row: SkeinVector,
}

/// The generators retained for one scenario, at most one per top term.
#[derive(Clone, Debug)]
pub struct IdealGenerators {
    pub scenario: String,
    pub kmax: usize,
    pub generators: Vec<IdealGenerator>,
}

impl IdealGenerators {
    pub fn rows(&self) -> Vec<SparseVec<Multicurve>> {
        self.generators.iter().map(|g| g.row.as_map().clone()).collect()
    }

    /// The generator rows over the union of their supports and `extra`.
    pub fn matrix(&self, extra: impl IntoIterator<Item = Multicurve>) -> RelationMatrix<Multicurve> {
        RelationMatrix::spanning(&self.rows(), extra)
    }
}

/// Upper-arc positive slide relations of the scenario's basis diagrams
/// with `2 <= t <= kmax` through strands, glued. Diagrams whose closure
/// has a trivial component are skipped, and a diagram whose glued image
/// repeats an earlier one (basis order) contributes nothing.
pub fn ideal_generators(s: &Scenario, kmax: usize) -> Result<IdealGenerators, RelmodError> {
    if kmax < 2 || kmax % 2 == 1 {
        return Err(RelmodError::Kmax(kmax));
    }
    let mut seen: BTreeSet<Multicurve> = BTreeSet::new();
    let mut generators = Vec::new();
    for d in enumerate_basis(s.k, s.k).expect("square shapes are even") {
        let t = d.through_degree();
        if t < 2 || t > kmax {
            continue;
        }
        let g = glue(s, &d)?;
        if g.delta_power > 0 || !seen.insert(g.multicurve.clone()) {
            continue;
        }
        let row = rho_star(s, &slide_relation(&d, SlideVariant::UPPER_POS).vector)?;
        if row.is_zero() {
            continue;
        }
        generators.push(IdealGenerator {
            source: d,
            through: t,
            top_coefficient: row.coeff(&g.multicurve),
            top: g.multicurve,
            row,
        });
    }
    Ok(IdealGenerators { scenario: s.name.clone(), kmax, generators })
}

/// Membership of a glued box element in the span of the generators.
#[derive(Clone, Debug)]
pub struct IdealCheck {
    pub scenario: String,
    pub source: TlElement,
    pub target: SkeinVector,
    pub generators: IdealGenerators,
    pub qa: Certificate<Multicurve>,
    pub za: ZVerdict<Multicurve>,
    /// Non-unit denominators of the certificate, without repeats.
    pub denominators: Vec<LaurentPoly>,
}

impl IdealCheck {
    /// The generator matrix the certificates refer to.
    pub fn matrix(&self) -> RelationMatrix<Multicurve> {
        self.generators.matrix(self.target.as_map().keys().cloned())
    }
}

/// Glues `source` into `s` and decides it against the generators up to
/// `kmax` over both rings.
pub fn ideal_check(s: &Scenario, kmax: usize, source: &TlElement) -> Result<IdealCheck, RelmodError> {
    let target = rho_star(s, source)?;
    let generators = ideal_generators(s, kmax)?;
    let rels = generators.matrix(target.as_map().keys().cloned());
    let span = Span::new(&rels);
    let qa = span.qa(target.as_map())?;
    let za = span.za(target.as_map())?;
    let mut denominators: Vec<LaurentPoly> = Vec::new();
    for (_, c) in qa.support() {
        let d = c.denominator();
        if !d.is_unit() && !denominators.contains(d) {
            denominators.push(d.clone());
        }
    }
    Ok(IdealCheck { scenario: s.name.clone(), source: source.clone(), target, generators, qa, za, denominators })
}

/// The glued two-strand reduction `(A^4 - 1)(e2e1 - e2e3 + e1e2 - e3e2)`.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub check: IdealCheck,
    /// `(A^4 - 1)(ρ(e1e2) - ρ(e3e2))`.
    pub expected: SkeinVector,
    /// Whether `A^4 - 1` is a `Z[A^{±1}]`-multiple of `A^8 - 1`.
    pub principal_member: bool,
}

pub const TWO_STRAND_REDUCTION: &str = "(A^4 - 1)*(e2*e1 - e2*e3 + e1*e2 - e3*e2)";

pub fn counterexample(s: &Scenario, kmax: usize) -> Result<Counterexample, RelmodError> {
    let k = s.k;
    let parse = |w: &str| {
        parse_element(w, Some(k))
            .map_err(|e| RelmodError::BasisMismatch(format!("scenario needs at least 4 strands: {e}")))
    };
    let check = ideal_check(s, kmax, &parse(TWO_STRAND_REDUCTION)?)?;
    let diff = &parse("e1*e2")? - &parse("e3*e2")?;
    let a4 = LaurentPoly::from_terms([(4, 1), (0, -1)]);
    let a8 = LaurentPoly::from_terms([(8, 1), (0, -1)]);
    let expected = rho_star(s, &diff)?.scale(&a4);
    let principal_member = matches!(a4.principal_membership(&a8), Ok(Membership::Member(_)));
    Ok(Counterexample { check, expected, principal_member })
}
