use std::fmt;

use serde::Serialize;

use super::{phi, slide_relation, w_id, SlideVariant};
use crate::coeff::LaurentPoly;
use crate::expr::parse_element;
use crate::relmod::{span_membership, RelationMatrix, SparseVec};
use crate::tl::{Diagram, TlElement};

/// Expected forms of the four-strand identities, as expression strings.
///
/// Kept as text so that each check compares the engine against an
/// independently typed literal; tests perturb single fields to confirm
/// the comparisons are sensitive.
#[derive(Clone, Debug)]
pub struct PrintedForms {
    pub w2: String,
    pub w2_factored: String,
    pub w3: String,
    pub w4: String,
    pub phi_lower4: String,
    pub lower_lhs: String,
    pub lower_rhs: String,
    pub upper_lhs: String,
    pub upper_rhs: String,
    pub difference: String,
    /// `(a, b)` word pairs with `(A^8 - 1) a ≡ (A^2 - A^6) b`.
    pub two_strand: Vec<(String, String)>,
    /// `(long, short)` words that must give the same diagram.
    pub word_reductions: Vec<(String, String)>,
    pub mirror_combination: String,
    pub mirror_reduced: String,
    pub difference_reduced: String,
}

impl PrintedForms {
    pub fn standard() -> Self {
        let s = |x: &str| x.to_string();
        let lower_tail = "(A^10 - A^6)*e1 + (A^10 - A^-2)*e3 + + (A^10 - A^2)*e2 + (A^8 - A^4)*(e2*e1 + e1*e2) \
             + (A^8 - 1)*[e2*e3 + e3*e2 + e1*e3] \
             + (A^6 - A^2)*(e3*e2*e1 + e1*e3*e2 + e2*e3*e1 + e1*e2*e3)";
        Self {
            w2: s("A^2*Id2 + (1 - A^-4)*e1"),
            w2_factored: s("A^2*Id2 + A^-4*(A^4 - 1)*e1"),
            w3: s("A^4*Id3 + (A^2 - A^-6)*e2 + (A^2 - A^-2)*e1 + (1 - A^-4)*(e1*e2 + e2*e1)"),
            w4: s("A^6*Id4 + (A^4 - 1)*e1 + (A^4 - A^-4)*e2 + (A^2 - A^-2)*(e1*e2 + e2*e1) \
                 + (A^4 - A^-8)*e3 + (A^2 - A^-6)*(e1*e3 + e2*e3 + e3*e2) \
                 + (1 - A^-4)*(e1*e2*e3 + e3*e2*e1 + e1*e3*e2 + e2*e3*e1)"),
            phi_lower4: format!("A^12*Id4 + {lower_tail}"),
            lower_lhs: s("(1 - A^12)*Id4"),
            lower_rhs: s(lower_tail),
            upper_lhs: s("(1 - A^12)*Id4"),
            upper_rhs: s("(A^10 - A^-2)*e1 + (A^10 - A^6)*e3 + (A^10 - A^2)*e2 + (A^8 - A^4)*(e2*e3 + e3*e2) \
                 + (A^8 - 1)*(e2*e1 + e1*e2 + e1*e3) \
                 + (A^6 - A^2)*(e1*e2*e3 + e1*e3*e2 + e2*e3*e1 + e3*e2*e1)"),
            difference: s("A^-2*(A^8 - 1)*(e1 - e3) + (A^4 - 1)*(e2*e1 + e1*e2 - e2*e3 - e3*e2)"),
            two_strand: [
                ("e1", "e1*e3"),
                ("e3", "e3*e1"),
                ("e1*e2", "e3*e1*e2"),
                ("e2*e1", "e2*e1*e3"),
                ("e1*e2*e3", "e1*e2*e3*e1"),
                ("e3*e2*e1", "e3*e2*e1*e3"),
            ]
            .iter()
            .map(|(a, b)| (s(a), s(b)))
            .collect(),
            word_reductions: vec![(s("e1*e2*e3*e1"), s("e1*e3")), (s("e3*e2*e1*e3"), s("e3*e1"))],
            mirror_combination: s("A^2*(A^4 - 1)^2*(e3 - e3*e2*e1 - e1*e2*e3 - e3*e1*e2 - e2*e1*e3) \
                 + A^-2*(A^12 - 1)*(1 - A^4)*e1 + (A^8 - 1)*(1 - A^4)*(e1*e3 + e2*e1 + e1*e2)"),
            mirror_reduced: s("(A^4 - 1)^2*(e1 + e3 - e1*e2*e3 - e3*e2*e1)"),
            difference_reduced: s("(A^4 - 1)*(e2*e1 - e2*e3 + e1*e2 - e3*e2)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckOutcome {
    Pass,
    Fail,
}

/// One named verification with a human-readable account of what was
/// compared.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub outcome: CheckOutcome,
    pub detail: String,
}

impl Check {
    pub fn new(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        let outcome = if ok { CheckOutcome::Pass } else { CheckOutcome::Fail };
        Self { name, outcome, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.outcome == CheckOutcome::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn parse(k: usize, text: &str) -> Result<TlElement, String> {
    parse_element(text, Some(k)).map_err(|e| format!("cannot parse `{text}`: {e}"))
}

fn compare(name: &'static str, got: &TlElement, want: &TlElement) -> Check {
    if got == want {
        Check::new(name, true, format!("{got}"))
    } else {
        Check::new(name, false, format!("computed {got}\n  expected {want}\n  difference {}", got - want))
    }
}

fn diagram_of(word: &str) -> Result<Diagram, String> {
    let x = parse(4, word)?;
    let mut terms = x.terms();
    match (terms.next(), terms.next()) {
        (Some((d, c)), None) if c.is_one() => Ok(d.clone()),
        _ => Err(format!("`{word}` is not a single diagram")),
    }
}

fn scalar(text: &str) -> LaurentPoly {
    crate::expr::parse_scalar(text).expect("fixed scalar literal")
}

fn as_vec(x: &TlElement) -> SparseVec<Diagram> {
    x.terms().map(|(d, c)| (d.clone(), c.clone())).collect()
}

/// Runs every four-strand identity check against `forms`.
pub fn verify(forms: &PrintedForms) -> VerifyReport {
    let mut checks = Vec::new();
    let mut run = |name: &'static str, f: &dyn Fn() -> Result<Check, String>| {
        checks.push(f().unwrap_or_else(|e| Check::new(name, false, e)));
    };
    let id4 = TlElement::identity(4);
    let rel = |d: &Diagram, v: SlideVariant| slide_relation(d, v).vector;
    let id4d = Diagram::identity(4);

    run("w2", &|| {
        let w = w_id(2).unwrap();
        let c = compare("w2", &w, &parse(2, &forms.w2)?);
        if c.passed() && w != parse(2, &forms.w2_factored)? {
            return Ok(Check::new("w2", false, "factored form disagrees"));
        }
        Ok(c)
    });
    run("w3", &|| Ok(compare("w3", &w_id(3).unwrap(), &parse(3, &forms.w3)?)));
    run("w4", &|| Ok(compare("w4", &w_id(4).unwrap(), &parse(4, &forms.w4)?)));
    run("phi-lower-id4", &|| {
        Ok(compare("phi-lower-id4", &phi(SlideVariant::LOWER_POS, 4).unwrap(), &parse(4, &forms.phi_lower4)?))
    });
    run("lower-relation-id4", &|| {
        let want = &parse(4, &forms.lower_lhs)? - &parse(4, &forms.lower_rhs)?;
        let from_w4 = &id4 - &parse(4, &forms.w4)?.scale(&LaurentPoly::a_pow(6));
        if from_w4 != want {
            return Ok(Check::new(
                "lower-relation-id4",
                false,
                format!("Id4 - A^6*w4 = {from_w4}\n  but the displayed relation gives {want}"),
            ));
        }
        Ok(compare("lower-relation-id4", &rel(&id4d, SlideVariant::LOWER_POS), &want))
    });
    run("upper-relation-id4", &|| {
        let want = &parse(4, &forms.upper_lhs)? - &parse(4, &forms.upper_rhs)?;
        let lower = &parse(4, &forms.lower_lhs)? - &parse(4, &forms.lower_rhs)?;
        if lower.sigma() != want {
            return Ok(Check::new(
                "upper-relation-id4",
                false,
                format!("sigma of the lower relation is {}", lower.sigma()),
            ));
        }
        Ok(compare("upper-relation-id4", &rel(&id4d, SlideVariant::UPPER_POS), &want))
    });
    run("slide-difference", &|| {
        let got = &rel(&id4d, SlideVariant::LOWER_POS) - &rel(&id4d, SlideVariant::UPPER_POS);
        Ok(compare("slide-difference", &got, &parse(4, &forms.difference)?))
    });
    run("two-strand-reductions", &|| {
        let (top, low) = (scalar("A^8 - 1"), scalar("A^2 - A^6"));
        for (a, b) in &forms.two_strand {
            let want = &TlElement::term(low.clone(), diagram_of(b)?) - &TlElement::term(top.clone(), diagram_of(a)?);
            let got = rel(&diagram_of(a)?, SlideVariant::LOWER_POS);
            if got != want {
                return Ok(Check::new(
                    "two-strand-reductions",
                    false,
                    format!("{a}: computed {got}\n  expected {want}"),
                ));
            }
        }
        Ok(Check::new(
            "two-strand-reductions",
            true,
            format!("{} relations (A^8 - 1)x = (A^2 - A^6)y", forms.two_strand.len()),
        ))
    });
    run("word-reductions", &|| {
        for (long, short) in &forms.word_reductions {
            if diagram_of(long)? != diagram_of(short)? {
                return Ok(Check::new("word-reductions", false, format!("{long} differs from {short}")));
            }
        }
        let list: Vec<String> = forms.word_reductions.iter().map(|(l, s)| format!("{l} = {s}")).collect();
        Ok(Check::new("word-reductions", true, list.join(", ")))
    });
    run("mirror-combination", &|| {
        let got =
            &rel(&id4d, SlideVariant::UPPER_NEG).scale(&LaurentPoly::a_pow(12)) + &rel(&id4d, SlideVariant::UPPER_POS);
        Ok(compare("mirror-combination", &-got, &parse(4, &forms.mirror_combination)?))
    });

    let two_strand_rows = || -> Result<Vec<SparseVec<Diagram>>, String> {
        forms.two_strand.iter().map(|(a, _)| Ok(as_vec(&rel(&diagram_of(a)?, SlideVariant::LOWER_POS)))).collect()
    };
    let reduce = |name: &'static str, from: &TlElement, to: &TlElement, rows: &[SparseVec<Diagram>]| {
        let target = as_vec(&(from - to));
        let rels = RelationMatrix::spanning(rows, target.keys().cloned());
        let cert = span_membership(&target, &rels).expect("basis covers the target");
        let coeffs: Vec<String> = cert.support().iter().map(|(i, c)| format!("r{}: {c}", i + 1)).collect();
        let ok = cert.is_member() && cert.all_laurent && cert.verify(&target, &rels);
        (ok, format!("{name}: coefficients [{}]", coeffs.join(", ")), cert)
    };
    run("mirror-reduction", &|| {
        let rows = two_strand_rows()?;
        let from = parse(4, &forms.mirror_combination)?;
        let to = parse(4, &forms.mirror_reduced)?;
        let (ok, detail, _) = reduce("scaled by A^2", &from, &to.scale(&LaurentPoly::a_pow(2)), &rows);
        let (plain, _, _) = reduce("unscaled", &from, &to, &rows);
        let note = if plain { "" } else { "; without the unit A^2 the difference is outside the span" };
        Ok(Check::new("mirror-reduction", ok, format!("{detail}{note}")))
    });
    run("difference-reduction", &|| {
        let rows = two_strand_rows()?;
        let from = parse(4, &forms.difference)?;
        let to = parse(4, &forms.difference_reduced)?;
        let (ok, detail, _) = reduce("difference", &from, &to, &rows);
        Ok(Check::new("difference-reduction", ok, detail))
    });
    VerifyReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_identities_hold() {
        let r = verify(&PrintedForms::standard());
        for c in &r.checks {
            assert!(c.passed(), "{c}");
        }
        assert_eq!(r.checks.len(), 12);
    }

    #[test]
    fn perturbed_w4_breaks_the_lower_relation() {
        let mut f = PrintedForms::standard();
        f.w4 = format!("{} + Id4", f.w4);
        let r = verify(&f);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        assert_eq!(failed, ["w4", "lower-relation-id4"]);
    }

    #[test]
    fn malformed_literal_fails_its_check_only() {
        let mut f = PrintedForms::standard();
        f.difference = "e1 +* e2".into();
        let r = verify(&f);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        assert_eq!(failed, ["slide-difference", "difference-reduction"]);
    }
}
