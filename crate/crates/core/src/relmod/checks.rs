use super::ideal::counterexample;
use super::linalg::ZDecision;
use crate::coeff::LaurentPoly;
use crate::expr::parse_element;
use crate::sliding::{Check, PrintedForms};
use crate::surface::{glue, rho_star, Scenario, SurfaceError};

fn glued_text(s: &Scenario, word: &str) -> Result<(String, String), String> {
    let x = parse_element(word, Some(s.k)).map_err(|e| e.to_string())?;
    let (d, _) = x.terms().next().ok_or("empty word")?;
    let g = glue(s, d).map_err(|e| e.to_string())?;
    Ok((g.coefficient().to_string(), g.multicurve.to_string()))
}

/// Checks that need the shipped scenarios: the four-holed sphere values,
/// the glued relation, its non-membership over `Z[A^{±1}]`, and the two
/// closures of the mirror relation. `load` resolves scenario names.
pub fn gluing_checks(
    forms: &PrintedForms,
    load: &dyn Fn(&str) -> Result<Scenario, SurfaceError>,
) -> Result<Vec<Check>, SurfaceError> {
    let h2h1 = load("h2h1")?;
    let fig9 = load("fig9")?;
    let h2h2 = load("h2h2")?;
    let mut checks = Vec::new();

    let expect = [("e1*e2", "a1 a3 [a2a3]"), ("e3*e2", "a2 a3 [a1a3]"), ("e2*e1", "[a1a2]"), ("e2*e3", "[a1a2]")];
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (w, want) in expect {
        match glued_text(&h2h1, w) {
            Ok((c, m)) if c == "1" && m == want => seen.push(format!("{w} -> {m}")),
            Ok((c, m)) => bad.push(format!("{w} -> {c} * {m}, expected {want}")),
            Err(e) => bad.push(format!("{w}: {e}")),
        }
    }
    checks.push(if bad.is_empty() {
        Check::new("h2h1-gluing", true, seen.join(", "))
    } else {
        Check::new("h2h1-gluing", false, bad.join("; "))
    });

    let glued_relation = || -> Result<Check, String> {
        let x = parse_element(&forms.difference_reduced, Some(4)).map_err(|e| e.to_string())?;
        let got = rho_star(&h2h1, &x).map_err(|e| e.to_string())?;
        let c1 = rho_star(&h2h1, &parse_element("e1*e2", Some(4)).unwrap()).map_err(|e| e.to_string())?;
        let c2 = rho_star(&h2h1, &parse_element("e3*e2", Some(4)).unwrap()).map_err(|e| e.to_string())?;
        let want = (&c1 - &c2).scale(&LaurentPoly::from_terms([(4, 1), (0, -1)]));
        Ok(Check::new("h2h1-new-relation", got == want && !got.is_zero(), format!("{got}")))
    };
    checks.push(glued_relation().unwrap_or_else(|e| Check::new("h2h1-new-relation", false, e)));

    checks.push(match counterexample(&h2h1, 4) {
        Ok(ce) => {
            let cx = &ce.check;
            let a4p1 = LaurentPoly::from_terms([(4, 1), (0, 1)]);
            let dens_ok = !cx.denominators.is_empty() && cx.denominators.iter().all(|d| *d == a4p1);
            let ok = cx.qa.is_member()
                && cx.qa.unique
                && !cx.qa.all_laurent
                && dens_ok
                && cx.za.decision == ZDecision::NonMember
                && !ce.principal_member
                && cx.target == ce.expected;
            let coeffs: Vec<String> = cx.qa.support().iter().map(|(i, c)| format!("g{}: {c}", i + 1)).collect();
            Check::new(
                "counterexample",
                ok,
                format!(
                    "{} generators; Q(A) certificate [{}]; Z[A^±1]: {} ({}); A^4 - 1 in (A^8 - 1): {}",
                    cx.generators.generators.len(),
                    coeffs.join(", "),
                    cx.za.decision,
                    cx.za.reason,
                    ce.principal_member
                ),
            )
        }
        Err(e) => Check::new("counterexample", false, e.to_string()),
    });

    let image = |s: &Scenario| -> Result<String, String> {
        let x = parse_element(&forms.mirror_reduced, Some(4)).map_err(|e| e.to_string())?;
        rho_star(s, &x).map(|v| v.to_string()).map_err(|e| e.to_string())
    };
    checks.push(match image(&fig9) {
        Ok(v) => Check::new("fig9-difference-vanishes", v == "0", format!("image {v}")),
        Err(e) => Check::new("fig9-difference-vanishes", false, e),
    });
    checks.push(match image(&h2h2) {
        Ok(v) => Check::new("h2h2-difference-nonzero", v != "0", format!("image {v}")),
        Err(e) => Check::new("h2h2-difference-nonzero", false, e),
    });
    Ok(checks)
}
