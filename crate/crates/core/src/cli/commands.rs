use std::io::Write;

use serde_json::{json, Value};

use super::{
    Cli, Command, ConjectureArgs, EvalArgs, Failure, Format, GlueArgs, IdealArgs, RelationsArgs, RingArg, VerifyArgs,
    WArgs, SCHEMA_VERSION,
};
use crate::expr::parse_element;
use crate::relmod::{
    conjecture_evidence, gluing_checks, ideal_check, ConjectureReport, ZDecision, TWO_STRAND_REDUCTION,
};
use crate::sliding::{phi, relation_set, verify, w_id, Check, PrintedForms, SlideVariant, ASSUMPTION};
use crate::surface::{self, h1h1_scenarios, Scenario, SkeinVector, SurfaceError};
use crate::tl::TlElement;

pub(super) fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let ctx = Ctx { cli };
    if cli.list_scenarios {
        return ctx.list_scenarios(out);
    }
    match &cli.command {
        None => Err(Failure::Input("no command given; try --help".into())),
        Some(Command::Verify(a)) => ctx.verify(a, out),
        Some(Command::Eval(a)) => ctx.eval(a, out),
        Some(Command::W(a)) => ctx.w(a, out),
        Some(Command::Relations(a)) => ctx.relations(a, out),
        Some(Command::Glue(a)) => ctx.glue(a, out),
        Some(Command::Conjecture(a)) => ctx.conjecture(a, out),
        Some(Command::IdealCheck(a)) => ctx.ideal_check(a, out),
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("cannot write output: {e}")))
}

/// Largest strand count accepted on the command line; `TL_9` has 4862
/// basis diagrams and dense elements there are no longer interactive.
const MAX_K: usize = 8;

fn check_k(k: usize) -> Result<(), Failure> {
    if k == 0 || k > MAX_K {
        return Err(Failure::Input(format!("--k must be between 1 and {MAX_K}, got {k}")));
    }
    Ok(())
}

fn element_json(x: &TlElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .map(|(d, c)| json!({"diagram": d.to_string(), "pairs": d.raw_string(), "coefficient": c.to_string()}))
        .collect();
    json!({"m": x.m(), "n": x.n(), "normal_form": x.to_string(), "terms": terms})
}

fn skein_json(v: &SkeinVector) -> Value {
    let terms: Vec<Value> =
        v.terms().map(|(m, c)| json!({"multicurve": m.to_string(), "coefficient": c.to_string()})).collect();
    json!({"value": v.to_string(), "terms": terms})
}

fn check_json(c: &Check) -> Value {
    json!({"name": c.name, "outcome": c.outcome, "detail": c.detail})
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cli.format == Format::Json
    }

    fn print_json(&self, out: &mut dyn Write, command: &str, mut body: Value) -> Result<(), Failure> {
        body["schema_version"] = json!(SCHEMA_VERSION);
        body["command"] = json!(command);
        let text = serde_json::to_string_pretty(&body).expect("reports serialize");
        emit(out, &format!("{text}\n"))
    }

    fn scenario(&self, name: &str) -> Result<Scenario, SurfaceError> {
        surface::resolve(name, self.cli.scenario_dir.as_deref())
    }

    fn list_scenarios(&self, out: &mut dyn Write) -> Result<(), Failure> {
        let mut rows = Vec::new();
        for n in surface::shipped_names() {
            let s = surface::shipped(n)?;
            rows.push((n, s));
        }
        if self.json() {
            let list: Vec<Value> = rows
                .iter()
                .map(|(n, s)| {
                    json!({"name": n, "k": s.k, "punctures": s.labels(), "outer": s.outer_label, "description": s.description})
                })
                .collect();
            return self.print_json(out, "list-scenarios", json!({"scenarios": list}));
        }
        let mut text = String::new();
        for (n, s) in rows {
            text.push_str(&format!(
                "{n:<8} k={} punctures {} outer {}\n    {}\n",
                s.k,
                s.labels().join(" "),
                s.outer_label,
                s.description
            ));
        }
        emit(out, &text)
    }

    fn verify(&self, a: &VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
        let forms = PrintedForms::standard();
        let mut checks = verify(&forms).checks;
        let load = |n: &str| self.scenario(n);
        checks.extend(gluing_checks(&forms, &load)?);
        if !a.only.is_empty() {
            let known: Vec<&str> = checks.iter().map(|c| c.name).collect();
            if let Some(bad) = a.only.iter().find(|n| !known.contains(&n.as_str())) {
                return Err(Failure::Input(format!("unknown check `{bad}`; known checks: {}", known.join(", "))));
            }
            checks.retain(|c| a.only.iter().any(|n| n == c.name));
        }
        let failed: Vec<&str> = checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        if self.json() {
            let list: Vec<Value> = checks.iter().map(check_json).collect();
            self.print_json(
                out,
                "verify",
                json!({"passed": failed.is_empty(), "assumption": ASSUMPTION, "checks": list}),
            )?;
        } else {
            let mut text: String = checks.iter().map(|c| format!("{c}\n")).collect();
            text.push_str(&format!("{}/{} checks passed ({ASSUMPTION})\n", checks.len() - failed.len(), checks.len()));
            emit(out, &text)?;
        }
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Failure::Check(failed.join(", ")))
        }
    }

    fn eval(&self, a: &EvalArgs, out: &mut dyn Write) -> Result<(), Failure> {
        if let Some(k) = a.k {
            check_k(k)?;
        }
        let x = parse_element(&a.expression, a.k)?;
        if self.json() {
            return self.print_json(out, "eval", json!({"expression": a.expression, "result": element_json(&x)}));
        }
        let text = if a.raw { x.raw_string() } else { x.to_string() };
        emit(out, &format!("{text}\n"))
    }

    fn w(&self, a: &WArgs, out: &mut dyn Write) -> Result<(), Failure> {
        check_k(a.k)?;
        let (label, x) = match &a.variant {
            None => (format!("w(Id{})", a.k), w_id(a.k)?),
            Some(v) => {
                let v: SlideVariant = v.parse()?;
                (format!("phi[{v}](Id{})", a.k), phi(v, a.k)?)
            }
        };
        if self.json() {
            return self.print_json(out, "w", json!({"k": a.k, "label": label, "result": element_json(&x)}));
        }
        emit(out, &format!("{label} = {x}\n"))
    }

    fn relations(&self, a: &RelationsArgs, out: &mut dyn Write) -> Result<(), Failure> {
        check_k(a.k)?;
        let variants = SlideVariant::parse_list(&a.variants)?;
        let rels = relation_set(a.k, &variants, a.min_through);
        if self.json() {
            let list: Vec<Value> = rels
                .iter()
                .map(|r| json!({"source": r.source.to_string(), "variant": r.variant, "through": r.through, "vector": element_json(&r.vector)}))
                .collect();
            return self.print_json(
                out,
                "relations",
                json!({"k": a.k, "count": rels.len(), "assumption": ASSUMPTION, "relations": list}),
            );
        }
        let mut text = String::new();
        for r in &rels {
            text.push_str(&format!("{} {} (t={}): {} = 0\n", r.source, r.variant, r.through, r.vector));
        }
        text.push_str(&format!("{} relations\n", rels.len()));
        emit(out, &text)
    }

    fn glue(&self, a: &GlueArgs, out: &mut dyn Write) -> Result<(), Failure> {
        let s = self.scenario(&a.scenario)?;
        let x = parse_element(&a.expr, Some(s.k))?;
        let v = surface::rho_star(&s, &x)?;
        if self.json() {
            return self.print_json(
                out,
                "glue",
                json!({"scenario": s.name, "expression": a.expr, "element": element_json(&x), "result": skein_json(&v)}),
            );
        }
        emit(out, &format!("{v}\n"))
    }

    fn conjecture(&self, a: &ConjectureArgs, out: &mut dyn Write) -> Result<(), Failure> {
        let scenarios: Vec<Scenario> = if a.no_glue {
            Vec::new()
        } else if a.scenario.is_empty() {
            h1h1_scenarios()
        } else {
            a.scenario.iter().map(|n| self.scenario(n)).collect::<Result<_, _>>()?
        };
        let report = conjecture_evidence(a.k, &scenarios)?;
        if self.json() {
            let body = serde_json::to_value(&report).expect("reports serialize");
            self.print_json(out, "conjecture", body)?;
        } else {
            emit(out, &conjecture_text(&report))?;
        }
        let Some(want) = &a.expect else { return Ok(()) };
        let glued = report.levels.iter().any(|l| l.level != "tl");
        let relevant: Vec<_> = report
            .levels
            .iter()
            .filter(|l| l.comparison.ring == crate::relmod::Ring::Qa && (l.level != "tl") == glued)
            .collect();
        match relevant.iter().find(|l| l.comparison.verdict.to_string() != *want) {
            Some(l) => {
                Err(Failure::Check(format!("{} qa verdict is {}, expected {want}", l.level, l.comparison.verdict)))
            }
            None => Ok(()),
        }
    }

    fn ideal_check(&self, a: &IdealArgs, out: &mut dyn Write) -> Result<(), Failure> {
        let s = self.scenario(&a.scenario)?;
        let text = a.expr.as_deref().unwrap_or(TWO_STRAND_REDUCTION);
        let source = parse_element(text, Some(s.k))?;
        let r = ideal_check(&s, a.kmax, &source)?;
        let qa_decision = if r.qa.is_member() { ZDecision::Member } else { ZDecision::NonMember };
        let verdict = match a.ring {
            RingArg::Qa => qa_decision,
            RingArg::Za => r.za.decision,
        };
        let rels = r.matrix();
        let certified = r.qa.verify(r.target.as_map(), &rels) && r.za.certificate.verify(r.target.as_map(), &rels);
        let coeffs = |c: &crate::relmod::Certificate<_>| -> Vec<Value> {
            c.support().iter().map(|(i, x)| json!({"generator": i + 1, "coefficient": x.to_string()})).collect()
        };
        if self.json() {
            let gens: Vec<Value> = r
                .generators
                .generators
                .iter()
                .map(|g| {
                    json!({"source": g.source.to_string(), "through": g.through, "top": g.top.to_string(),
                           "top_coefficient": g.top_coefficient.to_string(), "row": skein_json(&g.row)})
                })
                .collect();
            let residual: Vec<Value> =
                r.qa.residual
                    .iter()
                    .map(|(m, c)| json!({"multicurve": m.to_string(), "coefficient": c.to_string()}))
                    .collect();
            self.print_json(
                out,
                "ideal-check",
                json!({
                    "scenario": r.scenario, "kmax": a.kmax, "expression": text,
                    "target": skein_json(&r.target),
                    "generators": gens,
                    "qa": {"decision": qa_decision.to_string(), "unique": r.qa.unique, "all_laurent": r.qa.all_laurent,
                           "coefficients": coeffs(&r.qa), "residual": residual},
                    "za": {"decision": r.za.decision.to_string(), "reason": r.za.reason, "coefficients": coeffs(&r.za.certificate)},
                    "denominators": r.denominators.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                    "certificates_verified": certified,
                    "ring": format!("{:?}", a.ring).to_lowercase(),
                    "verdict": verdict.to_string(),
                    "scope": "relative to the listed generators",
                }),
            )?;
        } else {
            let mut t = format!("scenario {} kmax {}\ntarget {}\n", r.scenario, a.kmax, r.target);
            t.push_str(&format!("{} generators:\n", r.generators.generators.len()));
            for (i, g) in r.generators.generators.iter().enumerate() {
                t.push_str(&format!(
                    "  g{} from {} (t={}): top {} with coefficient {}\n",
                    i + 1,
                    g.source,
                    g.through,
                    g.top,
                    g.top_coefficient
                ));
            }
            t.push_str(&format!("Q(A): {qa_decision}, unique {}, laurent {}\n", r.qa.unique, r.qa.all_laurent));
            for (i, c) in r.qa.support() {
                t.push_str(&format!("  g{}: {c}\n", i + 1));
            }
            for (m, c) in &r.qa.residual {
                t.push_str(&format!("  residual {m}: {c}\n"));
            }
            t.push_str(&format!("Z[A^±1]: {} ({})\n", r.za.decision, r.za.reason));
            if !r.denominators.is_empty() {
                let d: Vec<String> = r.denominators.iter().map(|d| d.to_string()).collect();
                t.push_str(&format!("denominators: {}\n", d.join(", ")));
            }
            t.push_str(&format!(
                "verdict ({}): {verdict}, relative to the listed generators\n",
                format!("{:?}", a.ring).to_lowercase()
            ));
            emit(out, &t)?;
        }
        if !certified {
            return Err(Failure::Check("certificate does not re-multiply to the target".into()));
        }
        match &a.expect {
            Some(want) if *want != verdict.to_string() => {
                Err(Failure::Check(format!("verdict is {verdict}, expected {want}")))
            }
            _ => Ok(()),
        }
    }
}

fn conjecture_text(r: &ConjectureReport) -> String {
    let mut t = format!(
        "k = {}\nleft ({} rows): {}\nright ({} rows): {}\nassumption: {}\n",
        r.k,
        r.left_sources.len(),
        r.left,
        r.right_sources.len(),
        r.right,
        r.assumption
    );
    if !r.skipped_scenarios.is_empty() {
        t.push_str(&format!("skipped (different k): {}\n", r.skipped_scenarios.join(", ")));
    }
    for l in &r.levels {
        let c = &l.comparison;
        let solved = c.left_in_right.iter().chain(&c.right_in_left).filter(|x| x.verbatim.is_none()).count();
        t.push_str(&format!(
            "{:<16} {}  {:<20} {} rows needed elimination, certificates verified: {}\n",
            l.level,
            c.ring,
            c.verdict.to_string(),
            solved,
            c.all_verified()
        ));
        for (side, x) in c.exceptions() {
            let src = if side == "left" { &r.left_sources[x.row] } else { &r.right_sources[x.row] };
            t.push_str(&format!("    {side} row {} ({src}): {}\n", x.row, x.decision));
        }
    }
    t
}
