//! Acceptance suite: one PASS/FAIL line per criterion, each with a pinned
//! runtime bound. Runs under `cargo test --test acceptance`; exits nonzero
//! if any hard requirement fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skein::coeff::{LaurentPoly, Membership, RationalFn};
use skein::expr::parse_element;
use skein::relmod::{
    conjecture_evidence, counterexample, span_membership, RelationMatrix, Ring, SparseVec, Verdict, ZDecision,
};
use skein::sliding::{phi, slide_relation, w_id, PrintedForms, SlideVariant};
use skein::surface::{glue, h1h1_scenarios, rho_star, shipped, SkeinVector};
use skein::tl::{enumerate_basis, Diagram, TlElement};

/// Exact comparisons throughout: coefficients are integers, so the only
/// tolerance is on wall-clock time.
const BOUND_1: Duration = Duration::from_secs(1);
const BOUND_2: Duration = Duration::from_secs(1);
const BOUND_3: Duration = Duration::from_secs(1);
const BOUND_4: Duration = Duration::from_secs(5);
const BOUND_5: Duration = Duration::from_secs(5);
const BOUND_6: Duration = Duration::from_secs(10);
const BOUND_7: Duration = Duration::from_secs(5);
const BOUND_8: Duration = Duration::from_secs(60);
const BOUND_9_K4: Duration = Duration::from_secs(60);
const BOUND_9_K6: Duration = Duration::from_secs(15 * 60);

/// Random coefficient triples in the ring-axiom sweep.
const RING_TRIPLES: usize = 10_000;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Duration, Box<dyn Fn() -> Outcome + 'a>);

fn el(k: usize, s: &str) -> TlElement {
    parse_element(s, Some(k)).unwrap_or_else(|e| panic!("bad literal {s}: {e}"))
}

fn word(k: usize, s: &str) -> Diagram {
    el(k, s).terms().next().expect("nonzero word").0.clone()
}

fn same(name: &str, got: &TlElement, want: &TlElement) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{name}: computed {got}, expected {want}"))
    }
}

fn as_vec(x: &TlElement) -> SparseVec<Diagram> {
    x.terms().map(|(d, c)| (d.clone(), c.clone())).collect()
}

fn lp(s: &str) -> LaurentPoly {
    skein::expr::parse_scalar(s).unwrap()
}

fn criterion_1(f: &PrintedForms) -> Outcome {
    same("w(Id2)", &w_id(2).unwrap(), &el(2, &f.w2))?;
    same("w(Id2) factored", &w_id(2).unwrap(), &el(2, &f.w2_factored))?;
    same("w(Id3)", &w_id(3).unwrap(), &el(3, &f.w3))?;
    same("w(Id4)", &w_id(4).unwrap(), &el(4, &f.w4))?;
    Ok("w(Id2), w(Id3), w(Id4) match term by term".into())
}

fn criterion_2(f: &PrintedForms) -> Outcome {
    let id = Diagram::identity(4);
    same("phi_lower(Id4)", &phi(SlideVariant::LOWER_POS, 4).unwrap(), &el(4, &f.phi_lower4))?;
    let lower = &el(4, &f.lower_lhs) - &el(4, &f.lower_rhs);
    let upper = &el(4, &f.upper_lhs) - &el(4, &f.upper_rhs);
    same("lower relation", &slide_relation(&id, SlideVariant::LOWER_POS).vector, &lower)?;
    same("sigma image", &lower.sigma(), &upper)?;
    same("upper relation", &slide_relation(&id, SlideVariant::UPPER_POS).vector, &upper)?;
    same("difference", &(&upper - &lower), &(-el(4, &f.difference)))?;
    Ok(format!(
        "{} terms in phi_lower(Id4); upper = sigma(lower); difference exact",
        phi(SlideVariant::LOWER_POS, 4).unwrap().len()
    ))
}

fn criterion_3(f: &PrintedForms) -> Outcome {
    let (top, low) = (lp("A^8 - 1"), lp("A^2 - A^6"));
    for (a, b) in &f.two_strand {
        let want = &TlElement::term(low.clone(), word(4, b)) - &TlElement::term(top.clone(), word(4, a));
        same(a, &slide_relation(&word(4, a), SlideVariant::LOWER_POS).vector, &want)?;
    }
    for (long, short) in [("e1*e2*e3*e1", "e1*e3"), ("e3*e2*e1*e3", "e3*e1")] {
        if word(4, long) != word(4, short) {
            return Err(format!("{long} does not reduce to {short}"));
        }
    }
    Ok(format!("{} two-strand relations and both word reductions", f.two_strand.len()))
}

fn criterion_4(f: &PrintedForms) -> Outcome {
    let id = Diagram::identity(4);
    let combo = &slide_relation(&id, SlideVariant::UPPER_NEG).vector.scale(&LaurentPoly::a_pow(12))
        + &slide_relation(&id, SlideVariant::UPPER_POS).vector;
    let printed = el(4, &f.mirror_combination);
    let mut notes = Vec::new();
    if combo != printed {
        if combo == -printed.clone() {
            notes.push("printed combination matches up to overall sign");
        } else {
            return Err(format!("combination {combo} differs from the printed form"));
        }
    }
    let rows: Vec<SparseVec<Diagram>> = f
        .two_strand
        .iter()
        .map(|(a, _)| as_vec(&slide_relation(&word(4, a), SlideVariant::LOWER_POS).vector))
        .collect();
    let reduced = el(4, &f.mirror_reduced);
    let try_reduce = |to: &TlElement| {
        let target = as_vec(&(&combo + to));
        let rels = RelationMatrix::spanning(&rows, target.keys().cloned());
        let cert = span_membership(&target, &rels).unwrap();
        cert.is_member() && cert.all_laurent && cert.verify(&target, &rels)
    };
    if !try_reduce(&reduced) {
        if try_reduce(&reduced.scale(&LaurentPoly::a_pow(2))) {
            notes.push("reduced relation holds after the unit A^2");
        } else {
            return Err("combination does not reduce to the stated relation".into());
        }
    }
    let note = if notes.is_empty() { String::new() } else { format!(" ({})", notes.join("; ")) };
    Ok(format!("reduction to (A^4 - 1)^2(e1 + e3 - e1e2e3 - e3e2e1) with Laurent certificate{note}"))
}

fn criterion_5(f: &PrintedForms) -> Outcome {
    let s = shipped("h2h1").map_err(|e| e.to_string())?;
    let mut images = Vec::new();
    for (w, want) in [("e1*e2", "a1 a3 [a2a3]"), ("e3*e2", "a2 a3 [a1a3]"), ("e2*e1", "[a1a2]"), ("e2*e3", "[a1a2]")] {
        let g = glue(&s, &word(4, w)).map_err(|e| e.to_string())?;
        if g.delta_power != 0 || g.multicurve.to_string() != want {
            return Err(format!("{w} glues to delta^{} {}", g.delta_power, g.multicurve));
        }
        images.push(g.multicurve);
    }
    let got = rho_star(&s, &el(4, &f.difference_reduced)).map_err(|e| e.to_string())?;
    let a4 = lp("A^4 - 1");
    let mut want = SkeinVector::term(a4.clone(), images[0].clone());
    want.add_term(-a4, images[1].clone());
    if got != want {
        return Err(format!("glued relation {got}, expected {want}"));
    }
    Ok(format!("four images with coefficient 1; glued relation {got}"))
}

fn criterion_6() -> Outcome {
    let s = shipped("h2h1").map_err(|e| e.to_string())?;
    let c = counterexample(&s, 4).map_err(|e| e.to_string())?;
    let ch = &c.check;
    if ch.target != c.expected {
        return Err(format!("target {} differs from {}", ch.target, c.expected));
    }
    if !ch.qa.is_member() || !ch.qa.unique || ch.qa.all_laurent {
        return Err(format!(
            "Q(A) certificate member={} unique={} laurent={}",
            ch.qa.is_member(),
            ch.qa.unique,
            ch.qa.all_laurent
        ));
    }
    if !ch.qa.verify(ch.target.as_map(), &ch.matrix()) {
        return Err("certificate does not re-multiply".into());
    }
    let a4p1 = lp("A^4 + 1");
    let denominators_ok = !ch.denominators.is_empty()
        && ch
            .denominators
            .iter()
            .all(|d| matches!(d.principal_membership(&a4p1), Ok(Membership::Member(q)) if q.is_unit()));
    if !denominators_ok {
        let d: Vec<String> = ch.denominators.iter().map(|d| d.to_string()).collect();
        return Err(format!("denominators [{}]", d.join(", ")));
    }
    if ch.za.decision != ZDecision::NonMember {
        return Err(format!("Z[A^±1] decision {}", ch.za.decision));
    }
    let principal = lp("A^4 - 1").principal_membership(&lp("A^8 - 1")).map_err(|e| e.to_string())?;
    if principal != Membership::NonMember || c.principal_member {
        return Err("A^4 - 1 reported inside (A^8 - 1)".into());
    }
    Ok(format!(
        "{} generators; member over Q(A) with denominator A^4 + 1, non_member over Z[A^±1]; A^4 - 1 not in (A^8 - 1)",
        ch.generators.generators.len()
    ))
}

fn criterion_7(f: &PrintedForms) -> Outcome {
    let x = el(4, &f.mirror_reduced);
    let fig9 = rho_star(&shipped("fig9").map_err(|e| e.to_string())?, &x).map_err(|e| e.to_string())?;
    let h2h2 = rho_star(&shipped("h2h2").map_err(|e| e.to_string())?, &x).map_err(|e| e.to_string())?;
    if !fig9.is_zero() {
        return Err(format!("fig9 image {fig9}"));
    }
    if h2h2.is_zero() {
        return Err("h2h2 image vanishes".into());
    }
    Ok(format!("fig9 image 0; h2h2 image has {} terms", h2h2.terms().count()))
}

/// Non-crossing perfect matchings of `2k` points by brute force over all
/// perfect matchings.
fn brute_catalan(k: usize) -> usize {
    fn go(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, count: &mut usize) {
        let Some(&a) = free.first() else {
            let crossing = pairs.iter().any(|&(a, b)| pairs.iter().any(|&(c, d)| a < c && c < b && b < d));
            if !crossing {
                *count += 1;
            }
            return;
        };
        for j in 1..free.len() {
            let b = free[j];
            let rest: Vec<usize> = free.iter().copied().filter(|&x| x != a && x != b).collect();
            let saved = std::mem::replace(free, rest);
            pairs.push((a, b));
            go(free, pairs, count);
            pairs.pop();
            *free = saved;
        }
    }
    let mut count = 0;
    go(&mut (0..2 * k).collect(), &mut Vec::new(), &mut count);
    count
}

fn random_lp(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let n = rng.gen_range(0..4);
    LaurentPoly::from_terms((0..n).map(|_| (rng.gen_range(-6i64..=6), rng.gen_range(-5i64..=5))))
}

fn criterion_8() -> Outcome {
    for (k, c) in [(2, 2), (3, 5), (4, 14), (5, 42), (6, 132)] {
        let n = enumerate_basis(k, k).map_err(|e| e.to_string())?.len();
        let b = brute_catalan(k);
        if n != c || b != c {
            return Err(format!("k={k}: basis {n}, brute force {b}, Catalan {c}"));
        }
    }
    let delta = skein::coeff::delta();
    for k in 2..=8 {
        let e = |i| TlElement::generator(k, i).unwrap();
        let mul = |x: &TlElement, y: &TlElement| x.compose(y).unwrap();
        for i in 1..k {
            if mul(&e(i), &e(i)) != e(i).scale(&delta) {
                return Err(format!("e{i}^2 != delta e{i} in TL{k}"));
            }
            for j in 1..k {
                let ok = if i.abs_diff(j) == 1 {
                    mul(&mul(&e(i), &e(j)), &e(i)) == e(i)
                } else if i.abs_diff(j) >= 2 {
                    mul(&e(i), &e(j)) == mul(&e(j), &e(i))
                } else {
                    true
                };
                if !ok {
                    return Err(format!("relation between e{i} and e{j} fails in TL{k}"));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..RING_TRIPLES {
        let (a, b, c) = (random_lp(&mut rng), random_lp(&mut rng), random_lp(&mut rng));
        let ring_ok = &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a + &(-&a)).is_zero();
        if !ring_ok {
            return Err(format!("ring axiom fails on ({a}, {b}, {c})"));
        }
        let (x, y, z) = (RationalFn::from(a), RationalFn::from(b), RationalFn::from(c));
        let field_ok = &(&x * &y) * &z == &x * &(&y * &z)
            && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
            && (x.is_zero() || (&x * &x.inverse().unwrap()).is_one());
        if !field_ok {
            return Err(format!("field axiom fails on ({x}, {y}, {z})"));
        }
    }
    let mut certs = 0;
    let s = shipped("h2h1").map_err(|e| e.to_string())?;
    let c = counterexample(&s, 4).map_err(|e| e.to_string())?;
    let m = c.check.matrix();
    if !c.check.qa.verify(c.check.target.as_map(), &m) || !c.check.za.certificate.verify(c.check.target.as_map(), &m) {
        return Err("ideal certificate fails re-multiplication".into());
    }
    certs += 2;
    let report = conjecture_evidence(4, &h1h1_scenarios()).map_err(|e| e.to_string())?;
    for l in &report.levels {
        if !l.comparison.all_verified() {
            return Err(format!("{} {} has an unverified certificate", l.level, l.comparison.ring));
        }
        certs += l.comparison.left_in_right.len() + l.comparison.right_in_left.len();
    }
    Ok(format!("Catalan C2..C6, TL relations k <= 8, {RING_TRIPLES} ring triples, {certs} certificates re-multiplied"))
}

fn criterion_9(k: usize) -> Outcome {
    let report = conjecture_evidence(k, &h1h1_scenarios()).map_err(|e| e.to_string())?;
    let glued = format!("glued:h1h1-k{k}");
    let levels: Vec<String> =
        report.levels.iter().map(|l| format!("{} {} {}", l.level, l.comparison.ring, l.comparison.verdict)).collect();
    let want_levels = [("tl", Ring::Qa), ("tl", Ring::Za), (glued.as_str(), Ring::Qa), (glued.as_str(), Ring::Za)];
    for (level, ring) in want_levels {
        let Some(l) = report.levels.iter().find(|l| l.level == level && l.comparison.ring == ring) else {
            return Err(format!("missing {level} {ring}"));
        };
        if !l.comparison.all_verified() {
            return Err(format!("{level} {ring}: unverified certificate"));
        }
    }
    let soft = report
        .levels
        .iter()
        .find(|l| l.level == glued && l.comparison.ring == Ring::Qa)
        .map(|l| l.comparison.verdict == Verdict::Equal)
        .unwrap_or(false);
    let soft = if soft { "glued Q(A) verdict equal as expected" } else { "WARNING: glued Q(A) verdict is not equal" };
    Ok(format!("{}; {soft}", levels.join(", ")))
}

fn main() -> ExitCode {
    let forms = PrintedForms::standard();
    let criteria: Vec<Criterion> = vec![
        ("1 w recursion", BOUND_1, Box::new(|| criterion_1(&forms))),
        ("2 four-strand slides", BOUND_2, Box::new(|| criterion_2(&forms))),
        ("3 two-strand relations", BOUND_3, Box::new(|| criterion_3(&forms))),
        ("4 mirror reduction", BOUND_4, Box::new(|| criterion_4(&forms))),
        ("5 h2h1 gluing", BOUND_5, Box::new(|| criterion_5(&forms))),
        ("6 counterexample", BOUND_6, Box::new(criterion_6)),
        ("7 fig9 and h2h2 images", BOUND_7, Box::new(|| criterion_7(&forms))),
        ("8 property suites", BOUND_8, Box::new(criterion_8)),
        ("9 conjecture evidence k=4", BOUND_9_K4, Box::new(|| criterion_9(4))),
        ("9 conjecture evidence k=6", BOUND_9_K6, Box::new(|| criterion_9(6))),
    ];
    let mut failed = 0;
    for (name, bound, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= *bound => (true, d),
            Ok(d) => (false, format!("{d}; took {took:.2?}, bound {bound:?}")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!("{} {name} [{took:.2?} / {bound:?}]: {detail}", if ok { "PASS" } else { "FAIL" });
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
