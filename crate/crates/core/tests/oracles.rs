//! Derived values checked against computations that share no code with
//! the engine beyond parsing and basic coefficient arithmetic.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use skein::coeff::{LaurentPoly, Membership, RationalFn};
use skein::expr::{parse_element, parse_scalar};
use skein::relmod::{span_membership, submodule_compare, RelationMatrix, Ring, SparseVec, Verdict, ZDecision};
use skein::sliding::{slide_relation, w_id, SlideVariant};
use skein::surface::geom::Pt;
use skein::surface::{closed_curves, encloses, glue, shipped, shipped_names, Scenario};
use skein::tl::{enumerate_basis, Diagram, Point};

fn lp(s: &str) -> LaurentPoly {
    parse_scalar(s).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Half-diagrams on `k` points with `t` defects: a ballot number.
fn ballot(k: usize, t: usize) -> usize {
    let c = (k - t) / 2;
    binom(k, c) - if c == 0 { 0 } else { binom(k, c - 1) }
}

#[test]
fn through_degree_census() {
    for k in 0..=8 {
        let b = enumerate_basis(k, k).unwrap();
        let catalan = binom(2 * k, k) / (k + 1);
        assert_eq!(b.len(), catalan, "k = {k}");
        for t in (k % 2..=k).step_by(2) {
            let n = b.iter().filter(|d| d.through_degree() == t).count();
            assert_eq!(n, ballot(k, t).pow(2), "k = {k}, t = {t}");
        }
    }
    // Id4 plus the nine t = 2 diagrams.
    assert_eq!(skein::sliding::relation_set(4, &[SlideVariant::LOWER_POS], 2).len(), 10);
}

/// `TL_2` by hand: basis `Id2, e1` with `e1^2 = δ e1`, so the four slide
/// relations are explicit pairs of coefficients.
#[test]
fn two_strand_relations_by_hand() {
    let w = [lp("A^2"), lp("1 - A^-4")];
    let bar_w = [lp("A^-2"), lp("1 - A^4")];
    let rel = |phi: [LaurentPoly; 2]| [&LaurentPoly::one() - &phi[0], -&phi[1]];
    let scaled = |x: &[LaurentPoly; 2], e: i64| [&x[0] * &LaurentPoly::a_pow(e), &x[1] * &LaurentPoly::a_pow(e)];
    let positive = rel(scaled(&w, 6));
    let negative = rel(scaled(&bar_w, -6));
    let id = Diagram::identity(2);
    let e1 = Diagram::generator(2, 1).unwrap();
    for (v, want) in [
        (SlideVariant::LOWER_POS, &positive),
        (SlideVariant::UPPER_POS, &positive),
        (SlideVariant::LOWER_NEG, &negative),
        (SlideVariant::UPPER_NEG, &negative),
    ] {
        let got = slide_relation(&id, v).vector;
        assert_eq!([got.coeff(&id), got.coeff(&e1)], *want, "{v}");
    }
    // The two relations are proportional with unit ratio -A^-8.
    let det = &(&positive[0] * &negative[1]) - &(&positive[1] * &negative[0]);
    assert!(det.is_zero());
    assert_eq!(&positive[0] * &LaurentPoly::monomial(-1, -8), negative[0]);

    let row = |v| -> SparseVec<Diagram> {
        slide_relation(&id, v).vector.terms().map(|(d, c)| (d.clone(), c.clone())).collect()
    };
    let all: Vec<_> = SlideVariant::ALL.iter().map(|&v| row(v)).collect();
    for ring in [Ring::Qa, Ring::Za] {
        let c = submodule_compare(&all, &[row(SlideVariant::LOWER_POS)], ring).unwrap();
        assert_eq!(c.verdict, Verdict::Equal, "{ring}");
    }
}

#[test]
fn conjugate_of_w2() {
    let w = w_id(2).unwrap();
    let want = w.bar();
    assert_eq!(want.to_string(), "A^-2*Id2 + (1 - A^4)*e1");
    assert_eq!(parse_element("bar(w(Id2))", Some(2)).unwrap(), want);
}

/// `(A^4 - 1)(c1 - c2)` against `g_i = (A^8 - 1) c_i + ℓ`: solving the
/// 2×2 system by hand gives `±1/(A^4 + 1)`.
#[test]
fn shared_lower_term_system() {
    let a8 = lp("A^8 - 1");
    let ell = lp("A^2 - A^6");
    let rows: Vec<SparseVec<&str>> = vec![
        [("c1", a8.clone()), ("l", ell.clone())].into_iter().collect(),
        [("c2", a8.clone()), ("l", ell)].into_iter().collect(),
    ];
    let target: SparseVec<&str> = [("c1", lp("A^4 - 1")), ("c2", lp("1 - A^4"))].into_iter().collect();
    let rels = RelationMatrix::spanning(&rows, []);
    let cert = span_membership(&target, &rels).unwrap();
    let x = RationalFn::new(lp("A^4 - 1"), a8).unwrap();
    assert_eq!(x, RationalFn::new(LaurentPoly::one(), lp("A^4 + 1")).unwrap());
    assert_eq!(cert.coefficients, vec![x.clone(), -x]);
    assert!(!cert.all_laurent);
}

/// A Laurent polynomial with integer coefficients takes a dyadic value at
/// `A = 2`, while `(A^4 - 1)/(A^8 - 1)` takes the value `1/17` there.
#[test]
fn principal_non_membership_by_evaluation() {
    let two = BigRational::from_integer(2.into());
    let q = lp("A^4 - 1").eval(&two) / lp("A^8 - 1").eval(&two);
    let mut den = q.denom().clone();
    while den.is_even() {
        den /= 2;
    }
    assert!(!den.is_one());
    assert_eq!(lp("A^4 - 1").principal_membership(&lp("A^8 - 1")).unwrap(), Membership::NonMember);
    assert!(
        matches!(lp("A^8 - 1").principal_membership(&lp("A^4 - 1")).unwrap(), Membership::Member(q) if q == lp("A^4 + 1"))
    );
}

/// Closed components from the matchings alone, by union-find over the
/// marked points.
fn component_count(s: &Scenario, d: &Diagram) -> usize {
    let k = s.k;
    let id = |p: Point| match p {
        Point::L(i) => i - 1,
        Point::R(i) => k + i - 1,
    };
    let mut parent: Vec<usize> = (0..2 * k).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    let mut edges: Vec<(usize, usize)> = d.pairs().into_iter().map(|(a, b)| (id(a), id(b))).collect();
    edges.extend(s.arcs.iter().map(|a| (id(a.from), id(a.to))));
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    (0..2 * k).filter(|&x| find(&mut parent, x) == x).count()
}

#[test]
fn component_counts_match_union_find() {
    for name in shipped_names() {
        let s = shipped(name).unwrap();
        for d in enumerate_basis(s.k, s.k).unwrap() {
            assert_eq!(glue(&s, &d).unwrap().components(), component_count(&s, &d), "{name} {d}");
        }
    }
}

/// Winding number by quadrant counting, exact in rationals.
fn winding(poly: &[Pt], at: &Pt) -> i64 {
    let quadrant = |p: &Pt| {
        let (dx, dy) = (&p.x - &at.x, &p.y - &at.y);
        match (dx.is_negative(), dy.is_negative()) {
            (false, false) => 0i64,
            (true, false) => 1,
            (true, true) => 2,
            (false, true) => 3,
        }
    };
    let mut total = 0i64;
    for i in 0..poly.len() {
        let (a, b) = (&poly[i], &poly[(i + 1) % poly.len()]);
        let (qa, qb) = (quadrant(a), quadrant(b));
        let step = match (qb - qa).rem_euclid(4) {
            0 => 0,
            1 => 1,
            3 => -1,
            _ => {
                // Opposite quadrants: the side of `at` decides the direction.
                let cross = (&a.x - &at.x) * (&b.y - &at.y) - (&a.y - &at.y) * (&b.x - &at.x);
                if cross.is_positive() {
                    2
                } else {
                    -2
                }
            }
        };
        total += step;
    }
    total / 4
}

#[test]
fn enclosure_matches_winding_numbers() {
    let dir = (BigRational::from_integer(BigInt::from(3)), BigRational::from_integer(BigInt::from(-1)));
    let mut checked = 0;
    for name in shipped_names() {
        let s = shipped(name).unwrap();
        for d in enumerate_basis(s.k, s.k).unwrap() {
            for c in closed_curves(&s, &d).unwrap() {
                let closed = if c.first() == c.last() { &c[..c.len() - 1] } else { &c[..] };
                for p in &s.punctures {
                    let w = winding(closed, &p.at);
                    assert!(w.abs() <= 1, "simple curve winds {w} times");
                    assert_eq!(encloses(&c, &p.at, &dir), w != 0, "{name} {d} {}", p.label);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn round_curves_enclose_their_punctures() {
    let s = shipped("h2h1").unwrap();
    let labels: HashMap<&str, &Pt> = s.punctures.iter().map(|p| (p.label.as_str(), &p.at)).collect();
    let dir = (BigRational::one(), BigRational::zero());
    for d in enumerate_basis(4, 4).unwrap() {
        let g = glue(&s, &d).unwrap();
        let curves = closed_curves(&s, &d).unwrap();
        for (curve, _) in g.multicurve.components() {
            let set = curve.enclosed();
            if !curve.is_round() || set.iter().any(|l| !labels.contains_key(l.as_str())) {
                continue;
            }
            let found =
                curves.iter().any(|c| labels.iter().all(|(l, at)| encloses(c, at, &dir) == set.iter().any(|x| x == l)));
            assert!(found, "{d}: no curve encloses exactly {set:?}");
        }
    }
}

#[test]
fn ideal_generator_tops_have_the_stated_shape() {
    let s = shipped("h2h1").unwrap();
    let g = skein::relmod::ideal_generators(&s, 4).unwrap();
    for gen in &g.generators {
        let want = LaurentPoly::one() - LaurentPoly::a_pow(2 * gen.through as i64 + 4);
        let unit_multiple =
            matches!(gen.top_coefficient.principal_membership(&want), Ok(Membership::Member(u)) if u.is_unit());
        assert!(unit_multiple, "{}: top coefficient {}", gen.source, gen.top_coefficient);
    }
    let check = skein::relmod::counterexample(&s, 4).unwrap().check;
    assert_eq!(check.za.decision, ZDecision::NonMember);
}
