use super::*;
use crate::frontend::{parse_formula, var_list};
use crate::ratlin::rational::int;
use crate::ratlin::{AffineTerm, VarId};
use crate::transition::TransitionFormula;

fn f(text: &str, vars: &str) -> TransitionFormula {
    parse_formula(text, &var_list(vars)).unwrap()
}

/// `∃k. text` over `vars`, with `k` read as a rational.
fn exists_k(text: &str, vars: &str) -> TransitionFormula {
    let mut with_k = var_list(vars);
    with_k.push("k".into());
    parse_formula(text, &with_k).unwrap().project_vars(&var_list(vars)).unwrap()
}

const G1: &str = "i < 5 & i' = i + 1";
const G2: &str = "x < 5 & x' = x + 1 & y' = y + x + 1";

#[test]
fn guard_abstraction() {
    let a = alpha_pga(&f(G1, "i")).unwrap();
    assert_eq!(a.formula.pre.to_string(), "i <= 4");
    assert_eq!(a.formula.post.to_string(), "i' <= 5");
    assert!(a.eta.is_identity());
    let z = alpha_pga(&TransitionFormula::zero(&var_list("i"))).unwrap();
    assert!(z.formula.pre.is_canonical_empty() && z.formula.post.is_canonical_empty());
    let u = alpha_pga(&TransitionFormula::one(&var_list("x"))).unwrap();
    assert!(u.formula.pre.is_universe() && u.formula.post.is_universe());
}

#[test]
fn guard_star() {
    let v = var_list("i");
    let a = alpha_pga(&f(G1, "i")).unwrap();
    let s = star_pga_base(&a.formula, &v).unwrap();
    assert!(s.equivalent(&f("i' = i | i <= 4 & i' <= 5", "i")).unwrap());
    assert!(s.compose(&s).unwrap().equivalent(&s).unwrap());
    let none = star_pga_base(&alpha_pga(&TransitionFormula::zero(&v)).unwrap().formula, &v).unwrap();
    assert_eq!(none, TransitionFormula::one(&v));
    assert!(star_pga(&f(G1, "i")).unwrap().equivalent(&s).unwrap());
}

#[test]
fn recurrence_abstraction() {
    let a = alpha_lra(&f(G2, "x y")).unwrap();
    let LossyTranslation::Recurrences(recs) = &a.formula else {
        panic!("expected recurrences")
    };
    let bounds: Vec<_> = recs.iter().map(|(_, b)| b.clone()).collect();
    assert_eq!(bounds, vec![int(-1), int(1), int(5)]);
    let x = AffineTerm::var(VarId::unprimed("x"));
    let y = AffineTerm::var(VarId::unprimed("y"));
    assert_eq!(a.eta.get("$y0"), Some(&-x.clone()));
    assert_eq!(a.eta.get("$y1"), Some(&x));
    assert_eq!(a.eta.get("$y2"), Some(&y));
    assert_eq!(a.eta.to_string(), "[$y0 := -x, $y1 := x, $y2 := y]");

    let bottom = alpha_lra(&TransitionFormula::zero(&var_list("x"))).unwrap();
    assert_eq!(bottom.formula, LossyTranslation::Bottom);
    let id = alpha_lra(&TransitionFormula::one(&var_list("x"))).unwrap();
    assert_eq!(id.formula, LossyTranslation::Recurrences(vec![("$y0".into(), int(0)), ("$y1".into(), int(0))]));
}

#[test]
fn recurrence_star() {
    let s = star_lra(&f(G2, "x y")).unwrap();
    assert!(s.equivalent(&exists_k("k >= 0 & x' = x + k & y' <= y + 5*k", "x y")).unwrap());
    let v = var_list("x");
    assert_eq!(star_lra_base(&LossyTranslation::Bottom, &v).unwrap(), TransitionFormula::one(&v));
    let flat = LossyTranslation::Recurrences(vec![("y".into(), int(0))]);
    assert!(star_lra_base(&flat, &var_list("y")).unwrap().equivalent(&f("y' <= y", "y")).unwrap());
}

#[test]
fn table_two_loop_summaries() {
    let s1 = star_combined(&f(G1, "i")).unwrap();
    let expect1 = exists_k("k = 0 & i' = i | k >= 1 & i' = i + k & i <= 4 & i' <= 5", "i");
    assert!(s1.equivalent(&expect1).unwrap(), "{s1}");
    let s2 = star_combined(&f(G2, "x y")).unwrap();
    let expect2 = exists_k(
        "k = 0 & x' = x & y' = y | k >= 1 & x' = x + k & y' <= y + 5*k & x <= 4 & x' <= 5",
        "x y",
    );
    assert!(s2.equivalent(&expect2).unwrap(), "{s2}");
    let v = var_list("x");
    assert_eq!(star_combined(&TransitionFormula::zero(&v)).unwrap(), TransitionFormula::one(&v));
}

#[test]
fn lift_with_identity_is_noop() {
    let g = f(G2, "x y");
    let id = crate::ratlin::Substitution::identity(g.vars());
    assert_eq!(lift(&id, &g).unwrap(), g);
}

#[test]
fn combined_dominates_parts() {
    for text in [G1, "i' = i + 2 | i' = i - 1", "i >= 0 & i' <= 2*i"] {
        let g = f(text, "i");
        let c = star_combined(&g).unwrap();
        assert!(c.entails(&star_pga(&g).unwrap()).unwrap());
        assert!(c.entails(&star_lra(&g).unwrap()).unwrap());
    }
}

#[test]
fn laws_catch_a_tampered_operator() {
    let g = f(G1, "i");
    let broken = |a: &TransitionFormula| Ok(TransitionFormula::one(a.vars()));
    let v = laws::extensivity(&broken, &g).unwrap().expect("identity is not extensive");
    assert_eq!(v.law, laws::Law::Extensivity);
    let zero = TransitionFormula::zero(g.vars());
    for d in Domain::ALL {
        let star = |a: &TransitionFormula| d.star(a);
        assert!(laws::check_pka_laws(&star, &g, &zero).unwrap().is_none(), "{d}");
    }
}
