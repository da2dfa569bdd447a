use std::collections::BTreeSet;

use super::*;
use crate::error::Error;
use crate::frontend::{parse_formula, parse_graph, var_list};
use crate::iterate::Domain;
use crate::transition::TransitionFormula;

const P1: &str = "graph p1 vars i
root A
A -> B : i' = 1
B -> C : i < 5 & i' = i
C -> B : i' = i + 1
B -> D : i >= 5 & i' = i
";

const P2: &str = "graph p2 vars x y
root 1
1 -> 2 : x' = 1 & y' = y
2 -> 3 : x' = x & y' = 0
3 -> 4 : x < 5 & x' = x & y' = y
4 -> 5 : x' = x + 1 & y' = y
5 -> 3 : x' = x & y' = y + x
3 -> 6 : x >= 5 & x' = x & y' = y
";

const NEST: &str = "graph nest vars x y
root r
r -> a : x' = 0 & y' = y
a -> b : x <= 3 & y' = 0 & x' = x
b -> c : y <= 2 & x' = x & y' = y
c -> b : x' = x & y' = y + 1
b -> d : y >= 3 & x' = x & y' = y
d -> a : x' = x + 1 & y' = y
a -> e : x >= 4 & x' = x & y' = y
";

fn ids(g: &FlowGraph, names: &str) -> BTreeSet<Vertex> {
    names.split_whitespace().map(|n| g.vertex(n).unwrap()).collect()
}

#[test]
fn dominance() {
    let g = parse_graph(P1).unwrap();
    let dom = g.dominators();
    assert_eq!(dom[g.root()], ids(&g, "A"));
    assert_eq!(dom[g.vertex("C").unwrap()], ids(&g, "A B C"));
    assert_eq!(dom[g.vertex("D").unwrap()], ids(&g, "A B D"));

    let diamond = parse_graph("graph d vars x\nroot r\nr -> a : x' = x\nr -> b : x' = x\na -> j : x' = x\nb -> j : x' = x\n").unwrap();
    assert_eq!(diamond.dominators()[diamond.vertex("j").unwrap()], ids(&diamond, "r j"));

    let single = parse_graph("graph s vars x\nroot r\n").unwrap();
    assert_eq!(single.dominators(), vec![BTreeSet::from([0])]);
}

#[test]
fn reducibility() {
    assert!(parse_graph(P1).unwrap().is_reducible());
    assert!(parse_graph(P2).unwrap().is_reducible());
    assert!(parse_graph(NEST).unwrap().is_reducible());
    let tarjan = "graph t vars x\nroot 1\n1 -> 2 : x' = x + 1\n1 -> 3 : x' = x + 2\n2 -> 3 : x' = 2*x\n3 -> 2 : x' = x - 1\n";
    let t = parse_graph(tarjan).unwrap();
    assert!(!t.is_reducible());
    assert!(matches!(t.admissible_order(), Err(Error::Irreducible(_))));
    assert!(matches!(t.summarize(Domain::Combined), Err(Error::Irreducible(_))));
    assert!(t.summarize_forced(Domain::Combined).is_ok());
    assert!(parse_graph("graph s vars x\nroot r\nr -> r : x' = x + 1\n").unwrap().is_reducible());
}

#[test]
fn natural_loops() {
    let g = parse_graph(P1).unwrap();
    assert_eq!(g.local_cycles(g.vertex("B").unwrap()), ids(&g, "B C"));
    assert!(g.local_cycles(g.vertex("C").unwrap()).is_empty());
    let h = parse_graph(P2).unwrap();
    assert_eq!(h.local_cycles(h.vertex("3").unwrap()), ids(&h, "3 4 5"));
    let n = parse_graph(NEST).unwrap();
    assert_eq!(n.local_cycles(n.vertex("a").unwrap()), ids(&n, "a b c d"));
    assert_eq!(n.local_cycles(n.vertex("b").unwrap()), ids(&n, "b c"));
    assert_eq!(n.nesting_depths()[n.vertex("c").unwrap()], 2);

    for g in [g, h, n] {
        let dom = g.dominators();
        for v in 0..g.len() {
            for u in g.local_cycles(v) {
                assert!(dom[u].contains(&v));
            }
        }
    }
}

#[test]
fn admissible_orders() {
    let h = parse_graph(P2).unwrap();
    let order = h.admissible_order().unwrap();
    let pos = |n: &str| order.iter().position(|&v| v == h.vertex(n).unwrap()).unwrap();
    assert!(pos("4") < pos("3") && pos("5") < pos("3"));

    let n = parse_graph(NEST).unwrap();
    let order = n.admissible_order().unwrap();
    let pos = |v: &str| order.iter().position(|&x| x == n.vertex(v).unwrap()).unwrap();
    assert!(pos("b") < pos("a"));
    assert!(pos("c") < pos("b"));

    let all = n.all_admissible_orders(10_000).unwrap();
    assert!(all.iter().all(|o| n.is_admissible(o)));
    assert!(all.contains(&order));
    assert!(!n.is_admissible(&[1, 2, 3, 4, 5]));
}

#[test]
fn elimination_cases() {
    let vars = var_list("x");
    let tf = |s: &str| parse_formula(s, &vars).unwrap();
    let g = parse_graph("graph p vars x\nroot a\na -> v : x' = x + 1\nv -> b : x' = 2*x\n").unwrap();
    let v = g.vertex("v").unwrap();
    let b = g.vertex("b").unwrap();
    let e = g.eliminate(v, Domain::Combined).unwrap();
    assert!(e.edge(0, b).unwrap().equivalent(&tf("x' = 2*x + 2")).unwrap());
    assert!(e.successors(v).next().is_none());
    assert!(e.edge(0, v).unwrap().equivalent(&tf("x' = x + 1")).unwrap());

    let g = parse_graph("graph p vars x\nroot a\na -> v : x' = 0\nv -> v : x <= 9 & x' = x + 1\nv -> b : x' = x\n").unwrap();
    let e = g.eliminate(v, Domain::Combined).unwrap();
    let s = Domain::Combined.star(&tf("x <= 9 & x' = x + 1")).unwrap();
    let expect = tf("x' = 0").compose(&s).unwrap();
    assert!(e.edge(0, b).unwrap().equivalent(&expect).unwrap());
    assert!(e.edge(v, v).is_none());

    let untouched = parse_graph("graph p vars x\nroot a\na -> b : x' = 3\na -> v : x' = x\n").unwrap();
    let e = untouched.eliminate(untouched.vertex("v").unwrap(), Domain::Combined).unwrap();
    assert_eq!(e.edge(0, 1), untouched.edge(0, 1));

    assert!(matches!(untouched.eliminate(0, Domain::Combined), Err(Error::Graph(_))));
}

#[test]
fn single_edge_summary() {
    let g = parse_graph("graph p vars x\nroot r\nr -> v : x' = x + 5\n").unwrap();
    let s = g.summarize(Domain::Combined).unwrap();
    assert!(s.get("v").unwrap().equivalent(&parse_formula("x' = x + 5", &var_list("x")).unwrap()).unwrap());
    assert!(s.get("r").unwrap().equivalent(&TransitionFormula::one(&var_list("x"))).unwrap());
}

#[test]
fn header_summary_is_loop_summary() {
    let g = parse_graph(P1).unwrap();
    let vars = var_list("i");
    let s = g.summarize(Domain::Combined).unwrap();
    let body = parse_formula("i < 5 & i' = i + 1", &vars).unwrap();
    let expect = parse_formula("i' = 1", &vars)
        .unwrap()
        .compose(&Domain::Combined.star(&body).unwrap())
        .unwrap();
    assert!(s.get("B").unwrap().equivalent(&expect).unwrap());
    let exit = s.get("D").unwrap();
    assert!(exit.entails(&parse_formula("i' = 5", &vars).unwrap()).unwrap());
}

/// Root-to-`v` path weights of length at most `max_len`.
fn paths(g: &FlowGraph, max_len: usize) -> Vec<(Vertex, TransitionFormula)> {
    let mut out = vec![(g.root(), TransitionFormula::one(g.vars()))];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (u, w) in &frontier {
            for v in g.successors(*u) {
                next.push((v, w.compose(g.edge(*u, v).unwrap()).unwrap()));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn paths_entail_summaries() {
    for text in [P1, P2, NEST] {
        let g = parse_graph(text).unwrap();
        for d in Domain::ALL {
            let s = g.summarize(d).unwrap();
            for (v, w) in paths(&g, 6) {
                assert!(w.entails(s.summary(v)).unwrap(), "{} {d} at {}", g.name(), g.vertex_name(v));
            }
        }
    }
}

#[test]
fn order_invariance() {
    for text in [P1, P2] {
        let g = parse_graph(text).unwrap();
        let reference = g.summarize(Domain::Combined).unwrap();
        for order in g.all_admissible_orders(1000).unwrap() {
            let s = g.summarize_in_order(&order, Domain::Combined).unwrap();
            assert!(s.equivalent(&reference).unwrap(), "{order:?}");
        }
    }
}

#[test]
fn root_with_incoming_edges() {
    let g = parse_graph("graph r vars x\nroot r\nr -> a : x <= 9 & x' = x + 1\na -> r : x' = x\n").unwrap();
    let s = g.summarize(Domain::Combined).unwrap();
    for (v, w) in paths(&g, 6) {
        assert!(w.entails(s.summary(v)).unwrap());
    }
}
