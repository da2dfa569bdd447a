#![allow(dead_code)]

pub mod oracles;
pub mod suites;

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use robust_apa::polyhedra::{Constraint, Polyhedron};
use robust_apa::ratlin::{Env, Rational, Relation, VarId};

pub fn env(names: &[&str]) -> Env {
    names
        .iter()
        .map(|n| match n.strip_suffix('\'') {
            Some(b) => VarId::primed(b),
            None => VarId::unprimed(n),
        })
        .collect()
}

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// 1..=max_rows rows, coefficients in [-3, 3], constants in [-5, 5], equalities rare.
pub fn random_poly(rng: &mut ChaCha8Rng, env: &Env, max_rows: usize) -> Polyhedron {
    let d = env.len();
    let n = rng.gen_range(1..=max_rows);
    let rows = (0..n).map(|_| {
        let coeffs: Vec<BigInt> = (0..d).map(|_| BigInt::from(rng.gen_range(-3..=3))).collect();
        let rel = if rng.gen_bool(0.15) {
            Relation::EqZero
        } else {
            Relation::GeqZero
        };
        Constraint::new(coeffs, BigInt::from(rng.gen_range(-5..=5)), rel)
    });
    Polyhedron::new(env.clone(), rows.collect::<Vec<_>>())
}

/// Every point of `{lo..=hi}^dim` scaled by `1/den`.
pub fn grid(dim: usize, lo: i64, hi: i64, den: i64) -> Vec<Vec<Rational>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Rational>| {
                (lo * den..=hi * den).map(move |k| {
                    let mut p = p.clone();
                    p.push(qf(k, den));
                    p
                })
            })
            .collect();
    }
    out
}

pub fn corpus(name: &str) -> String {
    let path = format!("{}/corpus/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// A corpus graph, lowering `.imp` programs.
pub fn corpus_graph(name: &str) -> robust_apa::flowgraph::FlowGraph {
    let text = corpus(name);
    match name.strip_suffix(".imp") {
        Some(stem) => {
            let p = robust_apa::frontend::parse_program(&text).unwrap();
            robust_apa::frontend::program_to_flowgraph(&p, stem).unwrap()
        }
        None => robust_apa::frontend::parse_graph(&text).unwrap(),
    }
}
