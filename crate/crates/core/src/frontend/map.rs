//! The map file format:
//!
//! ```text
//! vmap 1 -> A
//! sub i := x
//! ```
//!
//! `vmap` lines send `G`-vertices to `H`-vertices; `sub` lines give each
//! `H`-variable as an affine term over the `G`-variables.

use std::collections::BTreeMap;

use super::cond::{expr, Scope};
use super::graph::vertex_name;
use super::lexer::lex_lines;
use crate::error::{Error, Result};
use crate::flowgraph::FlowGraph;
use crate::ratlin::{AffineTerm, Substitution};
use crate::simcheck::StutterMap;

pub fn parse_map(text: &str, g: &FlowGraph, hg: &FlowGraph) -> Result<StutterMap> {
    let mut h = vec![None; g.len()];
    let mut subs: BTreeMap<String, AffineTerm> = BTreeMap::new();
    let scope = Scope {
        vars: g.vars(),
        allow_primes: false,
    };
    for mut cur in lex_lines(text)? {
        let at = cur.here();
        if cur.eat_keyword("vmap") {
            let (l, c) = cur.here();
            let name = vertex_name(&mut cur)?;
            let u = g
                .vertex(&name)
                .ok_or_else(|| Error::parse(l, c, format!("{} has no vertex '{name}'", g.name())))?;
            cur.expect_sym("->")?;
            let (l2, c2) = cur.here();
            let image = vertex_name(&mut cur)?;
            let x = hg
                .vertex(&image)
                .ok_or_else(|| Error::parse(l2, c2, format!("{} has no vertex '{image}'", hg.name())))?;
            if h[u].replace(x).is_some() {
                return Err(Error::parse(at.0, at.1, format!("vertex '{name}' mapped twice")));
            }
        } else if cur.eat_keyword("sub") {
            let (l, c) = cur.here();
            let y = cur.ident()?;
            if !hg.vars().contains(&y) {
                return Err(Error::parse(l, c, format!("{} has no variable '{y}'", hg.name())));
            }
            cur.expect_sym(":=")?;
            let t = expr(&mut cur, &scope)?;
            if subs.insert(y.clone(), t).is_some() {
                return Err(Error::parse(l, c, format!("variable '{y}' substituted twice")));
            }
        } else {
            return cur.error("expected 'vmap' or 'sub'");
        }
        cur.expect_eof()?;
    }
    let h = h
        .into_iter()
        .enumerate()
        .map(|(v, x)| x.ok_or_else(|| Error::Input(format!("vertex {} is not mapped", g.vertex_name(v)))))
        .collect::<Result<Vec<_>>>()?;
    if let Some(y) = hg.vars().iter().find(|y| !subs.contains_key(*y)) {
        return Err(Error::Input(format!("no substitution given for {y}")));
    }
    let f = Substitution::new(g.vars().to_vec(), hg.vars().to_vec(), subs)?;
    StutterMap::new(g, hg, h, f)
}
