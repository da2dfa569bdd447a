//! The graph text format:
//!
//! ```text
//! graph loop vars i
//! root A
//! A -> B : i' = 1
//! B -> B : i <= 4 & i' = i + 1
//! ```
//!
//! Vertices are numbered in order of first mention unless a
//! `vertices a b c` line fixes the order.

use super::formula::formula_at;
use super::lexer::{describe, lex_lines, Cursor, Tok};
use crate::error::{Error, Result};
use crate::flowgraph::FlowGraph;

pub(crate) fn vertex_name(cur: &mut Cursor) -> Result<String> {
    match cur.peek().clone() {
        Tok::Ident(s) => {
            cur.bump();
            Ok(s)
        }
        Tok::Int(n) => {
            cur.bump();
            Ok(n.to_string())
        }
        other => cur.error(format!("expected a vertex name, found {}", describe(&other))),
    }
}

pub fn parse_graph(text: &str) -> Result<FlowGraph> {
    let mut lines = lex_lines(text)?.into_iter();
    let mut header = lines.next().ok_or_else(|| Error::parse(1, 1, "empty graph file"))?;
    header.expect_keyword("graph")?;
    let name = header.ident()?;
    header.expect_keyword("vars")?;
    let mut vars = Vec::new();
    while !header.at_eof() {
        let (l, c) = header.here();
        let v = header.ident()?;
        if vars.contains(&v) {
            return Err(Error::parse(l, c, format!("variable '{v}' declared twice")));
        }
        vars.push(v);
    }

    let mut vertices: Vec<String> = Vec::new();
    let mut intern = |v: String| match vertices.iter().position(|w| *w == v) {
        Some(i) => i,
        None => {
            vertices.push(v);
            vertices.len() - 1
        }
    };
    let mut root = None;
    let mut edges = Vec::new();
    for mut cur in lines {
        let at = cur.here();
        if cur.eat_keyword("root") {
            if root.is_some() {
                return Err(Error::parse(at.0, at.1, "root declared twice"));
            }
            root = Some(intern(vertex_name(&mut cur)?));
        } else if cur.eat_keyword("vertices") {
            while !cur.at_eof() {
                intern(vertex_name(&mut cur)?);
            }
        } else {
            let u = intern(vertex_name(&mut cur)?);
            cur.expect_sym("->")?;
            let v = intern(vertex_name(&mut cur)?);
            cur.expect_sym(":")?;
            edges.push((u, v, formula_at(&mut cur, &vars)?));
        }
        cur.expect_eof()?;
    }
    let root = root.ok_or_else(|| Error::Graph("missing 'root' line".into()))?;
    FlowGraph::new(name, vars, vertices, root, edges)
}
