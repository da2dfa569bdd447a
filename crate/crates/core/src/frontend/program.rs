//! A small imperative language over integer variables and its lowering to
//! flow graphs.
//!
//! ```text
//! vars x y;
//! x = 1; y = 0;
//! while (x < 5) {
//!   x++;
//!   y += x;
//! }
//! ```

use super::cond::{cond, dnf, expr, lit_constraint, Cond, Scope};
use super::lexer::{describe, lex, Cursor, Tok};
use crate::error::{Error, Result};
use crate::flowgraph::{FlowGraph, Vertex};
use crate::polyhedra::{Constraint, Polyhedron};
use crate::ratlin::{rat, transition_env, AffineTerm, Relation, VarId};
use crate::transition::TransitionFormula;

#[derive(Debug, Clone)]
pub enum Stmt {
    Assign(String, AffineTerm),
    /// `x = nondet();`
    Havoc(String),
    Assume(Cond),
    If(Cond, Vec<Stmt>, Vec<Stmt>),
    While(Cond, Vec<Stmt>),
}

#[derive(Debug, Clone)]
pub struct Program {
    pub vars: Vec<String>,
    pub body: Vec<Stmt>,
}

pub fn parse_program(text: &str) -> Result<Program> {
    let mut cur = Cursor::new(lex(text)?);
    cur.expect_keyword("vars")?;
    let mut vars = Vec::new();
    while !cur.is_sym(";") {
        let (l, c) = cur.here();
        let v = cur.ident()?;
        if vars.contains(&v) {
            return Err(Error::parse(l, c, format!("variable '{v}' declared twice")));
        }
        vars.push(v);
        cur.eat_sym(",");
    }
    cur.expect_sym(";")?;
    let mut body = Vec::new();
    while !cur.at_eof() {
        body.push(stmt(&mut cur, &vars)?);
    }
    Ok(Program { vars, body })
}

fn block(cur: &mut Cursor, vars: &[String]) -> Result<Vec<Stmt>> {
    if cur.eat_sym("{") {
        let mut out = Vec::new();
        while !cur.eat_sym("}") {
            if cur.at_eof() {
                return cur.error("unterminated block");
            }
            out.push(stmt(cur, vars)?);
        }
        Ok(out)
    } else {
        Ok(vec![stmt(cur, vars)?])
    }
}

fn guard(cur: &mut Cursor, vars: &[String]) -> Result<Cond> {
    cur.expect_sym("(")?;
    let c = cond(
        cur,
        &Scope {
            vars,
            allow_primes: false,
        },
    )?;
    cur.expect_sym(")")?;
    Ok(c)
}

fn stmt(cur: &mut Cursor, vars: &[String]) -> Result<Stmt> {
    let scope = Scope {
        vars,
        allow_primes: false,
    };
    if cur.eat_keyword("if") {
        let c = guard(cur, vars)?;
        let then = block(cur, vars)?;
        let other = if cur.eat_keyword("else") { block(cur, vars)? } else { Vec::new() };
        return Ok(Stmt::If(c, then, other));
    }
    if cur.eat_keyword("while") {
        let c = guard(cur, vars)?;
        return Ok(Stmt::While(c, block(cur, vars)?));
    }
    if cur.eat_keyword("assume") {
        let c = guard(cur, vars)?;
        cur.expect_sym(";")?;
        return Ok(Stmt::Assume(c));
    }
    if cur.eat_keyword("skip") {
        cur.expect_sym(";")?;
        return Ok(Stmt::Assume(Cond::True));
    }
    let (l, c) = cur.here();
    let x = cur.ident()?;
    if !vars.contains(&x) {
        return Err(Error::parse(l, c, format!("undeclared variable '{x}'")));
    }
    let var = AffineTerm::var(VarId::unprimed(&x));
    let s = match cur.bump() {
        Tok::Sym("++") => Stmt::Assign(x, var + AffineTerm::constant(rat(1, 1))),
        Tok::Sym("--") => Stmt::Assign(x, var - AffineTerm::constant(rat(1, 1))),
        Tok::Sym("+=") => Stmt::Assign(x, var + expr(cur, &scope)?),
        Tok::Sym("-=") => Stmt::Assign(x, var - expr(cur, &scope)?),
        Tok::Sym("=") if cur.is_keyword("nondet") && matches!(cur.peek_at(1), Tok::Sym("(")) => {
            cur.bump();
            cur.expect_sym("(")?;
            cur.expect_sym(")")?;
            Stmt::Havoc(x)
        }
        Tok::Sym("=") => Stmt::Assign(x, expr(cur, &scope)?),
        other => return Err(Error::parse(l, c, format!("expected an assignment to '{x}', found {}", describe(&other)))),
    };
    cur.expect_sym(";")?;
    Ok(s)
}

struct Lowering<'a> {
    vars: &'a [String],
    vertices: Vec<String>,
    edges: Vec<(Vertex, Vertex, TransitionFormula)>,
}

impl Lowering<'_> {
    fn fresh(&mut self) -> Vertex {
        self.vertices.push((self.vertices.len() + 1).to_string());
        self.vertices.len() - 1
    }

    /// Frame equalities `y' = y` for every variable except `changed`.
    fn frame(&self, changed: Option<&str>) -> Result<Vec<Constraint>> {
        let env = transition_env(self.vars);
        self.vars
            .iter()
            .filter(|v| Some(v.as_str()) != changed)
            .map(|v| {
                let t = AffineTerm::var(VarId::primed(v)) - AffineTerm::var(VarId::unprimed(v));
                Constraint::from_term(&t, Relation::EqZero, &env)
            })
            .collect()
    }

    fn guard_weight(&self, c: &Cond, negate: bool) -> Result<TransitionFormula> {
        let env = transition_env(self.vars);
        let mut ds = Vec::new();
        for conj in dnf(c, negate) {
            let mut rows = self.frame(None)?;
            for lit in &conj {
                rows.push(lit_constraint(lit, &env)?);
            }
            ds.push(Polyhedron::new(env.clone(), rows));
        }
        TransitionFormula::from_disjuncts(self.vars, ds)
    }

    fn edge(&mut self, u: Vertex, target: Option<Vertex>, w: TransitionFormula) -> Vertex {
        let v = target.unwrap_or_else(|| self.fresh());
        self.edges.push((u, v, w));
        v
    }

    fn block(&mut self, stmts: &[Stmt], entry: Vertex, target: Option<Vertex>) -> Result<Vertex> {
        if stmts.is_empty() {
            return Ok(match target {
                Some(t) if t != entry => {
                    let one = TransitionFormula::one(self.vars);
                    self.edge(entry, Some(t), one)
                }
                _ => entry,
            });
        }
        let mut at = entry;
        for (i, s) in stmts.iter().enumerate() {
            let tgt = if i + 1 == stmts.len() { target } else { None };
            at = self.stmt(s, at, tgt)?;
        }
        Ok(at)
    }

    /// A guard edge out of `entry`, then `body`, ending at `target`.
    fn branch(&mut self, entry: Vertex, c: &Cond, negate: bool, body: &[Stmt], target: Vertex) -> Result<()> {
        let w = self.guard_weight(c, negate)?;
        if body.is_empty() {
            self.edge(entry, Some(target), w);
        } else {
            let start = self.edge(entry, None, w);
            self.block(body, start, Some(target))?;
        }
        Ok(())
    }

    fn stmt(&mut self, s: &Stmt, entry: Vertex, target: Option<Vertex>) -> Result<Vertex> {
        let env = transition_env(self.vars);
        match s {
            Stmt::Assign(x, e) => {
                let mut rows = self.frame(Some(x))?;
                let t = AffineTerm::var(VarId::primed(x)) - e.clone();
                rows.push(Constraint::from_term(&t, Relation::EqZero, &env)?);
                let w = TransitionFormula::from_polyhedron(self.vars, Polyhedron::new(env, rows))?;
                Ok(self.edge(entry, target, w))
            }
            Stmt::Havoc(x) => {
                let rows = self.frame(Some(x))?;
                let w = TransitionFormula::from_polyhedron(self.vars, Polyhedron::new(env, rows))?;
                Ok(self.edge(entry, target, w))
            }
            Stmt::Assume(c) => {
                let w = self.guard_weight(c, false)?;
                Ok(self.edge(entry, target, w))
            }
            Stmt::If(c, then, other) => {
                let join = target.unwrap_or_else(|| self.fresh());
                self.branch(entry, c, false, then, join)?;
                self.branch(entry, c, true, other, join)?;
                Ok(join)
            }
            Stmt::While(c, body) => {
                // The root never doubles as a loop header.
                let header = if entry == 0 {
                    let one = TransitionFormula::one(self.vars);
                    self.edge(entry, None, one)
                } else {
                    entry
                };
                self.branch(header, c, false, body, header)?;
                let exit = self.guard_weight(c, true)?;
                Ok(self.edge(header, target, exit))
            }
        }
    }
}

/// One vertex per program point, numbered from `1` (the root) in the
/// order the points are reached; one edge per statement or branch guard.
/// A loop's header is the point just before it. Points that no feasible
/// edge reaches are dropped.
pub fn program_to_flowgraph(p: &Program, name: &str) -> Result<FlowGraph> {
    let mut low = Lowering {
        vars: &p.vars,
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    let root = low.fresh();
    low.block(&p.body, root, None)?;
    let Lowering { vertices, edges, .. } = low;

    let edges: Vec<_> = edges.into_iter().filter(|(_, _, w)| !w.is_zero()).collect();
    let mut live = vec![false; vertices.len()];
    live[root] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for (u, v, _) in &edges {
            if live[*u] && !live[*v] {
                live[*v] = true;
                changed = true;
            }
        }
    }
    let mut index = vec![None; vertices.len()];
    let mut kept = Vec::new();
    for (v, name) in vertices.into_iter().enumerate() {
        if live[v] {
            index[v] = Some(kept.len());
            kept.push(name);
        }
    }
    let edges = edges
        .into_iter()
        .filter_map(|(u, v, w)| Some((index[u]?, index[v]?, w)));
    FlowGraph::new(name, p.vars.clone(), kept, 0, edges)
}
