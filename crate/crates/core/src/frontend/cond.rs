//! Affine expressions, comparisons and boolean conditions shared by the
//! program, formula and map parsers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::lexer::{describe, Cursor, Tok};
use crate::error::Result;
use crate::polyhedra::Constraint;
use crate::ratlin::rational::{denominator_lcm, Rational};
use crate::ratlin::{AffineTerm, Relation, VarId};

/// Which identifiers an expression may mention.
pub(crate) struct Scope<'a> {
    pub vars: &'a [String],
    pub allow_primes: bool,
}

impl Scope<'_> {
    fn resolve(&self, cur: &mut Cursor) -> Result<VarId> {
        let (line, col) = cur.here();
        let name = cur.ident()?;
        if !self.vars.contains(&name) {
            return Err(crate::error::Error::parse(line, col, format!("undeclared variable '{name}'")));
        }
        if cur.is_sym("'") {
            if !self.allow_primes {
                return cur.error("primed variables are not allowed here");
            }
            cur.bump();
            return Ok(VarId::primed(name));
        }
        Ok(VarId::unprimed(name))
    }
}

pub(crate) fn expr(cur: &mut Cursor, scope: &Scope) -> Result<AffineTerm> {
    let mut acc = product(cur, scope)?;
    loop {
        if cur.eat_sym("+") {
            acc = acc + product(cur, scope)?;
        } else if cur.eat_sym("-") {
            acc = acc - product(cur, scope)?;
        } else {
            return Ok(acc);
        }
    }
}

fn product(cur: &mut Cursor, scope: &Scope) -> Result<AffineTerm> {
    let mut acc = factor(cur, scope)?;
    loop {
        if cur.is_sym("*") {
            cur.bump();
            let (line, col) = cur.here();
            let rhs = factor(cur, scope)?;
            acc = if acc.is_constant() {
                rhs.scale(acc.constant_part())
            } else if rhs.is_constant() {
                acc.scale(rhs.constant_part())
            } else {
                return Err(crate::error::Error::parse(line, col, "nonlinear product"));
            };
        } else if cur.is_sym("/") {
            cur.bump();
            let (line, col) = cur.here();
            let rhs = factor(cur, scope)?;
            if !rhs.is_constant() || rhs.constant_part().is_zero() {
                return Err(crate::error::Error::parse(
                    line,
                    col,
                    "division is only allowed by a nonzero constant",
                ));
            }
            acc = acc.scale(&(Rational::one() / rhs.constant_part()));
        } else {
            return Ok(acc);
        }
    }
}

fn factor(cur: &mut Cursor, scope: &Scope) -> Result<AffineTerm> {
    match cur.peek().clone() {
        Tok::Int(n) => {
            cur.bump();
            Ok(AffineTerm::constant(Rational::from_integer(n)))
        }
        Tok::Ident(_) => Ok(AffineTerm::var(scope.resolve(cur)?)),
        Tok::Sym("-") => {
            cur.bump();
            Ok(-factor(cur, scope)?)
        }
        Tok::Sym("+") => {
            cur.bump();
            factor(cur, scope)
        }
        Tok::Sym("(") => {
            cur.bump();
            let e = expr(cur, scope)?;
            cur.expect_sym(")")?;
            Ok(e)
        }
        other => cur.error(format!("expected an expression, found {}", describe(&other))),
    }
}

/// `term REL 0` before integer tightening.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Geq,
    Gt,
    Eq,
    Neq,
}

/// A boolean combination of comparisons as written in the source.
#[derive(Debug, Clone)]
pub enum Cond {
    True,
    False,
    Nondet,
    Cmp(AffineTerm, Rel),
    And(Vec<Cond>),
    Or(Vec<Cond>),
    Not(Box<Cond>),
}

impl Cond {
    /// Evaluates at a state of unprimed variables; `nondet()` asks `choose`.
    pub fn eval(&self, state: &BTreeMap<VarId, Rational>, choose: &mut dyn FnMut() -> bool) -> Result<bool> {
        Ok(match self {
            Cond::True => true,
            Cond::False => false,
            Cond::Nondet => choose(),
            Cond::Cmp(t, rel) => {
                let v = t.eval(state)?;
                match rel {
                    Rel::Geq => v >= Rational::zero(),
                    Rel::Gt => v > Rational::zero(),
                    Rel::Eq => v.is_zero(),
                    Rel::Neq => !v.is_zero(),
                }
            }
            Cond::And(cs) => {
                let mut all = true;
                for c in cs {
                    all &= c.eval(state, choose)?;
                }
                all
            }
            Cond::Or(cs) => {
                let mut any = false;
                for c in cs {
                    any |= c.eval(state, choose)?;
                }
                any
            }
            Cond::Not(c) => !c.eval(state, choose)?,
        })
    }
}

/// A closed literal: `term ≥ 0` or `term = 0`.
pub(crate) type Lit = (AffineTerm, Relation);

pub(crate) fn cond(cur: &mut Cursor, scope: &Scope) -> Result<Cond> {
    let mut parts = vec![conj(cur, scope)?];
    while cur.eat_sym("||") || cur.eat_sym("|") {
        parts.push(conj(cur, scope)?);
    }
    Ok(if parts.len() == 1 { parts.pop().expect("one") } else { Cond::Or(parts) })
}

fn conj(cur: &mut Cursor, scope: &Scope) -> Result<Cond> {
    let mut parts = vec![unary(cur, scope)?];
    while cur.eat_sym("&&") || cur.eat_sym("&") {
        parts.push(unary(cur, scope)?);
    }
    Ok(if parts.len() == 1 { parts.pop().expect("one") } else { Cond::And(parts) })
}

fn unary(cur: &mut Cursor, scope: &Scope) -> Result<Cond> {
    if cur.eat_sym("!") {
        return Ok(Cond::Not(Box::new(unary(cur, scope)?)));
    }
    if cur.eat_keyword("true") {
        return Ok(Cond::True);
    }
    if cur.eat_keyword("false") {
        return Ok(Cond::False);
    }
    if cur.is_keyword("nondet") {
        cur.bump();
        cur.expect_sym("(")?;
        cur.expect_sym(")")?;
        return Ok(Cond::Nondet);
    }
    if cur.is_sym("(") {
        // Either a parenthesized condition or an expression that starts with '('.
        let mark = cur.mark();
        if let Ok(c) = comparison(cur, scope) {
            return Ok(c);
        }
        cur.reset(mark);
        cur.bump();
        let c = cond(cur, scope)?;
        cur.expect_sym(")")?;
        return Ok(c);
    }
    comparison(cur, scope)
}

fn relation(cur: &mut Cursor) -> Option<&'static str> {
    ["<=", ">=", "==", "!=", "<", ">", "="].into_iter().find(|&s| cur.eat_sym(s)).map(|v| v as _)
}

/// `e1 op e2 [op e3 ...]`; chains mean the conjunction of adjacent pairs.
fn comparison(cur: &mut Cursor, scope: &Scope) -> Result<Cond> {
    let mut lhs = expr(cur, scope)?;
    let mut atoms = Vec::new();
    while let Some(op) = relation(cur) {
        let rhs = expr(cur, scope)?;
        let d = rhs.clone() - lhs.clone();
        atoms.push(match op {
            "<=" => Cond::Cmp(d, Rel::Geq),
            "<" => Cond::Cmp(d, Rel::Gt),
            ">=" => Cond::Cmp(-d, Rel::Geq),
            ">" => Cond::Cmp(-d, Rel::Gt),
            "=" | "==" => Cond::Cmp(d, Rel::Eq),
            _ => Cond::Cmp(d, Rel::Neq),
        });
        lhs = rhs;
    }
    match atoms.len() {
        0 => cur.error(format!("expected a comparison operator, found {}", describe(cur.peek()))),
        1 => Ok(atoms.pop().expect("one")),
        _ => Ok(Cond::And(atoms)),
    }
}

/// `t > 0` over integer points: clear denominators, divide the variable part
/// by its gcd `g`, and round, giving `u − ⌊−c/g⌋ − 1 ≥ 0` for `t = g·u + c`.
fn tighten_strict(t: &AffineTerm) -> AffineTerm {
    let l = denominator_lcm(t.coeffs().map(|(_, c)| c).chain(std::iter::once(t.constant_part())));
    let scaled = t.scale(&Rational::from_integer(l));
    let g = scaled
        .coeffs()
        .fold(BigInt::zero(), |g, (_, c)| g.gcd(c.numer()));
    if g.is_zero() {
        return scaled - AffineTerm::constant(Rational::one());
    }
    let c = scaled.constant_part().to_integer();
    let u = (scaled - AffineTerm::constant(Rational::from_integer(c.clone())))
        .scale(&Rational::new(BigInt::one(), g.clone()));
    let bound = (-c).div_floor(&g) + BigInt::one();
    u - AffineTerm::constant(Rational::from_integer(bound))
}

/// Disjunctive normal form of `c` (or of `¬c`), with strict comparisons
/// tightened over the integers. `nondet()` is true under both polarities.
pub(crate) fn dnf(c: &Cond, negate: bool) -> Vec<Vec<Lit>> {
    match (c, negate) {
        (Cond::True, false) | (Cond::False, true) | (Cond::Nondet, _) => vec![vec![]],
        (Cond::True, true) | (Cond::False, false) => vec![],
        (Cond::Not(inner), n) => dnf(inner, !n),
        (Cond::And(cs), false) | (Cond::Or(cs), true) => cs.iter().fold(vec![vec![]], |acc, c| {
            let rhs = dnf(c, negate);
            acc.iter()
                .flat_map(|a| {
                    rhs.iter().map(move |b| {
                        let mut v = a.clone();
                        v.extend(b.iter().cloned());
                        v
                    })
                })
                .collect()
        }),
        (Cond::Or(cs), false) | (Cond::And(cs), true) => cs.iter().flat_map(|c| dnf(c, negate)).collect(),
        (Cond::Cmp(t, rel), n) => {
            let geq = |t: AffineTerm| vec![vec![(t, Relation::GeqZero)]];
            match (rel, n) {
                (Rel::Geq, false) => geq(t.clone()),
                (Rel::Geq, true) => geq(tighten_strict(&-t.clone())),
                (Rel::Gt, false) => geq(tighten_strict(t)),
                (Rel::Gt, true) => geq(-t.clone()),
                (Rel::Eq, false) | (Rel::Neq, true) => vec![vec![(t.clone(), Relation::EqZero)]],
                (Rel::Eq, true) | (Rel::Neq, false) => {
                    vec![vec![(tighten_strict(t), Relation::GeqZero)], vec![(tighten_strict(&-t.clone()), Relation::GeqZero)]]
                }
            }
        }
    }
}

pub(crate) fn lit_constraint(lit: &Lit, env: &[VarId]) -> Result<Constraint> {
    Constraint::from_term(&lit.0, lit.1, env)
}
