use super::cond::{cond, dnf, lit_constraint, Scope};
use super::lexer::{lex, Cursor};
use crate::error::{Error, Result};
use crate::polyhedra::Polyhedron;
use crate::ratlin::transition_env;
use crate::transition::TransitionFormula;

/// Parses formula text such as `x < 5 & x' = x + 1 | x' = 0` over `vars`.
///
/// `|` (or `||`) separates disjuncts and binds weaker than `&` (or `&&`).
/// Strict comparisons are tightened on the assumption that all variables
/// range over the integers.
pub fn parse_formula(text: &str, vars: &[String]) -> Result<TransitionFormula> {
    let mut cur = Cursor::new(lex(text)?);
    let f = formula_at(&mut cur, vars)?;
    cur.expect_eof()?;
    Ok(f)
}

pub(crate) fn formula_at(cur: &mut Cursor, vars: &[String]) -> Result<TransitionFormula> {
    let scope = Scope {
        vars,
        allow_primes: true,
    };
    let c = cond(cur, &scope)?;
    let env = transition_env(vars);
    let mut ds = Vec::new();
    for conj in dnf(&c, false) {
        let rows = conj
            .iter()
            .map(|l| lit_constraint(l, &env))
            .collect::<Result<Vec<_>>>()?;
        ds.push(Polyhedron::new(env.clone(), rows));
    }
    TransitionFormula::from_disjuncts(vars, ds)
}

/// A formula file: `vars x y;` followed by formula text.
pub fn parse_formula_file(text: &str) -> Result<TransitionFormula> {
    let mut cur = Cursor::new(lex(text)?);
    cur.expect_keyword("vars")?;
    let mut vars = Vec::new();
    while !cur.eat_sym(";") {
        let (l, c) = cur.here();
        let v = cur.ident()?;
        if vars.contains(&v) {
            return Err(Error::parse(l, c, format!("variable '{v}' declared twice")));
        }
        vars.push(v);
        cur.eat_sym(",");
    }
    let f = formula_at(&mut cur, &vars)?;
    cur.expect_eof()?;
    Ok(f)
}

/// Names from a whitespace- or comma-separated list, for tests and examples.
pub fn var_list(names: &str) -> Vec<String> {
    names
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}
