//! Linear recurrence analysis through lossy translations
//! `⋀ y' ≤ y + b` over fresh variables.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::abstraction::{Abstraction, SubModel};
use crate::error::Result;
use crate::polyhedra::{Constraint, Polyhedron};
use crate::ratlin::rational::{fmt_rational, Rational};
use crate::ratlin::{transition_env, AffineTerm, Relation, Substitution, VarId};
use crate::transition::TransitionFormula;

/// Name of the iteration counter in counted formulas.
pub const COUNTER: &str = "$k";

/// The `i`-th fresh variable. `$` cannot appear in parsed identifiers.
pub fn fresh_var(i: usize) -> String {
    format!("$y{i}")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LossyTranslation {
    /// The formula `false`.
    Bottom,
    /// `(y, b)` stands for `y' ≤ y + b`.
    Recurrences(Vec<(String, Rational)>),
}

impl fmt::Display for LossyTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let LossyTranslation::Recurrences(recs) = self else {
            return f.write_str("false");
        };
        if recs.is_empty() {
            return f.write_str("true");
        }
        let parts: Vec<String> = recs
            .iter()
            .map(|(y, b)| match b {
                b if b.is_zero() => format!("{y}' <= {y}"),
                b if b.is_negative() => format!("{y}' <= {y} - {}", fmt_rational(&-b)),
                b => format!("{y}' <= {y} + {}", fmt_rational(b)),
            })
            .collect();
        f.write_str(&parts.join(" & "))
    }
}

/// A facet `t·δ ≤ b` of `conv(Δ(F))`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Recurrence {
    pub lead: usize,
    pub direction: Vec<BigInt>,
    pub bound: BigInt,
}

/// Facets of `conv(Δ(F))`, each equality split into two opposite
/// inequalities, ordered by leading column, coefficients, then bound.
pub fn delta_facets(f: &TransitionFormula) -> Result<Option<Vec<Recurrence>>> {
    if f.is_zero() {
        return Ok(None);
    }
    let hull = f.delta()?;
    if hull.is_canonical_empty() {
        return Ok(None);
    }
    let mut out = Vec::new();
    for c in hull.constraints() {
        // a·δ + c ≥ 0  ⇔  (−a)·δ ≤ c
        let neg: Vec<BigInt> = c.coeffs().iter().map(|a| -a).collect();
        let mut push = |direction: Vec<BigInt>, bound: BigInt| {
            let lead = direction.iter().position(|a| !a.is_zero()).unwrap_or(usize::MAX);
            out.push(Recurrence { lead, direction, bound });
        };
        if c.is_equality() {
            push(c.coeffs().to_vec(), -c.constant().clone());
        }
        push(neg, c.constant().clone());
    }
    out.sort();
    Ok(Some(out))
}

fn direction_term(direction: &[BigInt], vars: &[String]) -> AffineTerm {
    AffineTerm::from_parts(
        vars.iter()
            .map(VarId::unprimed)
            .zip(direction.iter().map(|a| Rational::from_integer(a.clone()))),
        Rational::zero(),
    )
}

/// `α(F)`: one fresh variable per facet of `conv(Δ(F))`, with
/// `η = [y_i ↦ t_i]`. Unsatisfiable input gives `Bottom` and the identity.
pub fn alpha_lra(f: &TransitionFormula) -> Result<Abstraction<LossyTranslation>> {
    let Some(facets) = delta_facets(f)? else {
        return Ok(Abstraction {
            formula: LossyTranslation::Bottom,
            eta: Substitution::identity(f.vars()),
        });
    };
    let names: Vec<String> = (0..facets.len()).map(fresh_var).collect();
    let eta = Substitution::new(
        f.vars().to_vec(),
        names.clone(),
        names.iter().cloned().zip(facets.iter().map(|r| direction_term(&r.direction, f.vars()))),
    )?;
    let recs = names
        .into_iter()
        .zip(facets.iter().map(|r| Rational::from_integer(r.bound.clone())))
        .collect();
    Ok(Abstraction {
        formula: LossyTranslation::Recurrences(recs),
        eta,
    })
}

/// The closure with the counter kept: a formula over `vars ++ [$k]` in which
/// `$k'` is unconstrained. `Bottom` gives `$k = 0 ∧ vars' = vars`; otherwise
/// `$k ≥ 0 ∧ ⋀ y' ≤ y + $k·b`.
pub fn star_lra_counted(a: &LossyTranslation, vars: &[String]) -> Result<TransitionFormula> {
    let counted: Vec<String> = vars.iter().cloned().chain([COUNTER.to_string()]).collect();
    let env = transition_env(&counted);
    let k = AffineTerm::var(VarId::unprimed(COUNTER));
    let mut rows = Vec::new();
    match a {
        LossyTranslation::Bottom => {
            rows.push(Constraint::from_term(&k, Relation::EqZero, &env)?);
            for v in vars {
                let d = AffineTerm::var(VarId::primed(v)) - AffineTerm::var(VarId::unprimed(v));
                rows.push(Constraint::from_term(&d, Relation::EqZero, &env)?);
            }
        }
        LossyTranslation::Recurrences(recs) => {
            rows.push(Constraint::from_term(&k, Relation::GeqZero, &env)?);
            for (y, b) in recs {
                let t = AffineTerm::var(VarId::unprimed(y)) - AffineTerm::var(VarId::primed(y)) + k.scale(b);
                rows.push(Constraint::from_term(&t, Relation::GeqZero, &env)?);
            }
        }
    }
    TransitionFormula::from_polyhedron(&counted, Polyhedron::new(env, rows))
}

/// `∃k ≥ 0. ⋀ y' ≤ y + k·b` over the abstract variables (rational `k`).
pub fn star_lra_base(a: &LossyTranslation, vars: &[String]) -> Result<TransitionFormula> {
    star_lra_counted(a, vars)?.project_vars(vars)
}

pub struct LossyModel;

impl SubModel for LossyModel {
    type Formula = LossyTranslation;

    fn alpha(&self, f: &TransitionFormula) -> Result<Abstraction<LossyTranslation>> {
        alpha_lra(f)
    }

    fn star(&self, a: &Abstraction<LossyTranslation>) -> Result<TransitionFormula> {
        star_lra_base(&a.formula, a.abstract_vars())
    }
}

pub fn star_lra(f: &TransitionFormula) -> Result<TransitionFormula> {
    LossyModel.lifted_star(f)
}
