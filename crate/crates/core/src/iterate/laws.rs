//! Pre-Kleene algebra laws for an iteration operator, checked on concrete
//! formulas. The operator is a parameter so that deliberately broken
//! operators can be used as controls.

use std::fmt;

use crate::error::Result;
use crate::ratlin::Substitution;
use crate::transition::{is_simulation, Counterexample, TransitionFormula};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    Reflexivity,
    Extensivity,
    Transitivity,
    Monotonicity,
    Unrolling(usize),
    Robustness,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Reflexivity => write!(f, "reflexivity (1 <= a*)"),
            Law::Extensivity => write!(f, "extensivity (a <= a*)"),
            Law::Transitivity => write!(f, "transitivity (a* a* = a*)"),
            Law::Monotonicity => write!(f, "monotonicity (a <= b implies a* <= b*)"),
            Law::Unrolling(n) => write!(f, "unrolling ((a^{n})* <= a*)"),
            Law::Robustness => write!(f, "robustness (simulations are preserved by *)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub law: Law,
    pub formula: String,
    /// A pair of states separating the two sides.
    pub witness: Option<Counterexample>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails for {}", self.law, self.formula)?;
        if let Some(w) = &self.witness {
            let pts: Vec<String> = w.iter().map(|(v, q)| format!("{v}={q}")).collect();
            write!(f, " at {}", pts.join(", "))?;
        }
        Ok(())
    }
}

fn require(law: Law, a: &TransitionFormula, lhs: &TransitionFormula, rhs: &TransitionFormula) -> Result<Option<Violation>> {
    Ok(lhs.entailment_counterexample(rhs)?.map(|w| Violation {
        law,
        formula: a.to_string(),
        witness: Some(w),
    }))
}

pub fn reflexivity<S>(star: &S, a: &TransitionFormula) -> Result<Option<Violation>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    require(Law::Reflexivity, a, &TransitionFormula::one(a.vars()), &star(a)?)
}

pub fn extensivity<S>(star: &S, a: &TransitionFormula) -> Result<Option<Violation>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    require(Law::Extensivity, a, a, &star(a)?)
}

pub fn transitivity<S>(star: &S, a: &TransitionFormula) -> Result<Option<Violation>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    let s = star(a)?;
    let ss = s.compose(&s)?;
    if let Some(v) = require(Law::Transitivity, a, &ss, &s)? {
        return Ok(Some(v));
    }
    require(Law::Transitivity, a, &s, &ss)
}

/// Checked for `b := a + extra`, so that `a ≤ b` holds by construction.
pub fn monotonicity<S>(star: &S, a: &TransitionFormula, extra: &TransitionFormula) -> Result<Option<Violation>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    let b = a.plus(extra)?;
    require(Law::Monotonicity, a, &star(a)?, &star(&b)?)
}

pub fn unrolling<S>(star: &S, a: &TransitionFormula, n: usize) -> Result<Option<Violation>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    require(Law::Unrolling(n), a, &star(&a.power(n)?)?, &star(a)?)
}

/// If `σ` simulates `f` by `g`, it must also simulate `f*` by `g*`.
pub fn robustness<S>(
    star: &S,
    sigma: &Substitution,
    f: &TransitionFormula,
    g: &TransitionFormula,
) -> Result<Option<Violation>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    if !is_simulation(sigma, f, g)? {
        return Ok(None);
    }
    let fs = star(f)?;
    let gs = star(g)?.subst(sigma)?;
    require(Law::Robustness, f, &fs, &gs)
}

/// Reflexivity, extensivity, transitivity, monotonicity and unrolling for
/// `n ∈ {2, 3}`, stopping at the first violation.
pub fn check_pka_laws<S>(star: &S, a: &TransitionFormula, extra: &TransitionFormula) -> Result<Option<Violation>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    if let Some(v) = reflexivity(star, a)? {
        return Ok(Some(v));
    }
    if let Some(v) = extensivity(star, a)? {
        return Ok(Some(v));
    }
    if let Some(v) = transitivity(star, a)? {
        return Ok(Some(v));
    }
    if let Some(v) = monotonicity(star, a, extra)? {
        return Ok(Some(v));
    }
    for n in [2, 3] {
        if let Some(v) = unrolling(star, a, n)? {
            return Ok(Some(v));
        }
    }
    Ok(None)
}
