use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::formula::TransitionFormula;
use crate::error::Result;
use crate::polyhedra::{hull_union, Constraint, Polyhedron};
use crate::ratlin::{primed_state_env, state_env, Env, VarId};

/// A union of polyhedra over one copy of the state variables (`X` or `X'`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateFormula {
    env: Env,
    disjuncts: Vec<Polyhedron>,
}

impl StateFormula {
    pub fn new(env: Env, disjuncts: Vec<Polyhedron>) -> Self {
        let disjuncts = disjuncts.into_iter().filter(|d| !d.is_empty()).collect();
        StateFormula { env, disjuncts }
    }

    pub fn env(&self) -> &Env {
        &self.env
    }

    pub fn disjuncts(&self) -> &[Polyhedron] {
        &self.disjuncts
    }

    pub fn is_false(&self) -> bool {
        self.disjuncts.is_empty()
    }

    /// The closed convex hull of the union (empty polyhedron for `false`).
    pub fn hull(&self) -> Polyhedron {
        hull_union(self.env.clone(), &self.disjuncts)
    }
}

impl fmt::Display for StateFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.disjuncts.is_empty() {
            return write!(f, "false");
        }
        let parts: Vec<String> = self.disjuncts.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(" | "))
    }
}

/// `δx`, the change of `x` across a transition.
pub fn delta_var(x: &str) -> VarId {
    VarId::unprimed(format!("δ{x}"))
}

impl TransitionFormula {
    fn hull_of_projection(&self, onto: Env) -> Result<StateFormula> {
        let parts = self
            .disjuncts()
            .iter()
            .map(|d| d.project(&onto))
            .collect::<Result<Vec<_>>>()?;
        let h = hull_union(onto.clone(), &parts).minimized();
        Ok(StateFormula::new(onto, vec![h]))
    }

    /// `Pre(F) = conv(∃X'. F)`, over `X`.
    pub fn pre(&self) -> Result<StateFormula> {
        self.hull_of_projection(state_env(self.vars()))
    }

    /// `Post(F) = conv(∃X. F)`, over `X'`.
    pub fn post(&self) -> Result<StateFormula> {
        self.hull_of_projection(primed_state_env(self.vars()))
    }

    /// `conv(∃X, X'. F ∧ ⋀ δx = x' − x)`, over the `δ` variables.
    pub fn delta(&self) -> Result<Polyhedron> {
        let n = self.vars().len();
        let deltas: Env = self.vars().iter().map(|x| delta_var(x)).collect();
        let full: Env = self.env().iter().chain(deltas.iter()).cloned().collect();
        let defs: Vec<Constraint> = (0..n)
            .map(|i| {
                let mut coeffs = vec![BigInt::zero(); 3 * n];
                coeffs[i] = BigInt::one();
                coeffs[n + i] = -BigInt::one();
                coeffs[2 * n + i] = BigInt::one();
                Constraint::eq(coeffs, BigInt::zero())
            })
            .collect();
        let parts = self
            .disjuncts()
            .iter()
            .map(|d| d.embed(full.clone())?.with_constraints(defs.iter().cloned()).project(&deltas))
            .collect::<Result<Vec<_>>>()?;
        Ok(hull_union(deltas, &parts).minimized())
    }

    /// `F` restricted to pre-states in `guard` (a polyhedron over `X` or `X'`).
    pub fn restrict(&self, guard: &Polyhedron) -> Result<TransitionFormula> {
        let g = guard.embed(self.env().clone())?;
        let ds: Vec<Polyhedron> = self.disjuncts().iter().map(|d| d.meet(&g)).collect();
        TransitionFormula::from_disjuncts(self.vars(), ds)
    }
}
