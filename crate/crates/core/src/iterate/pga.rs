//! Polyhedral guard analysis: transition formulas of the form
//! `pre(X) ∧ post(X')`, which are transitively closed.

use super::abstraction::{Abstraction, SubModel};
use crate::error::Result;
use crate::polyhedra::Polyhedron;
use crate::ratlin::Substitution;
use crate::transition::TransitionFormula;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCart {
    /// Over `X`.
    pub pre: Polyhedron,
    /// Over `X'`.
    pub post: Polyhedron,
}

impl PolyCart {
    /// `pre ∧ post` as a single polyhedron over `[X, X']`.
    pub fn guard(&self, vars: &[String]) -> Result<Polyhedron> {
        let env = crate::ratlin::transition_env(vars);
        Ok(self.pre.embed(env.clone())?.meet(&self.post.embed(env)?))
    }
}

/// `α(F) = Pre(F) ∧ Post(F)` with `η` the identity.
pub fn alpha_pga(f: &TransitionFormula) -> Result<Abstraction<PolyCart>> {
    Ok(Abstraction {
        formula: PolyCart {
            pre: f.pre()?.hull(),
            post: f.post()?.hull(),
        },
        eta: Substitution::identity(f.vars()),
    })
}

/// `A⋆ = (X' = X) ∨ A`.
pub fn star_pga_base(a: &PolyCart, vars: &[String]) -> Result<TransitionFormula> {
    TransitionFormula::one(vars).plus(&TransitionFormula::from_polyhedron(vars, a.guard(vars)?)?)
}

pub struct PolyCartModel;

impl SubModel for PolyCartModel {
    type Formula = PolyCart;

    fn alpha(&self, f: &TransitionFormula) -> Result<Abstraction<PolyCart>> {
        alpha_pga(f)
    }

    fn star(&self, a: &Abstraction<PolyCart>) -> Result<TransitionFormula> {
        star_pga_base(&a.formula, a.abstract_vars())
    }
}

pub fn star_pga(f: &TransitionFormula) -> Result<TransitionFormula> {
    PolyCartModel.lifted_star(f)
}
