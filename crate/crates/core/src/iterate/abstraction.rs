use crate::error::Result;
use crate::ratlin::Substitution;
use crate::transition::TransitionFormula;

/// A best abstraction `α(F)` together with the simulation `η` from the
/// concrete variables to the abstract ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Abstraction<A> {
    pub formula: A,
    /// Source: the concrete variables `X`. Target: the abstract variables.
    pub eta: Substitution,
}

impl<A> Abstraction<A> {
    pub fn abstract_vars(&self) -> &[String] {
        self.eta.target()
    }
}

/// A sub-model of transition formulas with an exact iteration operator.
pub trait SubModel {
    type Formula;

    fn alpha(&self, f: &TransitionFormula) -> Result<Abstraction<Self::Formula>>;

    /// The exact reflexive transitive closure of the abstract formula, as a
    /// transition formula over the abstract variables.
    fn star(&self, a: &Abstraction<Self::Formula>) -> Result<TransitionFormula>;

    /// The lifted operator: abstract, iterate exactly, translate back.
    fn lifted_star(&self, f: &TransitionFormula) -> Result<TransitionFormula> {
        let a = self.alpha(f)?;
        lift(&a.eta, &self.star(&a)?)
    }
}

/// `η⁻¹(base)`: the inverse image of an abstract result along `η`.
pub fn lift(eta: &Substitution, base: &TransitionFormula) -> Result<TransitionFormula> {
    base.subst(eta)
}
