//! Transition formulas: finite unions of polyhedra over `X ∪ X'` with the
//! operations of an idempotent semiring, entailment and substitution.

mod formula;
mod guards;

pub use formula::{is_simulation, Counterexample, TransitionFormula};
pub use guards::{delta_var, StateFormula};
