//! Exact rational scalars, affine terms, linear substitutions, and linear
//! programming.

pub mod lp;
pub mod rational;
pub mod subst;
pub mod term;
pub mod var;

pub use lp::{lp_optimize, LinearConstraint, LpOutcome, Relation, Sense};
pub use rational::{int, rat, rat_arith, ArithOp, Rational};
pub use subst::{subst_of, Substitution};
pub use term::AffineTerm;
pub use var::{primed_state_env, state_env, transition_env, Env, VarId};
