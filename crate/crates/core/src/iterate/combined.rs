//! The polyhedral iteration operator: guard analysis and recurrence
//! analysis combined as a product that shares one iteration counter.

use super::abstraction::{Abstraction, SubModel};
use super::lra::{alpha_lra, star_lra_counted, LossyTranslation, COUNTER};
use super::pga::{alpha_pga, PolyCart};
use crate::error::Result;
use crate::polyhedra::{Constraint, Polyhedron};
use crate::ratlin::{transition_env, AffineTerm, Relation, Substitution, VarId};
use crate::transition::TransitionFormula;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub guards: PolyCart,
    pub recurrences: LossyTranslation,
    /// The concrete variables, which the guard component keeps unchanged.
    pub vars: Vec<String>,
}

pub struct SharedCounterProduct;

impl SubModel for SharedCounterProduct {
    type Formula = Product;

    /// `η` is the union of the two components' maps: the identity on `X`
    /// and `y_i ↦ t_i` on the recurrence variables.
    fn alpha(&self, f: &TransitionFormula) -> Result<Abstraction<Product>> {
        let guards = alpha_pga(f)?.formula;
        let lra = alpha_lra(f)?;
        let vars = f.vars().to_vec();
        let (recurrences, eta) = match lra.formula {
            LossyTranslation::Bottom => (LossyTranslation::Bottom, Substitution::identity(&vars)),
            recs => {
                let mut target = vars.clone();
                target.extend(lra.eta.target().iter().cloned());
                let mapping = vars
                    .iter()
                    .map(|x| (x.clone(), AffineTerm::var(VarId::unprimed(x))))
                    .chain(lra.eta.target().iter().map(|y| (y.clone(), lra.eta.get(y).expect("total").clone())));
                (recs, Substitution::new(vars.clone(), target, mapping)?)
            }
        };
        Ok(Abstraction {
            formula: Product {
                guards,
                recurrences,
                vars,
            },
            eta,
        })
    }

    /// `∃k. exp_LRA(k) ∧ ((k = 0 ∧ X' = X) ∨ (k ≥ 1 ∧ Pre ∧ Post))`, with `k`
    /// relaxed to a rational `k ≥ 0`.
    fn star(&self, a: &Abstraction<Product>) -> Result<TransitionFormula> {
        let p = &a.formula;
        let abstract_vars = a.abstract_vars().to_vec();
        let fresh: Vec<String> = abstract_vars[p.vars.len()..].to_vec();
        let counted: Vec<String> = abstract_vars.iter().cloned().chain([COUNTER.to_string()]).collect();
        let env = transition_env(&counted);
        let k = AffineTerm::var(VarId::unprimed(COUNTER));

        let mut stay = vec![Constraint::from_term(&k, Relation::EqZero, &env)?];
        for x in &p.vars {
            let d = AffineTerm::var(VarId::primed(x)) - AffineTerm::var(VarId::unprimed(x));
            stay.push(Constraint::from_term(&d, Relation::EqZero, &env)?);
        }
        let one = AffineTerm::constant(crate::ratlin::rational::int(1));
        let step = p
            .guards
            .guard(&p.vars)?
            .embed(env.clone())?
            .with_constraint(Constraint::from_term(&(k.clone() - one), Relation::GeqZero, &env)?);
        let exp_pga = TransitionFormula::from_disjuncts(&counted, [Polyhedron::new(env.clone(), stay), step])?;

        let exp_lra = star_lra_counted(&p.recurrences, &fresh)?.extend_vars(&p.vars)?;
        // Reorder to the product's variable list.
        let exp_lra = reorder(&exp_lra, &counted)?;
        exp_pga.meet(&exp_lra)?.project_vars(&abstract_vars)
    }
}

/// The same formula over a permutation of its variables.
fn reorder(f: &TransitionFormula, order: &[String]) -> Result<TransitionFormula> {
    let env = transition_env(order);
    let ds = f
        .disjuncts()
        .iter()
        .map(|d| d.embed(env.clone()))
        .collect::<Result<Vec<_>>>()?;
    TransitionFormula::from_disjuncts(order, ds)
}

/// `F^⊛`.
pub fn star_combined(f: &TransitionFormula) -> Result<TransitionFormula> {
    SharedCounterProduct.lifted_star(f)
}
