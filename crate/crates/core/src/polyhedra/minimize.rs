use num_traits::{Signed, Zero};

use super::constraint::Constraint;
use super::polyhedron::Polyhedron;
use crate::ratlin::lp::Dense;
use crate::ratlin::rational::Rational;
use crate::ratlin::Sense;

/// Irredundant, canonically sorted constraints for the same set. Implicit
/// equalities become explicit and an empty input becomes the canonical
/// empty polyhedron.
pub fn minimize(p: &Polyhedron) -> Polyhedron {
    let env = p.env().clone();
    if p.is_canonical_empty() || p.is_empty() {
        return Polyhedron::empty(env);
    }
    // Inequalities whose maximum is 0 are tight everywhere.
    let tight: Vec<Constraint> = p
        .constraints()
        .iter()
        .map(|c| {
            if c.is_equality() {
                return c.clone();
            }
            let k = Rational::from_integer(c.constant().clone());
            match p.optimize(&c.rational_coeffs(), Sense::Maximize) {
                Dense::Optimum { value, .. } if (&value + k).is_zero() => c.with_relation(crate::ratlin::Relation::EqZero),
                _ => c.clone(),
            }
        })
        .collect();
    let Some(mut rows) = reduce_by_equalities(Polyhedron::new(env.clone(), tight).constraints().to_vec()) else {
        return Polyhedron::empty(env);
    };
    let mut i = 0;
    while i < rows.len() {
        let c = rows[i].clone();
        let others: Vec<Constraint> = rows
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, r)| r.clone())
            .collect();
        if Polyhedron::from_parts_unchecked(env.clone(), others).entails(&c) {
            rows.remove(i);
        } else {
            i += 1;
        }
    }
    Polyhedron::from_parts_unchecked(env, rows).sorted()
}

/// Brings the equalities to reduced echelon form (pivoting on trailing columns) and eliminates their pivot
/// columns from every other row.
fn reduce_by_equalities(rows: Vec<Constraint>) -> Option<Vec<Constraint>> {
    let (mut eqs, mut ineqs): (Vec<Constraint>, Vec<Constraint>) = rows.into_iter().partition(|c| c.is_equality());
    let mut done = 0;
    while done < eqs.len() {
        // Pivot on the last column so later variables (post-states) get solved for.
        let last = |c: &Constraint| c.coeffs().iter().rposition(|a| !a.is_zero());
        let best = (done..eqs.len()).max_by_key(|&k| (last(&eqs[k]), std::cmp::Reverse(k)))?;
        eqs.swap(done, best);
        let pivot = eqs[done].clone();
        let j = last(&pivot)?;
        let eliminate = |c: &Constraint| -> Constraint {
            let a = c.coeff(j).clone();
            if a.is_zero() {
                return c.clone();
            }
            let p = pivot.coeff(j).clone();
            let (s, t) = if p.is_negative() { (-p, a) } else { (p, -a) };
            let coeffs = c.coeffs().iter().zip(pivot.coeffs()).map(|(x, y)| &s * x + &t * y).collect();
            Constraint::new(coeffs, &s * c.constant() + &t * pivot.constant(), c.relation())
        };
        for (k, c) in eqs.iter_mut().enumerate() {
            if k != done {
                *c = eliminate(c);
            }
        }
        for c in ineqs.iter_mut() {
            *c = eliminate(c);
        }
        if eqs.iter().any(|c| c.is_contradiction()) || ineqs.iter().any(|c| c.is_contradiction()) {
            return None;
        }
        eqs.retain(|c| !c.is_tautology());
        done += 1;
    }
    ineqs.retain(|c| !c.is_tautology());
    eqs.extend(ineqs);
    super::polyhedron::normalize(eqs)
}

impl Polyhedron {
    pub fn minimized(&self) -> Polyhedron {
        minimize(self)
    }
}
