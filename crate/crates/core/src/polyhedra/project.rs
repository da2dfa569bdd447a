//! Fourier–Motzkin projection.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::constraint::Constraint;
use super::minimize::minimize;
use super::polyhedron::{normalize, Polyhedron};
use crate::error::{Error, Result};
use crate::ratlin::{Env, Relation, VarId};

/// Past this many rows an LP-based redundancy sweep runs after each elimination.
const PRUNE_THRESHOLD: usize = 32;

impl Polyhedron {
    /// Existentially quantifies every variable not in `keep`. The result
    /// lives over `keep`, in the order given.
    pub fn project(&self, keep: &[VarId]) -> Result<Polyhedron> {
        let mut cols = Vec::with_capacity(keep.len());
        for v in keep {
            match self.index_of(v) {
                Some(j) => cols.push(j),
                None => return Err(Error::Environment(format!("cannot keep {v}: not in the environment"))),
            }
        }
        let env: Env = keep.iter().cloned().collect();
        if self.is_canonical_empty() {
            return Ok(Polyhedron::empty(env));
        }
        let mut eliminate: Vec<usize> = (0..self.dim()).filter(|j| !cols.contains(j)).collect();
        let mut rows = self.constraints().to_vec();
        while !eliminate.is_empty() {
            let pick = choose_column(&rows, &eliminate);
            let j = eliminate.swap_remove(pick);
            rows = match eliminate_column(rows, j) {
                Some(r) => r,
                None => return Ok(Polyhedron::empty(env)),
            };
            if rows.len() > PRUNE_THRESHOLD {
                let p = minimize(&Polyhedron::from_parts_unchecked(self.env().clone(), rows));
                if p.is_canonical_empty() {
                    return Ok(Polyhedron::empty(env));
                }
                rows = p.constraints().to_vec();
            }
        }
        let projected = rows.iter().map(|c| {
            let coeffs: Vec<BigInt> = cols.iter().map(|&j| c.coeff(j).clone()).collect();
            Constraint::new(coeffs, c.constant().clone(), c.relation())
        });
        Ok(Polyhedron::new(env, projected))
    }

    /// Projects out the listed variables, keeping the rest in order.
    pub fn project_out(&self, drop: &[VarId]) -> Result<Polyhedron> {
        let keep: Vec<VarId> = self.env().iter().filter(|v| !drop.contains(v)).cloned().collect();
        self.project(&keep)
    }
}

/// Prefers columns with an equality, otherwise the smallest pairwise product.
fn choose_column(rows: &[Constraint], candidates: &[usize]) -> usize {
    let cost = |j: usize| {
        let mut pos = 0usize;
        let mut neg = 0usize;
        for c in rows {
            let a = c.coeff(j);
            if a.is_zero() {
                continue;
            }
            if c.is_equality() {
                return (0, 0);
            }
            if a.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
        }
        (1, pos * neg)
    };
    (0..candidates.len())
        .min_by_key(|&i| (cost(candidates[i]), candidates[i]))
        .expect("nonempty candidate list")
}

fn eliminate_column(rows: Vec<Constraint>, j: usize) -> Option<Vec<Constraint>> {
    let pivot = rows
        .iter()
        .filter(|c| c.is_equality() && !c.coeff(j).is_zero())
        .min_by_key(|c| c.coeff(j).abs())
        .cloned();
    let combined: Vec<Constraint> = if let Some(e) = pivot {
        let ej = e.coeff(j).clone();
        rows.into_iter()
            .filter(|c| *c != e)
            .map(|c| {
                let cj = c.coeff(j).clone();
                if cj.is_zero() {
                    return c;
                }
                // |ej|·c − sign(ej)·cj·e keeps the orientation of c.
                let s = ej.abs();
                let t = if ej.is_negative() { -cj } else { cj };
                combine(&c, &s, &e, &-t, c.relation())
            })
            .collect()
    } else {
        let (touching, mut out): (Vec<Constraint>, Vec<Constraint>) =
            rows.into_iter().partition(|c| !c.coeff(j).is_zero());
        let (pos, neg): (Vec<&Constraint>, Vec<&Constraint>) =
            touching.iter().partition(|c| c.coeff(j).is_positive());
        for p in &pos {
            for n in &neg {
                let pj = p.coeff(j).clone();
                let nj = -n.coeff(j).clone();
                out.push(combine(p, &nj, n, &pj, Relation::GeqZero));
            }
        }
        out
    };
    normalize(combined)
}

/// `s·a + t·b` with the given relation.
fn combine(a: &Constraint, s: &BigInt, b: &Constraint, t: &BigInt, rel: Relation) -> Constraint {
    let coeffs = a
        .coeffs()
        .iter()
        .zip(b.coeffs())
        .map(|(x, y)| s * x + t * y)
        .collect();
    Constraint::new(coeffs, s * a.constant() + t * b.constant(), rel)
}
