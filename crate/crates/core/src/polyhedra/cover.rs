//! Coverage of a polyhedron by a finite union.
//!
//! The complement of a closed halfspace is open, so the splitting works on
//! cells that mix closed and strict constraints. Feasibility of a cell is an
//! LP maximizing a slack `ε ≤ 1` shared by every strict row.

use num_traits::{One, Signed, Zero};

use super::constraint::Constraint;
use super::polyhedron::{to_row, Polyhedron};
use crate::ratlin::lp::{self, Dense, Row};
use crate::ratlin::rational::Rational;
use crate::ratlin::Sense;

#[derive(Clone)]
struct Cell {
    closed: Vec<Constraint>,
    strict: Vec<Constraint>,
}

impl Cell {
    /// A point satisfying every closed row and every strict row strictly.
    fn witness(&self, dim: usize) -> Option<Vec<Rational>> {
        let mut rows: Vec<Row> = self
            .closed
            .iter()
            .map(|c| {
                let mut r = to_row(c);
                r.coeffs.push(Rational::zero());
                r
            })
            .collect();
        if self.strict.is_empty() {
            return match lp::solve(dim + 1, &rows, &vec![Rational::zero(); dim + 1], Sense::Maximize) {
                Dense::Optimum { mut point, .. } => {
                    point.pop();
                    Some(point)
                }
                _ => None,
            };
        }
        for c in &self.strict {
            let mut r = to_row(c);
            r.coeffs.push(-Rational::one());
            rows.push(r);
        }
        let mut cap = vec![Rational::zero(); dim + 1];
        cap[dim] = -Rational::one();
        rows.push(Row {
            coeffs: cap,
            constant: Rational::one(),
            eq: false,
        });
        let mut objective = vec![Rational::zero(); dim + 1];
        objective[dim] = Rational::one();
        match lp::solve(dim + 1, &rows, &objective, Sense::Maximize) {
            Dense::Optimum { value, mut point } if value.is_positive() => {
                point.pop();
                Some(point)
            }
            _ => None,
        }
    }
}

/// A point of `q` outside every member of `ps`, if one exists.
pub fn uncovered_point(ps: &[Polyhedron], q: &Polyhedron) -> Option<Vec<Rational>> {
    for p in ps {
        assert_eq!(p.env(), q.env(), "coverage over different environments");
    }
    if q.is_canonical_empty() {
        return None;
    }
    let members: Vec<&Polyhedron> = ps.iter().filter(|p| !p.is_canonical_empty()).collect();
    let cell = Cell {
        closed: q.constraints().to_vec(),
        strict: Vec::new(),
    };
    search(&members, cell, q.dim())
}

fn search(ps: &[&Polyhedron], cell: Cell, dim: usize) -> Option<Vec<Rational>> {
    let w = cell.witness(dim)?;
    let Some((p, rest)) = ps.split_first() else {
        return Some(w);
    };
    if p.contains(&w) && p.is_universe() {
        return None;
    }
    // cell ∖ p is the disjoint union over i of (c_1 ∧ … ∧ c_{i-1} ∧ ¬c_i).
    let mut prefix = cell;
    for c in p.constraints() {
        let pieces: Vec<Constraint> = if c.is_equality() {
            let g = c.as_inequality();
            vec![g.negated(), g]
        } else {
            vec![c.negated()]
        };
        for neg in pieces {
            let mut piece = prefix.clone();
            piece.strict.push(neg);
            if let Some(found) = search(rest, piece, dim) {
                return Some(found);
            }
        }
        prefix.closed.push(c.clone());
    }
    None
}

/// `q ⊆ ∪ps`.
pub fn union_covers(ps: &[Polyhedron], q: &Polyhedron) -> bool {
    uncovered_point(ps, q).is_none()
}
