//! Exact linear programming over free rational variables.
//!
//! Two-phase dense-tableau simplex with Bland's rule. Free variables are
//! split into nonnegative parts, inequalities get a surplus column and every
//! row gets an artificial column for phase one.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use super::term::AffineTerm;
use super::var::VarId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    /// `term ≥ 0`
    GeqZero,
    /// `term = 0`
    EqZero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub term: AffineTerm,
    pub relation: Relation,
}

impl LinearConstraint {
    pub fn geq(term: AffineTerm) -> Self {
        LinearConstraint {
            term,
            relation: Relation::GeqZero,
        }
    }

    pub fn eq(term: AffineTerm) -> Self {
        LinearConstraint {
            term,
            relation: Relation::EqZero,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    /// The optimum together with a feasible point attaining it.
    Optimum {
        value: Rational,
        witness: BTreeMap<VarId, Rational>,
    },
}

/// Optimizes `objective` over the conjunction of `constraints`.
pub fn lp_optimize(constraints: &[LinearConstraint], objective: &AffineTerm, sense: Sense) -> LpOutcome {
    let vars: Vec<VarId> = constraints
        .iter()
        .flat_map(|c| c.term.vars())
        .chain(objective.vars())
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let rows: Vec<Row> = constraints
        .iter()
        .map(|c| Row {
            coeffs: vars.iter().map(|v| c.term.coeff(v)).collect(),
            constant: c.term.constant_part().clone(),
            eq: c.relation == Relation::EqZero,
        })
        .collect();
    let obj: Vec<Rational> = vars.iter().map(|v| objective.coeff(v)).collect();
    match solve(vars.len(), &rows, &obj, sense) {
        Dense::Infeasible => LpOutcome::Infeasible,
        Dense::Unbounded => LpOutcome::Unbounded,
        Dense::Optimum { value, point } => LpOutcome::Optimum {
            value: value + objective.constant_part(),
            witness: vars.into_iter().zip(point).collect(),
        },
    }
}

/// `coeffs·x + constant ≥ 0` (or `= 0` when `eq`).
#[derive(Debug, Clone)]
pub(crate) struct Row {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub eq: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Dense {
    Infeasible,
    Unbounded,
    Optimum { value: Rational, point: Vec<Rational> },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        if !p.is_one() {
            for v in self.rows[r].iter_mut() {
                *v /= &p;
            }
            self.rhs[r] /= &p;
        }
        let pivot_row = self.rows[r].clone();
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let factor = self.rows[i][c].clone();
            for (v, pv) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
            self.rhs[i] -= &factor * &pivot_rhs;
        }
        self.basis[r] = c;
    }

    /// Maximizes `cost·z` over columns marked `allowed`, pivoting by Bland's rule.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> Phase {
        let ncols = cost.len();
        loop {
            let mut in_basis = vec![false; ncols];
            for &b in &self.basis {
                in_basis[b] = true;
            }
            let entering = (0..ncols).find(|&j| {
                if !allowed[j] || in_basis[j] {
                    return false;
                }
                let mut reduced = cost[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                        reduced -= &cost[b] * &self.rows[i][j];
                    }
                }
                reduced.is_positive()
            });
            let Some(j) = entering else {
                return Phase::Optimal;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Phase::Unbounded,
                Some((i, _)) => self.pivot(i, j),
            }
        }
    }

    fn objective(&self, cost: &[Rational]) -> Rational {
        self.basis
            .iter()
            .zip(&self.rhs)
            .fold(Rational::zero(), |acc, (&b, v)| acc + &cost[b] * v)
    }
}

pub(crate) fn solve(dim: usize, constraints: &[Row], objective: &[Rational], sense: Sense) -> Dense {
    let m = constraints.len();
    let n_ineq = constraints.iter().filter(|r| !r.eq).count();
    let surplus_base = 2 * dim;
    let art_base = surplus_base + n_ineq;
    let ncols = art_base + m;

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut surplus = surplus_base;
    for (k, row) in constraints.iter().enumerate() {
        let mut r = vec![Rational::zero(); ncols];
        for j in 0..dim {
            r[j] = row.coeffs[j].clone();
            r[dim + j] = -row.coeffs[j].clone();
        }
        if !row.eq {
            r[surplus] = -Rational::one();
            surplus += 1;
        }
        let mut b = -row.constant.clone();
        if b.is_negative() {
            for v in r.iter_mut() {
                *v = -v.clone();
            }
            b = -b;
        }
        r[art_base + k] = Rational::one();
        rows.push(r);
        rhs.push(b);
    }
    let mut t = Tableau {
        rows,
        rhs,
        basis: (art_base..ncols).collect(),
    };

    let mut phase1 = vec![Rational::zero(); ncols];
    for c in phase1.iter_mut().skip(art_base) {
        *c = -Rational::one();
    }
    let all = vec![true; ncols];
    t.optimize(&phase1, &all);
    if t.objective(&phase1).is_negative() {
        return Dense::Infeasible;
    }

    // Drive zero-valued artificials out of the basis; drop rows that are
    // linear combinations of others.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= art_base {
            match (0..art_base).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    let mut cost = vec![Rational::zero(); ncols];
    for j in 0..dim {
        let c = match sense {
            Sense::Maximize => objective[j].clone(),
            Sense::Minimize => -objective[j].clone(),
        };
        cost[dim + j] = -c.clone();
        cost[j] = c;
    }
    let mut allowed = vec![true; ncols];
    for a in allowed.iter_mut().skip(art_base) {
        *a = false;
    }
    if let Phase::Unbounded = t.optimize(&cost, &allowed) {
        return Dense::Unbounded;
    }

    let mut z = vec![Rational::zero(); ncols];
    for (&b, v) in t.basis.iter().zip(&t.rhs) {
        z[b] = v.clone();
    }
    let point: Vec<Rational> = (0..dim).map(|j| &z[j] - &z[dim + j]).collect();
    let value = point
        .iter()
        .zip(objective)
        .fold(Rational::zero(), |acc, (x, c)| acc + x * c);
    Dense::Optimum { value, point }
}
