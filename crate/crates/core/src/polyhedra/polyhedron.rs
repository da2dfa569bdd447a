use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::constraint::Constraint;
use crate::error::{Error, Result};
use crate::ratlin::lp::{self, Dense, Row};
use crate::ratlin::rational::Rational;
use crate::ratlin::{Env, Relation, Sense, VarId};

/// A closed convex polyhedron `{x | every constraint holds}` over `env`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyhedron {
    env: Env,
    constraints: Vec<Constraint>,
}

impl Polyhedron {
    pub fn universe(env: Env) -> Self {
        Polyhedron {
            env,
            constraints: Vec::new(),
        }
    }

    /// The canonical empty polyhedron: the single row `-1 ≥ 0`.
    pub fn empty(env: Env) -> Self {
        let dim = env.len();
        Polyhedron {
            env,
            constraints: vec![Constraint::falsum(dim)],
        }
    }

    /// Builds a polyhedron, dropping tautologies and syntactic duplicates.
    ///
    /// Panics if a constraint's dimension differs from the environment's.
    pub fn new(env: Env, constraints: impl IntoIterator<Item = Constraint>) -> Self {
        let dim = env.len();
        let constraints: Vec<Constraint> = constraints.into_iter().collect();
        assert!(constraints.iter().all(|c| c.dim() == dim), "constraint dimension mismatch");
        match normalize(constraints) {
            Some(cs) => Polyhedron { env, constraints: cs },
            None => Polyhedron::empty(env),
        }
    }

    pub fn env(&self) -> &Env {
        &self.env
    }

    pub fn dim(&self) -> usize {
        self.env.len()
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn index_of(&self, v: &VarId) -> Option<usize> {
        self.env.iter().position(|w| w == v)
    }

    /// Syntactically the canonical empty form; use [`Polyhedron::is_empty`] for the semantic test.
    pub fn is_canonical_empty(&self) -> bool {
        self.constraints.len() == 1 && self.constraints[0].is_contradiction()
    }

    pub fn is_universe(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn contains(&self, point: &[Rational]) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(point))
    }

    pub(crate) fn rows(&self) -> Vec<Row> {
        self.constraints.iter().map(to_row).collect()
    }

    /// Optimizes a linear objective (given by column coefficients) over the polyhedron.
    pub(crate) fn optimize(&self, objective: &[Rational], sense: Sense) -> Dense {
        lp::solve(self.dim(), &self.rows(), objective, sense)
    }

    /// Some point of the polyhedron, or `None` if it is empty.
    pub fn sample_point(&self) -> Option<Vec<Rational>> {
        match self.optimize(&vec![Rational::zero(); self.dim()], Sense::Maximize) {
            Dense::Optimum { point, .. } => Some(point),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        if self.is_canonical_empty() {
            return true;
        }
        if self.constraints.is_empty() {
            return false;
        }
        self.sample_point().is_none()
    }

    /// Every point satisfies `c`.
    pub fn entails(&self, c: &Constraint) -> bool {
        assert_eq!(c.dim(), self.dim(), "constraint dimension mismatch");
        if c.is_tautology() || self.constraints.contains(c) {
            return true;
        }
        let obj = c.rational_coeffs();
        let k = Rational::from_integer(c.constant().clone());
        let min_ok = match self.optimize(&obj, Sense::Minimize) {
            Dense::Infeasible => return true,
            Dense::Unbounded => false,
            Dense::Optimum { value, .. } => !(value + &k).is_negative(),
        };
        if !min_ok || c.relation() == Relation::GeqZero {
            return min_ok;
        }
        match self.optimize(&obj, Sense::Maximize) {
            Dense::Optimum { value, .. } => !(value + &k).is_positive(),
            _ => false,
        }
    }

    /// `other ⊆ self`.
    pub fn includes(&self, other: &Polyhedron) -> bool {
        self.check_env(other);
        if other.is_canonical_empty() || self.constraints.is_empty() {
            return true;
        }
        other.is_empty() || self.constraints.iter().all(|c| other.entails(c))
    }

    pub fn same_set(&self, other: &Polyhedron) -> bool {
        self.includes(other) && other.includes(self)
    }

    pub fn meet(&self, other: &Polyhedron) -> Polyhedron {
        self.check_env(other);
        self.with_constraints(other.constraints.iter().cloned())
    }

    pub fn with_constraints(&self, extra: impl IntoIterator<Item = Constraint>) -> Polyhedron {
        Polyhedron::new(
            self.env.clone(),
            self.constraints.iter().cloned().chain(extra),
        )
    }

    pub fn with_constraint(&self, c: Constraint) -> Polyhedron {
        self.with_constraints(std::iter::once(c))
    }

    /// Re-expresses the polyhedron over `env`, which must contain every
    /// variable that some constraint mentions. New variables are unconstrained.
    pub fn embed(&self, env: Env) -> Result<Polyhedron> {
        let mut map = Vec::with_capacity(self.dim());
        for (j, v) in self.env.iter().enumerate() {
            match env.iter().position(|w| w == v) {
                Some(k) => map.push(k),
                None if self.constraints.iter().all(|c| c.coeff(j).is_zero()) => map.push(usize::MAX),
                None => {
                    return Err(Error::Environment(format!(
                        "variable {v} is constrained but absent from the target environment"
                    )))
                }
            }
        }
        let dim = env.len();
        let constraints: Vec<Constraint> = self
            .constraints
            .iter()
            .map(|c| {
                let mut coeffs = vec![BigInt::zero(); dim];
                for (j, a) in c.coeffs().iter().enumerate() {
                    if !a.is_zero() {
                        coeffs[map[j]] = a.clone();
                    }
                }
                Constraint::new(coeffs, c.constant().clone(), c.relation())
            })
            .collect();
        Ok(Polyhedron::new(env, constraints))
    }

    /// Same columns, new names. Panics if the dimension changes.
    pub fn rename(&self, env: Env) -> Polyhedron {
        assert_eq!(env.len(), self.dim());
        Polyhedron {
            env,
            constraints: self.constraints.clone(),
        }
    }

    /// Inverse image under the affine map `x ↦ (rows[j]·y + consts[j])_j`
    /// from the new environment `env` (variables `y`) into this one.
    pub fn preimage(&self, env: Env, map: &[(Vec<Rational>, Rational)]) -> Polyhedron {
        assert_eq!(map.len(), self.dim(), "affine map must cover every column");
        let dim = env.len();
        let constraints: Vec<Constraint> = self
            .constraints
            .iter()
            .map(|c| {
                let mut coeffs = vec![Rational::zero(); dim];
                let mut constant = Rational::from_integer(c.constant().clone());
                for (a, (row, k)) in c.coeffs().iter().zip(map) {
                    if a.is_zero() {
                        continue;
                    }
                    let a = Rational::from_integer(a.clone());
                    for (dst, r) in coeffs.iter_mut().zip(row) {
                        if !r.is_zero() {
                            *dst += &a * r;
                        }
                    }
                    constant += &a * k;
                }
                Constraint::from_rational(&coeffs, &constant, c.relation())
            })
            .collect();
        Polyhedron::new(env, constraints)
    }

    /// Constraints sorted canonically; does not remove semantic redundancy.
    pub fn sorted(mut self) -> Polyhedron {
        self.constraints.sort();
        self
    }

    pub(crate) fn from_parts_unchecked(env: Env, constraints: Vec<Constraint>) -> Polyhedron {
        Polyhedron { env, constraints }
    }

    fn check_env(&self, other: &Polyhedron) {
        assert_eq!(self.env, other.env, "polyhedra over different environments");
    }
}

pub(crate) fn to_row(c: &Constraint) -> Row {
    Row {
        coeffs: c.rational_coeffs(),
        constant: Rational::from_integer(c.constant().clone()),
        eq: c.is_equality(),
    }
}

/// Drops tautologies and duplicates, merges opposite inequalities and keeps
/// the tightest of parallel ones. `None` means a contradiction was found.
pub(crate) fn normalize(constraints: Vec<Constraint>) -> Option<Vec<Constraint>> {
    use std::collections::BTreeMap;
    let mut eqs: BTreeSet<Constraint> = BTreeSet::new();
    // direction (coefficients) -> smallest constant seen
    let mut ineqs: BTreeMap<Vec<BigInt>, BigInt> = BTreeMap::new();
    for c in constraints {
        if c.is_contradiction() {
            return None;
        }
        if c.is_tautology() {
            continue;
        }
        if c.is_equality() {
            eqs.insert(c);
        } else {
            let k = c.constant().clone();
            ineqs
                .entry(c.coeffs().to_vec())
                .and_modify(|old| {
                    if k < *old {
                        *old = k.clone();
                    }
                })
                .or_insert(k);
        }
    }
    let mut out: Vec<Constraint> = Vec::new();
    let mut merged: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for (dir, k) in &ineqs {
        if merged.contains(dir) {
            continue;
        }
        let neg: Vec<BigInt> = dir.iter().map(|a| -a).collect();
        if let Some(k2) = ineqs.get(&neg) {
            // a·x + k ≥ 0 and -a·x + k2 ≥ 0: need -k ≤ a·x ≤ k2
            let width = k + k2;
            if width.is_negative() {
                return None;
            }
            if width.is_zero() {
                merged.insert(dir.clone());
                merged.insert(neg);
                eqs.insert(Constraint::eq(dir.clone(), k.clone()));
                continue;
            }
        }
        out.push(Constraint::geq(dir.clone(), k.clone()));
    }
    let mut all: Vec<Constraint> = eqs.into_iter().collect();
    all.extend(out);
    all.sort();
    Some(all)
}

impl fmt::Display for Polyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.constraints.is_empty() {
            return write!(f, "true");
        }
        let parts: Vec<String> = self.constraints.iter().map(|c| c.render(&self.env)).collect();
        write!(f, "{}", parts.join(" & "))
    }
}
