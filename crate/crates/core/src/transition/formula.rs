use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyhedra::{minimize, uncovered_point, Constraint, Polyhedron};
use crate::ratlin::rational::Rational;
use crate::ratlin::{transition_env, Env, Substitution, VarId};

/// A finite union of polyhedra over `X ∪ X'`, read as a binary relation on
/// states. The empty union is `false`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransitionFormula {
    vars: Arc<[String]>,
    env: Env,
    disjuncts: Vec<Polyhedron>,
}

/// A state of `X` followed by a state of `X'` that one formula admits and
/// another does not.
pub type Counterexample = Vec<(VarId, Rational)>;

impl TransitionFormula {
    pub fn zero(vars: &[String]) -> Self {
        TransitionFormula {
            vars: vars.into(),
            env: transition_env(vars),
            disjuncts: Vec::new(),
        }
    }

    /// The identity relation `X' = X`.
    pub fn one(vars: &[String]) -> Self {
        let env = transition_env(vars);
        let n = vars.len();
        let rows = (0..n).map(|i| {
            let mut coeffs = vec![BigInt::zero(); 2 * n];
            coeffs[i] = -BigInt::one();
            coeffs[n + i] = BigInt::one();
            Constraint::eq(coeffs, BigInt::zero())
        });
        let p = Polyhedron::new(env.clone(), rows.collect::<Vec<_>>()).sorted();
        TransitionFormula {
            vars: vars.into(),
            env,
            disjuncts: vec![p],
        }
    }

    /// The full relation: every pair of states.
    pub fn top(vars: &[String]) -> Self {
        let env = transition_env(vars);
        TransitionFormula {
            vars: vars.into(),
            disjuncts: vec![Polyhedron::universe(env.clone())],
            env,
        }
    }

    /// Builds a formula from polyhedra over `X ∪ X'`. Disjuncts are
    /// minimized; empty and absorbed ones are dropped.
    pub fn from_disjuncts(vars: &[String], disjuncts: impl IntoIterator<Item = Polyhedron>) -> Result<Self> {
        let env = transition_env(vars);
        let mut ds = Vec::new();
        for d in disjuncts {
            if d.env() != &env {
                return Err(Error::Environment(format!(
                    "disjunct over [{}] in a formula over [{}]",
                    render_env(d.env()),
                    render_env(&env)
                )));
            }
            ds.push(d);
        }
        Ok(Self::assemble(vars.into(), env, ds))
    }

    pub fn from_polyhedron(vars: &[String], p: Polyhedron) -> Result<Self> {
        Self::from_disjuncts(vars, std::iter::once(p))
    }

    fn assemble(vars: Arc<[String]>, env: Env, ds: Vec<Polyhedron>) -> Self {
        let mut ds: Vec<Polyhedron> = ds
            .iter()
            .map(minimize)
            .filter(|d| !d.is_canonical_empty())
            .collect();
        ds.sort_by(|a, b| a.constraints().cmp(b.constraints()));
        ds.dedup();
        // Absorption: drop a disjunct when the remaining ones cover it.
        let mut i = ds.len();
        while i > 0 {
            i -= 1;
            let others: Vec<Polyhedron> = ds
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, d)| d.clone())
                .collect();
            if !others.is_empty() && uncovered_point(&others, &ds[i]).is_none() {
                ds.remove(i);
            }
        }
        TransitionFormula {
            vars,
            env,
            disjuncts: ds,
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// `[X, X']`.
    pub fn env(&self) -> &Env {
        &self.env
    }

    pub fn disjuncts(&self) -> &[Polyhedron] {
        &self.disjuncts
    }

    pub fn is_zero(&self) -> bool {
        self.disjuncts.is_empty()
    }

    pub(crate) fn check_vars(&self, other: &TransitionFormula) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::Environment(format!(
                "formulas over {{{}}} and {{{}}}",
                self.vars.join(", "),
                other.vars.join(", ")
            )));
        }
        Ok(())
    }

    /// Disjunction.
    pub fn plus(&self, other: &TransitionFormula) -> Result<Self> {
        self.check_vars(other)?;
        let ds = self.disjuncts.iter().chain(&other.disjuncts).cloned().collect();
        Ok(Self::assemble(self.vars.clone(), self.env.clone(), ds))
    }

    /// Disjunct-wise conjunction.
    pub fn meet(&self, other: &TransitionFormula) -> Result<Self> {
        self.check_vars(other)?;
        let ds = self
            .disjuncts
            .iter()
            .flat_map(|a| other.disjuncts.iter().map(move |b| a.meet(b)))
            .collect();
        Ok(Self::assemble(self.vars.clone(), self.env.clone(), ds))
    }

    /// Relational composition: first `self`, then `other`.
    pub fn compose(&self, other: &TransitionFormula) -> Result<Self> {
        self.check_vars(other)?;
        let pre: Vec<VarId> = self.vars.iter().map(VarId::unprimed).collect();
        let post: Vec<VarId> = self.vars.iter().map(VarId::primed).collect();
        let mid: Vec<VarId> = self.vars.iter().map(|x| VarId::unprimed(format!("{x}''"))).collect();
        let triple: Env = pre.iter().chain(&mid).chain(&post).cloned().collect();
        let first_env: Env = pre.iter().chain(&mid).cloned().collect();
        let second_env: Env = mid.iter().chain(&post).cloned().collect();
        let mut ds = Vec::new();
        for a in &self.disjuncts {
            let a3 = a.rename(first_env.clone()).embed(triple.clone())?;
            for b in &other.disjuncts {
                let b3 = b.rename(second_env.clone()).embed(triple.clone())?;
                ds.push(a3.meet(&b3).project(&self.env)?);
            }
        }
        Ok(Self::assemble(self.vars.clone(), self.env.clone(), ds))
    }

    /// `self^n`, with `self^0 = 1`.
    pub fn power(&self, n: usize) -> Result<Self> {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// `None` when `self ⊨ other`, otherwise a pair of states related by
    /// `self` and not by `other`.
    pub fn entailment_counterexample(&self, other: &TransitionFormula) -> Result<Option<Counterexample>> {
        self.check_vars(other)?;
        for d in &self.disjuncts {
            if let Some(p) = uncovered_point(&other.disjuncts, d) {
                return Ok(Some(self.env.iter().cloned().zip(p).collect()));
            }
        }
        Ok(None)
    }

    pub fn entails(&self, other: &TransitionFormula) -> Result<bool> {
        Ok(self.entailment_counterexample(other)?.is_none())
    }

    /// Mutual entailment.
    pub fn equivalent(&self, other: &TransitionFormula) -> Result<bool> {
        Ok(self.entails(other)? && other.entails(self)?)
    }

    /// `self[σ, σ']`: the inverse image of `self` (over `Y`) along `σ`,
    /// a formula over `σ`'s source variables.
    pub fn subst(&self, sigma: &Substitution) -> Result<Self> {
        let mut tgt: Vec<&String> = sigma.target().iter().collect();
        let mut mine: Vec<&String> = self.vars.iter().collect();
        tgt.sort();
        mine.sort();
        if tgt != mine {
            return Err(Error::Domain(format!(
                "substitution defines {{{}}} but the formula is over {{{}}}",
                sigma.target().join(", "),
                self.vars.join(", ")
            )));
        }
        let src = sigma.source();
        let m = src.len();
        let dense = sigma.dense();
        let row_of = |y: &String| &dense[sigma.target().iter().position(|t| t == y).expect("checked")];
        let mut map = Vec::with_capacity(2 * self.vars.len());
        for primed in [false, true] {
            for y in self.vars.iter() {
                let (row, k) = row_of(y);
                let mut full = vec![Rational::zero(); 2 * m];
                let offset = if primed { m } else { 0 };
                full[offset..offset + m].clone_from_slice(row);
                map.push((full, k.clone()));
            }
        }
        let env = transition_env(src);
        let ds = self.disjuncts.iter().map(|d| d.preimage(env.clone(), &map)).collect();
        Ok(Self::assemble(src.into(), env, ds))
    }

    /// Existentially quantifies the variables outside `keep` (both copies).
    pub fn project_vars(&self, keep: &[String]) -> Result<Self> {
        if let Some(v) = keep.iter().find(|v| !self.vars.contains(v)) {
            return Err(Error::Environment(format!("{v} is not a variable of the formula")));
        }
        let env = transition_env(keep);
        let ds = self
            .disjuncts
            .iter()
            .map(|d| d.project(&env))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::assemble(keep.into(), env, ds))
    }

    /// Renames variables positionally; `names` must have one entry per variable.
    pub fn rename_vars(&self, names: &[String]) -> Result<Self> {
        if names.len() != self.vars.len() {
            return Err(Error::Environment("renaming must keep the number of variables".into()));
        }
        let env = transition_env(names);
        let ds = self.disjuncts.iter().map(|d| d.rename(env.clone())).collect();
        Ok(Self::assemble(names.into(), env, ds))
    }

    /// Adds unconstrained variables (both copies) at the end of the list.
    pub fn extend_vars(&self, extra: &[String]) -> Result<Self> {
        let names: Vec<String> = self.vars.iter().chain(extra).cloned().collect();
        let env = transition_env(&names);
        let ds = self
            .disjuncts
            .iter()
            .map(|d| d.embed(env.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::assemble(names.into(), env, ds))
    }

    /// Does the pair of states (pre-state then post-state, in variable order) satisfy the formula?
    pub fn relates(&self, pre: &[Rational], post: &[Rational]) -> bool {
        let point: Vec<Rational> = pre.iter().chain(post).cloned().collect();
        self.disjuncts.iter().any(|d| d.contains(&point))
    }
}

/// `σ` simulates `f` by `g`: `f ⊨ g[σ, σ']`.
pub fn is_simulation(sigma: &Substitution, f: &TransitionFormula, g: &TransitionFormula) -> Result<bool> {
    f.entails(&g.subst(sigma)?)
}

pub(crate) fn render_env(env: &[VarId]) -> String {
    env.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for TransitionFormula {
    /// Disjuncts joined by `|`, constraints by `&`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.disjuncts.is_empty() {
            return write!(f, "false");
        }
        let parts: Vec<String> = self.disjuncts.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(" | "))
    }
}
