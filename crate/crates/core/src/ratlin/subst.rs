//! Linear simulations in transposed form.
//!
//! A [`Substitution`] from `X` to `Y` maps every target variable `y ∈ Y` to an
//! affine term over the source variables `X`. Read as a linear map it sends a
//! state `s ∈ ℚ^X` to `λy. σ(y)(s)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use super::rational::Rational;
use super::term::AffineTerm;
use super::var::VarId;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    source: Vec<String>,
    target: Vec<String>,
    mapping: BTreeMap<String, AffineTerm>,
}

impl Substitution {
    /// Rejects partial maps, extra entries, and terms mentioning anything
    /// other than unprimed source variables.
    pub fn new(
        source: Vec<String>,
        target: Vec<String>,
        mapping: impl IntoIterator<Item = (String, AffineTerm)>,
    ) -> Result<Self> {
        let src: BTreeSet<&str> = source.iter().map(String::as_str).collect();
        if src.len() != source.len() {
            return Err(Error::Domain("duplicate source variable".into()));
        }
        let tgt: BTreeSet<&str> = target.iter().map(String::as_str).collect();
        if tgt.len() != target.len() {
            return Err(Error::Domain("duplicate target variable".into()));
        }
        let mut map = BTreeMap::new();
        for (y, t) in mapping {
            if !tgt.contains(y.as_str()) {
                return Err(Error::Domain(format!("{y} is not a target variable")));
            }
            for v in t.vars() {
                if v.is_primed() || !src.contains(v.name()) {
                    return Err(Error::Domain(format!(
                        "term for {y} mentions {v}, which is not a source variable"
                    )));
                }
            }
            if map.insert(y.clone(), t).is_some() {
                return Err(Error::Domain(format!("{y} is mapped twice")));
            }
        }
        if let Some(missing) = target.iter().find(|y| !map.contains_key(*y)) {
            return Err(Error::Domain(format!("substitution is not total: {missing} is unmapped")));
        }
        Ok(Substitution {
            source,
            target,
            mapping: map,
        })
    }

    pub fn identity(vars: &[String]) -> Self {
        let mapping = vars
            .iter()
            .map(|v| (v.clone(), AffineTerm::var(VarId::unprimed(v))))
            .collect();
        Substitution {
            source: vars.to_vec(),
            target: vars.to_vec(),
            mapping,
        }
    }

    pub fn source(&self) -> &[String] {
        &self.source
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }

    pub fn get(&self, target_var: &str) -> Option<&AffineTerm> {
        self.mapping.get(target_var)
    }

    /// `σ(y)` for unprimed `y`, `σ(y)[X ↦ X']` for primed `y'`.
    pub fn image(&self, v: &VarId) -> Result<AffineTerm> {
        let t = self
            .mapping
            .get(v.name())
            .ok_or_else(|| Error::Domain(format!("{v} is outside the substitution's domain")))?;
        Ok(if v.is_primed() { t.primed() } else { t.clone() })
    }

    /// Applies `self` and then `tau`: `y ↦ σ(y)[τ]`.
    pub fn then(&self, tau: &Substitution) -> Result<Substitution> {
        let mapping = self
            .target
            .iter()
            .map(|y| Ok((y.clone(), self.mapping[y].subst(tau)?)))
            .collect::<Result<Vec<_>>>()?;
        Substitution::new(tau.source.clone(), self.target.clone(), mapping)
    }

    /// Dense rows in target order: `(coefficients over source order, constant)`.
    pub fn dense(&self) -> Vec<(Vec<Rational>, Rational)> {
        self.target
            .iter()
            .map(|y| {
                let t = &self.mapping[y];
                let row = self
                    .source
                    .iter()
                    .map(|x| t.coeff(&VarId::unprimed(x)))
                    .collect();
                (row, t.constant_part().clone())
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
            && self.target.iter().all(|y| {
                let t = &self.mapping[y];
                t.constant_part().is_zero()
                    && t.coeffs().count() == 1
                    && t.coeff(&VarId::unprimed(y)) == Rational::from_integer(1.into())
            })
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, y) in self.target.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{y} := {}", self.mapping[y])?;
        }
        write!(f, "]")
    }
}

/// Convenience constructor for tests and examples.
pub fn subst_of(source: &[&str], pairs: &[(&str, AffineTerm)]) -> Result<Substitution> {
    Substitution::new(
        source.iter().map(|s| s.to_string()).collect(),
        pairs.iter().map(|(y, _)| y.to_string()).collect(),
        pairs.iter().map(|(y, t)| (y.to_string(), t.clone())),
    )
}
