use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratlin::rational::{denominator_lcm, fmt_rational, Rational};
use crate::ratlin::{AffineTerm, Relation, VarId};

/// `coeffs·x + constant ≥ 0` (or `= 0`) over a positional environment.
///
/// Always stored in canonical form: integer entries with gcd 1, and for
/// equalities a positive leading coefficient. Canonical form makes syntactic
/// equality meaningful; it says nothing about semantic redundancy.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Constraint {
    coeffs: Vec<BigInt>,
    constant: BigInt,
    relation: Relation,
}

impl Constraint {
    pub fn new(coeffs: Vec<BigInt>, constant: BigInt, relation: Relation) -> Self {
        let mut c = Constraint {
            coeffs,
            constant,
            relation,
        };
        c.canonicalize();
        c
    }

    pub fn geq(coeffs: Vec<BigInt>, constant: BigInt) -> Self {
        Self::new(coeffs, constant, Relation::GeqZero)
    }

    pub fn eq(coeffs: Vec<BigInt>, constant: BigInt) -> Self {
        Self::new(coeffs, constant, Relation::EqZero)
    }

    /// Clears denominators of a rational row.
    pub fn from_rational(coeffs: &[Rational], constant: &Rational, relation: Relation) -> Self {
        let l = denominator_lcm(coeffs.iter().chain(std::iter::once(constant)));
        let scale = |v: &Rational| (v * Rational::from_integer(l.clone())).to_integer();
        Self::new(coeffs.iter().map(scale).collect(), scale(constant), relation)
    }

    /// Positions `term` in `env`; fails if the term mentions a variable outside it.
    pub fn from_term(term: &AffineTerm, relation: Relation, env: &[VarId]) -> Result<Self> {
        if let Some(v) = term.vars().find(|v| !env.contains(v)) {
            return Err(Error::Environment(format!("variable {v} is not in the environment")));
        }
        let coeffs: Vec<Rational> = env.iter().map(|v| term.coeff(v)).collect();
        Ok(Self::from_rational(&coeffs, term.constant_part(), relation))
    }

    /// The constant constraint `-1 ≥ 0`.
    pub fn falsum(dim: usize) -> Self {
        Constraint {
            coeffs: vec![BigInt::zero(); dim],
            constant: -BigInt::one(),
            relation: Relation::GeqZero,
        }
    }

    fn canonicalize(&mut self) {
        let g = self
            .coeffs
            .iter()
            .chain(std::iter::once(&self.constant))
            .fold(BigInt::zero(), |g, c| g.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in self.coeffs.iter_mut() {
                *c /= &g;
            }
            self.constant /= &g;
        }
        if self.relation == Relation::EqZero {
            let lead_negative = match self.coeffs.iter().find(|c| !c.is_zero()) {
                Some(c) => c.is_negative(),
                None => self.constant.is_negative(),
            };
            if lead_negative {
                self.negate_in_place();
            }
        }
    }

    fn negate_in_place(&mut self) {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self.constant = -std::mem::take(&mut self.constant);
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant(&self) -> &BigInt {
        &self.constant
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn is_equality(&self) -> bool {
        self.relation == Relation::EqZero
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, j: usize) -> &BigInt {
        &self.coeffs[j]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Holds everywhere for syntactic reasons (`c ≥ 0` with `c ≥ 0`, or `0 = 0`).
    pub fn is_tautology(&self) -> bool {
        self.is_constant()
            && match self.relation {
                Relation::GeqZero => !self.constant.is_negative(),
                Relation::EqZero => self.constant.is_zero(),
            }
    }

    pub fn is_contradiction(&self) -> bool {
        self.is_constant() && !self.is_tautology()
    }

    /// The same row read as an inequality.
    pub fn as_inequality(&self) -> Self {
        Constraint {
            relation: Relation::GeqZero,
            ..self.clone()
        }
    }

    /// `-(coeffs·x + constant)` with the same relation.
    pub fn negated(&self) -> Self {
        let mut c = self.clone();
        c.negate_in_place();
        c.canonicalize();
        c
    }

    pub fn with_relation(&self, relation: Relation) -> Self {
        Self::new(self.coeffs.clone(), self.constant.clone(), relation)
    }

    pub fn rational_coeffs(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }

    pub fn value(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.dim(), "point dimension mismatch");
        self.coeffs
            .iter()
            .zip(point)
            .filter(|(c, _)| !c.is_zero())
            .fold(Rational::from_integer(self.constant.clone()), |acc, (c, x)| {
                acc + x * Rational::from_integer(c.clone())
            })
    }

    pub fn satisfied_by(&self, point: &[Rational]) -> bool {
        let v = self.value(point);
        match self.relation {
            Relation::GeqZero => !v.is_negative(),
            Relation::EqZero => v.is_zero(),
        }
    }

    pub fn to_term(&self, env: &[VarId]) -> AffineTerm {
        AffineTerm::from_parts(
            env.iter()
                .cloned()
                .zip(self.coeffs.iter().map(|c| Rational::from_integer(c.clone()))),
            Rational::from_integer(self.constant.clone()),
        )
    }

    pub(crate) fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Human-readable form over `env`, e.g. `x' = x + 1` or `x - y <= 3`.
    pub fn render(&self, env: &[VarId]) -> String {
        assert_eq!(env.len(), self.dim());
        if self.is_constant() {
            return if self.is_tautology() { "true" } else { "false" }.to_string();
        }
        if self.is_equality() {
            // Solve for the first primed variable with a unit coefficient.
            let pivot = env
                .iter()
                .enumerate()
                .find(|(j, v)| v.is_primed() && self.coeffs[*j].abs().is_one());
            if let Some((j, v)) = pivot {
                let sign = -self.coeffs[j].clone();
                let rhs: Vec<(usize, BigInt)> = self
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|(k, c)| *k != j && !c.is_zero())
                    .map(|(k, c)| (k, c * &sign))
                    .collect();
                return format!("{v} = {}", render_linear(&rhs, &(&self.constant * &sign), env));
            }
        }
        let lead = self.first_nonzero().expect("nonconstant");
        let flip = self.coeffs[lead].is_negative();
        let sign = if flip { -BigInt::one() } else { BigInt::one() };
        let lhs: Vec<(usize, BigInt)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, c * &sign))
            .collect();
        let rel = match (self.relation, flip) {
            (Relation::EqZero, _) => "=",
            (Relation::GeqZero, false) => ">=",
            (Relation::GeqZero, true) => "<=",
        };
        let rhs = -(&self.constant * &sign);
        format!("{} {rel} {rhs}", render_linear(&lhs, &BigInt::zero(), env))
    }
}

fn render_linear(terms: &[(usize, BigInt)], constant: &BigInt, env: &[VarId]) -> String {
    let mut out = String::new();
    for (k, c) in terms {
        let mag = c.abs();
        let head = if mag.is_one() {
            env[*k].to_string()
        } else {
            format!("{mag}*{}", env[*k])
        };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
            out.push_str(&head);
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
            out.push_str(&head);
        }
    }
    if out.is_empty() {
        return fmt_rational(&Rational::from_integer(constant.clone()));
    }
    if !constant.is_zero() {
        out.push_str(if constant.is_negative() { " - " } else { " + " });
        out.push_str(&constant.abs().to_string());
    }
    out
}

impl Ord for Constraint {
    /// Leading column first, equalities before inequalities, then coefficients.
    fn cmp(&self, other: &Self) -> Ordering {
        let lead = |c: &Constraint| c.first_nonzero().unwrap_or(usize::MAX);
        let rel = |c: &Constraint| c.relation != Relation::EqZero;
        lead(self)
            .cmp(&lead(other))
            .then_with(|| rel(self).cmp(&rel(other)))
            .then_with(|| self.coeffs.cmp(&other.coeffs))
            .then_with(|| self.constant.cmp(&other.constant))
    }
}

impl PartialOrd for Constraint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
