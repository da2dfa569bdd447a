use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, Rational};
use super::subst::Substitution;
use super::var::VarId;
use crate::error::{Error, Result};

/// `Σ coeff·var + constant`, with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct AffineTerm {
    coeffs: BTreeMap<VarId, Rational>,
    constant: Rational,
}

impl AffineTerm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        AffineTerm {
            coeffs: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn var(v: VarId) -> Self {
        Self::zero().with_coeff(v, Rational::one())
    }

    pub fn from_parts(coeffs: impl IntoIterator<Item = (VarId, Rational)>, constant: Rational) -> Self {
        let mut t = AffineTerm::constant(constant);
        for (v, c) in coeffs {
            t.add_coeff(v, c);
        }
        t
    }

    pub fn with_coeff(mut self, v: VarId, c: Rational) -> Self {
        self.add_coeff(v, c);
        self
    }

    pub fn add_coeff(&mut self, v: VarId, c: Rational) {
        if c.is_zero() {
            return;
        }
        let cleared = {
            let entry = self.coeffs.entry(v.clone()).or_insert_with(Rational::zero);
            *entry += c;
            entry.is_zero()
        };
        if cleared {
            self.coeffs.remove(&v);
        }
    }

    pub fn coeff(&self, v: &VarId) -> Rational {
        self.coeffs.get(v).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&VarId, &Rational)> {
        self.coeffs.iter()
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn vars(&self) -> impl Iterator<Item = &VarId> {
        self.coeffs.keys()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        AffineTerm {
            coeffs: self.coeffs.iter().map(|(v, c)| (v.clone(), c * k)).collect(),
            constant: &self.constant * k,
        }
    }

    /// Exact evaluation; every variable of the term must be assigned.
    pub fn eval(&self, point: &BTreeMap<VarId, Rational>) -> Result<Rational> {
        let mut acc = self.constant.clone();
        for (v, c) in &self.coeffs {
            let value = point
                .get(v)
                .ok_or_else(|| Error::Domain(format!("no value for variable {v}")))?;
            acc += c * value;
        }
        Ok(acc)
    }

    /// Replaces every variable `y` by `σ(y)` (and `y'` by `σ(y)` primed).
    pub fn subst(&self, sigma: &Substitution) -> Result<Self> {
        let mut out = AffineTerm::constant(self.constant.clone());
        for (v, c) in &self.coeffs {
            let image = sigma.image(v)?;
            out = out + image.scale(c);
        }
        Ok(out)
    }

    /// Renames every variable to its primed copy.
    pub fn primed(&self) -> Self {
        AffineTerm {
            coeffs: self.coeffs.iter().map(|(v, c)| (v.prime(), c.clone())).collect(),
            constant: self.constant.clone(),
        }
    }
}

impl Add for AffineTerm {
    type Output = AffineTerm;
    fn add(mut self, rhs: AffineTerm) -> AffineTerm {
        for (v, c) in rhs.coeffs {
            self.add_coeff(v, c);
        }
        self.constant += rhs.constant;
        self
    }
}

impl Neg for AffineTerm {
    type Output = AffineTerm;
    fn neg(self) -> AffineTerm {
        self.scale(&-Rational::one())
    }
}

impl Sub for AffineTerm {
    type Output = AffineTerm;
    fn sub(self, rhs: AffineTerm) -> AffineTerm {
        self + (-rhs)
    }
}

impl Mul<&Rational> for AffineTerm {
    type Output = AffineTerm;
    fn mul(self, rhs: &Rational) -> AffineTerm {
        self.scale(rhs)
    }
}

impl fmt::Display for AffineTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, c) in &self.coeffs {
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{v}")?;
            } else {
                write!(f, "{}*{v}", fmt_rational(&mag))?;
            }
            first = false;
        }
        if first {
            write!(f, "{}", fmt_rational(&self.constant))?;
        } else if !self.constant.is_zero() {
            let sign = if self.constant.is_negative() { "-" } else { "+" };
            write!(f, " {sign} {}", fmt_rational(&self.constant.abs()))?;
        }
        Ok(())
    }
}
