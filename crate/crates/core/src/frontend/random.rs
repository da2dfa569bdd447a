//! Seeded random transition formulas and substitutions for property suites.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyhedra::{Constraint, Polyhedron};
use crate::ratlin::{int, transition_env, AffineTerm, Relation, Substitution, VarId};
use crate::transition::TransitionFormula;

const NAMES: [&str; 3] = ["x", "y", "z"];

/// Shape of generated formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RandomFormulaSpec {
    /// At most 3; variables are named `x`, `y`, `z`.
    pub vars: usize,
    pub max_disjuncts: usize,
    pub max_constraints: usize,
    /// Coefficients are drawn from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    pub seed: u64,
}

impl Default for RandomFormulaSpec {
    fn default() -> Self {
        RandomFormulaSpec {
            vars: 2,
            max_disjuncts: 2,
            max_constraints: 4,
            coeff_bound: 3,
            seed: 0,
        }
    }
}

impl RandomFormulaSpec {
    pub fn var_names(&self) -> Vec<String> {
        NAMES[..self.vars.min(NAMES.len())].iter().map(|s| s.to_string()).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.vars == 0 || self.vars > NAMES.len() {
            return Err(Error::Input(format!("variable count must be 1..=3, got {}", self.vars)));
        }
        if self.max_disjuncts == 0 {
            return Err(Error::Input("at least one disjunct is required".into()));
        }
        Ok(())
    }
}

/// The formula determined by `spec.seed`.
pub fn gen_random_formula(spec: &RandomFormulaSpec) -> Result<TransitionFormula> {
    gen_formula_with(&mut ChaCha8Rng::seed_from_u64(spec.seed), spec)
}

/// Draws from `rng`; `spec.seed` is ignored. Unsatisfiable draws are kept.
pub fn gen_formula_with(rng: &mut impl Rng, spec: &RandomFormulaSpec) -> Result<TransitionFormula> {
    spec.validate()?;
    gen_over(rng, &spec.var_names(), spec)
}

fn gen_over(rng: &mut impl Rng, vars: &[String], spec: &RandomFormulaSpec) -> Result<TransitionFormula> {
    let env = transition_env(vars);
    let b = spec.coeff_bound;
    let disjuncts = (0..rng.gen_range(1..=spec.max_disjuncts))
        .map(|_| {
            let rows = (0..rng.gen_range(0..=spec.max_constraints))
                .map(|_| {
                    let coeffs = (0..env.len())
                        .map(|_| BigInt::from(if rng.gen_bool(0.5) { 0 } else { rng.gen_range(-b..=b) }))
                        .collect();
                    let rel = if rng.gen_bool(0.2) { Relation::EqZero } else { Relation::GeqZero };
                    Constraint::new(coeffs, BigInt::from(rng.gen_range(-5..=5)), rel)
                })
                .collect::<Vec<_>>();
            Polyhedron::new(env.clone(), rows)
        })
        .collect::<Vec<_>>();
    TransitionFormula::from_disjuncts(vars, disjuncts)
}

/// `σ` from `X` to `Y`, a formula `g` over `Y`, and `f := g[σ,σ'] ∧ c` for a
/// random single-disjunct `c` over `X`, so that `σ` simulates `f` by `g`.
#[derive(Debug, Clone)]
pub struct RobustnessInstance {
    pub sigma: Substitution,
    pub f: TransitionFormula,
    pub g: TransitionFormula,
}

pub fn gen_robustness_instance(rng: &mut impl Rng, spec: &RandomFormulaSpec) -> Result<RobustnessInstance> {
    let g = gen_formula_with(rng, spec)?;
    let source: Vec<String> = ["u", "v", "w"][..rng.gen_range(1..=3)].iter().map(|s| s.to_string()).collect();
    let sigma = gen_substitution_with(rng, &source, g.vars())?;
    let extra = RandomFormulaSpec {
        max_disjuncts: 1,
        max_constraints: 2,
        ..*spec
    };
    let c = gen_over(rng, &source, &extra)?;
    let f = g.subst(&sigma)?.meet(&c)?;
    Ok(RobustnessInstance { sigma, f, g })
}

/// A substitution from `source` to `target` with small integer coefficients.
pub fn gen_substitution_with(rng: &mut impl Rng, source: &[String], target: &[String]) -> Result<Substitution> {
    let mapping = target
        .iter()
        .map(|y| {
            let coeffs = source
                .iter()
                .map(|x| (VarId::unprimed(x), int(if rng.gen_bool(0.4) { 0 } else { rng.gen_range(-2..=2) })))
                .collect::<Vec<_>>();
            (y.clone(), AffineTerm::from_parts(coeffs, int(rng.gen_range(-2..=2))))
        })
        .collect::<Vec<_>>();
    Substitution::new(source.to_vec(), target.to_vec(), mapping)
}
