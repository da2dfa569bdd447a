use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use robust_apa::frontend::{gen_formula_with, gen_robustness_instance, RandomFormulaSpec};
use robust_apa::iterate::laws::{self, Violation};
use robust_apa::transition::{is_simulation, TransitionFormula};
use robust_apa::Result;

fn spec(i: usize, seed: u64) -> RandomFormulaSpec {
    RandomFormulaSpec {
        vars: 1 + i % 3,
        seed,
        ..Default::default()
    }
}

/// Runs the pre-Kleene laws on `samples` random formulas (cycling through
/// one, two and three variables) and returns every violation.
pub fn law_suite<S>(star: &S, samples: usize, seed: u64) -> Result<Vec<(usize, Violation)>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for i in 0..samples {
        let s = spec(i, seed);
        let a = gen_formula_with(&mut rng, &s)?;
        let extra = gen_formula_with(&mut rng, &s)?;
        if let Some(v) = laws::check_pka_laws(star, &a, &extra)? {
            bad.push((i, v));
        }
    }
    Ok(bad)
}

/// Random simulations `σ: f -> g`; each must survive the operator.
pub fn robustness_suite<S>(star: &S, instances: usize, seed: u64) -> Result<Vec<(usize, Violation)>>
where
    S: Fn(&TransitionFormula) -> Result<TransitionFormula>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = Vec::new();
    for i in 0..instances {
        let inst = gen_robustness_instance(&mut rng, &spec(i, seed))?;
        assert!(is_simulation(&inst.sigma, &inst.f, &inst.g)?, "instance {i} is not a simulation");
        if let Some(v) = laws::robustness(star, &inst.sigma, &inst.f, &inst.g)? {
            bad.push((i, v));
        }
    }
    Ok(bad)
}
