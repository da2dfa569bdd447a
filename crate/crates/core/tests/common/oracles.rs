//! Grid-enumeration oracles. Each suite returns the number of points it
//! compared, or a description of the first disagreement.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use robust_apa::frontend::{gen_formula_with, RandomFormulaSpec};
use robust_apa::polyhedra::{uncovered_point, Polyhedron};
use robust_apa::ratlin::{Rational, Relation, VarId};

use super::{env, grid, qf, random_poly};

/// Projection of a 3-variable polyhedron onto (x, y) against a direct search
/// for z. With coefficients in [-3, 3] and an integer (x, y) in [-5, 5], any
/// nonempty z-interval has an endpoint on the 1/6 grid inside [-50, 50].
pub fn projection(seed: u64, rounds: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = env(&["x", "y", "z"]);
    let keep = [VarId::unprimed("x"), VarId::unprimed("y")];
    let zs: Vec<Rational> = (-300..=300).map(|k| qf(k, 6)).collect();
    let mut checked = 0;
    for _ in 0..rounds {
        let p = random_poly(&mut rng, &e, 4);
        let shadow = p.project(&keep).map_err(|e| e.to_string())?;
        for xy in grid(2, -5, 5, 1) {
            let extends = zs.iter().any(|z| p.contains(&[xy[0].clone(), xy[1].clone(), z.clone()]));
            if shadow.contains(&xy) != extends {
                return Err(format!("P = {p}, shadow = {shadow}, point {xy:?}"));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// A suite whose points all land on one side tests nothing.
fn nondegenerate(checked: usize, inside: usize) -> Result<usize, String> {
    if inside == 0 || inside == checked {
        return Err(format!("degenerate suite: {inside} of {checked} points inside"));
    }
    Ok(checked)
}

/// The closed interval of `m` allowed by one disjunct over `[x, x']` once
/// the other coordinate is fixed; `None` if empty.
fn interval(d: &Polyhedron, fixed: &Rational, fixed_is_pre: bool) -> Option<(Option<Rational>, Option<Rational>)> {
    let (mut lo, mut hi): (Option<Rational>, Option<Rational>) = (None, None);
    for c in d.constraints() {
        let (a, b) = (Rational::from_integer(c.coeffs()[0].clone()), Rational::from_integer(c.coeffs()[1].clone()));
        let (kf, km) = if fixed_is_pre { (a, b) } else { (b, a) };
        let rest = kf * fixed + Rational::from_integer(c.constant().clone());
        // km * m + rest (>= | =) 0
        if km.is_zero() {
            let ok = match c.relation() {
                Relation::GeqZero => rest >= Rational::zero(),
                Relation::EqZero => rest.is_zero(),
            };
            if !ok {
                return None;
            }
            continue;
        }
        let root = -rest / &km;
        let (lower, upper) = match c.relation() {
            Relation::EqZero => (true, true),
            Relation::GeqZero => (km > Rational::zero(), km < Rational::zero()),
        };
        if lower && lo.as_ref().is_none_or(|l| root > *l) {
            lo = Some(root.clone());
        }
        if upper && hi.as_ref().is_none_or(|h| root < *h) {
            hi = Some(root);
        }
    }
    match (&lo, &hi) {
        (Some(l), Some(h)) if l > h => None,
        _ => Some((lo, hi)),
    }
}

fn meets(a: &(Option<Rational>, Option<Rational>), b: &(Option<Rational>, Option<Rational>)) -> bool {
    let lo = match (&a.0, &b.0) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, y) => x.as_ref().or(y.as_ref()),
    };
    let hi = match (&a.1, &b.1) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.as_ref().or(y.as_ref()),
    };
    !matches!((lo, hi), (Some(l), Some(h)) if l > h)
}

/// `F · G` over one variable against an exact interval computation of
/// `∃m. F(s, m) ∧ G(m, t)` on the half-integer grid of [-6, 6]^2.
pub fn composition(seed: u64, rounds: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = RandomFormulaSpec {
        vars: 1,
        ..Default::default()
    };
    let (mut checked, mut inside) = (0, 0);
    for _ in 0..rounds {
        let f = gen_formula_with(&mut rng, &spec).map_err(|e| e.to_string())?;
        let g = gen_formula_with(&mut rng, &spec).map_err(|e| e.to_string())?;
        let fg = f.compose(&g).map_err(|e| e.to_string())?;
        for st in grid(2, -6, 6, 2) {
            let (s, t) = (&st[0], &st[1]);
            let oracle = f.disjuncts().iter().any(|df| {
                g.disjuncts().iter().any(|dg| match (interval(df, s, true), interval(dg, t, false)) {
                    (Some(a), Some(b)) => meets(&a, &b),
                    _ => false,
                })
            });
            if fg.relates(std::slice::from_ref(s), std::slice::from_ref(t)) != oracle {
                return Err(format!("F = {f}, G = {g}, F.G = {fg}, point ({s}, {t}), oracle {oracle}"));
            }
            inside += usize::from(oracle);
            checked += 1;
        }
    }
    nondegenerate(checked, inside)
}

/// Union coverage and its witnesses against the half-integer grid of [-6, 6]^2.
pub fn coverage(seed: u64, rounds: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let e = env(&["x", "y"]);
    let pts = grid(2, -6, 6, 2);
    let mut checked = 0;
    for _ in 0..rounds {
        let ps: Vec<Polyhedron> = (0..rng.gen_range(1..=3)).map(|_| random_poly(&mut rng, &e, 3)).collect();
        let qy = random_poly(&mut rng, &e, 3);
        let outside = pts.iter().find(|p| qy.contains(p) && !ps.iter().any(|m| m.contains(p)));
        checked += pts.len();
        match uncovered_point(&ps, &qy) {
            None => {
                if let Some(o) = outside {
                    return Err(format!("claimed cover of {qy}, but {o:?} is uncovered"));
                }
            }
            Some(w) => {
                if !qy.contains(&w) || ps.iter().any(|m| m.contains(&w)) {
                    return Err(format!("witness {w:?} for {qy} is not a witness"));
                }
            }
        }
    }
    Ok(checked)
}

/// `G[σ, σ']` relates `(s, t)` exactly when `G` relates `(σ(s), σ(t))`,
/// checked on the integer grid of [-2, 2]^4.
pub fn cartesian(seed: u64, rounds: usize) -> Result<usize, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let spec = RandomFormulaSpec::default();
    let (mut checked, mut inside) = (0, 0);
    for _ in 0..rounds {
        let inst = robust_apa::frontend::gen_robustness_instance(&mut rng, &spec).map_err(|e| e.to_string())?;
        let g = &inst.g;
        let pulled = g.subst(&inst.sigma).map_err(|e| e.to_string())?;
        let src = inst.sigma.source();
        let apply = |s: &[Rational]| -> Vec<Rational> {
            g.vars()
                .iter()
                .map(|y| {
                    let t = inst.sigma.get(y).expect("total");
                    src.iter()
                        .zip(s)
                        .fold(t.constant_part().clone(), |acc, (x, v)| acc + t.coeff(&VarId::unprimed(x)) * v)
                })
                .collect()
        };
        for st in grid(2 * src.len(), -2, 2, 1) {
            let (s, t) = st.split_at(src.len());
            let expect = g.relates(&apply(s), &apply(t));
            if pulled.relates(s, t) != expect {
                return Err(format!("G = {g}, sigma = {}, point {st:?}", inst.sigma));
            }
            inside += usize::from(expect);
            checked += 1;
        }
    }
    nondegenerate(checked, inside)
}
