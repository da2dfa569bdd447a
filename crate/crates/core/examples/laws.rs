//! Iteration-operator laws on a few hand-picked formulas, then on a broken
//! operator that forgets everything but the identity.

use robust_apa::frontend::{parse_formula, var_list};
use robust_apa::iterate::{laws, Domain};
use robust_apa::ratlin::{subst_of, AffineTerm, VarId};
use robust_apa::transition::TransitionFormula;

fn main() -> robust_apa::Result<()> {
    let xy = var_list("x y");
    let formulas = [
        "x' = x + 1 & y' = y - 1",
        "x >= 0 & x' = x - 2 & y' = y | x < 0 & x' = -x & y' = y",
        "x <= y & x' = y & y' = x",
    ];
    let zero = TransitionFormula::zero(&xy);
    for text in formulas {
        let a = parse_formula(text, &xy)?;
        for d in Domain::ALL {
            let star = |f: &TransitionFormula| d.star(f);
            match laws::check_pka_laws(&star, &a, &zero)? {
                None => println!("{d:>8}  ok    {a}"),
                Some(v) => println!("{d:>8}  FAIL  {v}"),
            }
        }
    }

    // s := x + y maps the increment of x onto a counter.
    let g = parse_formula("s' = s + 1", &var_list("s"))?;
    let f = parse_formula("x' = x + 1 & y' = y & x >= 0", &xy)?;
    let sigma = subst_of(&["x", "y"], &[("s", AffineTerm::var(VarId::unprimed("x")) + AffineTerm::var(VarId::unprimed("y")))])?;
    for d in Domain::ALL {
        let star = |f: &TransitionFormula| d.star(f);
        let ok = laws::robustness(&star, &sigma, &f, &g)?.is_none();
        println!("{d:>8}  robust under {sigma}: {ok}");
    }

    let broken = |f: &TransitionFormula| Ok(TransitionFormula::one(f.vars()));
    let a = parse_formula(formulas[0], &xy)?;
    if let Some(v) = laws::check_pka_laws(&broken, &a, &zero)? {
        println!("\nidentity operator: {v}");
    }
    Ok(())
}
