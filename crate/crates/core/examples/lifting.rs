//! Iteration operators built by lifting an exact closure from a simpler
//! model: abstract the formula, iterate there, and translate back.

use robust_apa::frontend::{parse_formula, var_list};
use robust_apa::iterate::{alpha_pga, lift, star_lra_counted, LossyModel, PolyCartModel, SubModel};
use robust_apa::transition::TransitionFormula;

fn main() -> robust_apa::Result<()> {
    let f = parse_formula("x + y <= 10 & x' = x + 1 & y' = y + 2 & y' >= 0", &var_list("x y"))?;
    println!("F = {f}\n");

    let a = alpha_pga(&f)?;
    println!("guards: pre {}  post {}", a.formula.pre, a.formula.post);
    let pga = PolyCartModel.lifted_star(&f)?;
    println!("PGA star        {pga}");

    let l = LossyModel.alpha(&f)?;
    println!("\nrecurrences     {} via {}", l.formula, l.eta);
    let abstract_star = LossyModel.star(&l)?;
    println!("abstract star   {abstract_star}");
    println!("lifted          {}", lift(&l.eta, &abstract_star)?);
    let counted = star_lra_counted(&l.formula, l.abstract_vars())?;
    println!("with counter    {counted}");

    let id = TransitionFormula::one(f.vars());
    println!("\n1 <= F*: {}   F <= F*: {}", id.entails(&pga)?, f.entails(&pga)?);
    Ok(())
}
