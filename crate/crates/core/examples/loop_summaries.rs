//! Loop summaries for the bodies `i < 5 ∧ i' = i + 1` and
//! `x < 5 ∧ x' = x + 1 ∧ y' = y + x + 1`, step by step.

use robust_apa::frontend::{parse_formula, var_list};
use robust_apa::iterate::{alpha_lra, star_combined, star_lra, star_pga};

fn main() -> robust_apa::Result<()> {
    for (body, vars) in [("i < 5 & i' = i + 1", "i"), ("x < 5 & x' = x + 1 & y' = y + x + 1", "x y")] {
        let g = parse_formula(body, &var_list(vars))?;
        println!("body            {g}");
        println!("conv(delta)     {}", g.delta()?);
        let a = alpha_lra(&g)?;
        println!("recurrences     {} via {}", a.formula, a.eta);
        println!("pre             {}", g.pre()?);
        println!("post            {}", g.post()?);
        println!("star (pga)      {}", star_pga(&g)?);
        println!("star (lra)      {}", star_lra(&g)?);
        println!("summary         {}", star_combined(&g)?);
        println!();
    }
    Ok(())
}
