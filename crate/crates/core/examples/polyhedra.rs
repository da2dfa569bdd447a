//! Exact polyhedra: projection, convex hull of a union, union coverage and
//! generators.

use robust_apa::frontend::{parse_formula, var_list};
use robust_apa::polyhedra::{hull_union, uncovered_point, union_covers, Polyhedron};
use robust_apa::ratlin::state_env;

/// A conjunction over plain state variables, as a polyhedron over them.
fn poly(text: &str, vars: &[String]) -> robust_apa::Result<Polyhedron> {
    let f = parse_formula(text, vars)?;
    f.disjuncts()[0].project(&state_env(vars))
}

fn main() -> robust_apa::Result<()> {
    let xyz = var_list("x y z");
    let p = poly("0 <= x & x <= y & y <= z & z <= 4 & x + y + z >= 3", &xyz)?;
    println!("P                {p}");
    println!("exists z. P      {}", p.project(&state_env(&var_list("x y")))?);
    println!("exists y z. P    {}", p.project(&state_env(&var_list("x")))?);

    let xy = var_list("x y");
    let a = poly("0 <= x & x <= 1 & y = 0", &xy)?;
    let b = poly("x = 3 & 1 <= y & y <= 2", &xy)?;
    let h = hull_union(state_env(&xy), &[a.clone(), b.clone()]);
    println!("\nconv(A | B)      {h}");
    let g = h.generators();
    println!("vertices         {:?}", g.points.iter().map(|p| p.iter().map(|q| q.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>());

    let box_ = poly("0 <= x & x <= 2 & 0 <= y & y <= 2", &xy)?;
    let left = poly("x <= 1", &xy)?;
    let right = poly("x >= 1", &xy)?;
    let right_closed = poly("x >= 1 & y >= 1", &xy)?;
    println!("\nleft | right covers the box: {}", union_covers(&[left.clone(), right], &box_));
    println!("left | upper-right covers the box: {}", union_covers(&[left.clone(), right_closed.clone()], &box_));
    if let Some(pt) = uncovered_point(&[left, right_closed], &box_) {
        let pt: Vec<String> = pt.iter().map(|q| q.to_string()).collect();
        println!("  missed point ({})", pt.join(", "));
    }
    Ok(())
}
