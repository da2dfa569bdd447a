//! Lower a small program to a flow graph and summarize every vertex.

use robust_apa::frontend::{parse_program, program_to_flowgraph};
use robust_apa::iterate::Domain;

const PROGRAM: &str = "
vars x y;
x = 1; y = 0;
while (x < 5) {
  x++;
  y += x;
}
";

fn main() -> robust_apa::Result<()> {
    let g = program_to_flowgraph(&parse_program(PROGRAM)?, "p2")?;
    print!("{g}");

    let order = g.admissible_order()?;
    let names: Vec<&str> = order.iter().map(|&v| g.vertex_name(v)).collect();
    println!("\nelimination order: {}", names.join(" "));
    for d in Domain::ALL {
        println!("\n{d}:");
        print!("{}", g.summarize_in_order(&order, d)?);
    }
    Ok(())
}
