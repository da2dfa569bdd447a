//! Vertex elimination one step at a time, on a loop with a branch inside.

use robust_apa::frontend::parse_graph;
use robust_apa::iterate::Domain;

const GRAPH: &str = "
graph walk vars x y
root entry
entry -> head : x' = 0 & y' = y
head -> even : x < 10 & x' = x & y' = y
head -> odd : x < 10 & x' = x & y' = y
even -> head : x' = x + 2 & y' = y
odd -> head : x' = x + 1 & y' = y + 1
head -> exit : x >= 10 & x' = x & y' = y
";

fn main() -> robust_apa::Result<()> {
    let mut g = parse_graph(GRAPH)?;
    println!("loop at head: {:?}", g.local_cycles(g.vertex("head").unwrap()).iter().map(|&v| g.vertex_name(v)).collect::<Vec<_>>());
    for v in ["even", "odd", "head"] {
        g = g.eliminate(g.vertex(v).unwrap(), Domain::Combined)?;
        println!("\nafter eliminating {v}:\n{g}");
    }
    print!("summaries:\n{}", parse_graph(GRAPH)?.summarize(Domain::Combined)?);
    Ok(())
}
