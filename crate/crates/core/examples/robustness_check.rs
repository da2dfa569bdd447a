//! The three stages of a robustness check on a pair of flow graphs: a
//! stuttering simulation, loop preservation, and related summaries.

use robust_apa::frontend::{parse_graph, parse_map};
use robust_apa::iterate::Domain;
use robust_apa::simcheck::{check_loop_preserving, check_stutter_sim, verify_robustness, LoopOutcome, SimOutcome};

const G: &str = include_str!("../corpus/p2.graph");
const H: &str = include_str!("../corpus/p1.graph");

fn check(map: &str) -> robust_apa::Result<()> {
    let g = parse_graph(G)?;
    let h = parse_graph(H)?;
    let m = parse_map(map, &g, &h)?;
    let tags = match check_stutter_sim(&g, &h, &m)? {
        SimOutcome::Yes(tags) => tags,
        SimOutcome::No(e) => {
            let (u, v) = e.edge;
            println!("  edge {} -> {} is not simulated", g.vertex_name(u), g.vertex_name(v));
            for c in &e.clauses {
                println!("  e.g. from {:?} to {:?}", c.pre.iter().map(|q| q.to_string()).collect::<Vec<_>>(), c.post.iter().map(|q| q.to_string()).collect::<Vec<_>>());
            }
            return Ok(());
        }
    };
    for ((u, v), t) in &tags {
        println!("  {} -> {}: {t}", g.vertex_name(*u), g.vertex_name(*v));
    }
    match check_loop_preserving(&g, &h, &m, &tags) {
        LoopOutcome::Yes(_) => println!("  loops preserved"),
        LoopOutcome::No(why) => {
            println!("  {}", why.describe(&g));
            return Ok(());
        }
    }
    for d in Domain::ALL {
        println!("  {d}: {}", if verify_robustness(&g, &h, &m, d)?.is_verified() { "verified" } else { "refuted" });
    }
    Ok(())
}

fn main() -> robust_apa::Result<()> {
    println!("x as i:");
    check(include_str!("../corpus/overview.map"))?;
    println!("\ny as i:");
    check(include_str!("../corpus/overview_broken.map"))
}
