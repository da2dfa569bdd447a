//! Loop preservation: membership, non-nesting and consistent unrolling.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use super::map::StutterMap;
use super::stutter::{EdgeTag, EdgeWitness};
use crate::flowgraph::{FlowGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopViolation {
    /// `u ∈ L_G(v)` but `h(u) ∉ L_H(h(v))`.
    Membership { u: Vertex, v: Vertex },
    /// `h(u) = h(v)` and `u ∈ L_G(v)` for a different vertex `u` that heads a loop itself.
    Nesting { u: Vertex, v: Vertex },
    /// No choice of witness gives every primitive local cycle of `header`
    /// the same positive number of steps at `h(header)`.
    Unrolling { header: Vertex },
}

impl LoopViolation {
    pub fn describe(&self, g: &FlowGraph) -> String {
        let n = |v: &Vertex| g.vertex_name(*v).to_string();
        match self {
            LoopViolation::Membership { u, v } => {
                format!("loop membership: {} is in the loop of {} but its image is not", n(u), n(v))
            }
            LoopViolation::Nesting { u, v } => format!(
                "non-nesting: {} heads a loop inside the loop of {} and both map to the same vertex",
                n(u),
                n(v)
            ),
            LoopViolation::Unrolling { header } => {
                format!("consistent unrolling: cycles of {} unroll inconsistently", n(header))
            }
        }
    }
}

/// A resolved witness (every tag `Match` or `Stutter`) and the unrolling
/// factor of each loop header.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopWitness {
    pub tags: EdgeWitness,
    pub unrolling: BTreeMap<Vertex, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopOutcome {
    Yes(LoopWitness),
    No(LoopViolation),
}

impl LoopOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, LoopOutcome::Yes(_))
    }
}

impl fmt::Display for LoopOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoopOutcome::Yes(w) => write!(f, "loop-preserving (unrolling {:?})", w.unrolling),
            LoopOutcome::No(v) => write!(f, "not loop-preserving: {v:?}"),
        }
    }
}

/// Steps at `h(header)` taken by the image of a `G`-edge under `tag`.
fn steps(m: &StutterMap, header: Vertex, src: Vertex, tag: EdgeTag) -> usize {
    usize::from(tag == EdgeTag::Match && m.h(src) == m.h(header))
}

/// The common `|r(π)|_{h(v)}` over primitive local cycles `π` of `header`
/// under resolved `tags`, found by labeling each loop vertex with its
/// distance from the header. `None` if paths disagree or the count is zero.
pub fn unrolling_count(
    g: &FlowGraph,
    m: &StutterMap,
    body: &BTreeSet<Vertex>,
    header: Vertex,
    tags: &EdgeWitness,
) -> Option<usize> {
    let mut dist = BTreeMap::from([(header, 0usize)]);
    let mut total = None;
    let mut work = VecDeque::from([header]);
    while let Some(a) = work.pop_front() {
        for b in g.successors(a).filter(|b| body.contains(b)) {
            let d = dist[&a] + steps(m, header, a, tags[&(a, b)]);
            if b == header {
                if *total.get_or_insert(d) != d {
                    return None;
                }
            } else if let Some(&old) = dist.get(&b) {
                if old != d {
                    return None;
                }
            } else {
                dist.insert(b, d);
                work.push_back(b);
            }
        }
    }
    total.filter(|&n| n >= 1)
}

/// Checks the three loop-preservation conditions for a stuttering
/// simulation with admissible tags `tags`.
pub fn check_loop_preserving(g: &FlowGraph, hg: &FlowGraph, m: &StutterMap, tags: &EdgeWitness) -> LoopOutcome {
    let lg = g.all_local_cycles();
    let lh = hg.all_local_cycles();
    for v in 0..g.len() {
        for &u in &lg[v] {
            if !lh[m.h(v)].contains(&m.h(u)) {
                return LoopOutcome::No(LoopViolation::Membership { u, v });
            }
            if u != v && m.h(u) == m.h(v) && !lg[u].is_empty() {
                return LoopOutcome::No(LoopViolation::Nesting { u, v });
            }
        }
    }

    let headers: Vec<Vertex> = (0..g.len()).filter(|&v| !lg[v].is_empty()).collect();
    let inside = |v: Vertex, a: Vertex, b: Vertex| lg[v].contains(&a) && lg[v].contains(&b);
    // Only `Either` edges whose choice can change some count are branched on.
    let choices: Vec<(Vertex, Vertex)> = tags
        .iter()
        .filter(|&(&(a, b), &t)| {
            t == EdgeTag::Either && headers.iter().any(|&v| inside(v, a, b) && m.h(a) == m.h(v))
        })
        .map(|(&e, _)| e)
        .collect();
    let mut resolved: EdgeWitness = tags
        .iter()
        .map(|(&e, &t)| (e, if t == EdgeTag::Either { EdgeTag::Stutter } else { t }))
        .collect();
    // A header can be checked once its last relevant choice is made.
    let ready_at = |v: Vertex| {
        choices
            .iter()
            .rposition(|&(a, b)| inside(v, a, b))
            .map_or(0, |i| i + 1)
    };
    let mut by_depth: Vec<Vec<Vertex>> = vec![Vec::new(); choices.len() + 1];
    for &v in &headers {
        by_depth[ready_at(v)].push(v);
    }

    struct Search<'a> {
        g: &'a FlowGraph,
        m: &'a StutterMap,
        lg: &'a [BTreeSet<Vertex>],
        choices: &'a [(Vertex, Vertex)],
        by_depth: &'a [Vec<Vertex>],
        failed: Option<Vertex>,
    }
    impl Search<'_> {
        fn run(&mut self, i: usize, tags: &mut EdgeWitness, counts: &mut BTreeMap<Vertex, usize>) -> bool {
            for &v in &self.by_depth[i] {
                match unrolling_count(self.g, self.m, &self.lg[v], v, tags) {
                    Some(n) => {
                        counts.insert(v, n);
                    }
                    None => {
                        self.failed.get_or_insert(v);
                        return false;
                    }
                }
            }
            if i == self.choices.len() {
                return true;
            }
            for tag in [EdgeTag::Stutter, EdgeTag::Match] {
                tags.insert(self.choices[i], tag);
                if self.run(i + 1, tags, counts) {
                    return true;
                }
            }
            false
        }
    }
    let mut search = Search {
        g,
        m,
        lg: &lg,
        choices: &choices,
        by_depth: &by_depth,
        failed: None,
    };
    let mut counts = BTreeMap::new();
    if search.run(0, &mut resolved, &mut counts) {
        LoopOutcome::Yes(LoopWitness {
            tags: resolved,
            unrolling: counts,
        })
    } else {
        LoopOutcome::No(LoopViolation::Unrolling {
            header: search.failed.expect("search failed at some header"),
        })
    }
}
