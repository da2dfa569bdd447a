//! Dominance, reducibility and loop structure.

use std::collections::BTreeSet;

use super::graph::{FlowGraph, Vertex};
use crate::error::{Error, Result};

impl FlowGraph {
    /// `dom[v]`: the vertices on every path from the root to `v`.
    pub fn dominators(&self) -> Vec<BTreeSet<Vertex>> {
        let n = self.len();
        let all: BTreeSet<Vertex> = (0..n).collect();
        let mut dom = vec![all; n];
        dom[self.root()] = BTreeSet::from([self.root()]);
        let order = self.reverse_postorder();
        let preds: Vec<Vec<Vertex>> = (0..n).map(|v| self.predecessors(v).collect()).collect();
        let mut changed = true;
        while changed {
            changed = false;
            for &v in order.iter().filter(|&&v| v != self.root()) {
                let mut next = preds[v]
                    .iter()
                    .map(|&p| dom[p].clone())
                    .reduce(|a, b| a.intersection(&b).copied().collect())
                    .unwrap_or_default();
                next.insert(v);
                if next != dom[v] {
                    dom[v] = next;
                    changed = true;
                }
            }
        }
        dom
    }

    /// Edges `u -> v` whose target dominates their source.
    pub fn back_edges(&self) -> Vec<(Vertex, Vertex)> {
        let dom = self.dominators();
        self.edges()
            .filter(|&(u, v, _)| dom[u].contains(&v))
            .map(|(u, v, _)| (u, v))
            .collect()
    }

    /// Removing the back edges leaves an acyclic graph.
    pub fn is_reducible(&self) -> bool {
        let back: BTreeSet<(Vertex, Vertex)> = self.back_edges().into_iter().collect();
        let n = self.len();
        let mut indeg = vec![0usize; n];
        for (u, v, _) in self.edges() {
            if !back.contains(&(u, v)) {
                indeg[v] += 1;
            }
        }
        let mut ready: Vec<Vertex> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(u) = ready.pop() {
            seen += 1;
            for v in self.successors(u) {
                if !back.contains(&(u, v)) {
                    indeg[v] -= 1;
                    if indeg[v] == 0 {
                        ready.push(v);
                    }
                }
            }
        }
        seen == n
    }

    /// `L(v)`: the natural loop headed by `v` (empty if `v` heads no loop).
    pub fn local_cycles(&self, v: Vertex) -> BTreeSet<Vertex> {
        let dom = self.dominators();
        self.local_cycles_with(&dom, v)
    }

    pub(crate) fn local_cycles_with(&self, dom: &[BTreeSet<Vertex>], v: Vertex) -> BTreeSet<Vertex> {
        let tails: Vec<Vertex> = self.predecessors(v).filter(|&u| dom[u].contains(&v)).collect();
        if tails.is_empty() {
            return BTreeSet::new();
        }
        let mut body = BTreeSet::from([v]);
        let mut work = Vec::new();
        for u in tails {
            if body.insert(u) {
                work.push(u);
            }
        }
        while let Some(u) = work.pop() {
            for p in self.predecessors(u) {
                if body.insert(p) {
                    work.push(p);
                }
            }
        }
        body.retain(|&u| dom[u].contains(&v));
        body
    }

    /// `L(v)` for every vertex.
    pub fn all_local_cycles(&self) -> Vec<BTreeSet<Vertex>> {
        let dom = self.dominators();
        (0..self.len()).map(|v| self.local_cycles_with(&dom, v)).collect()
    }

    /// Number of loops containing each vertex.
    pub fn nesting_depths(&self) -> Vec<usize> {
        let loops = self.all_local_cycles();
        (0..self.len())
            .map(|u| loops.iter().filter(|l| l.contains(&u)).count())
            .collect()
    }

    /// No vertex is listed after a vertex whose loop contains it.
    pub fn is_admissible(&self, order: &[Vertex]) -> bool {
        let loops = self.all_local_cycles();
        let expected: BTreeSet<Vertex> = (0..self.len()).filter(|&v| v != self.root()).collect();
        let given: BTreeSet<Vertex> = order.iter().copied().collect();
        given.len() == order.len()
            && given == expected
            && order
                .iter()
                .enumerate()
                .all(|(i, &vi)| order[i + 1..].iter().all(|vj| !loops[vi].contains(vj)))
    }

    /// An admissible elimination order of the non-root vertices: deeper
    /// vertices first, ties broken by postorder.
    pub fn admissible_order(&self) -> Result<Vec<Vertex>> {
        if !self.is_reducible() {
            return Err(Error::Irreducible(format!(
                "{} has a cycle without a dominating header",
                self.name()
            )));
        }
        let depth = self.nesting_depths();
        let post = self.postorder();
        let mut rank = vec![0; self.len()];
        for (i, &v) in post.iter().enumerate() {
            rank[v] = i;
        }
        let mut order: Vec<Vertex> = post.into_iter().filter(|&v| v != self.root()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(depth[v]), rank[v]));
        if !self.is_admissible(&order) {
            return Err(Error::Graph("computed elimination order is not admissible".into()));
        }
        Ok(order)
    }

    /// Every admissible order, or `None` if there are more than `limit`.
    pub fn all_admissible_orders(&self, limit: usize) -> Option<Vec<Vec<Vertex>>> {
        let loops = self.all_local_cycles();
        let rest: Vec<Vertex> = (0..self.len()).filter(|&v| v != self.root()).collect();
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        let mut placed = vec![false; self.len()];
        fn go(
            loops: &[BTreeSet<Vertex>],
            rest: &[Vertex],
            prefix: &mut Vec<Vertex>,
            placed: &mut Vec<bool>,
            out: &mut Vec<Vec<Vertex>>,
            limit: usize,
        ) -> bool {
            if prefix.len() == rest.len() {
                out.push(prefix.clone());
                return out.len() <= limit;
            }
            for &x in rest {
                let ready = !placed[x] && loops[x].iter().all(|&u| u == x || placed[u]);
                if ready {
                    placed[x] = true;
                    prefix.push(x);
                    let ok = go(loops, rest, prefix, placed, out, limit);
                    prefix.pop();
                    placed[x] = false;
                    if !ok {
                        return false;
                    }
                }
            }
            true
        }
        go(&loops, &rest, &mut prefix, &mut placed, &mut out, limit).then_some(out)
    }
}
