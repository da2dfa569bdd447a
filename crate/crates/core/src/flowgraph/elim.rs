//! Vertex elimination and summaries.

use std::fmt;

use super::graph::{FlowGraph, Vertex};
use crate::error::{Error, Result};
use crate::iterate::Domain;
use crate::transition::TransitionFormula;

/// A transition formula for every vertex of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummaryAssignment {
    vertices: Vec<String>,
    summaries: Vec<TransitionFormula>,
}

impl SummaryAssignment {
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn summary(&self, v: Vertex) -> &TransitionFormula {
        &self.summaries[v]
    }

    pub fn get(&self, name: &str) -> Option<&TransitionFormula> {
        self.vertices.iter().position(|v| v == name).map(|i| &self.summaries[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &TransitionFormula)> {
        self.vertices.iter().map(String::as_str).zip(&self.summaries)
    }

    /// Pointwise mutual entailment.
    pub fn equivalent(&self, other: &SummaryAssignment) -> Result<bool> {
        if self.vertices != other.vertices {
            return Ok(false);
        }
        for (a, b) in self.summaries.iter().zip(&other.summaries) {
            if !a.equivalent(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for SummaryAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, s) in self.iter() {
            writeln!(f, "{v}: {s}")?;
        }
        Ok(())
    }
}

impl FlowGraph {
    /// `G/v` with `(-)^*` given by `domain`.
    pub fn eliminate(&self, v: Vertex, domain: Domain) -> Result<FlowGraph> {
        self.eliminate_with(v, &|f| domain.star(f))
    }

    /// `G/v` with an arbitrary iteration operator. A missing self-loop
    /// contributes `1` rather than `0^*`.
    pub fn eliminate_with(
        &self,
        v: Vertex,
        star: &dyn Fn(&TransitionFormula) -> Result<TransitionFormula>,
    ) -> Result<FlowGraph> {
        if v == self.root() {
            return Err(Error::Graph("the root cannot be eliminated".into()));
        }
        if v >= self.len() {
            return Err(Error::Graph(format!("no vertex with index {v}")));
        }
        let mut g = self.clone();
        let loop_star = match g.remove_edge(v, v) {
            Some(s) => Some(star(&s)?),
            None => None,
        };
        let succs: Vec<Vertex> = g.successors(v).collect();
        let outgoing: Vec<(Vertex, TransitionFormula)> = succs
            .into_iter()
            .map(|s| (s, g.remove_edge(v, s).expect("listed successor")))
            .collect();
        let preds: Vec<Vertex> = g.predecessors(v).collect();
        for p in preds {
            let into = g.weight(p, v);
            let into = match &loop_star {
                Some(s) => into.compose(s)?,
                None => into,
            };
            for (s, out) in &outgoing {
                g.add_weight(p, *s, into.compose(out)?)?;
            }
            g.set_weight(p, v, into);
        }
        Ok(g)
    }

    /// Eliminates `order` left to right.
    pub fn eliminate_all(&self, order: &[Vertex], domain: Domain) -> Result<FlowGraph> {
        order.iter().try_fold(self.clone(), |g, &v| g.eliminate(v, domain))
    }

    /// `⟦G⟧` using [`FlowGraph::admissible_order`].
    pub fn summarize(&self, domain: Domain) -> Result<SummaryAssignment> {
        let order = self.admissible_order()?;
        self.summarize_in_order(&order, domain)
    }

    /// `⟦G⟧` using a caller-chosen order, which must be admissible.
    pub fn summarize_in_order(&self, order: &[Vertex], domain: Domain) -> Result<SummaryAssignment> {
        if !self.is_reducible() {
            return Err(Error::Irreducible(format!("{} has a cycle without a dominating header", self.name())));
        }
        if !self.is_admissible(order) {
            return Err(Error::Graph("elimination order is not admissible".into()));
        }
        self.read_summaries(&self.eliminate_all(order, domain)?, domain)
    }

    /// Eliminates in reverse postorder without any reducibility check.
    /// The result depends on the order for irreducible graphs.
    pub fn summarize_forced(&self, domain: Domain) -> Result<SummaryAssignment> {
        let order: Vec<Vertex> = self
            .reverse_postorder()
            .into_iter()
            .filter(|&v| v != self.root())
            .collect();
        self.read_summaries(&self.eliminate_all(&order, domain)?, domain)
    }

    /// Cycles through the root are iterated before reaching any vertex.
    fn read_summaries(&self, h: &FlowGraph, domain: Domain) -> Result<SummaryAssignment> {
        let r = self.root();
        let prefix = match h.edge(r, r) {
            Some(w) => domain.star(w)?,
            None => TransitionFormula::one(self.vars()),
        };
        let summaries = (0..self.len())
            .map(|v| if v == r { Ok(prefix.clone()) } else { prefix.compose(&h.weight(r, v)) })
            .collect::<Result<Vec<_>>>()?;
        Ok(SummaryAssignment {
            vertices: self.vertices().to_vec(),
            summaries,
        })
    }
}
