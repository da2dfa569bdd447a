use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::transition::TransitionFormula;

/// Vertex handle: an index into [`FlowGraph::vertices`].
pub type Vertex = usize;

/// A rooted digraph whose edges carry nonzero transition formulas over a
/// shared variable list. Absent edges have weight `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowGraph {
    name: String,
    vars: Vec<String>,
    vertices: Vec<String>,
    root: Vertex,
    edges: BTreeMap<(Vertex, Vertex), TransitionFormula>,
}

impl FlowGraph {
    /// Checks that vertex names are unique, every weight is over `vars`,
    /// and every vertex is reachable from `root`. Parallel edges are summed;
    /// edges of weight `0` are dropped.
    pub fn new(
        name: impl Into<String>,
        vars: Vec<String>,
        vertices: Vec<String>,
        root: Vertex,
        edges: impl IntoIterator<Item = (Vertex, Vertex, TransitionFormula)>,
    ) -> Result<Self> {
        let unique: BTreeSet<&String> = vertices.iter().collect();
        if unique.len() != vertices.len() {
            return Err(Error::Graph("duplicate vertex name".into()));
        }
        if root >= vertices.len() {
            return Err(Error::Graph("root is not a vertex".into()));
        }
        let mut g = FlowGraph {
            name: name.into(),
            vars,
            vertices,
            root,
            edges: BTreeMap::new(),
        };
        for (u, v, w) in edges {
            if u >= g.vertices.len() || v >= g.vertices.len() {
                return Err(Error::Graph(format!("edge {u} -> {v} mentions an unknown vertex")));
            }
            if w.vars() != g.vars.as_slice() {
                return Err(Error::Environment(format!(
                    "weight of {} -> {} is over {{{}}}, graph is over {{{}}}",
                    g.vertices[u],
                    g.vertices[v],
                    w.vars().join(", "),
                    g.vars.join(", ")
                )));
            }
            g.add_weight(u, v, w)?;
        }
        let reach = g.reachable();
        if let Some(v) = (0..g.vertices.len()).find(|v| !reach[*v]) {
            return Err(Error::Graph(format!("vertex {} is unreachable from the root", g.vertices[v])));
        }
        Ok(g)
    }

    /// `w(u,v) += w`, keeping storage free of `0` weights.
    pub(crate) fn add_weight(&mut self, u: Vertex, v: Vertex, w: TransitionFormula) -> Result<()> {
        let sum = match self.edges.remove(&(u, v)) {
            Some(old) => old.plus(&w)?,
            None => w,
        };
        if !sum.is_zero() {
            self.edges.insert((u, v), sum);
        }
        Ok(())
    }

    pub(crate) fn set_weight(&mut self, u: Vertex, v: Vertex, w: TransitionFormula) {
        if w.is_zero() {
            self.edges.remove(&(u, v));
        } else {
            self.edges.insert((u, v), w);
        }
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) -> Option<TransitionFormula> {
        self.edges.remove(&(u, v))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn vertex_name(&self, v: Vertex) -> &str {
        &self.vertices[v]
    }

    /// The stored (nonzero) weight of `u -> v`.
    pub fn edge(&self, u: Vertex, v: Vertex) -> Option<&TransitionFormula> {
        self.edges.get(&(u, v))
    }

    /// The total weight function: `0` for absent edges.
    pub fn weight(&self, u: Vertex, v: Vertex) -> TransitionFormula {
        self.edge(u, v)
            .cloned()
            .unwrap_or_else(|| TransitionFormula::zero(&self.vars))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, &TransitionFormula)> {
        self.edges.iter().map(|(&(u, v), w)| (u, v, w))
    }

    pub fn successors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.range((u, 0)..=(u, usize::MAX)).map(|(&(_, v), _)| v)
    }

    pub fn predecessors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.edges.keys().filter(move |&&(_, t)| t == v).map(|&(u, _)| u)
    }

    pub(crate) fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        let mut stack = vec![self.root];
        seen[self.root] = true;
        while let Some(u) = stack.pop() {
            for v in self.successors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }

    /// Vertices in depth-first postorder from the root (successors visited
    /// in index order).
    pub fn postorder(&self) -> Vec<Vertex> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::with_capacity(self.len());
        let mut stack: Vec<(Vertex, Vec<Vertex>)> = vec![(self.root, self.successors(self.root).collect())];
        seen[self.root] = true;
        while let Some((u, pending)) = stack.last_mut() {
            if let Some(pos) = pending.iter().position(|&v| !seen[v]) {
                let v = pending.remove(pos);
                seen[v] = true;
                let next: Vec<Vertex> = self.successors(v).collect();
                stack.push((v, next));
            } else {
                out.push(*u);
                stack.pop();
            }
        }
        out
    }

    pub fn reverse_postorder(&self) -> Vec<Vertex> {
        let mut order = self.postorder();
        order.reverse();
        order
    }

    /// The same graph with vertices renamed through `rename`, which must be injective.
    pub fn rename_vertices(&self, rename: impl Fn(&str) -> String) -> Result<FlowGraph> {
        let vertices: Vec<String> = self.vertices.iter().map(|v| rename(v)).collect();
        FlowGraph::new(
            self.name.clone(),
            self.vars.clone(),
            vertices,
            self.root,
            self.edges().map(|(u, v, w)| (u, v, w.clone())),
        )
    }
}

impl fmt::Display for FlowGraph {
    /// The graph text format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {} vars {}", self.name, self.vars.join(" "))?;
        writeln!(f, "root {}", self.vertices[self.root])?;
        for (u, v, w) in self.edges() {
            writeln!(f, "{} -> {} : {}", self.vertices[u], self.vertices[v], w)?;
        }
        Ok(())
    }
}
