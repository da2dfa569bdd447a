use std::fmt;

use crate::error::{Error, Result};
use crate::flowgraph::{FlowGraph, Vertex};
use crate::ratlin::Substitution;

/// A candidate simulation `⟨h, f⟩` from `G` to `H`: `h` sends `G`-vertices to
/// `H`-vertices and `f` maps each `H`-variable to an affine term over the
/// `G`-variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StutterMap {
    h: Vec<Vertex>,
    f: Substitution,
}

impl StutterMap {
    /// Checks totality of `h`, that `f` goes from `G`'s variables to `H`'s,
    /// and that roots correspond.
    pub fn new(g: &FlowGraph, hg: &FlowGraph, h: Vec<Vertex>, f: Substitution) -> Result<Self> {
        if h.len() != g.len() {
            return Err(Error::Input(format!(
                "vertex map covers {} of {} vertices of {}",
                h.len(),
                g.len(),
                g.name()
            )));
        }
        if let Some(&bad) = h.iter().find(|&&x| x >= hg.len()) {
            return Err(Error::Input(format!("vertex map targets unknown vertex index {bad}")));
        }
        if f.source() != g.vars() {
            return Err(Error::Input(format!(
                "substitution terms must range over {{{}}}",
                g.vars().join(", ")
            )));
        }
        let mut tgt = f.target().to_vec();
        let mut want = hg.vars().to_vec();
        tgt.sort();
        want.sort();
        if tgt != want {
            return Err(Error::Input(format!(
                "substitution must define exactly {{{}}}",
                hg.vars().join(", ")
            )));
        }
        if h[g.root()] != hg.root() {
            return Err(Error::Input(format!(
                "the root {} must map to the root {}",
                g.vertex_name(g.root()),
                hg.vertex_name(hg.root())
            )));
        }
        Ok(StutterMap { h, f })
    }

    /// The identity simulation of a graph on itself.
    pub fn identity(g: &FlowGraph) -> Self {
        StutterMap {
            h: (0..g.len()).collect(),
            f: Substitution::identity(g.vars()),
        }
    }

    pub fn vertex_map(&self) -> &[Vertex] {
        &self.h
    }

    pub fn h(&self, v: Vertex) -> Vertex {
        self.h[v]
    }

    pub fn f(&self) -> &Substitution {
        &self.f
    }

    /// `self` from `G` to `H` followed by `next` from `H` to `K`.
    pub fn then(&self, next: &StutterMap) -> Result<StutterMap> {
        Ok(StutterMap {
            h: self.h.iter().map(|&x| next.h[x]).collect(),
            f: next.f.then(&self.f)?,
        })
    }

    /// Map file text for `self` between `g` and `hg`.
    pub fn render(&self, g: &FlowGraph, hg: &FlowGraph) -> String {
        let mut out = String::new();
        for (v, &x) in self.h.iter().enumerate() {
            out.push_str(&format!("vmap {} -> {}\n", g.vertex_name(v), hg.vertex_name(x)));
        }
        for y in self.f.target() {
            let t = self.f.get(y).expect("total");
            out.push_str(&format!("sub {y} := {t}\n"));
        }
        out
    }
}

impl fmt::Display for StutterMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h = {:?}, f = {}", self.h, self.f)
    }
}
