use super::map::StutterMap;
use crate::error::Result;
use crate::flowgraph::{FlowGraph, Vertex};
use crate::iterate::Domain;
use crate::ratlin::Rational;
use crate::transition::TransitionFormula;

/// A vertex whose summary is not simulated by the summary of its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessFailure {
    pub vertex: Vertex,
    pub image: Vertex,
    pub g_summary: TransitionFormula,
    pub h_summary: TransitionFormula,
    pub pre: Vec<Rational>,
    pub post: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RobustnessOutcome {
    Verified,
    Refuted(Box<RobustnessFailure>),
}

impl RobustnessOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, RobustnessOutcome::Verified)
    }
}

/// Summarizes both graphs and checks `⟦G⟧(v) ⊨ ⟦H⟧(h(v))[f, f']` at every vertex.
pub fn verify_robustness(g: &FlowGraph, hg: &FlowGraph, m: &StutterMap, domain: Domain) -> Result<RobustnessOutcome> {
    let sg = g.summarize(domain)?;
    let sh = hg.summarize(domain)?;
    for v in 0..g.len() {
        let image = m.h(v);
        let target = sh.summary(image).subst(m.f())?;
        if let Some(point) = sg.summary(v).entailment_counterexample(&target)? {
            let mut pre: Vec<Rational> = point.into_iter().map(|(_, q)| q).collect();
            let post = pre.split_off(g.vars().len());
            return Ok(RobustnessOutcome::Refuted(Box::new(RobustnessFailure {
                vertex: v,
                image,
                g_summary: sg.summary(v).clone(),
                h_summary: sh.summary(image).clone(),
                pre,
                post,
            })));
        }
    }
    Ok(RobustnessOutcome::Verified)
}
