use std::collections::BTreeMap;
use std::fmt;

use super::map::StutterMap;
use crate::error::Result;
use crate::flowgraph::{FlowGraph, Vertex};
use crate::ratlin::Rational;
use crate::transition::TransitionFormula;

/// How a `G`-edge may be simulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeTag {
    /// By the `H`-edge between the images.
    Match,
    /// By the empty path, images coincide.
    Stutter,
    /// Both.
    Either,
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EdgeTag::Match => "match",
            EdgeTag::Stutter => "stutter",
            EdgeTag::Either => "either",
        })
    }
}

/// Admissible tags for every `G`-edge.
pub type EdgeWitness = BTreeMap<(Vertex, Vertex), EdgeTag>;

/// One clause of the definition that fails on an edge, with a pair of
/// states related by the edge weight but not by `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseFailure {
    pub clause: EdgeTag,
    pub target: TransitionFormula,
    pub pre: Vec<Rational>,
    pub post: Vec<Rational>,
}

/// A `G`-edge that neither clause covers. `clauses` is empty when the
/// images differ and `H` has no edge between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFailure {
    pub edge: (Vertex, Vertex),
    pub weight: TransitionFormula,
    pub clauses: Vec<ClauseFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SimOutcome {
    Yes(EdgeWitness),
    No(EdgeFailure),
}

impl SimOutcome {
    pub fn is_yes(&self) -> bool {
        matches!(self, SimOutcome::Yes(_))
    }
}

fn clause(
    w: &TransitionFormula,
    target: TransitionFormula,
    tag: EdgeTag,
) -> Result<std::result::Result<EdgeTag, ClauseFailure>> {
    Ok(match w.entailment_counterexample(&target)? {
        None => Ok(tag),
        Some(point) => {
            let mut values: Vec<Rational> = point.into_iter().map(|(_, q)| q).collect();
            let post = values.split_off(w.vars().len());
            Err(ClauseFailure {
                clause: tag,
                target,
                pre: values,
                post,
            })
        }
    })
}

/// Tests both clauses of a stuttering simulation on every edge of `g`;
/// reports the first edge where neither holds.
pub fn check_stutter_sim(g: &FlowGraph, hg: &FlowGraph, m: &StutterMap) -> Result<SimOutcome> {
    let one_f = TransitionFormula::one(hg.vars()).subst(m.f())?;
    let mut tags = EdgeWitness::new();
    for (u, v, w) in g.edges() {
        let (hu, hv) = (m.h(u), m.h(v));
        let matched = match hg.edge(hu, hv) {
            Some(wh) => Some(clause(w, wh.subst(m.f())?, EdgeTag::Match)?),
            None => None,
        };
        let stutters = if hu == hv {
            Some(clause(w, one_f.clone(), EdgeTag::Stutter)?)
        } else {
            None
        };
        let tag = match (&matched, &stutters) {
            (Some(Ok(_)), Some(Ok(_))) => EdgeTag::Either,
            (Some(Ok(_)), _) => EdgeTag::Match,
            (_, Some(Ok(_))) => EdgeTag::Stutter,
            _ => {
                let clauses = [matched, stutters].into_iter().flatten().filter_map(|c| c.err()).collect();
                return Ok(SimOutcome::No(EdgeFailure {
                    edge: (u, v),
                    weight: w.clone(),
                    clauses,
                }));
            }
        };
        tags.insert((u, v), tag);
    }
    Ok(SimOutcome::Yes(tags))
}
