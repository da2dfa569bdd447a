//! Weighted flow graphs and path summaries by vertex elimination.

mod elim;
mod graph;
mod loops;

pub use elim::SummaryAssignment;
pub use graph::{FlowGraph, Vertex};

#[cfg(test)]
mod tests;
