//! Loop summaries for linear integer programs by lifting exact iteration
//! operators, and checks that those summaries respect program simulations.

pub mod cli;
pub mod error;
pub mod flowgraph;
pub mod frontend;
pub mod iterate;
pub mod polyhedra;
pub mod ratlin;
pub mod simcheck;
pub mod transition;

pub use error::{Error, Result};
