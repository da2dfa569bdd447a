//! Closed convex polyhedra over the rationals.

mod constraint;
mod cover;
mod generators;
mod hull;
mod minimize;
mod polyhedron;
mod project;

pub use constraint::Constraint;
pub use cover::{uncovered_point, union_covers};
pub use generators::GeneratorSet;
pub use hull::hull_union;
pub use minimize::minimize;
pub use polyhedron::Polyhedron;
