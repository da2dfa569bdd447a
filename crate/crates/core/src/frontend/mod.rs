mod cond;
mod formula;
mod graph;
mod lexer;
mod map;
mod program;
mod random;

pub use cond::{Cond, Rel};
pub use formula::{parse_formula, parse_formula_file, var_list};
pub use graph::parse_graph;
pub use map::parse_map;
pub use program::{parse_program, program_to_flowgraph, Program, Stmt};
pub use random::{
    gen_formula_with, gen_random_formula, gen_robustness_instance, gen_substitution_with, RandomFormulaSpec,
    RobustnessInstance,
};
